#pragma once

#include "linkdraw/error.hpp"
#include "linkdraw/quaternion.hpp"
#include "linkdraw/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace linkdraw {

// Dense polynomial in a central indeterminate t over a (possibly
// non-commutative) coefficient ring T. Coefficient index = power of t; the
// leading coefficient is nonzero unless the polynomial is zero.
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(T c) : c_{std::move(c)} { trim(); }  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  // t^n * c
  static Poly monomial(size_t n, const T& c) {
    std::vector<T> v(n + 1);
    v[n] = c;
    return Poly(std::move(v));
  }
  static Poly t() { return monomial(1, T(1)); }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  const T& lcoeff() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(size_t n) const { return n < c_.size() ? c_[n] : T{}; }
  bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

  Poly conj() const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(linkdraw::conj(c));
    return Poly(std::move(v));
  }

  Poly operator-() const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return Poly(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t n = 0; n < o.c_.size(); ++n) c_[n] += o.c_[n];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t n = 0; n < o.c_.size(); ++n) c_[n] -= o.c_[n];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.c_.size() + b.c_.size() - 1);
    for (size_t x = 0; x < a.c_.size(); ++x) {
      if (linkdraw::is_zero(a.c_[x])) continue;
      for (size_t y = 0; y < b.c_.size(); ++y) v[x + y] += a.c_[x] * b.c_[y];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Rational& s) {
    std::vector<T> v;
    v.reserve(a.c_.size());
    for (const auto& c : a.c_) v.push_back(c * s);
    return Poly(std::move(v));
  }
  friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Right evaluation C(h) = sum c_n h^n, powers of h on the right. This is not
  // a ring homomorphism when h does not commute with the coefficients.
  T eval_right(const T& h) const {
    T acc{};
    T power(1);
    for (size_t n = 0; n < c_.size(); ++n) {
      acc += c_[n] * power;
      power = power * h;
    }
    return acc;
  }

  std::string str(const char* var = "t") const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t n = c_.size(); n-- > 0;) {
      if (linkdraw::is_zero(c_[n])) continue;
      std::string coeff = c_[n].str();
      bool single = coeff.find(' ') == std::string::npos;
      if (single && coeff[0] == '-') {
        out += out.empty() ? "-" : " - ";
        coeff.erase(0, 1);
      } else if (!out.empty()) {
        out += " + ";
      }
      std::string mono = n == 0 ? "" : (n == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(n));
      if (mono.empty()) out += coeff;
      else if (coeff == "1") out += mono;
      else if (coeff.find_first_not_of("0123456789/") == std::string::npos) out += coeff + mono;
      else out += "(" + coeff + ")" + mono;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && linkdraw::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
Poly<T> conj(const Poly<T>& p) {
  return p.conj();
}

using RealPoly = Poly<Rational>;
using QuatPoly = Poly<Quaternion>;
using DualQuatPoly = Poly<DualQuaternion>;

// Lifting between coefficient rings.
QuatPoly to_quat(const RealPoly& p);
DualQuatPoly to_dual(const QuatPoly& p);
DualQuatPoly to_dual(const RealPoly& p);
// C = P + eps Q
DualQuatPoly make_dual(const QuatPoly& primal, const QuatPoly& dual);
QuatPoly primal_part(const DualQuatPoly& c);
QuatPoly dual_part(const DualQuatPoly& c);
// Component polynomials (scalar, i, j, k).
std::array<RealPoly, 4> components(const QuatPoly& p);
QuatPoly from_components(const std::array<RealPoly, 4>& comps);
// Real polynomial if p has zero vector part, else throws NotMotionPolynomial.
RealPoly as_real(const QuatPoly& p);
RealPoly as_real(const DualQuatPoly& c);
// t - h
template <class T>
Poly<T> linear(const T& h) {
  return Poly<T>({-h, T(1)});
}

template <class T>
struct DivResult {
  Poly<T> quotient;
  Poly<T> remainder;
};

// Right division F = G Q + R by a monic G, deg R < deg G.
template <class T>
DivResult<T> rqr(const Poly<T>& f, const Poly<T>& g) {
  if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "right division by non-monic " + g.str());
  Poly<T> q, r = f;
  const int n = g.deg();
  while (r.deg() >= n) {
    auto shift = static_cast<size_t>(r.deg() - n);
    Poly<T> term = Poly<T>::monomial(shift, r.lcoeff());
    q += term;
    r -= g * term;
  }
  return {q, r};
}

// Left division F = Q G + R by a monic G, deg R < deg G.
template <class T>
DivResult<T> lqr(const Poly<T>& f, const Poly<T>& g) {
  if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "left division by non-monic " + g.str());
  Poly<T> q, r = f;
  const int n = g.deg();
  while (r.deg() >= n) {
    auto shift = static_cast<size_t>(r.deg() - n);
    Poly<T> term = Poly<T>::monomial(shift, r.lcoeff());
    q += term;
    r -= term * g;
  }
  return {q, r};
}

template <class T>
Poly<T> rquo(const Poly<T>& f, const Poly<T>& g) {
  return rqr(f, g).quotient;
}
template <class T>
Poly<T> rrem(const Poly<T>& f, const Poly<T>& g) {
  return rqr(f, g).remainder;
}
template <class T>
Poly<T> lquo(const Poly<T>& f, const Poly<T>& g) {
  return lqr(f, g).quotient;
}

}  // namespace linkdraw
