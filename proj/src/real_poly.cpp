#include "linkdraw/real_poly.hpp"

#include <cmath>
#include <complex>
#include <numeric>

namespace linkdraw {

RealDivResult real_divmod(const RealPoly& f, const RealPoly& g) {
  if (g.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division of " + f.str() + " by zero");
  Rational inv = inverse(g.lcoeff());
  RealPoly q, r = f;
  while (r.deg() >= g.deg()) {
    auto shift = static_cast<size_t>(r.deg() - g.deg());
    RealPoly term = RealPoly::monomial(shift, r.lcoeff() * inv);
    q += term;
    r -= g * term;
  }
  return {q, r};
}

RealPoly real_quo(const RealPoly& f, const RealPoly& g) { return real_divmod(f, g).quotient; }

bool real_divides(const RealPoly& g, const RealPoly& f) { return real_divmod(f, g).remainder.is_zero(); }

RealPoly make_monic(const RealPoly& f) {
  if (f.is_zero()) return f;
  return f * inverse(f.lcoeff());
}

RealPoly real_gcd(const RealPoly& f, const RealPoly& g) {
  RealPoly a = f, b = g;
  while (!b.is_zero()) {
    RealPoly r = real_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

RealPoly derivative(const RealPoly& f) {
  if (f.deg() < 1) return {};
  std::vector<Rational> v;
  for (size_t n = 1; n < f.coeffs().size(); ++n) v.push_back(Rational(static_cast<long>(n)) * f.coeffs()[n]);
  return RealPoly(std::move(v));
}

Rational eval(const RealPoly& f, const Rational& t) {
  Rational acc;
  for (size_t n = f.coeffs().size(); n-- > 0;) acc = acc * t + f.coeffs()[n];
  return acc;
}

namespace {

int sign_at_infinity(const RealPoly& p, bool negative) {
  int s = p.lcoeff().sign();
  return (negative && p.deg() % 2 == 1) ? -s : s;
}

int variations(const std::vector<RealPoly>& seq, bool negative) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at_infinity(p, negative);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int count_real_roots(const RealPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "count_real_roots of the zero polynomial");
  std::vector<RealPoly> seq{f, derivative(f)};
  while (!seq.back().is_zero()) {
    RealPoly r = real_divmod(seq[seq.size() - 2], seq.back()).remainder;
    seq.push_back(-r);
  }
  seq.pop_back();
  return variations(seq, true) - variations(seq, false);
}

std::vector<RealPoly> squarefree_decomposition(const RealPoly& f) {
  std::vector<RealPoly> parts;
  if (f.deg() < 1) return parts;
  RealPoly monic = make_monic(f);
  RealPoly fp = derivative(monic);
  RealPoly a = real_gcd(monic, fp);
  RealPoly b = real_quo(monic, a);
  RealPoly c = real_quo(fp, a);
  RealPoly d = c - derivative(b);
  while (b.deg() > 0) {
    RealPoly g = real_gcd(b, d);
    parts.push_back(g);
    b = real_quo(b, g);
    c = real_quo(d, g);
    d = c - derivative(b);
  }
  return parts;
}

namespace {

using Complex = std::complex<long double>;

// Aberth iteration on a squarefree polynomial; converges cubically for simple roots.
std::vector<Complex> approximate_roots(const RealPoly& f) {
  const int n = f.deg();
  std::vector<long double> a;
  for (const auto& c : f.coeffs()) a.push_back(static_cast<long double>(c.to_double()));
  long double lc = a.back();
  for (auto& c : a) c /= lc;

  long double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(a[k]));
  bound += 1;

  auto eval_both = [&](Complex z, Complex& p, Complex& dp) {
    p = a[n];
    dp = 0;
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + a[k];
    }
  };

  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    long double ang = 2.0L * 3.14159265358979323846L * (k + 0.25L) / n + 0.4L;
    z[k] = std::polar(0.5L * bound, ang);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int k = 0; k < n; ++k) {
      Complex p, dp;
      eval_both(z[k], p, dp);
      if (p == Complex(0)) continue;
      Complex ratio = p / dp;
      Complex sum = 0;
      for (int m = 0; m < n; ++m)
        if (m != k) sum += 1.0L / (z[k] - z[m]);
      Complex step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-30L) break;
  }
  return z;
}

// Primitive integer multiple's leading coefficient: monic factor coefficients
// of f are fractions whose denominators divide it (Gauss lemma).
mpz_class primitive_lead(const RealPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.den());
  mpz_class content = 0;
  for (const auto& c : f.coeffs()) content = gcd(content, mpz_class(c.num() * (den / c.den())));
  mpz_class lead = f.lcoeff().num() * (den / f.lcoeff().den()) / content;
  return abs(lead);
}

Rational nearest_fraction(long double value, const mpz_class& den) {
  long double scaled = std::round(value * static_cast<long double>(den.get_d()));
  mpz_class num;
  mpz_set_d(num.get_mpz_t(), static_cast<double>(scaled));
  return Rational(num, den);
}

std::vector<RealPoly> split_squarefree(const RealPoly& f) {
  std::vector<RealPoly> out;
  RealPoly rest = make_monic(f);
  if (rest.deg() < 1) return out;
  const mpz_class lead = primitive_lead(rest);
  for (const auto& z : approximate_roots(rest)) {
    if (rest.deg() < 2) break;
    if (z.imag() <= 0) continue;
    Rational b = nearest_fraction(-2 * z.real(), lead);
    Rational c = nearest_fraction(std::norm(z), lead);
    RealPoly candidate{c, b, Rational(1)};
    if (c * 4 - b * b <= Rational(0)) continue;
    auto [q, r] = real_divmod(rest, candidate);
    if (!r.is_zero()) continue;
    out.push_back(candidate);
    rest = q;
  }
  if (rest.deg() > 0)
    throw Error(ErrorCode::IrreducibleFactorNotQuadraticOverRationals,
                "factor " + rest.str() + " does not split into rational quadratics");
  return out;
}

}  // namespace

std::vector<RealPoly> quad_factors(const RealPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "quad_factors of zero");
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "quad_factors expects monic input, got " + f.str());
  if (f.deg() == 0) return {};
  if (count_real_roots(f) > 0) throw Error(ErrorCode::HasRealRoot, f.str() + " has a real root");
  std::vector<RealPoly> out;
  auto parts = squarefree_decomposition(f);
  for (size_t m = 0; m < parts.size(); ++m) {
    for (const auto& q : split_squarefree(parts[m]))
      for (size_t rep = 0; rep <= m; ++rep) out.push_back(q);
  }
  std::sort(out.begin(), out.end(), [](const RealPoly& x, const RealPoly& y) {
    if (x.coeff(0) != y.coeff(0)) return x.coeff(0) < y.coeff(0);
    return x.coeff(1) < y.coeff(1);
  });
  return out;
}

}  // namespace linkdraw
