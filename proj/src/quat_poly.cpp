#include "linkdraw/quat_poly.hpp"

namespace linkdraw {

QuatPoly lgcd(const QuatPoly& f, const QuatPoly& g) {
  if (!g.is_monic()) throw Error(ErrorCode::NotMonic, "lgcd needs a monic second argument, got " + g.str());
  QuatPoly a = f, b = g;
  for (;;) {
    QuatPoly r = rrem(a, b);
    if (r.is_zero()) return b;
    a = std::move(b);
    b = r * QuatPoly(r.lcoeff().inverse());
  }
}

RealPoly mrpf(const QuatPoly& p) {
  RealPoly acc;
  for (const auto& comp : components(p)) acc = real_gcd(acc, comp);
  return acc.is_zero() ? RealPoly(Rational(1)) : acc;
}

QuatPoly divide_by_real(const QuatPoly& p, const RealPoly& r) {
  auto comps = components(p);
  for (auto& c : comps) {
    auto [q, rem] = real_divmod(c, r);
    if (!rem.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, r.str() + " does not divide " + p.str());
    c = q;
  }
  return from_components(comps);
}

Quaternion quad_zero(const RealPoly& f, const Vec3& v) {
  if (f.deg() != 2 || !f.is_monic()) throw Error(ErrorCode::NotIrreducible, f.str() + " is not a monic quadratic");
  const Rational& b = f.coeff(1);
  Rational disc = Rational(4) * f.coeff(0) - b * b;
  if (disc.sign() <= 0) throw Error(ErrorCode::NotIrreducible, f.str() + " has real roots");
  Rational vv = dot(v, v);
  if (vv.is_zero()) throw Error(ErrorCode::NoRationalZeroInDirection, "zero direction vector");
  Rational lambda;
  if (!exact_sqrt(disc / vv, lambda))
    throw Error(ErrorCode::NoRationalZeroInDirection,
                "no rational zero of " + f.str() + " in direction " + str(v));
  Rational half(1, 2);
  return {-b * half, lambda * v[0] * half, lambda * v[1] * half, lambda * v[2] * half};
}

namespace {

bool is_three_square_obstructed(mpz_class n) {
  if (n == 0) return false;
  while (n % 4 == 0) n /= 4;
  return n % 8 == 7;
}

bool integer_sqrt(const mpz_class& n, mpz_class& root) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

// Integer vectors with |x|^2 = n, nonnegative entries, in pattern order.
template <class Visit>
bool for_each_representation(const mpz_class& n, Visit&& visit) {
  mpz_class root;
  // single axis: z, x, y
  if (integer_sqrt(n, root)) {
    for (size_t axis : {2, 0, 1}) {
      std::array<mpz_class, 3> x{0, 0, 0};
      x[axis] = root;
      if (visit(x)) return true;
    }
  }
  mpz_class top;
  mpz_sqrt(top.get_mpz_t(), n.get_mpz_t());
  // planes: xy, xz, yz
  static constexpr std::array<std::pair<size_t, size_t>, 3> planes{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [u, w] : planes) {
    for (mpz_class a = 1; a <= top; ++a) {
      mpz_class b;
      if (!integer_sqrt(n - a * a, b) || b == 0) continue;
      std::array<mpz_class, 3> x{0, 0, 0};
      x[u] = a;
      x[w] = b;
      if (visit(x)) return true;
    }
  }
  for (mpz_class a = 1; a <= top; ++a) {
    for (mpz_class b = 1; a * a + b * b < n; ++b) {
      mpz_class c;
      if (!integer_sqrt(n - a * a - b * b, c) || c == 0) continue;
      if (visit(std::array<mpz_class, 3>{a, b, c})) return true;
    }
  }
  return false;
}

}  // namespace

Vec3 rational_sphere_point(const Rational& r, const SphereSearch& opts) {
  if (r.sign() <= 0) throw Error(ErrorCode::NotRepresentable, "sphere radius squared must be positive, got " + r.str());
  mpz_class n = r.num() * r.den();
  if (is_three_square_obstructed(n))
    throw Error(ErrorCode::NotRepresentable, r.str() + " is not a sum of three rational squares");
  mpz_class bound = opts.height_bound;
  mpz_class top;
  mpz_sqrt(top.get_mpz_t(), n.get_mpz_t());
  if (r.den() > bound || top > bound)
    throw Error(ErrorCode::SearchExhausted, "sphere point for " + r.str() + " exceeds height bound");
  Vec3 out;
  bool found = for_each_representation(n, [&](const std::array<mpz_class, 3>& x) {
    out = {Rational(x[0], r.den()), Rational(x[1], r.den()), Rational(x[2], r.den())};
    return true;
  });
  if (!found) throw Error(ErrorCode::SearchExhausted, "no sphere point found for " + r.str());
  return out;
}

std::vector<Vec3> rational_sphere_points(const Rational& r, size_t max_count, long max_scale,
                                         const SphereSearch& opts) {
  std::vector<Vec3> out;
  if (r.sign() <= 0 || is_three_square_obstructed(r.num() * r.den())) return out;
  const mpz_class bound = opts.height_bound;
  for (long m = 1; m <= max_scale && out.size() < max_count; ++m) {
    mpz_class den = r.den() * m;
    mpz_class n = r.num() * r.den() * m * m;
    mpz_class top;
    mpz_sqrt(top.get_mpz_t(), n.get_mpz_t());
    if (den > bound || top > bound) break;
    for_each_representation(n, [&](const std::array<mpz_class, 3>& x) {
      for (int signs = 0; signs < 8; ++signs) {
        bool redundant = false;
        Vec3 s;
        for (size_t c = 0; c < 3; ++c) {
          bool neg = (signs >> c) & 1;
          if (neg && x[c] == 0) redundant = true;
          s[c] = Rational(neg ? mpz_class(-x[c]) : x[c], den);
        }
        if (redundant) continue;
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        if (out.size() >= max_count) return true;
      }
      return false;
    });
  }
  return out;
}

}  // namespace linkdraw
