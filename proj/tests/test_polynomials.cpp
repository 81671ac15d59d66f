#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"

using namespace fx;

namespace {

QuatPoly lin(const Quaternion& h) { return linear(h); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::IOError;
}

}  // namespace

TEST_CASE("right division") {
  QuatPoly f = to_quat(P({1, 0, 1}));
  auto [q, r] = rqr(f, lin(K));
  CHECK(q == lin(-K));
  CHECK(r.is_zero());

  QuatPoly g = tq() * tq() - tq() * (J + K) + QuatPoly{I};
  auto [q2, r2] = rqr(g, lin(J));
  CHECK(q2 == lin(K));
  CHECK(r2.is_zero());

  auto [q3, r3] = rqr(g, g);
  CHECK(q3 == QuatPoly{Quaternion(1)});
  CHECK(r3.is_zero());
  CHECK(code_of([&] { rqr(g, QuatPoly{Quaternion(2), Quaternion(3)}); }) == ErrorCode::NotMonic);
}

TEST_CASE("left division") {
  QuatPoly f = to_quat(P({1, 0, 1}));
  auto [q, r] = lqr(f, lin(K));
  CHECK(q == lin(-K));
  CHECK(r.is_zero());

  QuatPoly g = lin(K) * lin(J);
  auto [q2, r2] = lqr(g, lin(J));
  CHECK(q2 == lin(K));
  CHECK(r2.is_zero());
  auto [q3, r3] = lqr(g, g);
  CHECK(q3 == QuatPoly{Quaternion(1)});
  CHECK(r3.is_zero());
  CHECK(code_of([&] { lqr(g, QuatPoly{Quaternion(1), Quaternion(2)}); }) == ErrorCode::NotMonic);
}

TEST_CASE("division reconstructs over dual quaternions") {
  Gen gen(4);
  for (int n = 0; n < 20; ++n) {
    DualQuatPoly f = gen.poly<DualQuaternion>(5, &Gen::dq);
    DualQuatPoly g = gen.poly<DualQuaternion>(2, &Gen::dq);
    g = g - DualQuatPoly::monomial(2, g.lcoeff()) + DualQuatPoly::monomial(2, DualQuaternion(1));
    auto [q, r] = rqr(f, g);
    CHECK(g * q + r == f);
    CHECK(r.deg() < g.deg());
    auto [lq, lr] = lqr(f, g);
    CHECK(lq * g + lr == f);
    CHECK(lr.deg() < g.deg());
  }
}

TEST_CASE("left gcd") {
  auto x = viviani_coords();
  QuatPoly d = from_components({RealPoly(), x[1], x[2], x[3]});
  QuatPoly g = to_quat(P({1, 0, 2, 0, 1}));
  QuatPoly l = lgcd(d, g);
  CHECK(l == tq() * tq() - tq() * (J + K) - QuatPoly{I});
  CHECK(rrem(d, l).is_zero());
  CHECK(rrem(g, l).is_zero());

  QuatPoly s = to_quat(P({1, 0, 1}));
  CHECK(lgcd(s, s) == s);
  CHECK(lgcd(lin(K), s) == lin(K));
  QuatPoly f = lin(I) * lin(J) * Quaternion(3);
  CHECK(lgcd(f, f * Quaternion(R(1, 3))) == lin(I) * lin(J));
}

TEST_CASE("maximal real polynomial factor") {
  CHECK(mrpf(to_quat(P({1, 0, 1}))) == P({1, 0, 1}));
  CHECK(mrpf(tq() * tq() - tq() * (J + K) - QuatPoly{I}) == P({1}));
  QuatPoly p = to_quat(P({1, 0, 1})) * lin(K);
  CHECK(mrpf(p) == P({1, 0, 1}));
  QuatPoly quotient = divide_by_real(p, mrpf(p));
  CHECK(quotient == lin(K));
  CHECK(mrpf(quotient) == P({1}));
}

TEST_CASE("real polynomial toolkit") {
  RealPoly v = P({1, 0, 2, 0, 1});
  CHECK(real_gcd(v, v * P({0, 0, 8})) == v);
  CHECK(real_gcd(P({1, 0, 1}), P({4, 0, 1})) == P({1}));
  CHECK(real_quo(v, v) == P({1}));
  CHECK(code_of([&] { real_quo(v, RealPoly()); }) == ErrorCode::DivisionByZeroPoly);
  CHECK(real_divides(P({1, 0, 1}), v));
  CHECK_FALSE(real_divides(P({2, 0, 1}), v));
}

TEST_CASE("Sturm root counting") {
  CHECK(count_real_roots(P({1, 0, 2, 0, 1})) == 0);
  CHECK(count_real_roots(P({-1, 0, 1})) == 2);
  CHECK(count_real_roots(P({0, -1, 0, 1})) == 3);
  CHECK(code_of([] { count_real_roots(RealPoly()); }) == ErrorCode::ZeroPolynomial);
  // Oracle: products of known distinct rational roots and positive quadratics.
  Gen g(8);
  for (int n = 0; n < 30; ++n) {
    std::vector<Rational> roots;
    RealPoly f = P({1});
    int k = n % 5;
    for (int i = 0; i < k; ++i) {
      Rational r = g.rat();
      f = f * RealPoly({-r, Rational(1)});
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Rational s = g.rat();
    f = f * RealPoly({Rational(1) + s * s, Rational(0), Rational(1)});
    CHECK(count_real_roots(f) == static_cast<int>(roots.size()));
  }
}

TEST_CASE("squarefree decomposition") {
  RealPoly f = P({1, 0, 1}) * P({1, 0, 1}) * P({4, 0, 1}) * P({-1, 1});
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == P({4, 0, 1}) * P({-1, 1}));
  CHECK(parts[1] == P({1, 0, 1}));
}

TEST_CASE("quadratic factors") {
  auto sq = quad_factors(P({1, 0, 2, 0, 1}));
  CHECK(sq == std::vector<RealPoly>{P({1, 0, 1}), P({1, 0, 1})});
  CHECK(quad_factors(P({4, 0, 5, 0, 1})) == std::vector<RealPoly>{P({1, 0, 1}), P({4, 0, 1})});
  CHECK(code_of([] { quad_factors(P({-1, 0, 1})); }) == ErrorCode::HasRealRoot);
  CHECK(code_of([] { quad_factors(P({1, 0, 0, 0, 1})); }) == ErrorCode::IrreducibleFactorNotQuadraticOverRationals);
  CHECK(code_of([] { quad_factors(P({2, 0, 2})); }) == ErrorCode::NotMonic);
  // Oracle: random products of positive quadratics.
  Gen g(12);
  for (int n = 0; n < 20; ++n) {
    RealPoly f = P({1});
    std::vector<RealPoly> expected;
    for (int i = 0; i < 1 + n % 3; ++i) {
      Rational b = g.rat(), s = g.rat();
      Rational c = b * b / Rational(4) + Rational(1) + s * s;
      RealPoly q({c, b, Rational(1)});
      f = f * q;
      expected.push_back(q);
    }
    auto got = quad_factors(f);
    RealPoly prod = P({1});
    for (const auto& q : got) {
      prod = prod * q;
      CHECK(q.coeff(1) * q.coeff(1) < Rational(4) * q.coeff(0));
    }
    CHECK(prod == f);
    CHECK(got.size() == expected.size());
  }
}

TEST_CASE("zeros of quadratics in a direction") {
  CHECK(quad_zero(P({1, 0, 1}), {1, 0, 0}) == I);
  Quaternion h = quad_zero(P({2, -2, 1}), {0, 0, 1});
  CHECK(h == Quaternion(1) + K);
  CHECK(to_quat(P({2, -2, 1})).eval_right(h).is_zero());
  Quaternion z = quad_zero(P({1, 0, 1}), {3, 4, 0});
  CHECK(z == I * R(3, 5) + J * R(4, 5));
  CHECK(to_quat(P({1, 0, 1})).eval_right(z).is_zero());
  CHECK(code_of([] { quad_zero(P({1, 0, 1}), {1, 1, 0}); }) == ErrorCode::NoRationalZeroInDirection);
  CHECK(code_of([] { quad_zero(P({-1, 0, 1}), {1, 0, 0}); }) == ErrorCode::NotIrreducible);
}

TEST_CASE("rational points on spheres") {
  CHECK(rational_sphere_point(R(4)) == Vec3{0, 0, 2});
  CHECK(rational_sphere_point(R(2)) == Vec3{1, 1, 0});
  CHECK(code_of([] { rational_sphere_point(R(7)); }) == ErrorCode::NotRepresentable);
  CHECK(code_of([] { rational_sphere_point(R(28)); }) == ErrorCode::NotRepresentable);
  // Oracle for the obstruction: no integer point of small height on x^2+y^2+z^2 = 7 q^2.
  for (int q = 1; q <= 6; ++q)
    for (int x = 0; x <= 3 * q; ++x)
      for (int y = 0; y <= 3 * q; ++y)
        for (int z = 0; z <= 3 * q; ++z) CHECK(x * x + y * y + z * z != 7 * q * q);
  for (Rational r : {R(3), R(5, 4), R(6), R(11, 9), R(3, 2)}) {
    Vec3 s = rational_sphere_point(r);
    CHECK(dot(s, s) == r);
  }
  auto many = rational_sphere_points(R(9), 20);
  CHECK(many.size() == 20);
  for (const auto& s : many) CHECK(dot(s, s) == R(9));
}
