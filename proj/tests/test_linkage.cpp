#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fixtures.hpp"

#include <set>

using namespace fx;

namespace {

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error thrown");
  return Error(ErrorCode::IOError, "");
}

DualQuatPoly dlin(const DualQuaternion& h) { return linear(h); }

bool all_through(const Linkage& l, const Vec3& p) {
  for (const auto& j : l.joints())
    if (!j.axis().contains(p)) return false;
  return true;
}

bool all_parallel(const Linkage& l, const Vec3& d) {
  for (const auto& j : l.joints())
    if (!is_zero(cross(j.axis().direction(), d))) return false;
  return true;
}

void check_topology(const Linkage& l) {
  const size_t n = l.n();
  auto joints = l.joints();
  auto links = l.links();
  CHECK(links.size() == 2 * (n + 1));
  CHECK(joints.size() == 3 * n + 1);
  std::map<std::string, std::pair<std::string, std::string>> incidence;
  for (const auto& j : joints) incidence[j.label] = j.links;
  for (size_t i = 1; i <= n; ++i) {
    auto s = std::to_string(i), p = std::to_string(i - 1);
    CHECK(incidence["h" + s] == std::pair<std::string, std::string>{"A" + p, "A" + s});
    CHECK(incidence["k" + s] == std::pair<std::string, std::string>{"B" + p, "B" + s});
    CHECK(incidence["m" + s] == std::pair<std::string, std::string>{"A" + s, "B" + s});
  }
  CHECK(incidence["m0"] == std::pair<std::string, std::string>{"A0", "B0"});
  for (const auto& link : links) {
    std::set<std::string> js(link.joints.begin(), link.joints.end());
    size_t i = std::stoul(link.label.substr(1));
    std::set<std::string> expected{"m" + std::to_string(i)};
    std::string row = link.label[0] == 'A' ? "h" : "k";
    if (i >= 1) expected.insert(row + std::to_string(i));
    if (i < n) expected.insert(row + std::to_string(i + 1));
    CHECK(js == expected);
  }
}

}  // namespace

TEST_CASE("Bennett flip fixtures") {
  auto [m1, k1] = bflip(DualQuaternion(K), DualQuaternion(J * R(1, 2)));
  CHECK(m1 == DualQuaternion((J * R(-3) + K * R(4)) / R(10)));
  CHECK(k1 == DualQuaternion((J * R(4) + K * R(3)) / R(5)));
  auto [m2, k2] = bflip(DualQuaternion(J), m1);
  CHECK(m2 == DualQuaternion((J * R(5) - K * R(12)) / R(26)));
  CHECK(k2 == DualQuaternion((J * R(33) + K * R(56)) / R(65)));
  CHECK(dlin(K) * dlin(J * R(1, 2)) == dlin(m1) * dlin(k1));
}

TEST_CASE("Bennett flip errors") {
  CHECK(error_of([] { bflip(DualQuaternion(K), DualQuaternion(-K)); }).code() == ErrorCode::FlipUndefined);
  CHECK(error_of([] { bflip(DualQuaternion(K), D(-K, J)); }).code() == ErrorCode::FlipUndefined);
}

TEST_CASE("Bennett flip properties") {
  Gen g(31);
  for (int n = 0; n < 60; ++n) {
    RotationQuaternion h1 = g.rotation(), h2 = g.rotation();
    if ((h1.value().conj() - h2.value()).primal().is_zero()) continue;
    auto [k1, k2] = bflip(h1, h2);
    CHECK(dlin(h1) * dlin(h2) == dlin(k1) * dlin(k2));
    CHECK(minpol(k1) == minpol(h2));
    CHECK(minpol(k2) == minpol(h1));
    auto [b1, b2] = bflip(k1, k2);
    CHECK(b1 == h1);
    CHECK(b2 == h2);
    // Companion flips.
    auto [x1, x2] = bflip(h2.value(), k2.value().conj());
    CHECK(x1 == h1.value().conj());
    CHECK(x2 == k1.value());
    auto [y1, y2] = bflip(k2.value().conj(), k1.value().conj());
    CHECK(y1 == h2.value().conj());
    CHECK(y2 == h1.value().conj());
    auto [z1, z2] = bflip(k1.value().conj(), h1.value());
    CHECK(z1 == k2.value());
    CHECK(z2 == h2.value().conj());
  }
}

TEST_CASE("four-bar classification") {
  FourBarReport a = fourbar_check(K, J * R(1, 2));
  CHECK(a.one_dof);
  CHECK(a.kind == FourBarKind::Spherical);
  CHECK(a.axes_intersect);

  FourBarReport b = fourbar_check(K, J);
  CHECK_FALSE(b.one_dof);
  CHECK(b.equal_minpols);

  FourBarReport c = fourbar_check(K, K * R(2));
  CHECK_FALSE(c.one_dof);
  CHECK(c.dependent_vector_parts);
  CHECK(c.kind == FourBarKind::Degenerate);

  FourBarReport d = fourbar_check(K, D(K * R(2), J));
  CHECK(d.one_dof);
  CHECK(d.kind == FourBarKind::PlanarAntiparallelogram);

  FourBarReport e = fourbar_check(K, rotation_through(I * R(2), {0, 0, 1}).value() + E(J * R(0)));
  CHECK(e.kind == FourBarKind::Spherical);
  FourBarReport f = fourbar_check(K, rotation_through(I * R(2), {0, 1, 0}).value());
  CHECK(f.one_dof);
  CHECK(f.kind == FourBarKind::Bennett);
}

TEST_CASE("seed joint selection") {
  auto viv = rots({K, J});
  M0Request user;
  user.mode = M0Mode::UserSupplied;
  user.user_m0 = DualQuaternion(J * R(1, 2));
  CHECK(choose_m0(viv, user).value() == DualQuaternion(J * R(1, 2)));

  user.user_m0 = DualQuaternion(J);
  Error e = error_of([&] { choose_m0(viv, user); });
  CHECK(e.code() == ErrorCode::UserM0Invalid);
  CHECK(std::string(e.what()).find("cell 1") != std::string::npos);
  CHECK(std::string(e.what()).find("equal minimal polynomials") != std::string::npos);
  auto fail = validate_m0(viv, J, M0Mode::UserSupplied);
  REQUIRE(fail);
  CHECK(fail->cell == 1);

  auto card = rots({D(K, I * R(-3, 2)), D(K, I * R(-1, 2))});
  user.user_m0 = DualQuaternion(K * R(2));
  RotationQuaternion m0 = choose_m0(card, user);
  CHECK(m0.value() == DualQuaternion(K * R(2)));
  Linkage l = synthesize(factorization({D(K, I * R(-3, 2)), D(K, I * R(-1, 2))}), m0, {});
  for (const auto& r : l.cell_reports()) CHECK(r.kind == FourBarKind::PlanarAntiparallelogram);
}

TEST_CASE("seed joint modes") {
  auto ell = rots({-K, D(K, J * R(1, 2)), D(K, J * R(-3, 2))});
  M0Request generic;
  RotationQuaternion g = choose_m0(ell, generic);
  CHECK(g == choose_m0(ell, generic));
  Linkage lg = synthesize(factorization({-K, D(K, J * R(1, 2)), D(K, J * R(-3, 2))}, linear(K)), g, {});
  for (const auto& r : lg.cell_reports()) CHECK(r.kind == FourBarKind::Bennett);

  M0Request planar;
  planar.mode = M0Mode::Planar;
  RotationQuaternion p = choose_m0(ell, planar);
  Linkage lp = synthesize(factorization({-K, D(K, J * R(1, 2)), D(K, J * R(-3, 2))}, linear(K)), p, {}, M0Mode::Planar);
  CHECK(all_parallel(lp, {0, 0, 1}));

  M0Request spherical;
  spherical.mode = M0Mode::Spherical;
  CHECK(error_of([&] { choose_m0(ell, spherical); }).code() == ErrorCode::ModeUnsupported);

  auto viv = rots({K, J});
  RotationQuaternion s = choose_m0(viv, spherical);
  CHECK(s.value().dual().is_zero());
  Linkage ls = synthesize(factorization({K, J}), s, {}, M0Mode::Spherical);
  CHECK(all_through(ls, {0, 0, 0}));
  for (const auto& r : ls.cell_reports()) CHECK(r.kind == FourBarKind::Spherical);
  CHECK(error_of([&] { choose_m0(viv, planar); }).code() == ErrorCode::ModeUnsupported);

  M0Request tiny;
  tiny.enumeration_budget = 0;
  tiny.random_budget = 0;
  CHECK(error_of([&] { choose_m0(ell, tiny); }).code() == ErrorCode::SearchExhausted);
}

TEST_CASE("Viviani linkage") {
  Linkage l = viviani_linkage_centered();
  CHECK(l.m[1].value() == DualQuaternion((J * R(-3) + K * R(4)) / R(10)));
  CHECK(l.m[2].value() == DualQuaternion((J * R(5) - K * R(12)) / R(26)));
  CHECK(l.k[0].value() == DualQuaternion((J * R(4) + K * R(3)) / R(5)));
  CHECK(l.k[1].value() == DualQuaternion((J * R(33) + K * R(56)) / R(65)));
  CHECK(l.links().size() == 6);
  CHECK(l.joints().size() == 7);
  check_topology(l);
  CHECK(all_through(l, {0, 0, 0}));
}

TEST_CASE("ellipse linkage") {
  Linkage l = ellipse_linkage();
  CHECK(l.m[1].value() == D(K * R(-2), J * R(-1, 3)));
  CHECK(l.m[2].value() == D(K * R(-2), J));
  CHECK(l.m[3].value() == D(K * R(-2), J * R(-3)));
  CHECK(l.k[0].value() == D(-K, J * R(-2, 3)));
  CHECK(l.k[1].value() == D(K, J * R(-5, 6)));
  CHECK(l.k[2].value() == D(K, J * R(5, 2)));
  CHECK(l.links().size() == 8);
  CHECK(l.joints().size() == 10);
  check_topology(l);
  CHECK(l.chain_product() == make_dual(to_quat(P({1, 0, 1})), QuatPoly{I * R(2), J}) * to_dual(linear(K)));
}

TEST_CASE("segment and limacon linkages") {
  MotionPolynomial c = minimal_motion(segment_coords());
  Factorization f = tfactor(c);
  Linkage l = synthesize(f, RotationQuaternion(D(K * R(2), J * R(3, 4))), {});
  CHECK(l.links().size() == 8);
  CHECK(l.joints().size() == 10);
  CHECK(l.chain_product() == c.value() * to_dual(f.cofactor));

  // a = 2, b = 1: 3 m1 = 6k - 8 eps i, 9 m2 = 18k - 20 eps i, 6 k1 = 6k + 4 eps i, 18 k2 = 18k - 26 eps i.
  Linkage lim = synthesize(factorization({D(K, I * R(-2)), D(K, -I)}), RotationQuaternion(K * R(2)), {});
  CHECK(lim.m[1].value() == D(K * R(2), I * R(-8, 3)));
  CHECK(lim.m[2].value() == D(K * R(2), I * R(-20, 9)));
  CHECK(lim.k[0].value() == D(K, I * R(4, 6)));
  CHECK(lim.k[1].value() == D(K, I * R(-26, 18)));
}

TEST_CASE("single joint") {
  MotionPolynomial c = minimal_motion(ellipse_coords(1, 1));
  Linkage l = synthesize_single(tfactor(c), {});
  CHECK(l.links().size() == 2);
  CHECK(l.joints().size() == 1);
  CHECK(l.joints()[0].links == std::pair<std::string, std::string>{"A0", "A1"});
  CHECK(l.cell_reports().empty());
  CHECK(l.chain_product() == c.value());
}

TEST_CASE("ladder invariants") {
  for (const Linkage& l : {viviani_linkage_centered(), viviani_linkage(), ellipse_linkage(), cardioid_linkage()}) {
    for (size_t i = 0; i < l.n(); ++i) {
      CHECK(dlin(l.h[i]) * dlin(l.m[i]) == dlin(l.m[i + 1]) * dlin(l.k[i]));
      CHECK(minpol(l.m[i + 1]) == minpol(l.m[0]));
    }
  }
}

TEST_CASE("count bounds") {
  CHECK(count_bounds(2, 0).links == 8);
  CHECK(count_bounds(2, 0).joints == 10);
  CHECK(count_bounds(4, 2).links == 6);
  CHECK(count_bounds(4, 2).joints == 7);
  CHECK(count_bounds(6, 3).links == 8);
  CHECK(count_bounds(6, 3).joints == 10);
  CHECK(error_of([] { count_bounds(3, 0); }).code() == ErrorCode::InvalidDegreeParity);
  CHECK(error_of([] { count_bounds(4, 3); }).code() == ErrorCode::InvalidDegreeParity);
}
