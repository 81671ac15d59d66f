#include "linkdraw/linkage.hpp"

#include <algorithm>
#include <random>

namespace linkdraw {

std::pair<DualQuaternion, DualQuaternion> bflip(const DualQuaternion& h1, const DualQuaternion& h2) {
  DualQuaternion diff = h1.conj() - h2;
  if (diff.primal().is_zero())
    throw Error(ErrorCode::FlipUndefined, "conj(" + h1.str() + ") - " + h2.str() + " is not invertible");
  DualQuaternion k2 = -(diff.inverse() * (h1 * h2 - h1 * h1.conj()));
  DualQuaternion k1 = h1 + h2 - k2;
  return {k1, k2};
}

std::pair<RotationQuaternion, RotationQuaternion> bflip(const RotationQuaternion& h1, const RotationQuaternion& h2) {
  auto [k1, k2] = bflip(h1.value(), h2.value());
  return {RotationQuaternion(std::move(k1)), RotationQuaternion(std::move(k2))};
}

std::string_view to_string(FourBarKind kind) {
  switch (kind) {
    case FourBarKind::Bennett: return "Bennett";
    case FourBarKind::PlanarAntiparallelogram: return "PlanarAntiparallelogram";
    case FourBarKind::Spherical: return "Spherical";
    case FourBarKind::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

std::string_view to_string(M0Mode mode) {
  switch (mode) {
    case M0Mode::Generic: return "generic";
    case M0Mode::Spherical: return "spherical";
    case M0Mode::Planar: return "planar";
    case M0Mode::UserSupplied: return "user";
  }
  return "unknown";
}

std::string FourBarReport::reason() const {
  std::vector<std::string> parts;
  if (!flip_defined) parts.emplace_back("flip undefined");
  if (dependent_vector_parts) parts.emplace_back("vector parts dependent");
  if (equal_minpols) parts.emplace_back("equal minimal polynomials");
  if (axes_intersect) parts.emplace_back("axes intersecting");
  if (axes_parallel) parts.emplace_back("axes parallel");
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out.empty() ? "generic" : out;
}

namespace {

std::array<Rational, 6> vector_part(const DualQuaternion& h) {
  DualQuaternion v = h - h.conj();
  Vec3 a = v.primal().vec(), b = v.dual().vec();
  return {a[0], a[1], a[2], b[0], b[1], b[2]};
}

bool dependent(const std::array<Rational, 6>& a, const std::array<Rational, 6>& b) {
  for (size_t x = 0; x < 6; ++x)
    for (size_t y = x + 1; y < 6; ++y)
      if (a[x] * b[y] != a[y] * b[x]) return false;
  return true;
}

}  // namespace

FourBarReport fourbar_check(const DualQuaternion& h1, const DualQuaternion& h2) {
  FourBarReport r;
  r.flip_defined = !(h1.conj() - h2).primal().is_zero();
  r.dependent_vector_parts = dependent(vector_part(h1), vector_part(h2));
  r.equal_minpols = minpol(h1) == minpol(h2);
  PlueckerLine a1 = axis(h1), a2 = axis(h2);
  r.axes_parallel = parallel(a1, a2);
  r.axes_intersect = intersect(a1, a2);
  r.one_dof = r.flip_defined && !r.dependent_vector_parts && !r.equal_minpols;
  if (!r.one_dof) r.kind = FourBarKind::Degenerate;
  else if (r.axes_intersect) r.kind = FourBarKind::Spherical;
  else if (r.axes_parallel) r.kind = FourBarKind::PlanarAntiparallelogram;
  else r.kind = FourBarKind::Bennett;
  return r;
}

std::optional<CellFailure> validate_m0(const std::vector<RotationQuaternion>& h, const DualQuaternion& m0,
                                       M0Mode mode) {
  if (!is_rotation(m0)) return CellFailure{0, "m0 = " + m0.str() + " is not a rotation quaternion"};
  DualQuaternion m = m0;
  for (size_t i = 0; i < h.size(); ++i) {
    FourBarReport r = fourbar_check(h[i].value(), m);
    if (!r.one_dof) return CellFailure{i + 1, r.reason()};
    if (mode == M0Mode::Generic && r.kind != FourBarKind::Bennett)
      return CellFailure{i + 1, "cell is " + std::string(to_string(r.kind)) + ", not Bennett"};
    if (mode == M0Mode::Spherical && r.kind != FourBarKind::Spherical)
      return CellFailure{i + 1, "cell is " + std::string(to_string(r.kind)) + ", not spherical"};
    if (mode == M0Mode::Planar && r.kind != FourBarKind::PlanarAntiparallelogram)
      return CellFailure{i + 1, "cell is " + std::string(to_string(r.kind)) + ", not planar"};
    auto [next, k] = bflip(h[i].value(), m);
    if (!is_rotation(next) || !is_rotation(k)) return CellFailure{i + 1, "flip left the rotation quaternions"};
    m = next;
  }
  return std::nullopt;
}

namespace {

std::vector<Vec3> small_vectors(int range, bool include_zero) {
  std::vector<Vec3> out;
  for (int x = -range; x <= range; ++x)
    for (int y = -range; y <= range; ++y)
      for (int z = -range; z <= range; ++z) {
        if (!include_zero && x == 0 && y == 0 && z == 0) continue;
        out.push_back({x, y, z});
      }
  auto height = [](const Vec3& v) {
    int h = 0, nz = 0;
    for (const auto& c : v) {
      h = std::max(h, static_cast<int>(abs(c).num().get_si()));
      nz += c.is_zero() ? 0 : 1;
    }
    return std::pair{h, nz};
  };
  std::stable_sort(out.begin(), out.end(), [&](const Vec3& a, const Vec3& b) { return height(a) < height(b); });
  return out;
}

const std::vector<Rational>& weights() {
  static const std::vector<Rational> w{Rational(1), Rational(2), Rational(1, 2), Rational(3),
                                       Rational(1, 3), Rational(3, 2), Rational(2, 3)};
  return w;
}

std::optional<Vec3> common_point(const std::vector<RotationQuaternion>& h) {
  std::vector<PlueckerLine> axes;
  for (const auto& x : h) axes.push_back(axis(x.value()));
  std::optional<Vec3> point;
  for (size_t a = 0; a < axes.size() && !point; ++a)
    for (size_t b = a + 1; b < axes.size() && !point; ++b)
      if (intersect(axes[a], axes[b])) point = intersection_point(axes[a], axes[b]);
  if (!point) {
    bool all_same = std::all_of(axes.begin(), axes.end(), [&](const PlueckerLine& l) { return l == axes[0]; });
    if (!all_same) return std::nullopt;
    point = axes[0].foot();
  }
  for (const auto& l : axes)
    if (!l.contains(*point)) return std::nullopt;
  return point;
}

std::optional<Vec3> common_direction(const std::vector<RotationQuaternion>& h) {
  Vec3 d = axis(h.front().value()).direction();
  for (const auto& x : h)
    if (!is_zero(cross(axis(x.value()).direction(), d))) return std::nullopt;
  return d;
}

struct CandidateSpace {
  std::vector<Vec3> directions;
  std::vector<Vec3> points;
};

Rational random_rational(std::mt19937_64& rng, int range, int max_den) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  return Rational(num(rng), den(rng));
}

}  // namespace

RotationQuaternion choose_m0(const std::vector<RotationQuaternion>& h, const M0Request& request) {
  if (h.empty()) throw Error(ErrorCode::UserM0Invalid, "empty factor list");
  if (request.mode == M0Mode::UserSupplied) {
    if (!request.user_m0) throw Error(ErrorCode::UserM0Invalid, "no m0 supplied");
    if (auto fail = validate_m0(h, *request.user_m0, M0Mode::UserSupplied))
      throw Error(ErrorCode::UserM0Invalid, "cell " + std::to_string(fail->cell) + ": " + fail->reason);
    return RotationQuaternion(*request.user_m0);
  }

  CandidateSpace space;
  if (request.mode == M0Mode::Spherical) {
    auto c = common_point(h);
    if (!c) throw Error(ErrorCode::ModeUnsupported, "factor axes are not concurrent; no spherical linkage");
    space.points = {*c};
    space.directions = small_vectors(2, false);
  } else if (request.mode == M0Mode::Planar) {
    auto d = common_direction(h);
    if (!d) throw Error(ErrorCode::ModeUnsupported, "factor axes are not parallel; no planar linkage");
    space.directions = {*d};
    space.points = small_vectors(2, true);
  } else {
    space.directions = small_vectors(2, false);
    space.points = small_vectors(2, true);
  }

  std::vector<RealPoly> taken;
  for (const auto& x : h) taken.push_back(minpol(x.value()));
  auto try_candidate = [&](const Vec3& u, const Rational& w, const Vec3& c) -> std::optional<RotationQuaternion> {
    Quaternion primal = Quaternion::from_vector(w * u);
    RealPoly mp{primal.norm(), Rational(0), Rational(1)};
    if (std::find(taken.begin(), taken.end(), mp) != taken.end()) return std::nullopt;
    RotationQuaternion m0 = rotation_through(primal, c);
    if (validate_m0(h, m0.value(), request.mode)) return std::nullopt;
    return m0;
  };

  // Enumerate (point, direction, weight) index triples by increasing index sum.
  const size_t np = space.points.size(), nd = space.directions.size(), nw = weights().size();
  size_t tried = 0;
  for (size_t total = 0; total < np + nd + nw && tried < request.enumeration_budget; ++total) {
    for (size_t ip = 0; ip < np && ip <= total; ++ip) {
      for (size_t id = 0; id < nd && ip + id <= total; ++id) {
        size_t iw = total - ip - id;
        if (iw >= nw) continue;
        if (++tried > request.enumeration_budget) break;
        if (auto m0 = try_candidate(space.directions[id], weights()[iw], space.points[ip])) return *m0;
      }
    }
  }

  std::mt19937_64 rng(request.seed);
  for (size_t n = 0; n < request.random_budget; ++n) {
    Vec3 u = space.directions.size() == 1 ? space.directions[0]
                                          : Vec3{random_rational(rng, 5, 1), random_rational(rng, 5, 1),
                                                 random_rational(rng, 5, 1)};
    if (is_zero(u)) continue;
    Rational w = random_rational(rng, 5, 3);
    if (w.is_zero()) continue;
    Vec3 c = space.points.size() == 1 ? space.points[0]
                                      : Vec3{random_rational(rng, 5, 3), random_rational(rng, 5, 3),
                                             random_rational(rng, 5, 3)};
    if (auto m0 = try_candidate(u, w, c)) return *m0;
  }
  throw Error(ErrorCode::SearchExhausted, "no admissible m0 found in " + std::string(to_string(request.mode)) + " mode");
}

std::vector<Joint> Linkage::joints() const {
  auto idx = [](const char* p, size_t i) { return std::string(p) + std::to_string(i); };
  std::vector<Joint> out;
  if (m.empty()) {
    for (size_t i = 1; i <= h.size(); ++i) out.push_back({idx("h", i), h[i - 1], {idx("A", i - 1), idx("A", i)}});
    return out;
  }
  out.push_back({"m0", m[0], {"A0", "B0"}});
  for (size_t i = 1; i <= n(); ++i) {
    out.push_back({idx("h", i), h[i - 1], {idx("A", i - 1), idx("A", i)}});
    out.push_back({idx("k", i), k[i - 1], {idx("B", i - 1), idx("B", i)}});
    out.push_back({idx("m", i), m[i], {idx("A", i), idx("B", i)}});
  }
  return out;
}

std::vector<Link> Linkage::links() const {
  std::vector<Link> out;
  auto js = joints();
  auto collect = [&](const std::string& label) {
    Link l{label, {}};
    for (const auto& j : js)
      if (j.links.first == label || j.links.second == label) l.joints.push_back(j.label);
    return l;
  };
  for (size_t i = 0; i <= n(); ++i) out.push_back(collect("A" + std::to_string(i)));
  if (!m.empty())
    for (size_t i = 0; i <= n(); ++i) out.push_back(collect("B" + std::to_string(i)));
  return out;
}

DualQuatPoly Linkage::chain_product() const {
  DualQuatPoly out{DualQuaternion(1)};
  for (const auto& x : h) out = out * linear(x.value());
  return out;
}

std::vector<FourBarReport> Linkage::cell_reports() const {
  std::vector<FourBarReport> out;
  if (m.empty()) return out;
  for (size_t i = 0; i < n(); ++i) out.push_back(fourbar_check(h[i].value(), m[i].value()));
  return out;
}

Linkage synthesize_single(const Factorization& factors, const FrameTransform& frame) {
  if (factors.factors.size() != 1) throw Error(ErrorCode::UserM0Invalid, "single-joint linkage needs exactly one factor");
  Linkage out;
  out.h = factors.factors;
  out.cofactor = factors.cofactor;
  out.frame = frame;
  return out;
}

Linkage synthesize(const Factorization& factors, const RotationQuaternion& m0, const FrameTransform& frame,
                   M0Mode mode) {
  if (factors.factors.size() == 1) return synthesize_single(factors, frame);
  if (factors.factors.empty()) throw Error(ErrorCode::UserM0Invalid, "empty factorization");
  if (auto fail = validate_m0(factors.factors, m0.value(), M0Mode::UserSupplied))
    throw Error(ErrorCode::UserM0Invalid, "cell " + std::to_string(fail->cell) + ": " + fail->reason);
  Linkage out;
  out.h = factors.factors;
  out.cofactor = factors.cofactor;
  out.frame = frame;
  out.mode = mode;
  out.m.push_back(m0);
  for (size_t i = 0; i < out.n(); ++i) {
    auto [m_next, k] = bflip(out.h[i], out.m.back());
    DualQuatPoly lhs = linear(out.h[i].value()) * linear(out.m.back().value());
    DualQuatPoly rhs = linear(m_next.value()) * linear(k.value());
    if (lhs != rhs) throw Error(ErrorCode::ClosureViolation, "cell " + std::to_string(i + 1) + " does not close");
    out.m.push_back(m_next);
    out.k.push_back(k);
  }
  return out;
}

CountBounds count_bounds(int d, int c) {
  if (d < 0 || d % 2 != 0 || c < 0 || 2 * c > d)
    throw Error(ErrorCode::InvalidDegreeParity,
                "bounds need even d and 0 <= 2c <= d, got d=" + std::to_string(d) + ", c=" + std::to_string(c));
  return {3 * d - 4 * c + 2, 9 * d / 2 - 6 * c + 1};
}

}  // namespace linkdraw
