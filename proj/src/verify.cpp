#include "linkdraw/verify.hpp"

#include <cmath>
#include <random>

namespace linkdraw {

std::string param_str(const Param& t) { return t ? t->str() : "inf"; }

namespace {

DualQuaternion eval_at(const DualQuatPoly& p, const Rational& t) { return p.eval_right(DualQuaternion(t)); }

// Pose of the moving frame of a factor at parameter t; identity at infinity.
DualQuaternion factor_at(const DualQuaternion& h, const Param& t) { return t ? DualQuaternion(*t) - h : DualQuaternion(1); }

PlueckerLine to_original(const FrameTransform& frame, const PlueckerLine& line) {
  return transform_line(DualQuaternion::translation(Rational(-1) * frame.translation), line);
}

std::string point_str(const Vec3& p) { return str(p); }

}  // namespace

KinematicSample configuration_at(const Linkage& linkage, const Param& t) {
  KinematicSample out;
  out.t = t;
  std::vector<DualQuaternion> a_pose{DualQuaternion(1)};
  for (const auto& h : linkage.h) a_pose.push_back(a_pose.back() * factor_at(h.value(), t));

  auto pose = [&](const std::string& label, const DualQuaternion& g, const DualQuaternion& joint) {
    out.joint_poses.push_back({label, to_original(linkage.frame, transform_line(g, axis(joint)))});
  };
  const size_t n = linkage.n();
  for (size_t j = 1; j <= n; ++j) pose("h" + std::to_string(j), a_pose[j - 1], linkage.h[j - 1].value());
  if (!linkage.m.empty()) {
    for (size_t j = 0; j <= n; ++j) pose("m" + std::to_string(j), a_pose[j], linkage.m[j].value());
    for (size_t j = 1; j <= n; ++j) {
      DualQuaternion b_pose = a_pose[j - 1] * factor_at(linkage.m[j - 1].value().conj(), t);
      pose("k" + std::to_string(j), b_pose, linkage.k[j - 1].value());
    }
  }
  out.drawn = linkage.frame.unapply_point(act_on_point(a_pose.back(), {0, 0, 0}));
  return out;
}

std::vector<Rational> default_samples() {
  return {Rational(0),     Rational(1),     Rational(-1), Rational(2),  Rational(-2),
          Rational(1, 2),  Rational(-1, 2), Rational(3),  Rational(-3), Rational(5, 7)};
}

void TrajectoryReport::require() const {
  if (!mismatches.empty()) {
    const auto& m = mismatches.front();
    throw Error(ErrorCode::Mismatch, "at t = " + m.t.str() + " linkage draws " + point_str(m.drawn) +
                                         " but the curve passes through " + point_str(m.expected));
  }
  if (!ladder_identity)
    throw Error(ErrorCode::Mismatch, "ladder routes disagree at t = " + param_str(ladder_failure));
  if (!symbolic_identity) throw Error(ErrorCode::Mismatch, "trajectory of the chain product is not H conj(H) times the curve");
}

TrajectoryReport check_trajectory(const Linkage& linkage, const RationalCurve& curve,
                                  const std::vector<Rational>& samples) {
  TrajectoryReport out;
  out.samples = samples;
  for (const auto& t : samples) {
    Vec3 drawn = configuration_at(linkage, t).drawn;
    Vec3 expected = curve.point(t);
    if (drawn != expected) out.mismatches.push_back({t, drawn, expected});
  }

  DualQuatPoly chain = linkage.chain_product();
  RealPoly hh = as_real(linkage.cofactor * linkage.cofactor.conj());
  std::array<RealPoly, 4> traj = trajectory_coords(chain);
  std::array<RealPoly, 4> quotient;
  out.symbolic_identity = true;
  for (size_t i = 0; i < 4; ++i) {
    auto [q, r] = real_divmod(traj[i], hh);
    if (!r.is_zero()) out.symbolic_identity = false;
    quotient[i] = q;
  }
  if (out.symbolic_identity) {
    RationalCurve synth_frame = linkage.frame.apply(curve);
    out.symbolic_identity = same_parameterization(quotient, synth_frame.coords());
  }

  if (!linkage.m.empty()) {
    DualQuatPoly lhs{DualQuaternion(1)}, rhs = linear(linkage.m.back().value());
    for (size_t i = linkage.n(); i-- > 0;) {
      lhs = lhs * linear(linkage.h[i].value());
      rhs = rhs * linear(linkage.k[i].value());
    }
    lhs = lhs * linear(linkage.m.front().value());
    for (const auto& t : samples) {
      if (eval_at(lhs, t) != eval_at(rhs, t)) {
        out.ladder_identity = false;
        out.ladder_failure = t;
        break;
      }
    }
  }
  return out;
}

void ClosureReport::require() const {
  if (!failed_cells.empty())
    throw Error(ErrorCode::ClosureViolation, "loop closure fails in cell " + std::to_string(failed_cells.front()));
}

ClosureReport check_loop_closure(const Linkage& linkage, std::uint64_t seed, size_t random_count) {
  ClosureReport out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  for (size_t n = 0; n < random_count; ++n) out.random_samples.emplace_back(num(rng), den(rng));
  if (linkage.m.empty()) return out;
  for (size_t i = 0; i < linkage.n(); ++i) {
    DualQuatPoly lhs = linear(linkage.h[i].value()) * linear(linkage.m[i].value());
    DualQuatPoly rhs = linear(linkage.m[i + 1].value()) * linear(linkage.k[i].value());
    bool good = lhs == rhs;
    for (const auto& t : out.random_samples) good = good && eval_at(lhs, t) == eval_at(rhs, t);
    if (!good) out.failed_cells.push_back(i + 1);
  }
  return out;
}

std::array<double, 3> to_double(const Vec3& v) { return {v[0].to_double(), v[1].to_double(), v[2].to_double()}; }

bool approx_equal(const std::array<double, 3>& a, const std::array<double, 3>& b, double tol) {
  for (size_t i = 0; i < 3; ++i)
    if (std::abs(a[i] - b[i]) > tol * std::max(1.0, std::abs(b[i]))) return false;
  return true;
}

}  // namespace linkdraw
