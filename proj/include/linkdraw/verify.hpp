#pragma once

#include "linkdraw/curve.hpp"
#include "linkdraw/linkage.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linkdraw {

// Parameter value; nullopt stands for t = infinity.
using Param = std::optional<Rational>;
std::string param_str(const Param& t);

struct JointPose {
  std::string label;
  PlueckerLine axis;
};

// Linkage configuration at parameter t, in original coordinates.
struct KinematicSample {
  Param t;
  std::vector<JointPose> joint_poses;
  Vec3 drawn;
};

// Link A_j moves by (t - h_1)...(t - h_j), B_j by the same product times
// (t - conj m_j). h_j and k_j move with A_{j-1} and B_{j-1}, m_j with A_j.
KinematicSample configuration_at(const Linkage& linkage, const Param& t);

// {0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 5/7}
std::vector<Rational> default_samples();

struct SampleMismatch {
  Rational t;
  Vec3 drawn;
  Vec3 expected;
};

struct TrajectoryReport {
  std::vector<Rational> samples;
  std::vector<SampleMismatch> mismatches;
  // H conj(H) divides trajectory(chain) and the quotient parameterizes the curve.
  bool symbolic_identity = false;
  // (t - h_n)...(t - h_1)(t - m_0) = (t - m_n)(t - k_n)...(t - k_1) at every sample.
  bool ladder_identity = true;
  std::optional<Rational> ladder_failure;

  bool ok() const { return mismatches.empty() && symbolic_identity && ladder_identity; }
  // Throws Mismatch describing the first failure.
  void require() const;
};

// `curve` is given in original coordinates.
TrajectoryReport check_trajectory(const Linkage& linkage, const RationalCurve& curve,
                                  const std::vector<Rational>& samples = default_samples());

struct ClosureReport {
  std::vector<size_t> failed_cells;  // 1-based
  std::vector<Rational> random_samples;

  bool ok() const { return failed_cells.empty(); }
  // Throws ClosureViolation naming the first failing cell.
  void require() const;
};

// Exact cell identities (t - h_i)(t - m_{i-1}) = (t - m_i)(t - k_i), plus
// evaluation of both sides at a few seeded random rationals.
ClosureReport check_loop_closure(const Linkage& linkage, std::uint64_t seed = 7, size_t random_count = 5);

// Floating-point view for plotting only.
std::array<double, 3> to_double(const Vec3& v);
bool approx_equal(const std::array<double, 3>& a, const std::array<double, 3>& b, double tol = 1e-9);

}  // namespace linkdraw
