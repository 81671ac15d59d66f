#pragma once

#include "linkdraw/curve.hpp"
#include "linkdraw/motion.hpp"
#include "linkdraw/rotation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linkdraw {

// (k1, k2) with (t - h1)(t - h2) = (t - k1)(t - k2):
//   k2 = -(conj(h1) - h2)^{-1} (h1 h2 - h1 conj(h1)),  k1 = h1 + h2 - k2.
// Throws FlipUndefined when conj(h1) - h2 is not invertible.
std::pair<DualQuaternion, DualQuaternion> bflip(const DualQuaternion& h1, const DualQuaternion& h2);
std::pair<RotationQuaternion, RotationQuaternion> bflip(const RotationQuaternion& h1, const RotationQuaternion& h2);

enum class FourBarKind { Bennett, PlanarAntiparallelogram, Spherical, Degenerate };
std::string_view to_string(FourBarKind kind);

struct FourBarReport {
  FourBarKind kind = FourBarKind::Degenerate;
  bool one_dof = false;
  bool dependent_vector_parts = false;
  bool equal_minpols = false;
  bool axes_intersect = false;
  bool axes_parallel = false;
  bool flip_defined = true;

  std::string reason() const;
};

// Mobility and type of the four-bar spanned by the flip of (h1, h2).
FourBarReport fourbar_check(const DualQuaternion& h1, const DualQuaternion& h2);

enum class M0Mode { Generic, Spherical, Planar, UserSupplied };
std::string_view to_string(M0Mode mode);

struct M0Request {
  M0Mode mode = M0Mode::Generic;
  std::optional<DualQuaternion> user_m0;  // required for UserSupplied
  std::uint64_t seed = 1;
  size_t enumeration_budget = 4000;
  size_t random_budget = 2000;
};

// Seed joint m0 for the recursion (m_l, k_l) = bflip(h_l, m_{l-1}) such that
// every cell has one degree of freedom, plus the mode's extra constraints.
RotationQuaternion choose_m0(const std::vector<RotationQuaternion>& h, const M0Request& request);

// Why the recursion from m0 fails, or nullopt when every cell passes.
struct CellFailure {
  size_t cell;  // 1-based
  std::string reason;
};
std::optional<CellFailure> validate_m0(const std::vector<RotationQuaternion>& h, const DualQuaternion& m0,
                                       M0Mode mode);

struct Joint {
  std::string label;
  RotationQuaternion value;
  std::pair<std::string, std::string> links;

  PlueckerLine axis() const { return linkdraw::axis(value.value()); }
};

struct Link {
  std::string label;
  std::vector<std::string> joints;
};

// Scissor linkage: links A_0..A_n (bottom row) and B_0..B_n (top row); joint
// h_i joins A_{i-1} and A_i, k_i joins B_{i-1} and B_i, m_i joins A_i and B_i.
// A_0 is fixed, A_n carries the drawing point. Joint values live in the
// normalized synthesis frame; `frame` maps them back.
struct Linkage {
  std::vector<RotationQuaternion> h;
  std::vector<RotationQuaternion> k;
  std::vector<RotationQuaternion> m;  // m_0..m_n; empty for n = 1
  QuatPoly cofactor{Quaternion(1)};
  FrameTransform frame;
  M0Mode mode = M0Mode::Generic;

  size_t n() const { return h.size(); }
  std::vector<Joint> joints() const;
  std::vector<Link> links() const;
  // Drawing point at t = infinity in original coordinates.
  Vec3 drawn_point() const { return frame.unapply_point({0, 0, 0}); }
  // Product (t - h_1)...(t - h_n) in the synthesis frame.
  DualQuatPoly chain_product() const;
  std::vector<FourBarReport> cell_reports() const;

  friend bool operator==(const Linkage&, const Linkage&) = default;
};

// Builds the linkage by the flip recursion and verifies every cell identity.
Linkage synthesize(const Factorization& factors, const RotationQuaternion& m0, const FrameTransform& frame,
                   M0Mode mode = M0Mode::Generic);
// n = 1: a single revolute joint, no flips.
Linkage synthesize_single(const Factorization& factors, const FrameTransform& frame);

struct CountBounds {
  int links;
  int joints;
};
// (3d - 4c + 2, 9d/2 - 6c + 1)
CountBounds count_bounds(int d, int c);

}  // namespace linkdraw
