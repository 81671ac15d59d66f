#pragma once

#include "linkdraw/poly.hpp"
#include "linkdraw/real_poly.hpp"

#include <array>
#include <optional>

namespace linkdraw {

// Reduced, bounded rational curve X = (x1, x2, x3) / x0.
class RationalCurve {
 public:
  const std::array<RealPoly, 4>& coords() const { return x_; }
  const RealPoly& x(size_t n) const { return x_[n]; }
  int degree() const { return d_; }
  int circularity() const { return c_; }
  // gcd(x0, x1^2 + x2^2 + x3^2)
  const RealPoly& circular_factor() const { return g_; }

  // x0 + x1 i + x2 j + x3 k
  QuatPoly as_quat() const { return from_components(x_); }
  // x(inf) = lim t^-d x == 1
  bool is_normalized() const;

  // Affine point at finite t. x0(t) != 0 holds for bounded curves.
  Vec3 point(const Rational& t) const;
  // Limit point at t = infinity.
  Vec3 point_at_infinity() const;

  friend bool operator==(const RationalCurve&, const RationalCurve&) = default;

 private:
  friend RationalCurve curve_load(const std::array<RealPoly, 4>&);
  std::array<RealPoly, 4> x_;
  RealPoly g_;
  int d_ = 0;
  int c_ = 0;
};

// Divides out the common gcd and computes degree and circularity. Throws
// Unbounded when x0 has a real root or deg x0 < deg xi, InvalidCurve when x0 = 0.
RationalCurve curve_load(const std::array<RealPoly, 4>& x);

// Two curves are the same point set with the same parameterization when
// x_i y_0 = y_i x_0 for all i.
bool same_parameterization(const std::array<RealPoly, 4>& x, const std::array<RealPoly, 4>& y);

// Frame change applied by normalization: points move by `translation` and the
// homogeneous polynomial is multiplied by `scale` (no geometric effect).
struct FrameTransform {
  Vec3 translation{};
  Rational scale{1};

  bool is_identity() const { return is_zero(translation) && scale == Rational(1); }
  RationalCurve apply(const RationalCurve& x) const;
  RationalCurve unapply(const RationalCurve& x) const;
  Vec3 apply_point(const Vec3& p) const { return p + translation; }
  Vec3 unapply_point(const Vec3& p) const { return p - translation; }
  // Rotation quaternions expressed in original coordinates <-> normalized coordinates.
  DualQuaternion apply_to(const DualQuaternion& h) const;
  DualQuaternion unapply_to(const DualQuaternion& h) const;

  friend bool operator==(const FrameTransform&, const FrameTransform&) = default;
};

struct NormalizedCurve {
  RationalCurve curve;
  FrameTransform frame;
};

// Translates and rescales so that x0 is monic of degree d and deg xi < d.
NormalizedCurve curve_normalize(const RationalCurve& x);

}  // namespace linkdraw
