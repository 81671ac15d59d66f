#pragma once

#include "linkdraw/poly.hpp"
#include "linkdraw/quaternion.hpp"

#include <string>

namespace linkdraw {

// Line with direction d != 0 and moment m = p x d for any point p on it.
// Stored canonically: first nonzero direction coordinate scaled to 1.
class PlueckerLine {
 public:
  PlueckerLine(Vec3 direction, Vec3 moment);

  const Vec3& direction() const { return d_; }
  const Vec3& moment() const { return m_; }
  std::array<Rational, 6> coords() const { return {d_[0], d_[1], d_[2], m_[0], m_[1], m_[2]}; }

  bool contains(const Vec3& point) const;
  // Point of the line closest to the origin.
  Vec3 foot() const;

  friend bool operator==(const PlueckerLine&, const PlueckerLine&) = default;
  std::string str() const;

 private:
  Vec3 d_;
  Vec3 m_;
};

bool parallel(const PlueckerLine& a, const PlueckerLine& b);
// Coplanar, non-parallel lines share exactly one point.
bool intersect(const PlueckerLine& a, const PlueckerLine& b);
// Common point of two intersecting, non-parallel lines.
Vec3 intersection_point(const PlueckerLine& a, const PlueckerLine& b);

// Dual quaternion h with h + conj(h) and h conj(h) real and a nonzero primal
// vector part: t - h parameterizes a rotation about a fixed axis.
class RotationQuaternion {
 public:
  // Throws NotRotation when the conditions fail.
  explicit RotationQuaternion(DualQuaternion value);

  const DualQuaternion& value() const { return h_; }
  operator const DualQuaternion&() const { return h_; }  // NOLINT(google-explicit-constructor)

  RotationQuaternion conj() const { return RotationQuaternion(h_.conj()); }

  friend bool operator==(const RotationQuaternion&, const RotationQuaternion&) = default;
  std::string str() const { return h_.str(); }

 private:
  DualQuaternion h_;
};

bool is_rotation(const DualQuaternion& h);

// (t - h)(t - conj h) = t^2 - (h + conj h) t + h conj h
RealPoly minpol(const DualQuaternion& h);
// Axis read from h - conj(h) = l1 i + l2 j + l3 k - eps (l4 i + l5 j + l6 k).
PlueckerLine axis(const DualQuaternion& h);

// Rotation quaternion with primal part `primal` (nonzero vector part) about the
// parallel axis through `point`.
RotationQuaternion rotation_through(const Quaternion& primal, const Vec3& point);

// g acting on a line, via conjugation of the line's pure dual quaternion.
PlueckerLine transform_line(const DualQuaternion& g, const PlueckerLine& line);

}  // namespace linkdraw
