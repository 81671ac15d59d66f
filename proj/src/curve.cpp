#include "linkdraw/curve.hpp"

namespace linkdraw {

RationalCurve curve_load(const std::array<RealPoly, 4>& x) {
  if (x[0].is_zero()) throw Error(ErrorCode::InvalidCurve, "x0 must be nonzero");
  RealPoly common;
  for (const auto& xi : x) common = real_gcd(common, xi);
  RationalCurve out;
  for (size_t n = 0; n < 4; ++n) out.x_[n] = real_quo(x[n], common);
  const RealPoly& x0 = out.x_[0];
  if (count_real_roots(x0) > 0) throw Error(ErrorCode::Unbounded, "x0 = " + x0.str() + " has a real root");
  for (size_t n = 1; n < 4; ++n)
    if (out.x_[n].deg() > x0.deg())
      throw Error(ErrorCode::Unbounded, "deg x" + std::to_string(n) + " exceeds deg x0");
  out.d_ = x0.deg();
  RealPoly sq = out.x_[1] * out.x_[1] + out.x_[2] * out.x_[2] + out.x_[3] * out.x_[3];
  out.g_ = real_gcd(x0, sq);
  out.c_ = out.g_.deg() / 2;
  return out;
}

bool RationalCurve::is_normalized() const {
  if (!x_[0].is_monic() || x_[0].deg() != d_) return false;
  for (size_t n = 1; n < 4; ++n)
    if (x_[n].deg() >= d_) return false;
  return true;
}

Vec3 RationalCurve::point(const Rational& t) const {
  Rational w = inverse(eval(x_[0], t));
  return {w * eval(x_[1], t), w * eval(x_[2], t), w * eval(x_[3], t)};
}

Vec3 RationalCurve::point_at_infinity() const {
  auto d = static_cast<size_t>(d_);
  Rational w = inverse(x_[0].coeff(d));
  return {w * x_[1].coeff(d), w * x_[2].coeff(d), w * x_[3].coeff(d)};
}

bool same_parameterization(const std::array<RealPoly, 4>& x, const std::array<RealPoly, 4>& y) {
  if (x[0].is_zero() || y[0].is_zero()) return false;
  for (size_t n = 1; n < 4; ++n)
    if (x[n] * y[0] != y[n] * x[0]) return false;
  return true;
}

RationalCurve FrameTransform::apply(const RationalCurve& x) const {
  std::array<RealPoly, 4> y;
  y[0] = x.x(0) * scale;
  for (size_t n = 1; n < 4; ++n) y[n] = (x.x(n) + x.x(0) * translation[n - 1]) * scale;
  return curve_load(y);
}

RationalCurve FrameTransform::unapply(const RationalCurve& x) const {
  Rational inv = inverse(scale);
  std::array<RealPoly, 4> y;
  y[0] = x.x(0) * inv;
  for (size_t n = 1; n < 4; ++n) y[n] = (x.x(n) - x.x(0) * translation[n - 1]) * inv;
  return curve_load(y);
}

DualQuaternion FrameTransform::apply_to(const DualQuaternion& h) const {
  return conjugate_by(DualQuaternion::translation(translation), h);
}

DualQuaternion FrameTransform::unapply_to(const DualQuaternion& h) const {
  return conjugate_by(DualQuaternion::translation(Rational(-1) * translation), h);
}

NormalizedCurve curve_normalize(const RationalCurve& x) {
  FrameTransform frame;
  const Rational& lead = x.x(0).lcoeff();
  auto d = static_cast<size_t>(x.degree());
  for (size_t n = 1; n < 4; ++n) frame.translation[n - 1] = -x.x(n).coeff(d) / lead;
  frame.scale = inverse(lead);
  return {frame.apply(x), frame};
}

}  // namespace linkdraw
