#include "linkdraw/rotation.hpp"

namespace linkdraw {

PlueckerLine::PlueckerLine(Vec3 direction, Vec3 moment) : d_(std::move(direction)), m_(std::move(moment)) {
  if (is_zero(d_)) throw Error(ErrorCode::NotRotation, "line with zero direction");
  if (!dot(d_, m_).is_zero()) throw Error(ErrorCode::NotRotation, "Pluecker condition violated");
  size_t first = d_[0].is_zero() ? (d_[1].is_zero() ? 2 : 1) : 0;
  Rational s = inverse(d_[first]);
  d_ = s * d_;
  m_ = s * m_;
}

bool PlueckerLine::contains(const Vec3& point) const { return cross(point, d_) == m_; }

Vec3 PlueckerLine::foot() const { return inverse(dot(d_, d_)) * cross(d_, m_); }

std::string PlueckerLine::str() const { return "[" + linkdraw::str(d_) + " : " + linkdraw::str(m_) + "]"; }

bool parallel(const PlueckerLine& a, const PlueckerLine& b) { return is_zero(cross(a.direction(), b.direction())); }

bool intersect(const PlueckerLine& a, const PlueckerLine& b) {
  if (parallel(a, b)) return false;
  return (dot(a.direction(), b.moment()) + dot(b.direction(), a.moment())).is_zero();
}

Vec3 intersection_point(const PlueckerLine& a, const PlueckerLine& b) {
  if (!intersect(a, b)) throw Error(ErrorCode::NotRotation, "lines do not intersect");
  const Vec3 pa = a.foot(), pb = b.foot();
  const Vec3 n = cross(a.direction(), b.direction());
  Rational s = dot(cross(pb - pa, b.direction()), n) / dot(n, n);
  return pa + s * a.direction();
}

bool is_rotation(const DualQuaternion& h) {
  const Quaternion& p = h.primal();
  const Quaternion& q = h.dual();
  if (!q.scalar().is_zero()) return false;        // h + conj h real
  if (!h.norm().second.is_zero()) return false;   // h conj h real
  return !is_zero(p.vec());
}

RotationQuaternion::RotationQuaternion(DualQuaternion value) : h_(std::move(value)) {
  if (!is_rotation(h_)) throw Error(ErrorCode::NotRotation, h_.str() + " is not a rotation quaternion");
}

RealPoly minpol(const DualQuaternion& h) {
  DualQuaternion trace = h + h.conj();
  auto [n, n_eps] = h.norm();
  if (!trace.dual().is_zero() || !trace.primal().is_real() || !n_eps.is_zero())
    throw Error(ErrorCode::NotRotation, "minimal polynomial of " + h.str() + " is not real");
  return RealPoly({n, -trace.primal().scalar(), Rational(1)});
}

PlueckerLine axis(const DualQuaternion& h) {
  if (!is_rotation(h)) throw Error(ErrorCode::NotRotation, h.str() + " has no rotation axis");
  DualQuaternion v = h - h.conj();
  return PlueckerLine(v.primal().vec(), Rational(-1) * v.dual().vec());
}

RotationQuaternion rotation_through(const Quaternion& primal, const Vec3& point) {
  DualQuaternion t = DualQuaternion::translation(point);
  return RotationQuaternion(conjugate_by(t, DualQuaternion(primal)));
}

PlueckerLine transform_line(const DualQuaternion& g, const PlueckerLine& line) {
  DualQuaternion pure(Quaternion::from_vector(line.direction()),
                      Quaternion::from_vector(Rational(-1) * line.moment()));
  DualQuaternion moved = conjugate_by(g, pure);
  return PlueckerLine(moved.primal().vec(), Rational(-1) * moved.dual().vec());
}

}  // namespace linkdraw
