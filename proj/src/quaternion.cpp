#include "linkdraw/quaternion.hpp"

#include "linkdraw/error.hpp"

namespace linkdraw {

bool Quaternion::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool Quaternion::is_real() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

Rational Quaternion::norm() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

Quaternion Quaternion::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw Error(ErrorCode::NotInvertible, "zero quaternion");
  return conj() * linkdraw::inverse(n);
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  for (size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  for (size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  const auto& x = a.c_;
  const auto& y = b.c_;
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
          x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

std::string Quaternion::str() const {
  static const char* units[] = {"", "i", "j", "k"};
  std::string out;
  for (size_t n = 0; n < 4; ++n) {
    if (c_[n].is_zero()) continue;
    std::string coeff = c_[n].str();
    bool neg = c_[n].sign() < 0;
    if (neg) coeff.erase(0, 1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (n == 0 || coeff != "1") {
      bool frac = coeff.find('/') != std::string::npos;
      out += (frac && n > 0) ? "(" + coeff + ")" : coeff;
    }
    out += units[n];
  }
  return out.empty() ? "0" : out;
}

DualQuaternion DualQuaternion::from_array(const std::array<Rational, 8>& a) {
  return {Quaternion(a[0], a[1], a[2], a[3]), Quaternion(a[4], a[5], a[6], a[7])};
}

std::array<Rational, 8> DualQuaternion::to_array() const {
  return {p_[0], p_[1], p_[2], p_[3], q_[0], q_[1], q_[2], q_[3]};
}

DualQuaternion DualQuaternion::translation(const Vec3& v) {
  return {Quaternion(1), Quaternion::from_vector(Rational(-1, 2) * v)};
}

std::pair<Rational, Rational> DualQuaternion::norm() const {
  Quaternion e = p_ * q_.conj() + q_ * p_.conj();
  return {p_.norm(), e.scalar()};
}

DualQuaternion DualQuaternion::inverse() const {
  auto [a, b] = norm();
  if (a.is_zero()) throw Error(ErrorCode::NotInvertible, "dual quaternion with zero primal part");
  // (a + eps b)^{-1} = a^{-1} - eps b a^{-2}
  Rational ainv = linkdraw::inverse(a);
  Rational binv = -b * ainv * ainv;
  DualQuaternion c = conj();
  return {c.p_ * ainv, c.q_ * ainv + c.p_ * binv};
}

DualQuaternion& DualQuaternion::operator+=(const DualQuaternion& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

DualQuaternion& DualQuaternion::operator-=(const DualQuaternion& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

DualQuaternion& DualQuaternion::operator*=(const Rational& s) {
  p_ *= s;
  q_ *= s;
  return *this;
}

std::string DualQuaternion::str() const {
  if (q_.is_zero()) return p_.str();
  std::string dual = q_.str();
  if (p_.is_zero()) return "eps(" + dual + ")";
  return p_.str() + " + eps(" + dual + ")";
}

Vec3 act_on_point(const DualQuaternion& h, const Vec3& z) {
  auto [a, b] = h.norm();
  if (a.is_zero() || !b.is_zero())
    throw Error(ErrorCode::DegenerateActor, "actor " + h.str() + " has no real nonzero norm");
  const Quaternion& p = h.primal();
  const Quaternion& q = h.dual();
  Quaternion image = p * Quaternion::from_vector(z) * p.conj() + p * q.conj() - q * p.conj();
  return linkdraw::inverse(a) * image.vec();
}

DualQuaternion conjugate_by(const DualQuaternion& g, const DualQuaternion& x) {
  return g * x * g.inverse();
}

}  // namespace linkdraw
