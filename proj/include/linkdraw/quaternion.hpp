#pragma once

#include "linkdraw/rational.hpp"

#include <array>
#include <ostream>
#include <string>

namespace linkdraw {

// h = h0 + h1 i + h2 j + h3 k with i^2 = j^2 = k^2 = ijk = -1.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational h0) : c_{std::move(h0), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  Quaternion(int h0) : Quaternion(Rational(h0)) {}         // NOLINT(google-explicit-constructor)
  Quaternion(Rational h0, Rational h1, Rational h2, Rational h3)
      : c_{std::move(h0), std::move(h1), std::move(h2), std::move(h3)} {}
  static Quaternion from_vector(const Vec3& v) { return {0, v[0], v[1], v[2]}; }

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  const Rational& operator[](size_t idx) const { return c_[idx]; }
  Rational& operator[](size_t idx) { return c_[idx]; }
  const Rational& scalar() const { return c_[0]; }
  Vec3 vec() const { return {c_[1], c_[2], c_[3]}; }

  bool is_zero() const;
  bool is_real() const;
  Quaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  // h * conj(h), always a non-negative rational.
  Rational norm() const;
  Quaternion inverse() const;

  Quaternion operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(Quaternion a, const Rational& s) { return a *= s; }
  friend Quaternion operator*(const Rational& s, Quaternion a) { return a *= s; }
  friend Quaternion operator/(Quaternion a, const Rational& s) { return a *= linkdraw::inverse(s); }
  friend bool operator==(const Quaternion& a, const Quaternion& b) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.str(); }

 private:
  std::array<Rational, 4> c_{};
};

inline Quaternion conj(const Quaternion& q) { return q.conj(); }
inline bool is_zero(const Quaternion& q) { return q.is_zero(); }

// h = p + eps q with eps^2 = 0.
class DualQuaternion {
 public:
  DualQuaternion() = default;
  DualQuaternion(Quaternion primal, Quaternion dual = {})  // NOLINT(google-explicit-constructor)
      : p_(std::move(primal)), q_(std::move(dual)) {}
  DualQuaternion(Rational r) : p_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  DualQuaternion(int r) : p_(r) {}                  // NOLINT(google-explicit-constructor)
  // Components ordered [p0, p1, p2, p3, q0, q1, q2, q3].
  static DualQuaternion from_array(const std::array<Rational, 8>& a);
  std::array<Rational, 8> to_array() const;

  static DualQuaternion eps() { return {Quaternion{}, Quaternion(1)}; }
  // Translation by v: 1 - (1/2) eps (v1 i + v2 j + v3 k).
  static DualQuaternion translation(const Vec3& v);

  const Quaternion& primal() const { return p_; }
  const Quaternion& dual() const { return q_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  DualQuaternion conj() const { return {p_.conj(), q_.conj()}; }

  // The dual number h * conj(h) = a + eps b, returned as (a, b).
  std::pair<Rational, Rational> norm() const;
  bool has_real_norm() const { return norm().second.is_zero(); }
  DualQuaternion inverse() const;

  DualQuaternion operator-() const { return {-p_, -q_}; }
  DualQuaternion& operator+=(const DualQuaternion& o);
  DualQuaternion& operator-=(const DualQuaternion& o);
  DualQuaternion& operator*=(const Rational& s);

  friend DualQuaternion operator+(DualQuaternion a, const DualQuaternion& b) { return a += b; }
  friend DualQuaternion operator-(DualQuaternion a, const DualQuaternion& b) { return a -= b; }
  friend DualQuaternion operator*(const DualQuaternion& a, const DualQuaternion& b) {
    return {a.p_ * b.p_, a.p_ * b.q_ + a.q_ * b.p_};
  }
  friend DualQuaternion operator*(DualQuaternion a, const Rational& s) { return a *= s; }
  friend DualQuaternion operator*(const Rational& s, DualQuaternion a) { return a *= s; }
  friend DualQuaternion operator/(DualQuaternion a, const Rational& s) { return a *= linkdraw::inverse(s); }
  friend bool operator==(const DualQuaternion& a, const DualQuaternion& b) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const DualQuaternion& h) { return os << h.str(); }

 private:
  Quaternion p_;
  Quaternion q_;
};

inline DualQuaternion conj(const DualQuaternion& h) { return h.conj(); }
inline bool is_zero(const DualQuaternion& h) { return h.is_zero(); }

// Image of z under the action (p z p~ + p q~ - q p~) / N(p). Requires
// a real, nonzero norm; throws DegenerateActor otherwise.
Vec3 act_on_point(const DualQuaternion& h, const Vec3& z);

// g x g^{-1}; for g with real norm this maps rotation quaternions to rotation
// quaternions about the displaced axis.
DualQuaternion conjugate_by(const DualQuaternion& g, const DualQuaternion& x);

}  // namespace linkdraw
