#pragma once

#include "linkdraw/io.hpp"
#include "linkdraw/linkage.hpp"
#include "linkdraw/motion.hpp"
#include "linkdraw/pipeline.hpp"
#include "linkdraw/quat_poly.hpp"
#include "linkdraw/real_poly.hpp"
#include "linkdraw/verify.hpp"

#include <random>
#include <string>

namespace fx {

using namespace linkdraw;

inline Rational R(long p, long q = 1) { return Rational(p, q); }
inline Quaternion Hq(Rational a, Rational b, Rational c, Rational d) { return {a, b, c, d}; }
inline const Quaternion I = Quaternion::i();
inline const Quaternion J = Quaternion::j();
inline const Quaternion K = Quaternion::k();
inline DualQuaternion E(const Quaternion& q) { return {Quaternion{}, q}; }
inline DualQuaternion D(const Quaternion& p, const Quaternion& q = {}) { return {p, q}; }

inline RealPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RealPoly(v);
}
inline RealPoly t() { return RealPoly::monomial(1, Rational(1)); }
inline QuatPoly tq() { return QuatPoly::monomial(1, Quaternion(1)); }
inline DualQuatPoly td() { return DualQuatPoly::monomial(1, DualQuaternion(1)); }

inline std::array<RealPoly, 4> ellipse_coords(long a, long b) { return {P({1, 0, 1}), P({-2 * a}), P({0, -2 * b}), P({})}; }
inline std::array<RealPoly, 4> segment_coords() { return {P({1, 0, 1}), P({-2}), P({}), P({})}; }
inline std::array<RealPoly, 4> viviani_coords() {
  return {P({1, 0, 2, 0, 1}), P({0, 0, -4}), P({0, 2, 0, -2}), P({0, 2, 0, 2})};
}
// Viviani's curve with the sphere centre moved to the origin.
inline std::array<RealPoly, 4> viviani_centered_coords() {
  return {P({1, 0, 2, 0, 1}), P({1, 0, -2, 0, 1}), P({0, 2, 0, -2}), P({0, 2, 0, 2})};
}
inline std::array<RealPoly, 4> limacon_coords(long a, long b) {
  return {P({1, 0, 2, 0, 1}), P({0, 2 * (a - b), 0, -2 * (a + b)}), P({2 * b, 0, 4 * a + 2 * b}), P({})};
}

inline RationalCurve curve(const std::array<RealPoly, 4>& x) { return curve_load(x); }
inline MotionPolynomial minimal_motion(const std::array<RealPoly, 4>& x) {
  return minmot(curve_normalize(curve_load(x)).curve);
}

inline std::vector<RotationQuaternion> rots(std::initializer_list<DualQuaternion> hs) {
  std::vector<RotationQuaternion> out;
  for (const auto& h : hs) out.emplace_back(h);
  return out;
}

inline Factorization factorization(std::initializer_list<DualQuaternion> hs, QuatPoly cof = QuatPoly{Quaternion(1)}) {
  Factorization f;
  f.factors = rots(hs);
  f.cofactor = std::move(cof);
  return f;
}

// Ellipse linkage a=2, b=1 with the planar factorization and m0 = -2k - eps j.
inline Linkage ellipse_linkage() {
  return synthesize(factorization({-K, D(K, J * R(1, 2)), D(K, J * R(-3, 2))}, linear(K)),
                    RotationQuaternion(D(-K * R(2), -J)), FrameTransform{}, M0Mode::Planar);
}
inline Linkage viviani_linkage_centered() {
  return synthesize(factorization({K, J}), RotationQuaternion(J * R(1, 2)), FrameTransform{}, M0Mode::Spherical);
}
// Linkage for the raw Viviani curve: the centred one expressed in the frame with
// sphere centre (-1, 0, 0).
inline Linkage viviani_linkage() {
  FrameTransform shift{{R(-1), R(0), R(0)}, R(1)};
  std::vector<DualQuaternion> hs{K, J};
  Factorization f;
  for (const auto& h : hs) f.factors.emplace_back(shift.apply_to(h));
  return synthesize(f, RotationQuaternion(shift.apply_to(J * R(1, 2))), FrameTransform{}, M0Mode::Spherical);
}
inline Linkage cardioid_linkage() {
  return synthesize(factorization({D(K, I * R(-3, 2)), D(K, I * R(-1, 2))}), RotationQuaternion(K * R(2)),
                    FrameTransform{}, M0Mode::Planar);
}

// Random helpers for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  Rational rat(int range = 9, int den = 5) {
    std::uniform_int_distribution<int> n(-range, range), d(1, den);
    return Rational(n(rng), d(rng));
  }
  Vec3 vec() { return {rat(), rat(), rat()}; }
  Vec3 nonzero_vec() {
    for (;;) {
      Vec3 v = vec();
      if (!is_zero(v)) return v;
    }
  }
  Quaternion quat() { return {rat(), rat(), rat(), rat()}; }
  DualQuaternion dq() { return {quat(), quat()}; }
  // Rotation about a random axis through a random point.
  RotationQuaternion rotation() {
    Quaternion primal(rat(), 0, 0, 0);
    Vec3 v = nonzero_vec();
    primal = primal + Quaternion::from_vector(v);
    return rotation_through(primal, vec());
  }
  template <class T>
  Poly<T> poly(int deg, T (Gen::*coeff)()) {
    std::vector<T> c;
    for (int i = 0; i <= deg; ++i) c.push_back((this->*coeff)());
    return Poly<T>(c);
  }
};

}  // namespace fx
