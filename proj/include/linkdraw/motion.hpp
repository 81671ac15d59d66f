#pragma once

#include "linkdraw/curve.hpp"
#include "linkdraw/poly.hpp"
#include "linkdraw/quat_poly.hpp"
#include "linkdraw/rotation.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace linkdraw {

// C = P + eps Q with C conj(C) real and nonzero and an invertible leading
// coefficient.
class MotionPolynomial {
 public:
  // Throws NotMotionPolynomial when the conditions fail.
  explicit MotionPolynomial(DualQuatPoly value);

  const DualQuatPoly& value() const { return c_; }
  QuatPoly primal() const { return primal_part(c_); }
  QuatPoly dual() const { return dual_part(c_); }
  int deg() const { return c_.deg(); }
  bool is_monic() const { return c_.is_monic(); }
  // C conj(C) as a real polynomial.
  RealPoly norm_poly() const { return as_real(c_ * c_.conj()); }
  // P conj(P) has no real roots.
  bool is_bounded() const;

  friend bool operator==(const MotionPolynomial&, const MotionPolynomial&) = default;
  std::string str() const { return c_.str(); }

 private:
  DualQuatPoly c_;
};

// P conj(P) + 2 P conj(Q) as (x0, x1, x2, x3); not reduced.
std::array<RealPoly, 4> trajectory_coords(const DualQuatPoly& c);
// Reduced trajectory of the affine origin.
RationalCurve trajectory(const MotionPolynomial& c);

// Monic motion polynomial of degree d - c whose origin trajectory is x.
// Requires x normalized (x(inf) = 1).
MotionPolynomial minmot(const RationalCurve& x);

// gcd(mrpf(P), Q conj(Q)) == 1
bool is_tame(const MotionPolynomial& c);

// Common zero h of C and the quadratic factor M of C conj(C): the zero of
// R = rrem(C, M) = a t + b, h = -a^{-1} b. Works over H[t] and DH[t].
DualQuaternion czero(const DualQuatPoly& c, const RealPoly& m);
Quaternion czero(const QuatPoly& c, const RealPoly& m);

struct Factorization {
  std::vector<RotationQuaternion> factors;  // h_1..h_n, product (t - h_1)...(t - h_n)
  QuatPoly cofactor{Quaternion(1)};         // H

  DualQuatPoly product() const;
};

// Generic factorization (mrpf(P) = 1). `order` lists the minimal polynomials
// of h_1, ..., h_n left to right; it must be a permutation of quad_factors(C conj C).
// Without it, quad_factors order is used.
Factorization gfactor(const MotionPolynomial& c, const std::optional<std::vector<RealPoly>>& order = std::nullopt);

// Source of zeros for the irreducible quadratics peeled off in tfactor.
class ZeroPicker {
 public:
  enum class Strategy { Directions, Random };

  // Deterministic: preferred directions first, then k, i, j, then sphere points.
  static ZeroPicker directions(std::vector<Vec3> preferred = {});
  static ZeroPicker random(std::uint64_t seed);

  // Candidate zeros of the irreducible monic quadratic f, in trial order.
  std::vector<Quaternion> candidates(const RealPoly& f) const;

  Strategy strategy() const { return strategy_; }

 private:
  Strategy strategy_ = Strategy::Directions;
  std::vector<Vec3> preferred_;
  std::uint64_t seed_ = 0;
};

struct TameOptions {
  ZeroPicker picker = ZeroPicker::directions();
  // Candidate zeros tried per recursion level before giving up.
  size_t max_candidates = 64;
};

// Factorization of C H for a tame, monic, bounded C with deg H = deg mrpf(P) / 2.
Factorization tfactor(const MotionPolynomial& c, const TameOptions& opts = {});

}  // namespace linkdraw
