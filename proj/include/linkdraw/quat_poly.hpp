#pragma once

#include "linkdraw/poly.hpp"
#include "linkdraw/real_poly.hpp"

#include <optional>
#include <vector>

namespace linkdraw {

// Monic L of maximal degree with F = L Q and G = L R (Euclid with right
// remainders). G must be monic.
QuatPoly lgcd(const QuatPoly& f, const QuatPoly& g);

// Maximal monic real polynomial factor of P, i.e. gcd(P, conj P). Computed as
// the gcd of the four component polynomials.
RealPoly mrpf(const QuatPoly& p);

// Exact quotient of a quaternion polynomial by a real polynomial dividing it.
QuatPoly divide_by_real(const QuatPoly& p, const RealPoly& r);

// Zero of the irreducible monic quadratic t^2 + b t + c whose vector part is a
// positive multiple of v: (-b + lambda v) / 2, lambda^2 = (4c - b^2) / |v|^2.
Quaternion quad_zero(const RealPoly& f, const Vec3& v);

struct SphereSearch {
  // Numerators and denominators of the result must stay below this.
  long height_bound = 10000;
};

// Rational s with s.s = r. Prefers the fewest nonzero coordinates; single
// coordinates in z, x, y order, then the xy, xz, yz planes.
Vec3 rational_sphere_point(const Rational& r, const SphereSearch& opts = {});

// Every rational s with s.s = r whose common denominator is den(r) * m for
// m <= max_scale, ordered as above and up to max_count entries; all sign
// variants are included.
std::vector<Vec3> rational_sphere_points(const Rational& r, size_t max_count, long max_scale = 2,
                                         const SphereSearch& opts = {});

}  // namespace linkdraw
