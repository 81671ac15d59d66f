#include "linkdraw/poly.hpp"

namespace linkdraw {

QuatPoly to_quat(const RealPoly& p) {
  std::vector<Quaternion> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return QuatPoly(std::move(v));
}

DualQuatPoly to_dual(const QuatPoly& p) {
  std::vector<DualQuaternion> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return DualQuatPoly(std::move(v));
}

DualQuatPoly to_dual(const RealPoly& p) { return to_dual(to_quat(p)); }

DualQuatPoly make_dual(const QuatPoly& primal, const QuatPoly& dual) {
  size_t n = std::max(primal.coeffs().size(), dual.coeffs().size());
  std::vector<DualQuaternion> v;
  for (size_t k = 0; k < n; ++k) v.emplace_back(primal.coeff(k), dual.coeff(k));
  return DualQuatPoly(std::move(v));
}

QuatPoly primal_part(const DualQuatPoly& c) {
  std::vector<Quaternion> v;
  for (const auto& x : c.coeffs()) v.push_back(x.primal());
  return QuatPoly(std::move(v));
}

QuatPoly dual_part(const DualQuatPoly& c) {
  std::vector<Quaternion> v;
  for (const auto& x : c.coeffs()) v.push_back(x.dual());
  return QuatPoly(std::move(v));
}

std::array<RealPoly, 4> components(const QuatPoly& p) {
  std::array<std::vector<Rational>, 4> v;
  for (const auto& c : p.coeffs())
    for (size_t n = 0; n < 4; ++n) v[n].push_back(c[n]);
  return {RealPoly(v[0]), RealPoly(v[1]), RealPoly(v[2]), RealPoly(v[3])};
}

QuatPoly from_components(const std::array<RealPoly, 4>& comps) {
  size_t len = 0;
  for (const auto& c : comps) len = std::max(len, c.coeffs().size());
  std::vector<Quaternion> v;
  for (size_t k = 0; k < len; ++k)
    v.emplace_back(comps[0].coeff(k), comps[1].coeff(k), comps[2].coeff(k), comps[3].coeff(k));
  return QuatPoly(std::move(v));
}

RealPoly as_real(const QuatPoly& p) {
  auto comps = components(p);
  if (!comps[1].is_zero() || !comps[2].is_zero() || !comps[3].is_zero())
    throw Error(ErrorCode::NotMotionPolynomial, "polynomial " + p.str() + " is not real");
  return comps[0];
}

RealPoly as_real(const DualQuatPoly& c) {
  if (!dual_part(c).is_zero())
    throw Error(ErrorCode::NotMotionPolynomial, "polynomial " + c.str() + " has a dual part");
  return as_real(primal_part(c));
}

}  // namespace linkdraw
