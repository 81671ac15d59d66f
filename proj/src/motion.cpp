#include "linkdraw/motion.hpp"

#include <algorithm>
#include <random>

namespace linkdraw {

namespace {

bool is_real_poly(const DualQuatPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.dual().is_zero() || !c.primal().is_real()) return false;
  return true;
}

}  // namespace

MotionPolynomial::MotionPolynomial(DualQuatPoly value) : c_(std::move(value)) {
  if (c_.is_zero()) throw Error(ErrorCode::NotMotionPolynomial, "zero polynomial");
  if (c_.lcoeff().primal().is_zero())
    throw Error(ErrorCode::NotMotionPolynomial, "leading coefficient of " + c_.str() + " is not invertible");
  if (!is_real_poly(c_ * c_.conj()))
    throw Error(ErrorCode::NotMotionPolynomial, "norm polynomial of " + c_.str() + " is not real");
}

bool MotionPolynomial::is_bounded() const { return count_real_roots(norm_poly()) == 0; }

std::array<RealPoly, 4> trajectory_coords(const DualQuatPoly& c) {
  QuatPoly p = primal_part(c), q = dual_part(c);
  QuatPoly x = p * p.conj() + p * q.conj() * Rational(2);
  return components(x);
}

RationalCurve trajectory(const MotionPolynomial& c) { return curve_load(trajectory_coords(c.value())); }

MotionPolynomial minmot(const RationalCurve& x) {
  if (!x.is_normalized()) throw Error(ErrorCode::InvalidCurve, "minmot requires a normalized curve, x(inf) = 1");
  const RealPoly& g = x.circular_factor();
  RealPoly w = real_quo(x.x(0), g);
  QuatPoly d = from_components({RealPoly(), x.x(1), x.x(2), x.x(3)});
  QuatPoly p = lgcd(d, to_quat(g));
  QuatPoly q = rquo(d, p);
  QuatPoly dual = q.conj() * Rational(1, 2);
  return MotionPolynomial(make_dual(to_quat(w) * p, dual));
}

bool is_tame(const MotionPolynomial& c) {
  QuatPoly q = c.dual();
  RealPoly qq = as_real(q * q.conj());
  return real_gcd(mrpf(c.primal()), qq).deg() == 0;
}

DualQuaternion czero(const DualQuatPoly& c, const RealPoly& m) {
  DualQuatPoly r = rrem(c, to_dual(m));
  DualQuaternion a = r.coeff(1);
  if (r.deg() > 1 || a.primal().is_zero())
    throw Error(ErrorCode::NonInvertibleRemainderLead,
                "remainder " + r.str() + " of " + c.str() + " mod " + m.str() + " has no unique zero");
  return -(a.inverse() * r.coeff(0));
}

Quaternion czero(const QuatPoly& c, const RealPoly& m) {
  QuatPoly r = rrem(c, to_quat(m));
  Quaternion a = r.coeff(1);
  if (r.deg() > 1 || a.is_zero())
    throw Error(ErrorCode::NonInvertibleRemainderLead,
                "remainder " + r.str() + " of " + c.str() + " mod " + m.str() + " has no unique zero");
  return -(a.inverse() * r.coeff(0));
}

DualQuatPoly Factorization::product() const {
  DualQuatPoly out{DualQuaternion(1)};
  for (const auto& h : factors) out = out * linear(h.value());
  return out;
}

Factorization gfactor(const MotionPolynomial& c, const std::optional<std::vector<RealPoly>>& order) {
  if (!c.is_monic()) throw Error(ErrorCode::NotMonic, "gfactor expects a monic motion polynomial");
  if (mrpf(c.primal()).deg() != 0)
    throw Error(ErrorCode::NotGeneric, "primal part of " + c.str() + " has the real factor " + mrpf(c.primal()).str());
  std::vector<RealPoly> quads = quad_factors(c.norm_poly());
  if (order) {
    auto lhs = *order, rhs = quads;
    auto key = [](const RealPoly& x, const RealPoly& y) {
      return x.coeff(0) != y.coeff(0) ? x.coeff(0) < y.coeff(0) : x.coeff(1) < y.coeff(1);
    };
    std::sort(lhs.begin(), lhs.end(), key);
    std::sort(rhs.begin(), rhs.end(), key);
    if (lhs != rhs) throw Error(ErrorCode::NotGeneric, "factor order is not a permutation of the norm's quadratic factors");
    quads = *order;
  }
  std::vector<DualQuaternion> hs(quads.size());
  DualQuatPoly rest = c.value();
  for (size_t n = quads.size(); n-- > 0;) {
    hs[n] = czero(rest, quads[n]);
    auto [q, r] = lqr(rest, linear(hs[n]));
    if (!r.is_zero()) throw Error(ErrorCode::NonInvertibleRemainderLead, "t - " + hs[n].str() + " is not a right factor");
    rest = q;
  }
  Factorization out;
  for (auto& h : hs) out.factors.emplace_back(std::move(h));
  if (out.product() != c.value()) throw Error(ErrorCode::NotGeneric, "factor product does not reproduce " + c.str());
  return out;
}

ZeroPicker ZeroPicker::directions(std::vector<Vec3> preferred) {
  ZeroPicker z;
  z.strategy_ = Strategy::Directions;
  z.preferred_ = std::move(preferred);
  return z;
}

ZeroPicker ZeroPicker::random(std::uint64_t seed) {
  ZeroPicker z;
  z.strategy_ = Strategy::Random;
  z.seed_ = seed;
  return z;
}

std::vector<Quaternion> ZeroPicker::candidates(const RealPoly& f) const {
  const Rational& b = f.coeff(1);
  Rational disc = Rational(4) * f.coeff(0) - b * b;
  std::vector<Quaternion> out;
  auto add = [&](const Quaternion& h) {
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
  };
  std::vector<Vec3> sphere = rational_sphere_points(disc, 48, 3);
  if (strategy_ == Strategy::Random) {
    std::mt19937_64 rng(seed_);
    std::shuffle(sphere.begin(), sphere.end(), rng);
  } else {
    std::vector<Vec3> dirs = preferred_;
    for (const Vec3& v : std::vector<Vec3>{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, -1}, {-1, 0, 0}, {0, -1, 0}})
      dirs.push_back(v);
    for (const auto& v : dirs) {
      try {
        add(quad_zero(f, v));
      } catch (const Error&) {
      }
    }
  }
  Rational half(1, 2);
  for (const auto& s : sphere) add(Quaternion(-b * half, s[0] * half, s[1] * half, s[2] * half));
  return out;
}

namespace {

std::optional<Factorization> tame_step(const MotionPolynomial& c, const TameOptions& opts) {
  const QuatPoly p = c.primal();
  const QuatPoly q = c.dual();
  const RealPoly spherical = mrpf(p);
  if (spherical.deg() == 0) {
    try {
      return gfactor(c);
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  const RealPoly f = quad_factors(spherical).front();
  const RealPoly reduced = real_quo(spherical, f);
  const QuatPoly p_over_f = divide_by_real(p, f);

  auto zeros = opts.picker.candidates(f);
  if (zeros.size() > opts.max_candidates) zeros.resize(opts.max_candidates);
  for (const auto& h : zeros) {
    QuatPoly l = linear(h);
    QuatPoly e = (q * l).conj();
    Quaternion h_prime;
    try {
      h_prime = czero(e, f).conj();
    } catch (const Error&) {
      continue;
    }
    QuatPoly l_prime = linear(h_prime);
    auto [q_prime, rem] = rqr(e.conj(), l_prime);
    if (!rem.is_zero()) continue;
    QuatPoly p_prime = l_prime.conj() * p_over_f * l;

    std::optional<MotionPolynomial> next;
    try {
      next.emplace(make_dual(p_prime, q_prime));
    } catch (const Error&) {
      continue;
    }
    if (!next->is_monic() || mrpf(p_prime) != reduced || !is_tame(*next) || !next->is_bounded()) continue;

    auto sub = tame_step(*next, opts);
    if (!sub) continue;

    Factorization out;
    out.factors.emplace_back(DualQuaternion(h_prime));
    for (auto& k : sub->factors) out.factors.push_back(std::move(k));
    out.cofactor = l * sub->cofactor;
    if (out.product() != c.value() * to_dual(out.cofactor)) continue;
    return out;
  }
  return std::nullopt;
}

}  // namespace

Factorization tfactor(const MotionPolynomial& c, const TameOptions& opts) {
  if (!c.is_monic()) throw Error(ErrorCode::NotMonic, "tfactor expects a monic motion polynomial");
  if (!c.is_bounded()) throw Error(ErrorCode::Unbounded, c.str() + " is not bounded");
  if (!is_tame(c)) throw Error(ErrorCode::NotTame, c.str() + " is not tame");
  if (mrpf(c.primal()).deg() == 0) return gfactor(c);
  auto out = tame_step(c, opts);
  if (!out) throw Error(ErrorCode::ZeroPickExhausted, "no admissible zero found while factoring " + c.str());
  return *out;
}

}  // namespace linkdraw
