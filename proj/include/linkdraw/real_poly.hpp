#pragma once

#include "linkdraw/poly.hpp"

#include <vector>

namespace linkdraw {

// Commutative toolkit over Q[t].

struct RealDivResult {
  RealPoly quotient;
  RealPoly remainder;
};

RealDivResult real_divmod(const RealPoly& f, const RealPoly& g);
// Exact quotient when g divides f; otherwise the polynomial quotient (remainder dropped).
RealPoly real_quo(const RealPoly& f, const RealPoly& g);
bool real_divides(const RealPoly& g, const RealPoly& f);
// Monic gcd; gcd(0, 0) = 0.
RealPoly real_gcd(const RealPoly& f, const RealPoly& g);
RealPoly make_monic(const RealPoly& f);
RealPoly derivative(const RealPoly& f);
Rational eval(const RealPoly& f, const Rational& t);

// Number of distinct real roots via Sturm sequences.
int count_real_roots(const RealPoly& f);

// Yun decomposition: f = lc * prod_i parts[i]^(i+1) with each part squarefree.
std::vector<RealPoly> squarefree_decomposition(const RealPoly& f);

// Factor a monic, real-root-free polynomial into monic irreducible quadratics
// over Q, with multiplicity. Output sorted by (constant term, linear term).
std::vector<RealPoly> quad_factors(const RealPoly& f);

}  // namespace linkdraw
