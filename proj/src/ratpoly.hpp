#ifndef TOPSKIT_SRC_RATPOLY_HPP
#define TOPSKIT_SRC_RATPOLY_HPP

// Dense univariate polynomials over Q, lowest degree first, used internally
// for number-field arithmetic and Sturm sequences.

#include "topskit/exactnum.hpp"

#include <utility>
#include <vector>

namespace topskit::detail {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p);
inline int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly from_int(const IntPoly& p);
// Clears denominators and content; leading coefficient positive.
IntPoly to_primitive_int(const RatPoly& p);

RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
// (quotient, remainder); b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly derivative(const RatPoly& p);
RatPoly monic(RatPoly p);
RatPoly gcd(RatPoly a, RatPoly b);
RatPoly squarefree_part(const RatPoly& p);

Rational eval(const RatPoly& p, const Rational& x);
int sign(const Rational& q);

// Sturm chain of a squarefree polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& p);
int sign_variations(const std::vector<RatPoly>& chain, const Rational& x);
// Number of distinct roots in the closed interval [lo, hi].
int count_roots(const std::vector<RatPoly>& chain, const Rational& lo, const Rational& hi);

} // namespace topskit::detail

#endif
