#pragma once

#include <optional>

#include "gfc/moebius.hpp"

namespace gfc {

// Explicit generator data for the fixed field of a tame cyclic action on
// F_q(x): the acting map and a degree-n invariant rational function over F_q.
struct QuotientDatum {
  enum class Kind { split, nonsplit };
  Kind kind;
  int64_t n = 1;
  Moebius generator;   // over F_q
  RatFun invariant;    // over F_q, map-degree exactly n, invariant under the generator
};

// x^n under x -> zeta_n x; requires n | q - 1.
QuotientDatum split_quotient(const FieldPtr& F, int64_t n);

// z = i[(x+i)^n - (x-i)^n] / [(x+i)^n + (x-i)^n], expanded over F_{q^2},
// certified to have F_q coefficients, invariant under the nonsplit generator;
// requires n | q + 1.
QuotientDatum nonsplit_quotient(const Tower& T, int64_t n);

// h = (x-i)^n / (x+i)^n over F_{q^2}; h o tau = h, and i(h-1)/(h+1) equals
// the negative of the nonsplit quotient function.
RatFun intermediate_h(const Tower& T, int64_t n);

// prod_j sigma^j(x) = zeta^{n(n-1)/2} x^n (split side). The constant is -1
// for even n, +1 for odd n.
RatFun norm_map(const FieldPtr& F, int64_t n);

// sum_j tau^j(x) (nonsplit side).
RatFun trace_map(const Tower& T, int64_t n);

// Moebius M over the coefficient field with M o from = to, found by 3-point
// interpolation and then certified as an exact rational identity.
std::optional<Moebius> moebius_relating(const RatFun& from, const RatFun& to);

// Moebius through three points: p[k] -> q[k], entries of the points' field.
Moebius moebius_three_points(const std::array<ProjPoint, 3>& src,
                             const std::array<ProjPoint, 3>& dst);

}  // namespace gfc
