#pragma once

#include "gfc/curves.hpp"

namespace gfc {

// The relation y^m = f over a field, the normal-form carrier for exact
// identity checking.
struct AlgebraicRelation {
  int64_t m = 2;
  RatFun f;
  const FieldPtr& field() const { return f.field(); }
  bool operator==(const AlgebraicRelation& o) const { return m == o.m && f == o.f; }
};

// Element of K(x)[y]/(y^m - f) in the y-power basis with rational-function
// coefficients; all arithmetic is exact.
class AlgebraElem {
public:
  AlgebraElem() = default;
  AlgebraElem(AlgebraicRelation rel, std::vector<RatFun> coeffs);

  static AlgebraElem from_ratfun(const AlgebraicRelation& rel, const RatFun& c);
  static AlgebraElem x_of(const AlgebraicRelation& rel);
  static AlgebraElem y_of(const AlgebraicRelation& rel);

  const AlgebraicRelation& rel() const { return rel_; }
  const std::vector<RatFun>& coeffs() const { return c_; }
  bool is_zero() const;

  AlgebraElem operator+(const AlgebraElem& o) const;
  AlgebraElem operator-(const AlgebraElem& o) const;
  AlgebraElem operator*(const AlgebraElem& o) const;
  bool operator==(const AlgebraElem& o) const;
  bool operator!=(const AlgebraElem& o) const { return !(*this == o); }
  // Throws reducible-relation if the element is a zero divisor.
  AlgebraElem inverse() const;
  AlgebraElem pow(int64_t e) const;

  // Substitute a rational function: g(this), inverting the denominator in
  // the algebra.
  static AlgebraElem eval_ratfun_at(const RatFun& g, const AlgebraElem& at);

  // Value at an affine model point (x0, y0); nullopt when a pole is hit.
  std::optional<Elem> eval_at_point(const Elem& x0, const Elem& y0) const;

private:
  AlgebraicRelation rel_;
  std::vector<RatFun> c_;  // size m
};

// (x, y) -> (x_expr, y_expr), expressions in the source function field.
struct BirationalMap {
  AlgebraElem x_expr, y_expr;
};

struct IdentityCertificate {
  bool holds = false;
  int sample_count = 0;        // forward samples checked on the target relation
  bool injective_on_samples = false;
  int extension_degree = 1;    // where the samples were taken
};

// Substitutes M into dst's relation and reduces to normal form; also samples
// the map on at least `min_samples` points of the source model over a small
// extension and checks the images satisfy dst and stay pairwise distinct.
IdentityCertificate verify_birational_identity(const AlgebraicRelation& src,
                                               const BirationalMap& M,
                                               const AlgebraicRelation& dst,
                                               int min_samples);

// X^n Y^2 + X^n + Y^2 = 1  ->  U^{2n} + V^2 = 1 via (U, V) = (X, 2Y/(Y^2+1)).
IdentityCertificate verify_overlap_map(const FieldPtr& F, int64_t n);

// z^{p^r} + z = w^2  ->  v^2 = u^{p^r+1} + 1 via u = eps/(z-kappa) + eps,
// v = w (eps/(z-kappa))^{(p^r+1)/2}, over F_{p^{2r}}.
struct ArtinSchreierSubstitution {
  Elem eps, kappa;
  IdentityCertificate certificate;
  bool scalar_certs_hold = false;  // eps^{p^r+1} = -1, kappa^{p^r}+kappa = 1,
                                   // kappa^{p^r+1} = (kappa-1)^{p^r+1}
};
ArtinSchreierSubstitution verify_mainpgroup_substitution(int64_t p, int r);

// Base change of a IIb2/IIb3 curve to the quadratic-extension normalized
// IIb1 form via xt = (x-i)/(x+i) (and the w-substitution for IIb3).
struct QuadrexResult {
  CurveSpec normalized;        // family IIb1 over F_{q^2}
  BirationalMap map;           // from the source Kummer model
  IdentityCertificate certificate;
  int64_t genus_before = -1, genus_after = -1;
};
QuadrexResult quadrex_normalize(const CurveSpec& C);

}  // namespace gfc
