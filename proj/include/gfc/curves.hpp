#pragma once

#include <optional>
#include <string>

#include "gfc/quotients.hpp"

namespace gfc {

// The four families of curves carrying a rational C_n x C_m split/nonsplit
// action pattern, each reduced to a cyclic cover y^m = f(x).
//
//   I    : a X^n + b Y^m = 1                     n, m | q-1
//   IIb1 : a X^n Y^m + b X^n + c Y^m = 1          n, m | q-1
//   IIb2 : (a Y^m + b)/(c Y^m + d) = z_n(X)       m | q-1, n | q+1
//   IIb3 : z_m(Y) = M(z_n(X)), M = (a b; c d)     n, m | q+1
//
// where z_k is the nonsplit quotient function of order k.
enum class Family { I, IIb1, IIb2, IIb3 };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

struct CurveSpec {
  Family family;
  FieldPtr base;                // F_q
  std::optional<Tower> tower;   // present when the family needs i
  int64_t n = 1, m = 1;
  std::vector<Elem> params;     // I: {a,b}; IIb1: {a,b,c}; IIb2/IIb3: {a,b,c,d}
};

// Fully validated curve or a structured rejection. Parameters are canonical
// element indices in F_q (plain residues for prime q).
CurveSpec make_curve(Family fam, const FieldPtr& Fq, int64_t n, int64_t m,
                     const std::vector<int64_t>& params);
CurveSpec make_curve(Family fam, const FieldPtr& Fq, int64_t n, int64_t m,
                     std::vector<Elem> params);

struct KummerModel {
  int64_t exponent = 1;       // m
  RatFun f;                   // over the working field
  FieldPtr working;           // F_q, or F_{q^2} for IIb3
  std::string substitution;   // "y" or "w=(y-i)/(y+i)"
};

KummerModel kummer_model(const CurveSpec& C);

int64_t genus_closed_form(const CurveSpec& C);
int64_t genus_closed_form_values(Family fam, int64_t n, int64_t m);

// Independent genus oracle: valuation sweep of f over an extension large
// enough to carry the m-th roots of unity, cross-checked at twice that
// degree. Throws oracle-failure on any internal inconsistency.
int64_t genus_riemann_hurwitz(const CurveSpec& C);
int64_t rh_genus_for_kummer(const RatFun& f, int64_t m);

// Unvalidated model construction + oracle, for probing rejected parameters.
RatFun kummer_f_unchecked(Family fam, const FieldPtr& Fq, int64_t n, int64_t m,
                          const std::vector<int64_t>& params);

// Degree-1 place of the smooth model of y^m = f over E, keyed by the x-value
// and one extra coordinate: the y-value of the point when x is not a branch
// point (v = 0), or the residue of the splitting coordinate y^{m/r}/t^{v/r}
// over a branch point (r = gcd(m, |v|) places).
struct SmoothPlace {
  ProjPoint x;
  int v = 0;
  Elem coord;
  bool branch() const { return v != 0; }
};

// All degree-1 places of the smooth model over F_{q^L} (over F_{q^2 * L/2}
// computed on the w-model for IIb3, which needs even L).
std::vector<SmoothPlace> rational_places(const CurveSpec& C, int L);

// The same count, derived locally: sum over x in P^1(E) of #{w : w^r = u0}.
int64_t rational_place_count(const CurveSpec& C, int L);

struct SingularPoint {
  std::array<Elem, 3> coords;  // projective (X : Y : Z) representative
  int multiplicity = 1;
  bool ordinary = true;
};

// Singular points of the projective plane model (families I and IIb1).
std::vector<SingularPoint> singular_locus(const CurveSpec& C);

}  // namespace gfc
