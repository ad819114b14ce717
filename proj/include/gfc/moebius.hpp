#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "gfc/polyplaces.hpp"

namespace gfc {

// Point of P^1 over a field, scaled so the last nonzero coordinate is 1:
// affine points are (x : 1), the point at infinity is (1 : 0).
struct ProjPoint {
  Elem x0, x1;

  static ProjPoint make(const Elem& a, const Elem& b);
  static ProjPoint affine(const Elem& a);
  static ProjPoint infinity(const FieldPtr& F);
  bool at_infinity() const { return x1.is_zero(); }
  bool operator==(const ProjPoint& o) const { return x0 == o.x0 && x1 == o.x1; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string str() const;
};

// Element of PGL(2, F): matrix (a b; c d) up to scalars, stored with the
// first nonzero entry in row-major order scaled to 1.
struct Moebius {
  Elem a, b, c, d;

  static Moebius make(const Elem& a, const Elem& b, const Elem& c, const Elem& d);
  static Moebius identity(const FieldPtr& F);
  static Moebius scaling(const Elem& z);              // x -> z x
  static Moebius inversion_through(const Elem& z);    // x -> z / x
  const Field* field() const { return a.field(); }
  bool is_identity() const;
  bool operator==(const Moebius& o) const;
  bool operator!=(const Moebius& o) const { return !(*this == o); }

  Moebius compose(const Moebius& o) const;  // this after o
  Moebius inverse() const;
  int order(int bound = 4096) const;
  // Entrywise lift into an extension containing the entry field.
  Moebius lift_to(const FieldPtr& E) const;
  // The rational function (a x + b)/(c x + d).
  RatFun as_ratfun() const;
  std::string str() const;
};

// Matrix action on P^1(E) for any E admitting the entries.
ProjPoint act(const Moebius& M, const ProjPoint& P);
// Action on field values extended to P^1: convenience for affine input.
ProjPoint act_value(const Moebius& M, const Elem& x);

std::vector<ProjPoint> all_proj_points(const FieldPtr& E);

// x -> zeta_n x with zeta_n = root_of_unity(F, n); requires n | q - 1.
Moebius split_cyclic_generator(const FieldPtr& F, int64_t n);

// Generator of the order-n subgroup of the nonsplit torus of PGL(2, q):
// tau = (u sv; v u) built from a primitive 2n-th root of unity u + iv of
// F_{q^2}, with the n = 2 fallback lambda = i when q = 1 mod 4. Requires
// n | q + 1; fixed points are (i : 1) and (-i : 1) over F_{q^2}.
Moebius nonsplit_cyclic_generator(const Tower& T, int64_t n);

struct NonsplitGen {
  Moebius tau;
  Elem lambda;        // u + iv in the top field
  bool primitive_2n;  // false only for the n = 2 fallback lambda = i
};
NonsplitGen nonsplit_cyclic_generator_detail(const Tower& T, int64_t n);

// All fixed points of M in P^1(E); E must admit the entries.
std::vector<ProjPoint> fixed_points(const Moebius& M, const FieldPtr& E);

struct AuditReport {
  int64_t q = 0;
  int64_t group_order = 0;
  std::map<int, int64_t> orders_histogram;
  std::vector<std::string> dichotomy_violations;
  bool conjugacy_checked = false;
  bool conjugacy_ok = true;
  bool pass() const { return dichotomy_violations.empty() && conjugacy_ok; }
};

// Exhaustive sweep of PGL(2, q): every prime-to-p element order divides
// q - 1 or q + 1, and an element has an F_q-rational fixed point iff its
// order divides q - 1 (order 2 may satisfy both). For q <= 9 additionally
// checks that all nonsplit cyclic subgroups of each order are conjugate.
AuditReport dickson_audit(int64_t p, int h);

std::vector<Moebius> all_pgl2(const FieldPtr& F);

}  // namespace gfc
