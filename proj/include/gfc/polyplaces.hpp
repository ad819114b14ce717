#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gfc/ffield.hpp"

namespace gfc {

// Dense univariate polynomial over a finite field, low degree first,
// normalized so the leading coefficient is nonzero (zero poly is empty).
class Poly {
public:
  Poly() = default;
  explicit Poly(FieldPtr F) : fld_(std::move(F)) {}
  Poly(FieldPtr F, std::vector<Elem> coeffs);

  static Poly zero(const FieldPtr& F) { return Poly(F); }
  static Poly constant(const FieldPtr& F, const Elem& c);
  static Poly x(const FieldPtr& F);
  // x - a
  static Poly linear_root(const FieldPtr& F, const Elem& a);
  static Poly from_ints(const FieldPtr& F, const std::vector<int64_t>& coeffs);

  const FieldPtr& field() const { return fld_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(int j) const;
  Elem lc() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Elem& s) const;
  bool operator==(const Poly& o) const { return fld_ == o.fld_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly monic() const;
  Poly derivative() const;
  Poly pow(int64_t e) const;
  Poly powmod(int64_t e, const Poly& m) const;
  Elem eval(const Elem& x0) const;
  Poly subst(const Poly& g) const;  // this(g(x))
  Poly lift_to(const FieldPtr& E) const;  // coefficientwise lift into an extension

  // multiplicity of (this) root/factor handling
  int root_multiplicity(const Elem& x0) const;

  std::string str() const;

private:
  void trim();
  FieldPtr fld_;
  std::vector<Elem> c_;
};

Poly gcd(const Poly& a, const Poly& b);

bool is_irreducible(const Poly& f);
// Lexicographically least monic irreducible of the given degree.
Poly least_irreducible(const FieldPtr& F, int degree);

struct Factorization {
  Elem unit;  // leading unit: f = unit * prod(factors^mult)
  std::vector<std::pair<Poly, int>> factors;  // monic irreducible, canonical order
};

// Distinct-degree then deterministic equal-degree splitting.
Factorization factorize(const Poly& f);

// f = unit * prod g_j^{m_j} with the g_j squarefree and pairwise coprime,
// m_j strictly increasing.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

struct DegreeProfileEntry {
  int degree = 1;        // degree of the irreducible factors in this bucket
  int multiplicity = 1;  // their multiplicity in f
  int count = 0;         // how many of them
};

// Degrees, multiplicities and counts of the irreducible factors without
// splitting equal-degree products (squarefree decomposition + DDF only).
std::vector<DegreeProfileEntry> factor_degree_profile(const Poly& f);

// Roots in the coefficient field (from the degree-1 factors), canonical order.
std::vector<Elem> poly_roots(const Poly& f);
// Solutions of y^n = c in F via factorization, canonical order.
std::vector<Elem> nth_roots(const FieldPtr& F, const Elem& c, int64_t n);

// fibers[index_of(c)] = indices of all y with y^m = c; one pass over F.
// Guarded to enumerable fields.
std::vector<std::vector<int64_t>> power_fibers(const FieldPtr& F, int64_t m);

// Canonical order on monic polynomials: degree, then coefficient tuple
// (constant term first) compared by canonical element index.
bool poly_less(const Poly& a, const Poly& b);

// Rational function num/den in canonical form: gcd(num, den) = 1, den monic.
class RatFun {
public:
  RatFun() = default;
  RatFun(Poly num, Poly den);
  static RatFun from_poly(Poly p);
  static RatFun constant(const FieldPtr& F, const Elem& c);
  static RatFun x(const FieldPtr& F);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // max(deg num, deg den): the degree of the induced map P^1 -> P^1.
  int map_degree() const;

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun operator-() const;
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }
  RatFun pow(int64_t e) const;
  RatFun inverse() const;

  // this(g(x)) as an exact rational identity.
  RatFun subst(const RatFun& g) const;
  RatFun lift_to(const FieldPtr& E) const;

  // Value at x0 as a point of P^1: (num : den), not both zero.
  std::pair<Elem, Elem> eval_proj(const Elem& x0) const;
  // Value at infinity as a point of P^1.
  std::pair<Elem, Elem> eval_proj_infinity() const;

  std::string str() const;

private:
  Poly num_, den_;
};

// Place of the rational function field F(x): a monic irreducible polynomial
// or the place at infinity.
struct Place {
  bool at_infinity = false;
  Poly pi;  // finite places only
  int degree = 1;

  static Place infinity(const FieldPtr& F);
  static Place finite(Poly monic_irreducible);
  bool operator==(const Place& o) const;
};

bool place_less(const Place& a, const Place& b);

int valuation(const Place& P, const RatFun& f);

// Finitely supported divisor on P^1.
struct Divisor {
  std::vector<std::pair<Place, int>> terms;  // canonical order, nonzero coeffs
  int total_degree() const;
};

Divisor principal_divisor(const RatFun& f);

// f = c * g^d with c a d-th power (the strict d-th-power test).
bool is_dth_power(const RatFun& f, int d);
// f = c * g^d for some constant c: all valuations divisible by d. This is the
// absolute-irreducibility obstruction for the Kummer cover y^d = f.
bool is_const_times_dth_power(const RatFun& f, int d);

}  // namespace gfc
