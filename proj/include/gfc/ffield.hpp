#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gfc/error.hpp"

namespace gfc {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Element of a finite field. Prime-field elements hold a residue in [0, p);
// extension elements hold a coordinate vector over the base field in the
// power basis of the modulus. Elements are immutable values.
class Elem {
public:
  Elem() = default;
  bool valid() const { return fld_ != nullptr; }
  const Field* field() const { return fld_; }
  bool is_zero() const;
  bool is_one() const;
  int64_t residue() const { return v_; }              // prime fields only
  const std::vector<Elem>& coords() const { return c_; }  // extension fields only

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator/(const Elem& o) const;
  Elem operator-() const;
  bool operator==(const Elem& o) const;
  bool operator!=(const Elem& o) const { return !(*this == o); }

  std::string str() const;

private:
  friend class Field;
  const Field* fld_ = nullptr;
  int64_t v_ = 0;
  std::vector<Elem> c_;
};

// A finite field: either F_p or an extension base[t]/(modulus). Instances are
// interned and live for the whole process, so raw Field pointers inside Elem
// stay valid. All construction is deterministic.
class Field : public std::enable_shared_from_this<Field> {
public:
  static FieldPtr prime(int64_t p);
  // base[t]/(modulus); modulus monic irreducible over base, low degree first.
  static FieldPtr extension(const FieldPtr& base, const std::vector<Elem>& modulus);
  // Extension by the lexicographically least monic irreducible of the degree.
  static FieldPtr extension_canonical(const FieldPtr& base, int degree);
  // F_{p^h} with the canonical modulus over F_p.
  static FieldPtr make(int64_t p, int h);

  // All fields are interned shared_ptr instances, so this is always valid.
  FieldPtr self() const { return shared_from_this(); }

  bool is_prime_field() const { return base_ == nullptr; }
  int64_t characteristic() const { return p_; }
  int degree() const { return deg_; }           // over base (1 for prime fields)
  int64_t order() const { return size_; }       // number of elements
  int abs_degree() const { return abs_deg_; }   // over F_p
  const FieldPtr& base() const { return base_; }
  const std::vector<Elem>& modulus() const { return mod_; }
  const std::string& key() const { return key_; }

  Elem zero() const;
  Elem one() const;
  Elem gen() const;  // the adjoined root t (extensions only)
  Elem from_int(int64_t v) const;
  Elem make_elem(std::vector<Elem> coords) const;
  Elem embed(const Elem& a) const;      // base -> this
  Elem lift(const Elem& a) const;       // any field in the base chain -> this
  bool has_in_chain(const Field* f) const;
  std::optional<Elem> to_base(const Elem& a) const;

  // Canonical enumeration: index k maps to the coordinate tuple given by the
  // big-endian base-|B| digits of k, so tuples are ordered lexicographically
  // with the constant coordinate most significant.
  Elem elem_of_index(int64_t k) const;
  int64_t index_of(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, int64_t e) const;
  // a^{|base|^e}: generator of Gal(this/base) applied e times.
  Elem frobenius(const Elem& a, int e = 1) const;

  bool is_square(const Elem& a) const;
  int64_t mult_order(const Elem& a) const;

private:
  Field() = default;
  void check_owned(const Elem& a) const;

  FieldPtr base_;
  int64_t p_ = 0;
  int deg_ = 1;
  int64_t size_ = 0;
  int abs_deg_ = 1;
  std::vector<Elem> mod_;
  std::string key_;
};

// F_q together with its distinguished quadratic extension F_{q^2} = F_q(i),
// i^2 = s with s the canonical nonsquare of F_q.
struct Tower {
  FieldPtr base;
  Elem s;
  FieldPtr top;

  static Tower make(const FieldPtr& base);
  Elem i() const { return top->gen(); }
  Elem embed(const Elem& a) const { return top->embed(a); }
  // a + b i -> a - b i; equals the q-power Frobenius on the top field.
  Elem conj(const Elem& a) const;
};

FieldPtr make_field(int64_t p, int h);

// F itself for L = 1, otherwise the canonical degree-L extension of F.
FieldPtr ext_of_degree(const FieldPtr& F, int L);

// First element s in canonical enumeration with s^{(q-1)/2} = -1.
Elem find_nonsquare(const FieldPtr& F);
// Least generator of F* in canonical enumeration.
Elem least_primitive_root(const FieldPtr& F);
// g^{(q-1)/n} for the least primitive root g; order exactly n.
Elem root_of_unity(const FieldPtr& F, int64_t n);
// Number of solutions of y^n = c in F, without materializing them.
int64_t count_nth_roots(const FieldPtr& F, const Elem& c, int64_t n);

std::vector<int64_t> prime_factors(int64_t n);

}  // namespace gfc
