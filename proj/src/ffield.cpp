#include "gfc/ffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gfc {

namespace {

bool is_prime_i64(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

// Fields are interned and kept alive for the whole process so that the raw
// Field* held by elements stays valid.
std::map<std::string, FieldPtr>& registry() {
  static std::map<std::string, FieldPtr> r;
  return r;
}

// --- minimal dense polynomial helpers over an arbitrary Field -------------
// polyplaces has the full-featured layer; this local copy breaks the
// dependency cycle (element inversion and modulus validation need it).

using PV = std::vector<Elem>;

void ptrim(PV& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

int pdeg(const PV& v) { return static_cast<int>(v.size()) - 1; }

PV psub(const Field& F, PV a, const PV& b) {
  if (b.size() > a.size()) a.resize(b.size(), F.zero());
  for (size_t j = 0; j < b.size(); ++j) a[j] = F.sub(a[j], b[j]);
  ptrim(a);
  return a;
}

PV pmul(const Field& F, const PV& a, const PV& b) {
  if (a.empty() || b.empty()) return {};
  PV c(a.size() + b.size() - 1, F.zero());
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero()) continue;
    for (size_t k = 0; k < b.size(); ++k) c[j + k] = F.add(c[j + k], F.mul(a[j], b[k]));
  }
  ptrim(c);
  return c;
}

PV pmod(const Field& F, PV a, const PV& m) {
  const int dm = pdeg(m);
  Elem lc_inv = F.inv(m.back());
  while (pdeg(a) >= dm) {
    Elem q = F.mul(a.back(), lc_inv);
    int shift = pdeg(a) - dm;
    for (int j = 0; j <= dm; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(q, m[j]));
    ptrim(a);
  }
  return a;
}

PV pgcd(const Field& F, PV a, PV b) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PV r = pmod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Elem s = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, s);
  }
  return a;
}

PV ppowmod(const Field& F, PV b, int64_t e, const PV& m) {
  PV r{F.one()};
  b = pmod(F, std::move(b), m);
  while (e > 0) {
    if (e & 1) r = pmod(F, pmul(F, r, b), m);
    b = pmod(F, pmul(F, b, b), m);
    e >>= 1;
  }
  return r;
}

// x^{Q^k} mod f via k successive Q-power maps; f monic.
PV frob_power(const Field& F, int k, const PV& f) {
  PV h{F.zero(), F.one()};
  for (int j = 0; j < k; ++j) h = ppowmod(F, h, F.order(), f);
  return h;
}

bool modulus_irreducible(const FieldPtr& base, const PV& f) {
  const Field& F = *base;
  const int d = pdeg(f);
  if (d < 1) return false;
  PV x{F.zero(), F.one()};
  if (psub(F, frob_power(F, d, f), x) != PV{}) return false;
  for (int64_t ell : prime_factors(d)) {
    PV g = pgcd(F, psub(F, frob_power(F, d / static_cast<int>(ell), f), x), f);
    if (pdeg(g) != 0) return false;
  }
  return true;
}

// Extended Euclid: returns u with u*a = gcd(a, m) modulo m (gcd must be a
// nonzero constant for inversion).
PV pinvmod(const Field& F, PV a, PV m) {
  PV r0 = std::move(m), r1 = std::move(a);
  PV s0 = {}, s1 = {F.one()};
  ptrim(r0);
  ptrim(r1);
  while (!r1.empty()) {
    // divide r0 by r1
    PV q;
    PV rem = r0;
    Elem lc_inv = F.inv(r1.back());
    int dq = pdeg(r0) - pdeg(r1);
    if (dq >= 0) q.assign(dq + 1, F.zero());
    while (pdeg(rem) >= pdeg(r1)) {
      Elem c = F.mul(rem.back(), lc_inv);
      int shift = pdeg(rem) - pdeg(r1);
      q[shift] = c;
      for (int j = 0; j <= pdeg(r1); ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(c, r1[j]));
      ptrim(rem);
    }
    PV s2 = psub(F, s0, pmul(F, q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  require(pdeg(r0) == 0, errc::division_by_zero, "element is a zero divisor");
  Elem s = F.inv(r0[0]);
  for (auto& c : s0) c = F.mul(c, s);
  return s0;
}

std::string field_key(const FieldPtr& base, int64_t p, const PV& mod) {
  std::ostringstream os;
  if (!base) {
    os << "p" << p;
  } else {
    os << "e(" << base->key() << ")[";
    for (const auto& c : mod) os << base->index_of(c) << ",";
    os << "]";
  }
  return os.str();
}

}  // namespace

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::division_by_zero: return "division-by-zero";
    case errc::field_mismatch: return "field-mismatch";
    case errc::no_such_root: return "no-such-root";
    case errc::no_such_subgroup: return "no-such-subgroup";
    case errc::desk_scale_exceeded: return "desk-scale-exceeded";
    case errc::wrong_family: return "wrong-family";
    case errc::reducible_or_singular: return "reducible-or-singular";
    case errc::tameness_violation: return "tameness-violation";
    case errc::oracle_failure: return "oracle-failure";
    case errc::bound_exceeded: return "bound-exceeded";
    case errc::not_normal: return "not-normal";
    case errc::unsupported_normal_form: return "unsupported-normal-form";
    case errc::raise_extension: return "raise-extension";
    case errc::degenerate_map: return "degenerate-map";
    case errc::reducible_relation: return "reducible-relation";
    case errc::theorem_violation: return "theorem-violation";
  }
  return "unknown";
}

// --- Elem ------------------------------------------------------------------

bool Elem::is_zero() const {
  if (!fld_) return true;
  if (c_.empty()) return v_ == 0;
  return std::all_of(c_.begin(), c_.end(), [](const Elem& e) { return e.is_zero(); });
}

bool Elem::is_one() const { return valid() && *this == fld_->one(); }

Elem Elem::operator+(const Elem& o) const { return fld_->add(*this, o); }
Elem Elem::operator-(const Elem& o) const { return fld_->sub(*this, o); }
Elem Elem::operator*(const Elem& o) const { return fld_->mul(*this, o); }
Elem Elem::operator/(const Elem& o) const { return fld_->mul(*this, fld_->inv(o)); }
Elem Elem::operator-() const { return fld_->neg(*this); }

bool Elem::operator==(const Elem& o) const {
  if (fld_ != o.fld_) return false;
  if (c_.empty()) return v_ == o.v_;
  return c_ == o.c_;
}

std::string Elem::str() const {
  if (!fld_) return "<null>";
  if (c_.empty()) return std::to_string(v_);
  std::string s = "(";
  for (size_t j = 0; j < c_.size(); ++j) {
    if (j) s += ",";
    s += c_[j].str();
  }
  return s + ")";
}

// --- Field -----------------------------------------------------------------

FieldPtr Field::prime(int64_t p) {
  require(p > 2 && is_prime_i64(p), errc::invalid_parameter,
          "characteristic must be an odd prime, got " + std::to_string(p));
  std::string key = field_key(nullptr, p, {});
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(key);
  if (it != registry().end()) return it->second;
  auto F = std::shared_ptr<Field>(new Field);
  F->p_ = p;
  F->deg_ = 1;
  F->size_ = p;
  F->abs_deg_ = 1;
  F->key_ = key;
  registry().emplace(key, F);
  return F;
}

FieldPtr Field::extension(const FieldPtr& base, const std::vector<Elem>& modulus) {
  require(base != nullptr, errc::invalid_parameter, "null base field");
  PV mod = modulus;
  ptrim(mod);
  int d = pdeg(mod);
  require(d >= 2, errc::invalid_parameter, "extension degree must be at least 2");
  for (const auto& c : mod)
    require(c.field() == base.get(), errc::field_mismatch, "modulus coefficients must lie in the base field");
  require(mod.back().is_one(), errc::invalid_parameter, "modulus must be monic");
  require(modulus_irreducible(base, mod), errc::invalid_parameter, "modulus is reducible");

  std::string key = field_key(base, base->characteristic(), mod);
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto it = registry().find(key);
  if (it != registry().end()) return it->second;
  auto F = std::shared_ptr<Field>(new Field);
  F->base_ = base;
  F->p_ = base->characteristic();
  F->deg_ = d;
  F->abs_deg_ = base->abs_degree() * d;
  int64_t size = 1;
  for (int j = 0; j < d; ++j) {
    require(size <= (int64_t{1} << 62) / base->order(), errc::desk_scale_exceeded, "field too large");
    size *= base->order();
  }
  F->size_ = size;
  F->mod_ = std::move(mod);
  F->key_ = key;
  registry().emplace(key, F);
  return F;
}

FieldPtr Field::extension_canonical(const FieldPtr& base, int degree) {
  require(degree >= 2, errc::invalid_parameter, "extension degree must be at least 2");
  // Scan monic polynomials in lex order of their low-degree-first
  // coefficient tuple until the first irreducible one.
  int64_t B = base->order();
  double total = 1;
  for (int j = 0; j < degree; ++j) total *= static_cast<double>(B);
  require(total < 9e18, errc::desk_scale_exceeded, "canonical modulus search space too large");
  std::vector<int64_t> digits(degree, 0);
  for (;;) {
    if (digits[0] == 0) {
      // zero constant term is divisible by t; skip the whole block
      std::fill(digits.begin(), digits.end(), 0);
      digits[0] = 1;
    }
    PV mod(degree + 1, base->zero());
    for (int j = 0; j < degree; ++j) mod[j] = base->elem_of_index(digits[j]);
    mod[degree] = base->one();
    if (modulus_irreducible(base, mod)) return extension(base, mod);
    int j = degree - 1;
    while (j >= 0 && digits[j] == B - 1) digits[j--] = 0;
    require(j >= 0, errc::invalid_parameter, "no irreducible modulus found");
    ++digits[j];
  }
}

FieldPtr Field::make(int64_t p, int h) {
  require(h >= 1, errc::invalid_parameter, "extension degree must be positive");
  FieldPtr P = prime(p);
  return h == 1 ? P : extension_canonical(P, h);
}

void Field::check_owned(const Elem& a) const {
  require(a.field() == this, errc::field_mismatch, "element belongs to a different field");
}

Elem Field::zero() const {
  Elem e;
  e.fld_ = this;
  if (base_) e.c_.assign(deg_, base_->zero());
  return e;
}

Elem Field::one() const { return from_int(1); }

Elem Field::gen() const {
  require(base_ != nullptr, errc::invalid_parameter, "prime field has no adjoined generator");
  Elem e = zero();
  e.c_[1] = base_->one();
  return e;
}

Elem Field::from_int(int64_t v) const {
  Elem e = zero();
  if (!base_) {
    e.v_ = ((v % p_) + p_) % p_;
  } else {
    e.c_[0] = base_->from_int(v);
  }
  return e;
}

Elem Field::make_elem(std::vector<Elem> coords) const {
  require(base_ != nullptr, errc::invalid_parameter, "prime field elements are residues");
  require(static_cast<int>(coords.size()) == deg_, errc::invalid_parameter, "coordinate count mismatch");
  for (const auto& c : coords) base_->check_owned(c);
  Elem e;
  e.fld_ = this;
  e.c_ = std::move(coords);
  return e;
}

Elem Field::embed(const Elem& a) const {
  require(base_ != nullptr && a.field() == base_.get(), errc::field_mismatch, "embed expects a base-field element");
  Elem e = zero();
  e.c_[0] = a;
  return e;
}

bool Field::has_in_chain(const Field* f) const {
  const Field* cur = this;
  while (cur) {
    if (cur == f) return true;
    cur = cur->base_ ? cur->base_.get() : nullptr;
  }
  return false;
}

Elem Field::lift(const Elem& a) const {
  if (a.field() == this) return a;
  require(base_ != nullptr, errc::field_mismatch, "element is not in the base chain");
  return embed(base_->lift(a));
}

std::optional<Elem> Field::to_base(const Elem& a) const {
  check_owned(a);
  require(base_ != nullptr, errc::invalid_parameter, "prime field has no base");
  for (int j = 1; j < deg_; ++j)
    if (!a.c_[j].is_zero()) return std::nullopt;
  return a.c_[0];
}

Elem Field::elem_of_index(int64_t k) const {
  require(k >= 0 && k < size_, errc::invalid_parameter, "element index out of range");
  if (!base_) {
    Elem e = zero();
    e.v_ = k;
    return e;
  }
  Elem e = zero();
  int64_t B = base_->order();
  for (int j = deg_ - 1; j >= 0; --j) {
    e.c_[j] = base_->elem_of_index(k % B);
    k /= B;
  }
  return e;
}

int64_t Field::index_of(const Elem& a) const {
  check_owned(a);
  if (!base_) return a.v_;
  int64_t k = 0;
  for (int j = 0; j < deg_; ++j) k = k * base_->order() + base_->index_of(a.c_[j]);
  return k;
}

Elem Field::add(const Elem& a, const Elem& b) const {
  check_owned(a);
  check_owned(b);
  Elem e = a;
  if (!base_) {
    e.v_ = (a.v_ + b.v_) % p_;
  } else {
    for (int j = 0; j < deg_; ++j) e.c_[j] = base_->add(a.c_[j], b.c_[j]);
  }
  return e;
}

Elem Field::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Field::neg(const Elem& a) const {
  check_owned(a);
  Elem e = a;
  if (!base_) {
    e.v_ = (p_ - a.v_) % p_;
  } else {
    for (auto& c : e.c_) c = base_->neg(c);
  }
  return e;
}

Elem Field::mul(const Elem& a, const Elem& b) const {
  check_owned(a);
  check_owned(b);
  if (!base_) {
    Elem e = a;
    e.v_ = (a.v_ * b.v_) % p_;
    return e;
  }
  const Field& B = *base_;
  std::vector<Elem> c(2 * deg_ - 1, B.zero());
  for (int j = 0; j < deg_; ++j) {
    if (a.c_[j].is_zero()) continue;
    for (int k = 0; k < deg_; ++k) c[j + k] = B.add(c[j + k], B.mul(a.c_[j], b.c_[k]));
  }
  for (int j = 2 * deg_ - 2; j >= deg_; --j) {
    if (c[j].is_zero()) continue;
    Elem t = c[j];
    for (int k = 0; k < deg_; ++k) c[j - deg_ + k] = B.sub(c[j - deg_ + k], B.mul(t, mod_[k]));
    c[j] = B.zero();
  }
  c.resize(deg_);
  Elem e;
  e.fld_ = this;
  e.c_ = std::move(c);
  return e;
}

Elem Field::inv(const Elem& a) const {
  check_owned(a);
  require(!a.is_zero(), errc::division_by_zero, "inverse of zero");
  if (!base_) {
    // Fermat
    Elem e = a;
    int64_t r = 1, b = a.v_, ex = p_ - 2;
    while (ex) {
      if (ex & 1) r = r * b % p_;
      b = b * b % p_;
      ex >>= 1;
    }
    e.v_ = r;
    return e;
  }
  PV u = pinvmod(*base_, a.c_, mod_);
  u.resize(deg_, base_->zero());
  Elem e;
  e.fld_ = this;
  e.c_ = std::move(u);
  return e;
}

Elem Field::pow(const Elem& a, int64_t e) const {
  check_owned(a);
  if (e < 0) return pow(inv(a), -e);
  Elem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Elem Field::frobenius(const Elem& a, int e) const {
  check_owned(a);
  int64_t q = base_ ? base_->order() : p_;
  Elem r = a;
  for (int j = 0; j < e; ++j) r = pow(r, q);
  return r;
}

bool Field::is_square(const Elem& a) const {
  if (a.is_zero()) return true;
  return pow(a, (size_ - 1) / 2).is_one();
}

int64_t Field::mult_order(const Elem& a) const {
  require(!a.is_zero(), errc::invalid_parameter, "zero has no multiplicative order");
  int64_t ord = size_ - 1;
  for (int64_t ell : prime_factors(size_ - 1)) {
    while (ord % ell == 0 && pow(a, ord / ell).is_one()) ord /= ell;
  }
  return ord;
}

// --- Tower -----------------------------------------------------------------

Tower Tower::make(const FieldPtr& base) {
  Tower t;
  t.base = base;
  t.s = find_nonsquare(base);
  std::vector<Elem> mod = {base->neg(t.s), base->zero(), base->one()};
  t.top = Field::extension(base, mod);
  return t;
}

Elem Tower::conj(const Elem& a) const {
  top->lift(a);  // ownership check
  require(a.field() == top.get(), errc::field_mismatch, "conjugation expects a top-field element");
  return top->make_elem({a.coords()[0], base->neg(a.coords()[1])});
}

// --- free functions ---------------------------------------------------------

FieldPtr make_field(int64_t p, int h) { return Field::make(p, h); }

FieldPtr ext_of_degree(const FieldPtr& F, int L) {
  require(L >= 1, errc::invalid_parameter, "extension degree must be positive");
  return L == 1 ? F : Field::extension_canonical(F, L);
}

Elem find_nonsquare(const FieldPtr& F) {
  for (int64_t k = 0; k < F->order(); ++k) {
    Elem e = F->elem_of_index(k);
    if (e.is_zero()) continue;
    if (!F->is_square(e)) return e;
  }
  fail(errc::invalid_parameter, "no nonsquare found (field of even order?)");
}

Elem least_primitive_root(const FieldPtr& F) {
  for (int64_t k = 0; k < F->order(); ++k) {
    Elem e = F->elem_of_index(k);
    if (e.is_zero()) continue;
    if (F->mult_order(e) == F->order() - 1) return e;
  }
  fail(errc::invalid_parameter, "no primitive root found");
}

Elem root_of_unity(const FieldPtr& F, int64_t n) {
  require(n >= 1, errc::invalid_parameter, "order must be positive");
  require((F->order() - 1) % n == 0, errc::no_such_root,
          "no primitive root of unity of order " + std::to_string(n) + " in a field of order " +
              std::to_string(F->order()));
  Elem g = least_primitive_root(F);
  return F->pow(g, (F->order() - 1) / n);
}

int64_t count_nth_roots(const FieldPtr& F, const Elem& c, int64_t n) {
  require(n >= 1, errc::invalid_parameter, "exponent must be positive");
  if (c.is_zero()) return 1;
  int64_t d = std::gcd(n, F->order() - 1);
  return F->pow(c, (F->order() - 1) / d).is_one() ? d : 0;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace gfc
