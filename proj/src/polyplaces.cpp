#include "gfc/polyplaces.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gfc {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
  require(a.field() == b.field(), errc::field_mismatch, "polynomials over different fields");
}

}  // namespace

// --- Poly --------------------------------------------------------------------

Poly::Poly(FieldPtr F, std::vector<Elem> coeffs) : fld_(std::move(F)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    require(c.field() == fld_.get(), errc::field_mismatch, "coefficient in wrong field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldPtr& F, const Elem& c) { return Poly(F, {c}); }

Poly Poly::x(const FieldPtr& F) { return Poly(F, {F->zero(), F->one()}); }

Poly Poly::linear_root(const FieldPtr& F, const Elem& a) { return Poly(F, {F->neg(a), F->one()}); }

Poly Poly::from_ints(const FieldPtr& F, const std::vector<int64_t>& coeffs) {
  std::vector<Elem> c;
  c.reserve(coeffs.size());
  for (int64_t v : coeffs) c.push_back(F->from_int(v));
  return Poly(F, std::move(c));
}

Elem Poly::coeff(int j) const {
  if (j < 0 || j > deg()) return fld_->zero();
  return c_[j];
}

Elem Poly::lc() const {
  require(!is_zero(), errc::invalid_parameter, "zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  check_same_field(*this, o);
  std::vector<Elem> c = c_;
  if (o.c_.size() > c.size()) c.resize(o.c_.size(), fld_->zero());
  for (size_t j = 0; j < o.c_.size(); ++j) c[j] = c[j] + o.c_[j];
  return Poly(fld_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  check_same_field(*this, o);
  std::vector<Elem> c = c_;
  if (o.c_.size() > c.size()) c.resize(o.c_.size(), fld_->zero());
  for (size_t j = 0; j < o.c_.size(); ++j) c[j] = c[j] - o.c_[j];
  return Poly(fld_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  check_same_field(*this, o);
  if (is_zero() || o.is_zero()) return Poly(fld_);
  std::vector<Elem> c(c_.size() + o.c_.size() - 1, fld_->zero());
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    for (size_t k = 0; k < o.c_.size(); ++k) c[j + k] = c[j + k] + c_[j] * o.c_[k];
  }
  return Poly(fld_, std::move(c));
}

Poly Poly::scaled(const Elem& s) const {
  std::vector<Elem> c = c_;
  for (auto& e : c) e = e * s;
  return Poly(fld_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_same_field(*this, d);
  require(!d.is_zero(), errc::division_by_zero, "polynomial division by zero");
  Poly rem = *this;
  Elem lci = fld_->inv(d.lc());
  int dd = d.deg();
  if (rem.deg() < dd) return {Poly(fld_), rem};
  std::vector<Elem> q(rem.deg() - dd + 1, fld_->zero());
  while (rem.deg() >= dd) {
    Elem c = rem.lc() * lci;
    int shift = rem.deg() - dd;
    q[shift] = c;
    for (int j = 0; j <= dd; ++j) rem.c_[shift + j] = rem.c_[shift + j] - c * d.c_[j];
    rem.trim();
  }
  return {Poly(fld_, std::move(q)), rem};
}

Poly Poly::monic() const {
  require(!is_zero(), errc::invalid_parameter, "zero polynomial cannot be made monic");
  return scaled(fld_->inv(lc()));
}

Poly Poly::derivative() const {
  if (deg() < 1) return Poly(fld_);
  std::vector<Elem> c(c_.size() - 1, fld_->zero());
  for (size_t j = 1; j < c_.size(); ++j) c[j - 1] = c_[j] * fld_->from_int(static_cast<int64_t>(j));
  return Poly(fld_, std::move(c));
}

Poly Poly::pow(int64_t e) const {
  require(e >= 0, errc::invalid_parameter, "negative polynomial power");
  Poly r = Poly::constant(fld_, fld_->one());
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::powmod(int64_t e, const Poly& m) const {
  require(e >= 0, errc::invalid_parameter, "negative polynomial power");
  Poly r = Poly::constant(fld_, fld_->one());
  Poly b = *this % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

Elem Poly::eval(const Elem& x0) const {
  Elem r = fld_->zero();
  for (int j = deg(); j >= 0; --j) r = r * x0 + c_[j];
  return r;
}

Poly Poly::subst(const Poly& g) const {
  Poly r = Poly(fld_);
  for (int j = deg(); j >= 0; --j) r = r * g + Poly::constant(fld_, c_[j]);
  return r;
}

Poly Poly::lift_to(const FieldPtr& E) const {
  std::vector<Elem> c;
  c.reserve(c_.size());
  for (const auto& e : c_) c.push_back(E->lift(e));
  return Poly(E, std::move(c));
}

int Poly::root_multiplicity(const Elem& x0) const {
  require(!is_zero(), errc::invalid_parameter, "zero polynomial");
  Poly lin = Poly::linear_root(fld_, x0);
  Poly f = *this;
  int m = 0;
  for (;;) {
    auto [q, r] = f.divmod(lin);
    if (!r.is_zero()) return m;
    ++m;
    f = q;
    if (f.is_zero()) return m;
  }
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= deg(); ++j) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[j].str();
    if (j >= 1) os << "*x";
    if (j >= 2) os << "^" << j;
    first = false;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  if (!r0.is_zero()) r0 = r0.monic();
  return r0;
}

// --- irreducibility and factorization ---------------------------------------

namespace {

// x^{Q^steps} mod f starting from `start`, one Q-power per step.
Poly frob_iterate(const Poly& start, int steps, const Poly& f) {
  Poly h = start;
  for (int j = 0; j < steps; ++j) h = h.powmod(f.field()->order(), f);
  return h;
}

// Kernel vector of (Frobenius - id) on F_Q[x]/(f) that is not a constant,
// i.e. a nontrivial idempotent-generating element of the Berlekamp algebra.
// Exists whenever squarefree f has at least two irreducible factors.
Poly berlekamp_vector(const Poly& f) {
  const FieldPtr& F = f.field();
  const int N = f.deg();
  // columns of the Frobenius matrix: (x^Q)^i mod f
  Poly xq = Poly::x(F).powmod(F->order(), f);
  std::vector<std::vector<Elem>> M(N, std::vector<Elem>(N, F->zero()));
  Poly pw = Poly::constant(F, F->one());
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) M[j][i] = pw.coeff(j);
    M[i][i] = M[i][i] - F->one();
    pw = (pw * xq) % f;
  }
  // Gaussian elimination, tracking a kernel basis via back substitution.
  std::vector<int> pivot_of_col(N, -1);
  int row = 0;
  for (int col = 0; col < N && row < N; ++col) {
    int pr = -1;
    for (int r = row; r < N; ++r)
      if (!M[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[pr], M[row]);
    Elem inv = F->inv(M[row][col]);
    for (int c2 = 0; c2 < N; ++c2) M[row][c2] = M[row][c2] * inv;
    for (int r = 0; r < N; ++r) {
      if (r == row || M[r][col].is_zero()) continue;
      Elem t = M[r][col];
      for (int c2 = 0; c2 < N; ++c2) M[r][c2] = M[r][c2] - t * M[row][c2];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (int col = 1; col < N; ++col) {
    if (pivot_of_col[col] >= 0) continue;  // free column -> kernel vector
    std::vector<Elem> v(N, F->zero());
    v[col] = F->one();
    for (int c2 = 0; c2 < N; ++c2) {
      int pr = pivot_of_col[c2];
      if (pr >= 0) v[c2] = F->neg(M[pr][col]);
    }
    Poly vp(F, std::move(v));
    if (!vp.is_constant()) return vp;
  }
  fail(errc::oracle_failure, "Berlekamp algebra has no splitting element");
}

void equal_degree_split(const Poly& f, int d, std::vector<Poly>& out) {
  if (f.deg() == d) {
    out.push_back(f.monic());
    return;
  }
  const FieldPtr& F = f.field();
  const int64_t Q = F->order();
  Poly one = Poly::constant(F, F->one());
  auto try_split = [&](const Poly& cand) {
    if (cand.deg() > 0 && cand.deg() < f.deg()) {
      equal_degree_split(cand, d, out);
      equal_degree_split((f / cand).monic(), d, out);
      return true;
    }
    return false;
  };
  // Character sweep on norms of x + delta: per irreducible factor g the norm
  // of (x + delta) is +-g(-delta) in F_Q*, and the quadratic characters of
  // those values separate two factors for roughly half of all delta.
  for (int64_t idx = 0; idx < std::min<int64_t>(Q, 512); ++idx) {
    Poly a = Poly(F, {F->elem_of_index(idx), F->one()});
    if (d == 1 && try_split(gcd(a, f))) return;
    Poly nrm = one;
    Poly t = a % f;
    for (int i = 0; i < d; ++i) {
      nrm = (nrm * t) % f;
      t = t.powmod(Q, f);
    }
    if (try_split(gcd(nrm.powmod((Q - 1) / 2, f) - one, f))) return;
  }
  // Linear factors of fully split products can be read off by evaluation.
  if (d == 1 && Q <= (int64_t{1} << 16)) {
    int found = 0;
    for (int64_t k = 0; k < Q && found < f.deg(); ++k) {
      Elem x0 = F->elem_of_index(k);
      if (f.eval(x0).is_zero()) {
        out.push_back(Poly::linear_root(F, x0));
        ++found;
      }
    }
    require(found == f.deg(), errc::oracle_failure, "split product lost roots");
    return;
  }
  // Exhaustive Berlekamp refinement: v is constant modulo every factor, and
  // not globally constant, so sweeping the constants refines f completely.
  require(Q <= (int64_t{1} << 17), errc::oracle_failure, "equal-degree splitting sweep exhausted");
  Poly v = berlekamp_vector(f);
  for (int64_t idx = 0; idx < Q; ++idx) {
    Poly g = gcd(v - Poly::constant(F, F->elem_of_index(idx)), f);
    if (try_split(g)) return;
  }
  fail(errc::oracle_failure, "Berlekamp refinement failed on a squarefree input");
}

// f monic squarefree -> monic irreducible factors, unsorted.
std::vector<Poly> split_squarefree(Poly f) {
  std::vector<Poly> out;
  const FieldPtr& F = f.field();
  Poly h = Poly::x(F);
  int k = 0;
  while (f.deg() >= 1) {
    ++k;
    if (f.deg() < 2 * k) {
      out.push_back(f.monic());
      break;
    }
    h = frob_iterate(h % f, 1, f);
    Poly g = gcd(h - Poly::x(F), f);
    if (g.deg() > 0) {
      equal_degree_split(g, k, out);
      f = (f / g).monic();
      h = h % f;
    }
  }
  return out;
}

Poly pth_root_poly(const Poly& f) {
  const FieldPtr& F = f.field();
  int64_t p = F->characteristic();
  int64_t root_exp = F->order() / p;  // inverse of the p-power map on F
  std::vector<Elem> c;
  for (int j = 0; j <= f.deg(); j += static_cast<int>(p)) c.push_back(F->pow(f.coeff(j), root_exp));
  return Poly(F, std::move(c));
}

void factor_monic(Poly f, std::vector<std::pair<Poly, int>>& out, int mult_scale) {
  if (f.deg() <= 0) return;
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    factor_monic(pth_root_poly(f), out, mult_scale * static_cast<int>(f.field()->characteristic()));
    return;
  }
  // w carries each irreducible factor whose multiplicity is prime to p once;
  // the leftover after dividing them out is a p-th power, handled recursively.
  Poly w = (f / gcd(f, fp)).monic();
  for (const Poly& g : split_squarefree(w)) {
    int m = 0;
    for (;;) {
      auto [q, r] = f.divmod(g);
      if (!r.is_zero()) break;
      ++m;
      f = q;
    }
    out.emplace_back(g, m * mult_scale);
  }
  factor_monic(f.monic(), out, mult_scale);
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.deg() < 1) return false;
  if (f.deg() == 1) return true;
  const FieldPtr& F = f.field();
  Poly x = Poly::x(F);
  int d = f.deg();
  if (!((frob_iterate(x, d, f) - x) % f).is_zero()) return false;
  for (int64_t ell : prime_factors(d)) {
    if (gcd(frob_iterate(x, d / static_cast<int>(ell), f) - x, f).deg() != 0) return false;
  }
  return true;
}

Poly least_irreducible(const FieldPtr& F, int degree) {
  require(degree >= 1, errc::invalid_parameter, "degree must be positive");
  if (degree == 1) return Poly::x(F);
  int64_t B = F->order();
  std::vector<int64_t> digits(degree, 0);
  for (;;) {
    if (digits[0] == 0) {
      std::fill(digits.begin(), digits.end(), 0);
      digits[0] = 1;
    }
    std::vector<Elem> c(degree + 1, F->zero());
    for (int j = 0; j < degree; ++j) c[j] = F->elem_of_index(digits[j]);
    c[degree] = F->one();
    Poly f(F, std::move(c));
    if (is_irreducible(f)) return f;
    int j = degree - 1;
    while (j >= 0 && digits[j] == B - 1) digits[j--] = 0;
    require(j >= 0, errc::invalid_parameter, "no irreducible polynomial found");
    ++digits[j];
  }
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int j = 0; j <= a.deg(); ++j) {
    int64_t ia = a.field()->index_of(a.coeff(j));
    int64_t ib = b.field()->index_of(b.coeff(j));
    if (ia != ib) return ia < ib;
  }
  return false;
}

Factorization factorize(const Poly& f) {
  require(!f.is_zero(), errc::invalid_parameter, "cannot factor the zero polynomial");
  Factorization out;
  out.unit = f.lc();
  factor_monic(f.monic(), out.factors, 1);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

namespace {

void squarefree_monic(const Poly& f, int mult_scale, std::vector<std::pair<Poly, int>>& out) {
  if (f.deg() <= 0) return;
  const FieldPtr& F = f.field();
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_monic(pth_root_poly(f), mult_scale * static_cast<int>(F->characteristic()), out);
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = (f / c).monic();
  int i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(w, c);
    Poly z = (w / y).monic();
    if (z.deg() > 0) out.emplace_back(z, i * mult_scale);
    w = y;
    c = (c / y).monic();
    ++i;
  }
  squarefree_monic(c, mult_scale, out);  // leftover p-th-power part
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  require(!f.is_zero(), errc::invalid_parameter, "cannot decompose the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  squarefree_monic(f.monic(), 1, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<DegreeProfileEntry> factor_degree_profile(const Poly& f) {
  std::vector<DegreeProfileEntry> out;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    // distinct-degree pass on the squarefree piece
    Poly rem = g;
    Poly h = Poly::x(g.field());
    int k = 0;
    while (rem.deg() >= 1) {
      ++k;
      if (rem.deg() < 2 * k) {
        out.push_back({rem.deg(), mult, 1});
        break;
      }
      h = frob_iterate(h % rem, 1, rem);
      Poly dk = gcd(h - Poly::x(g.field()), rem);
      if (dk.deg() > 0) {
        out.push_back({k, mult, dk.deg() / k});
        rem = (rem / dk).monic();
        h = h % rem;
      }
    }
  }
  return out;
}

std::vector<Elem> poly_roots(const Poly& f) {
  require(!f.is_zero(), errc::invalid_parameter, "zero polynomial");
  std::vector<Elem> roots;
  if (f.deg() == 0) return roots;
  for (const auto& [g, m] : factorize(f).factors) {
    if (g.deg() == 1) roots.push_back(-g.coeff(0));
  }
  std::sort(roots.begin(), roots.end(), [&](const Elem& a, const Elem& b) {
    return f.field()->index_of(a) < f.field()->index_of(b);
  });
  return roots;
}

std::vector<Elem> nth_roots(const FieldPtr& F, const Elem& c, int64_t n) {
  require(n >= 1, errc::invalid_parameter, "exponent must be positive");
  std::vector<Elem> coeffs(n + 1, F->zero());
  coeffs[0] = F->neg(c);
  coeffs[n] = F->one();
  return poly_roots(Poly(F, std::move(coeffs)));
}

std::vector<std::vector<int64_t>> power_fibers(const FieldPtr& F, int64_t m) {
  require(F->order() <= (int64_t{1} << 21), errc::desk_scale_exceeded,
          "power-fiber table needs an enumerable field");
  std::vector<std::vector<int64_t>> fibers(F->order());
  for (int64_t k = 0; k < F->order(); ++k)
    fibers[F->index_of(F->pow(F->elem_of_index(k), m))].push_back(k);
  return fibers;
}

// --- RatFun ------------------------------------------------------------------

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  check_same_field(num_, den_);
  require(!den_.is_zero(), errc::division_by_zero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), num_.field()->one());
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Elem s = num_.field()->inv(den_.lc());
  num_ = num_.scaled(s);
  den_ = den_.scaled(s);
}

RatFun RatFun::from_poly(Poly p) {
  auto F = p.field();
  return RatFun(std::move(p), Poly::constant(F, F->one()));
}

RatFun RatFun::constant(const FieldPtr& F, const Elem& c) {
  return RatFun(Poly::constant(F, c), Poly::constant(F, F->one()));
}

RatFun RatFun::x(const FieldPtr& F) { return from_poly(Poly::x(F)); }

int RatFun::map_degree() const { return std::max(num_.deg(), den_.deg()); }

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator/(const RatFun& o) const {
  require(!o.is_zero(), errc::division_by_zero, "division by the zero function");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = r.num_.scaled(field()->from_int(-1));
  return r;
}

RatFun RatFun::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFun(num_.pow(e), den_.pow(e));
}

RatFun RatFun::inverse() const {
  require(!is_zero(), errc::division_by_zero, "inverse of the zero function");
  return RatFun(den_, num_);
}

RatFun RatFun::subst(const RatFun& g) const {
  const FieldPtr& F = field();
  require(g.field() == F, errc::field_mismatch, "substitution over a different field");
  int k = map_degree();
  // Homogenize: with g = u/v, num(g) v^k and den(g) v^k are polynomials and
  // the common v^k cancels in the quotient.
  std::vector<Poly> upow(k + 1, Poly(F)), vpow(k + 1, Poly(F));
  upow[0] = vpow[0] = Poly::constant(F, F->one());
  for (int j = 1; j <= k; ++j) {
    upow[j] = upow[j - 1] * g.num();
    vpow[j] = vpow[j - 1] * g.den();
  }
  Poly nh = Poly(F), dh = Poly(F);
  for (int j = 0; j <= k; ++j) {
    Poly term = upow[j] * vpow[k - j];
    if (j <= num_.deg() && !num_.coeff(j).is_zero()) nh = nh + term.scaled(num_.coeff(j));
    if (j <= den_.deg() && !den_.coeff(j).is_zero()) dh = dh + term.scaled(den_.coeff(j));
  }
  require(!dh.is_zero(), errc::degenerate_map, "substitution hits a pole identically");
  return RatFun(nh, dh);
}

RatFun RatFun::lift_to(const FieldPtr& E) const { return RatFun(num_.lift_to(E), den_.lift_to(E)); }

std::pair<Elem, Elem> RatFun::eval_proj(const Elem& x0) const {
  Elem n = num_.eval(x0), d = den_.eval(x0);
  require(!(n.is_zero() && d.is_zero()), errc::oracle_failure, "canonical form violated at evaluation");
  return {n, d};
}

std::pair<Elem, Elem> RatFun::eval_proj_infinity() const {
  const FieldPtr& F = field();
  if (num_.deg() > den_.deg()) return {F->one(), F->zero()};
  if (num_.deg() < den_.deg()) return {F->zero(), F->one()};
  return {num_.lc(), den_.lc()};
}

std::string RatFun::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

// --- places and divisors -----------------------------------------------------

Place Place::infinity(const FieldPtr& F) {
  Place P;
  P.at_infinity = true;
  P.pi = Poly(F);
  P.degree = 1;
  return P;
}

Place Place::finite(Poly monic_irreducible) {
  Place P;
  P.at_infinity = false;
  P.degree = monic_irreducible.deg();
  P.pi = std::move(monic_irreducible);
  require(P.degree >= 1, errc::invalid_parameter, "finite place needs a nonconstant polynomial");
  return P;
}

bool Place::operator==(const Place& o) const {
  if (at_infinity != o.at_infinity) return false;
  return at_infinity || pi == o.pi;
}

bool place_less(const Place& a, const Place& b) {
  if (a.at_infinity != b.at_infinity) return b.at_infinity;  // finite places first
  if (a.at_infinity) return false;
  return poly_less(a.pi, b.pi);
}

int valuation(const Place& P, const RatFun& f) {
  require(!f.is_zero(), errc::invalid_parameter, "valuation of the zero function");
  if (P.at_infinity) return f.den().deg() - f.num().deg();
  auto mult = [&](const Poly& g) {
    int m = 0;
    Poly h = g;
    for (;;) {
      auto [q, r] = h.divmod(P.pi);
      if (!r.is_zero()) return m;
      ++m;
      h = q;
    }
  };
  return mult(f.num()) - mult(f.den());
}

int Divisor::total_degree() const {
  int d = 0;
  for (const auto& [P, c] : terms) d += c * P.degree;
  return d;
}

Divisor principal_divisor(const RatFun& f) {
  require(!f.is_zero(), errc::invalid_parameter, "divisor of the zero function");
  Divisor D;
  if (f.num().deg() >= 1)
    for (const auto& [g, m] : factorize(f.num()).factors) D.terms.emplace_back(Place::finite(g), m);
  if (f.den().deg() >= 1)
    for (const auto& [g, m] : factorize(f.den()).factors) D.terms.emplace_back(Place::finite(g), -m);
  int vinf = f.den().deg() - f.num().deg();
  if (vinf != 0) D.terms.emplace_back(Place::infinity(f.field()), vinf);
  std::sort(D.terms.begin(), D.terms.end(),
            [](const auto& a, const auto& b) { return place_less(a.first, b.first); });
  return D;
}

bool is_const_times_dth_power(const RatFun& f, int d) {
  require(d >= 2, errc::invalid_parameter, "power test needs d >= 2");
  require(!f.is_zero(), errc::invalid_parameter, "power test on the zero function");
  for (const auto& [P, c] : principal_divisor(f).terms)
    if (c % d != 0) return false;
  return true;
}

bool is_dth_power(const RatFun& f, int d) {
  if (!is_const_times_dth_power(f, d)) return false;
  // All valuations divisible by d means f = c * g^d with c the leading unit;
  // f is a literal d-th power iff that constant is one too.
  return count_nth_roots(f.field(), f.num().lc(), d) > 0;
}

}  // namespace gfc
