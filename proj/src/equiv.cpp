#include "gfc/equiv.hpp"

#include <algorithm>
#include <set>

namespace gfc {

namespace {

void check_rel(const AlgebraicRelation& rel) {
  require(rel.m >= 2, errc::invalid_parameter, "relation exponent must be at least 2");
  require(!rel.f.is_zero(), errc::invalid_parameter, "relation with zero right-hand side");
}

// --- dense polynomials in y with rational-function coefficients -------------

using YPoly = std::vector<RatFun>;

void ytrim(YPoly& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

int ydeg(const YPoly& v) { return static_cast<int>(v.size()) - 1; }

YPoly ysub(const FieldPtr& F, YPoly a, const YPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), RatFun::constant(F, F->zero()));
  for (size_t j = 0; j < b.size(); ++j) a[j] = a[j] - b[j];
  ytrim(a);
  return a;
}

YPoly ymul(const FieldPtr& F, const YPoly& a, const YPoly& b) {
  if (a.empty() || b.empty()) return {};
  YPoly c(a.size() + b.size() - 1, RatFun::constant(F, F->zero()));
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero()) continue;
    for (size_t k = 0; k < b.size(); ++k) c[j + k] = c[j + k] + a[j] * b[k];
  }
  ytrim(c);
  return c;
}

// Extended Euclid against the relation polynomial y^m - f; returns u with
// u * a = 1 modulo it, or nullopt when a is a zero divisor.
std::optional<YPoly> yinv(const FieldPtr& F, YPoly a, YPoly mod) {
  YPoly r0 = std::move(mod), r1 = std::move(a);
  YPoly s0 = {}, s1 = {RatFun::constant(F, F->one())};
  ytrim(r0);
  ytrim(r1);
  while (!r1.empty()) {
    YPoly q;
    YPoly rem = r0;
    RatFun lcinv = r1.back().inverse();
    int dq = ydeg(r0) - ydeg(r1);
    if (dq >= 0) q.assign(dq + 1, RatFun::constant(F, F->zero()));
    while (ydeg(rem) >= ydeg(r1)) {
      RatFun c = rem.back() * lcinv;
      int shift = ydeg(rem) - ydeg(r1);
      q[shift] = c;
      for (int j = 0; j <= ydeg(r1); ++j) rem[shift + j] = rem[shift + j] - c * r1[j];
      ytrim(rem);
    }
    YPoly s2 = ysub(F, s0, ymul(F, q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (ydeg(r0) != 0) return std::nullopt;
  RatFun scale = r0[0].inverse();
  for (auto& c : s0) c = c * scale;
  return s0;
}

}  // namespace

// --- AlgebraElem --------------------------------------------------------------

AlgebraElem::AlgebraElem(AlgebraicRelation rel, std::vector<RatFun> coeffs)
    : rel_(std::move(rel)), c_(std::move(coeffs)) {
  check_rel(rel_);
  require(static_cast<int64_t>(c_.size()) == rel_.m, errc::invalid_parameter,
          "coefficient vector must have length m");
}

AlgebraElem AlgebraElem::from_ratfun(const AlgebraicRelation& rel, const RatFun& c) {
  const FieldPtr& F = rel.field();
  std::vector<RatFun> v(rel.m, RatFun::constant(F, F->zero()));
  v[0] = c;
  return AlgebraElem(rel, std::move(v));
}

AlgebraElem AlgebraElem::x_of(const AlgebraicRelation& rel) {
  return from_ratfun(rel, RatFun::x(rel.field()));
}

AlgebraElem AlgebraElem::y_of(const AlgebraicRelation& rel) {
  const FieldPtr& F = rel.field();
  std::vector<RatFun> v(rel.m, RatFun::constant(F, F->zero()));
  v[1] = RatFun::constant(F, F->one());
  return AlgebraElem(rel, std::move(v));
}

bool AlgebraElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const RatFun& c) { return c.is_zero(); });
}

AlgebraElem AlgebraElem::operator+(const AlgebraElem& o) const {
  require(rel_ == o.rel_, errc::field_mismatch, "elements of different algebras");
  std::vector<RatFun> v = c_;
  for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] + o.c_[j];
  return AlgebraElem(rel_, std::move(v));
}

AlgebraElem AlgebraElem::operator-(const AlgebraElem& o) const {
  require(rel_ == o.rel_, errc::field_mismatch, "elements of different algebras");
  std::vector<RatFun> v = c_;
  for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - o.c_[j];
  return AlgebraElem(rel_, std::move(v));
}

AlgebraElem AlgebraElem::operator*(const AlgebraElem& o) const {
  require(rel_ == o.rel_, errc::field_mismatch, "elements of different algebras");
  const FieldPtr& F = rel_.field();
  const int64_t m = rel_.m;
  std::vector<RatFun> prod(2 * m - 1, RatFun::constant(F, F->zero()));
  for (int64_t j = 0; j < m; ++j) {
    if (c_[j].is_zero()) continue;
    for (int64_t k = 0; k < m; ++k) prod[j + k] = prod[j + k] + c_[j] * o.c_[k];
  }
  // y^{m+t} = f y^t
  for (int64_t j = 2 * m - 2; j >= m; --j) {
    if (prod[j].is_zero()) continue;
    prod[j - m] = prod[j - m] + prod[j] * rel_.f;
    prod[j] = RatFun::constant(F, F->zero());
  }
  prod.resize(m);
  return AlgebraElem(rel_, std::move(prod));
}

bool AlgebraElem::operator==(const AlgebraElem& o) const {
  return rel_ == o.rel_ && c_ == o.c_;
}

AlgebraElem AlgebraElem::inverse() const {
  require(!is_zero(), errc::division_by_zero, "inverse of zero in the relation algebra");
  const FieldPtr& F = rel_.field();
  YPoly mod(rel_.m + 1, RatFun::constant(F, F->zero()));
  mod[0] = -rel_.f;
  mod[rel_.m] = RatFun::constant(F, F->one());
  YPoly a = c_;
  ytrim(a);
  auto u = yinv(F, std::move(a), std::move(mod));
  require(u.has_value(), errc::reducible_relation,
          "zero divisor found: the relation y^m = f is reducible");
  u->resize(rel_.m, RatFun::constant(F, F->zero()));
  return AlgebraElem(rel_, std::move(*u));
}

AlgebraElem AlgebraElem::pow(int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  AlgebraElem r = from_ratfun(rel_, RatFun::constant(rel_.field(), rel_.field()->one()));
  AlgebraElem b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

AlgebraElem AlgebraElem::eval_ratfun_at(const RatFun& g, const AlgebraElem& at) {
  const AlgebraicRelation& rel = at.rel();
  AlgebraElem num = from_ratfun(rel, RatFun::constant(rel.field(), rel.field()->zero()));
  AlgebraElem den = num;
  AlgebraElem p = from_ratfun(rel, RatFun::constant(rel.field(), rel.field()->one()));
  int k = std::max(g.num().deg(), g.den().deg());
  for (int j = 0; j <= k; ++j) {
    if (j <= g.num().deg() && !g.num().coeff(j).is_zero())
      num = num + p * from_ratfun(rel, RatFun::constant(rel.field(), g.num().coeff(j)));
    if (j <= g.den().deg() && !g.den().coeff(j).is_zero())
      den = den + p * from_ratfun(rel, RatFun::constant(rel.field(), g.den().coeff(j)));
    if (j < k) p = p * at;
  }
  require(!den.is_zero(), errc::degenerate_map, "substitution hits a pole identically");
  return num * den.inverse();
}

std::optional<Elem> AlgebraElem::eval_at_point(const Elem& x0, const Elem& y0) const {
  const Field* E = x0.field();
  Elem acc = E->zero(), ypow = E->one();
  for (const RatFun& c : c_) {
    if (!c.is_zero()) {
      Elem dv = c.den().lift_to(E->self()).eval(x0);
      if (dv.is_zero()) return std::nullopt;
      acc = acc + c.num().lift_to(E->self()).eval(x0) / dv * ypow;
    }
    ypow = ypow * y0;
  }
  return acc;
}

// --- identity verification ------------------------------------------------------

IdentityCertificate verify_birational_identity(const AlgebraicRelation& src,
                                               const BirationalMap& M,
                                               const AlgebraicRelation& dst,
                                               int min_samples) {
  check_rel(src);
  check_rel(dst);
  IdentityCertificate cert;

  // Symbolic part: Y^{m'} - g(X) must reduce to zero in the source algebra.
  AlgebraElem lhs = M.y_expr.pow(dst.m) - AlgebraElem::eval_ratfun_at(dst.f, M.x_expr);
  cert.holds = lhs.is_zero();
  if (!cert.holds) return cert;

  // Sampled invertibility: collect affine source points over a small
  // extension, map them, and require distinct images on the target curve.
  const FieldPtr& K = src.field();
  for (int L = 1; L <= 6; ++L) {
    FieldPtr E = ext_of_degree(K, L);
    if (E->order() > (int64_t{1} << 21)) break;
    RatFun fsrc = src.f.lift_to(E);
    RatFun fdst = dst.f.lift_to(E);
    std::set<std::pair<int64_t, int64_t>> images;
    int good = 0;
    bool clash = false;
    for (int64_t k = 0; k < E->order() && good < min_samples; ++k) {
      Elem x0 = E->elem_of_index(k);
      if (fsrc.den().eval(x0).is_zero()) continue;
      Elem c = fsrc.num().eval(x0) / fsrc.den().eval(x0);
      for (const Elem& y0 : nth_roots(E, c, src.m)) {
        auto xv = M.x_expr.eval_at_point(x0, y0);
        auto yv = M.y_expr.eval_at_point(x0, y0);
        if (!xv || !yv) continue;
        if (fdst.den().eval(*xv).is_zero()) continue;
        Elem want = fdst.num().eval(*xv) / fdst.den().eval(*xv);
        if (E->pow(*yv, dst.m) != want) {
          cert.holds = false;
          return cert;
        }
        if (!images.emplace(E->index_of(*xv), E->index_of(*yv)).second) clash = true;
        ++good;
        if (good >= min_samples) break;
      }
    }
    if (good >= min_samples) {
      cert.sample_count = good;
      cert.injective_on_samples = !clash;
      cert.extension_degree = L;
      return cert;
    }
  }
  fail(errc::raise_extension, "not enough sample points for the invertibility certificate");
}

IdentityCertificate verify_overlap_map(const FieldPtr& F, int64_t n) {
  require(n >= 1, errc::invalid_parameter, "n must be positive");
  RatFun one = RatFun::constant(F, F->one());
  RatFun xn = RatFun::x(F).pow(n);
  AlgebraicRelation src{2, (one - xn) / (xn + one)};
  AlgebraicRelation dst{2, one - RatFun::x(F).pow(2 * n)};

  AlgebraElem y = AlgebraElem::y_of(src);
  AlgebraElem two = AlgebraElem::from_ratfun(src, RatFun::constant(F, F->from_int(2)));
  AlgebraElem onea = AlgebraElem::from_ratfun(src, one);
  BirationalMap M{AlgebraElem::x_of(src), two * y * (y * y + onea).inverse()};

  int64_t g = genus_closed_form_values(Family::I, 2 * n, 2);  // n - 1
  IdentityCertificate cert =
      verify_birational_identity(src, M, dst, static_cast<int>(3 * g + 3));
  // both sides must have the hyperelliptic genus n - 1
  if (rh_genus_for_kummer(src.f, 2) != g || rh_genus_for_kummer(dst.f, 2) != g) cert.holds = false;
  return cert;
}

ArtinSchreierSubstitution verify_mainpgroup_substitution(int64_t p, int r) {
  require(r >= 1, errc::invalid_parameter, "r must be positive");
  FieldPtr K = make_field(p, 2 * r);
  int64_t pr = 1;
  for (int j = 0; j < r; ++j) pr *= p;

  ArtinSchreierSubstitution out;
  Elem g = least_primitive_root(K);
  out.eps = K->pow(g, (K->order() - 1) / (2 * (pr + 1)));
  // kappa: least root of T^{p^r} + T - 1, which lies in F_{p^{2r}} since the
  // map T -> T^{p^r} + T is the trace onto F_{p^r}
  std::vector<Elem> kc(pr + 1, K->zero());
  kc[0] = -K->one();
  kc[1] = K->one();
  kc[pr] = kc[pr] + K->one();
  auto roots = poly_roots(Poly(K, std::move(kc)));
  require(!roots.empty(), errc::oracle_failure, "no Artin-Schreier root in F_{p^{2r}}");
  out.kappa = roots.front();

  Elem eps_norm = K->pow(out.eps, pr + 1);
  bool c1 = eps_norm == -K->one();
  bool c2 = K->pow(out.kappa, pr) + out.kappa == K->one();
  bool c3 = K->pow(out.kappa, pr + 1) == K->pow(out.kappa - K->one(), pr + 1);
  out.scalar_certs_hold = c1 && c2 && c3;

  // src: w^2 = z^{p^r} + z. dst: v^2 = u^{p^r + 1} + 1.
  std::vector<Elem> fz(pr + 1, K->zero());
  fz[1] = K->one();
  fz[pr] = fz[pr] + K->one();
  AlgebraicRelation src{2, RatFun::from_poly(Poly(K, std::move(fz)))};
  std::vector<Elem> fu(pr + 2, K->zero());
  fu[0] = K->one();
  fu[pr + 1] = K->one();
  AlgebraicRelation dst{2, RatFun::from_poly(Poly(K, std::move(fu)))};

  // u = eps/(z - kappa) + eps, v = w * (eps/(z - kappa))^{(p^r+1)/2}
  RatFun core(Poly::constant(K, out.eps), Poly::linear_root(K, out.kappa));
  RatFun u = core + RatFun::constant(K, out.eps);
  AlgebraElem w = AlgebraElem::y_of(src);
  BirationalMap M{AlgebraElem::from_ratfun(src, u),
                  w * AlgebraElem::from_ratfun(src, core.pow((pr + 1) / 2))};
  int64_t genus = rh_genus_for_kummer(dst.f, 2);
  out.certificate = verify_birational_identity(src, M, dst, static_cast<int>(3 * genus + 3));
  out.certificate.holds = out.certificate.holds && out.scalar_certs_hold;
  return out;
}

// --- quadrex base change ---------------------------------------------------------

QuadrexResult quadrex_normalize(const CurveSpec& C) {
  require(C.family == Family::IIb2 || C.family == Family::IIb3, errc::unsupported_normal_form,
          "only families IIb2 and IIb3 admit the quadratic-extension normalization");
  const Tower& T = *C.tower;
  const FieldPtr& E = T.top;
  Elem i = T.i();
  Elem a = E->lift(C.params[0]), b = E->lift(C.params[1]);
  Elem c = E->lift(C.params[2]), d = E->lift(C.params[3]);

  // In the variable u = ((x-i)/(x+i))^n the quotient function becomes
  // z_n = i(1-u)/(1+u); compose the family's coefficient map on top of it.
  Moebius z_of_u = Moebius::make(-i, i, E->one(), E->one());
  Moebius total = C.family == Family::IIb2
                      ? Moebius::make(d, -b, -c, a).compose(z_of_u)
                      : Moebius::make(-E->one(), i, E->one(), i)
                            .compose(Moebius::make(a, b, c, d))
                            .compose(z_of_u);
  // y^m = (A u + B)/(Cu + D) -> normalized IIb1 parameters over F_{q^2}
  require(!total.b.is_zero(), errc::oracle_failure, "degenerate normalized constant term");
  Elem a1 = total.c / total.b, b1 = -(total.a / total.b), c1 = total.d / total.b;

  QuadrexResult out;
  out.normalized = make_curve(Family::IIb1, E, C.n, C.m, std::vector<Elem>{a1, b1, c1});

  KummerModel src_km = kummer_model(C);
  AlgebraicRelation src{src_km.exponent, src_km.f.lift_to(E)};
  KummerModel dst_km = kummer_model(out.normalized);
  AlgebraicRelation dst{dst_km.exponent, dst_km.f};

  RatFun xt(Poly(E, {-i, E->one()}), Poly(E, {i, E->one()}));  // (x - i)/(x + i)
  out.map.x_expr = AlgebraElem::from_ratfun(src, xt);
  out.map.y_expr = AlgebraElem::y_of(src);

  out.genus_before = rh_genus_for_kummer(src.f, src.m);
  out.genus_after = rh_genus_for_kummer(dst.f, dst.m);
  int64_t g = genus_closed_form(C);
  out.certificate = verify_birational_identity(src, out.map, dst, static_cast<int>(3 * g + 3));
  out.certificate.holds =
      out.certificate.holds && out.genus_before == out.genus_after && out.genus_before == g;
  return out;
}

}  // namespace gfc
