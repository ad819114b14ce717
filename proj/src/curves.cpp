#include "gfc/curves.hpp"

#include <algorithm>
#include <numeric>

namespace gfc {

const char* family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::IIb1: return "IIb1";
    case Family::IIb2: return "IIb2";
    case Family::IIb3: return "IIb3";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
  if (s == "I") return Family::I;
  if (s == "IIb1") return Family::IIb1;
  if (s == "IIb2") return Family::IIb2;
  if (s == "IIb3") return Family::IIb3;
  return std::nullopt;
}

namespace {

size_t family_arity(Family fam) {
  switch (fam) {
    case Family::I: return 2;
    case Family::IIb1: return 3;
    default: return 4;
  }
}

// Kummer function of the family equation, no validity checks.
RatFun kummer_f_raw(Family fam, const FieldPtr& F, const std::optional<Tower>& tower, int64_t n,
                    int64_t m, const std::vector<Elem>& P) {
  RatFun xn = RatFun::x(F).pow(n);
  RatFun one = RatFun::constant(F, F->one());
  switch (fam) {
    case Family::I:
      // a x^n + b y^m = 1
      return (one - RatFun::constant(F, P[0]) * xn) / RatFun::constant(F, P[1]);
    case Family::IIb1:
      // a x^n y^m + b x^n + c y^m = 1
      return (one - RatFun::constant(F, P[1]) * xn) /
             (RatFun::constant(F, P[0]) * xn + RatFun::constant(F, P[2]));
    case Family::IIb2: {
      // (a y^m + b)/(c y^m + d) = z_n(x)  =>  y^m = (d z - b)/(a - c z)
      RatFun z = nonsplit_quotient(*tower, n).invariant;
      return (RatFun::constant(F, P[3]) * z - RatFun::constant(F, P[1])) /
             (RatFun::constant(F, P[0]) - RatFun::constant(F, P[2]) * z);
    }
    case Family::IIb3: {
      // z_m(y) = M(z_n(x)); with w = (y-i)/(y+i) this reads w^m = (i-R)/(i+R)
      // where R = M o z_n, over F_{q^2}.
      const FieldPtr& E = tower->top;
      RatFun z = nonsplit_quotient(*tower, n).invariant;
      Moebius M = Moebius::make(P[0], P[1], P[2], P[3]);
      RatFun R = M.as_ratfun().subst(z).lift_to(E);
      RatFun i = RatFun::constant(E, tower->i());
      return (i - R) / (i + R);
    }
  }
  fail(errc::invalid_parameter, "unknown family");
}

bool needs_tower(Family fam) { return fam == Family::IIb2 || fam == Family::IIb3; }

}  // namespace

CurveSpec make_curve(Family fam, const FieldPtr& Fq, int64_t n, int64_t m,
                     const std::vector<int64_t>& params) {
  std::vector<Elem> P;
  P.reserve(params.size());
  for (int64_t v : params) {
    require(v >= 0 && v < Fq->order(), errc::invalid_parameter, "parameter index out of range");
    P.push_back(Fq->elem_of_index(v));
  }
  return make_curve(fam, Fq, n, m, std::move(P));
}

CurveSpec make_curve(Family fam, const FieldPtr& Fq, int64_t n, int64_t m, std::vector<Elem> P) {
  int64_t q = Fq->order();
  int64_t p = Fq->characteristic();
  require(P.size() == family_arity(fam), errc::invalid_parameter, "parameter tuple arity mismatch");
  for (const Elem& e : P)
    require(e.field() == Fq.get(), errc::field_mismatch, "curve parameters must lie in F_q");
  require(n >= 1 && m >= 1, errc::invalid_parameter, "orders must be positive");
  require(std::max(n, m) > 2, errc::invalid_parameter, "the action requires max(n, m) > 2");
  require(n % p != 0 && m % p != 0, errc::tameness_violation, "p divides nm");

  bool n_minus = (q - 1) % n == 0, n_plus = (q + 1) % n == 0;
  bool m_minus = (q - 1) % m == 0, m_plus = (q + 1) % m == 0;
  switch (fam) {
    case Family::I:
    case Family::IIb1:
      require(n_minus && m_minus, errc::wrong_family, "family needs n | q-1 and m | q-1");
      break;
    case Family::IIb2:
      require(m_minus && n_plus, errc::wrong_family, "family needs m | q-1 and n | q+1");
      break;
    case Family::IIb3:
      require(n_plus && m_plus, errc::wrong_family, "family needs n | q+1 and m | q+1");
      break;
  }

  CurveSpec C;
  C.family = fam;
  C.base = Fq;
  C.n = n;
  C.m = m;
  C.params = std::move(P);
  if (needs_tower(fam)) C.tower = Tower::make(Fq);

  const auto& Pr = C.params;
  switch (fam) {
    case Family::I:
      require(!Pr[0].is_zero() && !Pr[1].is_zero(), errc::reducible_or_singular,
              "family I needs a, b nonzero");
      break;
    case Family::IIb1: {
      require(!Pr[0].is_zero() && !Pr[1].is_zero() && !Pr[2].is_zero(), errc::reducible_or_singular,
              "family IIb1 needs a, b, c nonzero");
      require(Pr[0] != -(Pr[1] * Pr[2]), errc::reducible_or_singular,
              "a = -bc makes the model singular (constant Kummer function)");
      break;
    }
    case Family::IIb2:
      require(!(Pr[0] * Pr[3] - Pr[1] * Pr[2]).is_zero(), errc::reducible_or_singular,
              "degenerate coefficient matrix");
      break;
    case Family::IIb3: {
      require(!(Pr[0] * Pr[3] - Pr[1] * Pr[2]).is_zero(), errc::reducible_or_singular,
              "degenerate coefficient matrix");
      // M must not preserve {i, -i}: those parameters collapse the two
      // quotient directions onto the same branch pair and the model drops to
      // genus 0 or splits.
      const Elem& s = C.tower->s;
      bool fixes = (Pr[0] == Pr[3]) && (Pr[1] == Pr[2] * s);
      bool swaps = (Pr[0] == -Pr[3]) && (Pr[1] == -(Pr[2] * s));
      require(!fixes && !swaps, errc::reducible_or_singular,
              "coefficient map preserves the branch pair {i, -i}");
      break;
    }
  }

  KummerModel km = kummer_model(C);
  require(!km.f.is_constant(), errc::reducible_or_singular, "constant Kummer function");
  for (int64_t d : prime_factors(m))
    require(!is_const_times_dth_power(km.f, static_cast<int>(d)), errc::reducible_or_singular,
            "Kummer function is a constant times a " + std::to_string(d) + "-th power");
  return C;
}

KummerModel kummer_model(const CurveSpec& C) {
  KummerModel km;
  km.exponent = C.m;
  km.f = kummer_f_raw(C.family, C.base, C.tower, C.n, C.m, C.params);
  km.working = C.family == Family::IIb3 ? C.tower->top : C.base;
  km.substitution = C.family == Family::IIb3 ? "w=(y-i)/(y+i)" : "y";
  return km;
}

RatFun kummer_f_unchecked(Family fam, const FieldPtr& Fq, int64_t n, int64_t m,
                          const std::vector<int64_t>& params) {
  std::vector<Elem> P;
  for (int64_t v : params) P.push_back(Fq->elem_of_index(((v % Fq->order()) + Fq->order()) % Fq->order()));
  std::optional<Tower> tower;
  if (needs_tower(fam)) tower = Tower::make(Fq);
  return kummer_f_raw(fam, Fq, tower, n, m, P);
}

int64_t genus_closed_form_values(Family fam, int64_t n, int64_t m) {
  if (fam == Family::I) return (m * n - m - n - std::gcd(m, n) + 2) / 2;
  return m * n - m - n + 1;
}

int64_t genus_closed_form(const CurveSpec& C) {
  return genus_closed_form_values(C.family, C.n, C.m);
}

namespace {

// sum over places P of E(x) of (m - gcd(m, v_P(f))) deg(P); num and den are
// coprime so their factors never collide, and only degree/multiplicity data
// is needed (no equal-degree splitting).
int64_t rh_ramification_sum(const RatFun& f, int64_t m) {
  int64_t sum = 0;
  for (const Poly* part : {&f.num(), &f.den()}) {
    if (part->deg() < 1) continue;
    for (const auto& e : factor_degree_profile(*part))
      sum += (m - std::gcd<int64_t>(m, e.multiplicity)) * e.degree * e.count;
  }
  int64_t vinf = f.den().deg() - f.num().deg();
  if (vinf != 0) sum += m - std::gcd(m, vinf < 0 ? -vinf : vinf);
  return sum;
}

}  // namespace

namespace {

using Profile = std::vector<DegreeProfileEntry>;

Profile whole_profile(const RatFun& f) {
  Profile out;
  for (const Poly* part : {&f.num(), &f.den()})
    if (part->deg() >= 1)
      for (const auto& e : factor_degree_profile(*part)) out.push_back(e);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.degree, a.multiplicity, a.count) < std::tie(b.degree, b.multiplicity, b.count);
  });
  return out;
}

// A degree-D irreducible splits over the degree-L constant extension into
// gcd(D, L) factors of degree D / gcd(D, L), same multiplicity.
Profile predict_extension_profile(const Profile& base, int64_t L) {
  std::map<std::pair<int, int>, int> buckets;
  for (const auto& e : base) {
    int64_t g = std::gcd<int64_t>(e.degree, L);
    buckets[{static_cast<int>(e.degree / g), e.multiplicity}] += static_cast<int>(g) * e.count;
  }
  Profile out;
  for (const auto& [k, cnt] : buckets) out.push_back({k.first, k.second, cnt});
  return out;
}

bool profiles_equal(const Profile& a, const Profile& b) {
  std::map<std::pair<int, int>, int> ma, mb;
  for (const auto& e : a) ma[{e.degree, e.multiplicity}] += e.count;
  for (const auto& e : b) mb[{e.degree, e.multiplicity}] += e.count;
  return ma == mb;
}

}  // namespace

int64_t rh_genus_for_kummer(const RatFun& f, int64_t m) {
  require(m >= 2, errc::invalid_parameter, "cyclic cover degree must be at least 2");
  require(!f.is_zero(), errc::oracle_failure, "zero Kummer function");
  const FieldPtr& K0 = f.field();
  require(K0->order() % m != 0, errc::tameness_violation, "p divides the cover degree");

  // Extend constants so the m-th roots of unity exist.
  int64_t ord = 1, acc = K0->order() % m;
  while (acc != 1 % m) {
    acc = (acc * (K0->order() % m)) % m;
    ++ord;
    require(ord <= m, errc::oracle_failure, "no multiplicative order (gcd(q, m) != 1?)");
  }
  int64_t L = std::lcm<int64_t>(2, ord);
  RatFun fL = f.lift_to(ext_of_degree(K0, static_cast<int>(L)));

  // Cross-check the two independent factorizations (over the base and over
  // the extension) through the constant-extension splitting law; the
  // ramification sum is invariant under any further extension once they
  // agree, since every entry transforms by that law.
  Profile base_profile = whole_profile(f);
  Profile ext_profile = whole_profile(fL);
  require(profiles_equal(predict_extension_profile(base_profile, L), ext_profile),
          errc::oracle_failure, "factor profiles disagree with the constant-extension law");

  int64_t two_g_minus_2 = -2 * m + rh_ramification_sum(fL, m);
  require((two_g_minus_2 % 2 + 2) % 2 == 0, errc::oracle_failure, "2g - 2 came out odd");
  int64_t g = (two_g_minus_2 + 2) / 2;
  require(g >= 0, errc::oracle_failure, "negative genus (reducible or degenerate input)");
  return g;
}

int64_t genus_riemann_hurwitz(const CurveSpec& C) {
  KummerModel km = kummer_model(C);
  return rh_genus_for_kummer(km.f, km.exponent);
}

// --- rational places -----------------------------------------------------------

namespace {

struct LocalData {
  int v = 0;
  Elem unit;  // value of f * t^{-v} at the place
};

LocalData local_at(const RatFun& f, const Elem& x0) {
  const FieldPtr& E = f.field()->self();
  Poly lin = Poly::linear_root(E, x0);
  auto strip = [&](Poly g) {
    int mult = 0;
    for (;;) {
      auto [qt, r] = g.divmod(lin);
      if (!r.is_zero()) break;
      ++mult;
      g = qt;
    }
    return std::pair<int, Elem>{mult, g.eval(x0)};
  };
  auto [vn, un] = strip(f.num());
  auto [vd, ud] = strip(f.den());
  return {vn - vd, un / ud};
}

LocalData local_at_infinity(const RatFun& f) {
  return {f.den().deg() - f.num().deg(), f.num().lc() / f.den().lc()};
}

}  // namespace

std::vector<SmoothPlace> rational_places(const CurveSpec& C, int L) {
  require(L >= 1 && L <= 12, errc::desk_scale_exceeded, "extension degree guard is L <= 12");
  KummerModel km = kummer_model(C);
  FieldPtr E;
  if (C.family == Family::IIb3) {
    require(L % 2 == 0, errc::raise_extension,
            "the IIb3 model lives over F_{q^2}; use an even extension degree");
    E = ext_of_degree(km.working, L / 2);
  } else {
    E = ext_of_degree(km.working, L);
  }
  require(E->order() <= 13 * 13 * 13 * 13, errc::desk_scale_exceeded,
          "full place enumeration guarded at q^L <= 13^4");

  RatFun f = km.f.lift_to(E);
  int64_t m = km.exponent;
  std::vector<SmoothPlace> out;
  auto emit = [&](const ProjPoint& x, const LocalData& ld) {
    int64_t r = std::gcd<int64_t>(m, ld.v < 0 ? -ld.v : ld.v);
    for (const Elem& w : nth_roots(E, ld.unit, r)) out.push_back({x, ld.v, w});
  };
  for (int64_t k = 0; k < E->order(); ++k) {
    Elem x0 = E->elem_of_index(k);
    emit(ProjPoint::affine(x0), local_at(f, x0));
  }
  emit(ProjPoint::infinity(E), local_at_infinity(f));
  return out;
}

int64_t rational_place_count(const CurveSpec& C, int L) {
  return static_cast<int64_t>(rational_places(C, L).size());
}

// --- singular locus -------------------------------------------------------------

std::vector<SingularPoint> singular_locus(const CurveSpec& C) {
  require(C.family == Family::I || C.family == Family::IIb1, errc::unsupported_normal_form,
          "plane-model singular locus is provided for families I and IIb1");
  const FieldPtr& F = C.base;
  std::vector<SingularPoint> out;
  if (C.family == Family::IIb1) {
    // ordinary n-fold at (0:1:0) and m-fold at (1:0:0)
    out.push_back({{F->zero(), F->one(), F->zero()}, static_cast<int>(C.n), true});
    out.push_back({{F->one(), F->zero(), F->zero()}, static_cast<int>(C.m), true});
    return out;
  }
  // family I: smooth for n = m and |n - m| = 1; otherwise one non-ordinary
  // point where the smaller-degree variable meets the line at infinity.
  if (C.n == C.m) return out;
  int64_t hi = std::max(C.n, C.m), lo = std::min(C.n, C.m);
  if (hi - lo < 2) return out;
  if (C.n > C.m)
    out.push_back({{F->zero(), F->one(), F->zero()}, static_cast<int>(hi - lo), false});
  else
    out.push_back({{F->one(), F->zero(), F->zero()}, static_cast<int>(hi - lo), false});
  return out;
}

}  // namespace gfc
