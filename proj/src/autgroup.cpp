#include "gfc/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace gfc {

// --- monomial maps and curve automorphisms -----------------------------------

MonomialMap MonomialMap::compose(const MonomialMap& o) const {
  // this(o(z)) with o = b z^e2, this = a z^e1: a b^e1 z^(e1 e2)
  const Field* F = scale.field();
  Elem b = inverted ? F->inv(o.scale) : o.scale;
  return {scale * b, inverted != o.inverted};
}

MonomialMap MonomialMap::inverse() const {
  if (inverted) return *this;  // z -> a/z is an involution
  return {scale.field()->inv(scale), false};
}

Moebius MonomialMap::as_moebius() const {
  return inverted ? Moebius::inversion_through(scale) : Moebius::scaling(scale);
}

CurveAut CurveAut::identity(const FieldPtr& F) {
  return {false, MonomialMap::identity(F), MonomialMap::identity(F)};
}

CurveAut CurveAut::compose(const CurveAut& o) const {
  CurveAut r;
  r.swap = swap != o.swap;
  if (swap) {
    r.xm = xm.compose(o.ym);
    r.ym = ym.compose(o.xm);
  } else {
    r.xm = xm.compose(o.xm);
    r.ym = ym.compose(o.ym);
  }
  return r;
}

CurveAut CurveAut::inverse() const {
  CurveAut r;
  r.swap = swap;
  if (swap) {
    r.xm = ym.inverse();
    r.ym = xm.inverse();
  } else {
    r.xm = xm.inverse();
    r.ym = ym.inverse();
  }
  return r;
}

bool CurveAut::is_identity() const {
  return !swap && !xm.inverted && !ym.inverted && xm.scale.is_one() && ym.scale.is_one();
}

int CurveAut::order(int bound) const {
  CurveAut g = *this;
  for (int k = 1; k <= bound; ++k) {
    if (g.is_identity()) return k;
    g = g.compose(*this);
  }
  fail(errc::bound_exceeded, "automorphism order exceeds bound");
}

std::array<int64_t, 5> CurveAut::key() const {
  const Field* F = xm.scale.field();
  return {swap ? 1 : 0, xm.inverted ? 1 : 0, F->index_of(xm.scale), ym.inverted ? 1 : 0,
          F->index_of(ym.scale)};
}

std::string CurveAut::str() const {
  auto mono = [](const MonomialMap& m, const char* var) {
    return m.inverted ? m.scale.str() + "/" + var : m.scale.str() + "*" + var;
  };
  std::string lhs = swap ? "(y,x)" : "(x,y)";
  return lhs + " -> (" + mono(xm, swap ? "y" : "x") + ", " + mono(ym, swap ? "x" : "y") + ")";
}

// --- equation preservation -----------------------------------------------------

TermMap family_terms(const CurveSpec& C, const FieldPtr& E) {
  TermMap F;
  auto lift = [&](const Elem& e) { return E->lift(e); };
  if (C.family == Family::I) {
    F[{C.n, 0}] = lift(C.params[0]);
    F[{0, C.m}] = lift(C.params[1]);
    F[{0, 0}] = -E->one();
    return F;
  }
  if (C.family == Family::IIb1) {
    F[{C.n, C.m}] = lift(C.params[0]);
    F[{C.n, 0}] = lift(C.params[1]);
    F[{0, C.m}] = lift(C.params[2]);
    F[{0, 0}] = -E->one();
    return F;
  }
  fail(errc::unsupported_normal_form, "term map exists for families I and IIb1 only");
}

bool preserves_equation(const TermMap& F, const CurveAut& g) {
  if (F.empty()) return false;
  const Field* E = F.begin()->second.field();
  int64_t e1 = g.xm.inverted ? -1 : 1, e2 = g.ym.inverted ? -1 : 1;
  TermMap img;
  int64_t min_x = 0, min_y = 0;
  for (const auto& [ij, c] : F) {
    auto [i, j] = ij;
    Elem coef = c * E->pow(g.xm.scale, i) * E->pow(g.ym.scale, j);
    int64_t ex = g.swap ? e2 * j : e1 * i;
    int64_t ey = g.swap ? e1 * i : e2 * j;
    img[{ex, ey}] = img.count({ex, ey}) ? img[{ex, ey}] + coef : coef;
    min_x = std::min(min_x, ex);
    min_y = std::min(min_y, ey);
  }
  TermMap shifted;
  for (const auto& [ij, c] : img) {
    if (c.is_zero()) continue;
    shifted[{ij.first - min_x, ij.second - min_y}] = c;
  }
  if (shifted.size() != F.size()) return false;
  Elem lambda;
  for (const auto& [ij, c] : F) {
    auto it = shifted.find(ij);
    if (it == shifted.end()) return false;
    Elem ratio = it->second / c;
    if (!lambda.valid())
      lambda = ratio;
    else if (ratio != lambda)
      return false;
  }
  return !lambda.is_zero();
}

// --- generator catalog -----------------------------------------------------------

namespace {

GeneratorCatalog catalog_over(const CurveSpec& C, const FieldPtr& E) {
  const FieldPtr& base = C.base;
  GeneratorCatalog cat;
  cat.working = E;
  TermMap F = family_terms(C, E);

  auto certify = [&](const CurveAut& g, const char* name) {
    require(preserves_equation(F, g), errc::oracle_failure,
            std::string("catalog element does not preserve the equation: ") + name);
  };

  if (C.family == Family::I) {
    Elem z1 = E->lift(root_of_unity(base, C.n));
    Elem z2 = E->lift(root_of_unity(base, C.m));
    cat.sigma1 = {false, {z1, false}, MonomialMap::identity(E)};
    cat.sigma2 = {false, MonomialMap::identity(E), {z2, false}};
    certify(cat.sigma1, "sigma1");
    certify(cat.sigma2, "sigma2");
    cat.gens = {cat.sigma1, cat.sigma2};
    if (C.n == C.m && C.params[0] == C.params[1]) {
      cat.theta = CurveAut{true, MonomialMap::identity(E), MonomialMap::identity(E)};
      certify(*cat.theta, "theta");
      cat.gens.push_back(*cat.theta);
    }
    return cat;
  }

  require(C.family == Family::IIb1 && C.params[1].is_one() && C.params[2].is_one(),
          errc::unsupported_normal_form,
          "the catalog needs the normalized form a x^n y^m + x^n + y^m = 1");
  Elem a = E->lift(C.params[0]);
  Elem target = -E->inv(a);  // c1^n = c2^m = -1/a
  bool a_is_one = C.params[0].is_one();

  Elem c1, c2, z1, z2;
  if (a_is_one) {
    c1 = root_of_unity(E, 2 * C.n);
    c2 = root_of_unity(E, 2 * C.m);
    z1 = c1 * c1;
    z2 = c2 * c2;
  } else {
    auto r1 = nth_roots(E, target, C.n);
    auto r2 = nth_roots(E, target, C.m);
    require(!r1.empty() && !r2.empty(), errc::raise_extension,
            "catalog constants are not rational over this extension");
    c1 = r1.front();
    c2 = r2.front();
    z1 = E->lift(root_of_unity(base, C.n));
    z2 = E->lift(root_of_unity(base, C.m));
  }

  cat.sigma1 = {false, {z1, false}, MonomialMap::identity(E)};
  cat.sigma2 = {false, MonomialMap::identity(E), {z2, false}};
  cat.mu = CurveAut{false, {c1, true}, {c2, true}};
  certify(cat.sigma1, "sigma1");
  certify(cat.sigma2, "sigma2");
  certify(*cat.mu, "mu");
  cat.gens = {cat.sigma1, cat.sigma2, *cat.mu};
  if (a_is_one) {
    cat.tau1 = CurveAut{false, {c1, false}, {z2, true}};
    cat.tau2 = CurveAut{false, {z1, true}, {c2, false}};
    certify(*cat.tau1, "tau1");
    certify(*cat.tau2, "tau2");
    cat.gens.push_back(*cat.tau1);
    cat.gens.push_back(*cat.tau2);
  }
  if (C.n == C.m) {
    cat.theta = CurveAut{true, MonomialMap::identity(E), MonomialMap::identity(E)};
    certify(*cat.theta, "theta");
    cat.gens.push_back(*cat.theta);
  }
  return cat;
}

bool catalog_constants_exist(const CurveSpec& C, const FieldPtr& E) {
  if (C.family == Family::I) return true;
  if (C.params[0].is_one())
    return (E->order() - 1) % (2 * C.n) == 0 && (E->order() - 1) % (2 * C.m) == 0;
  Elem target = -E->inv(E->lift(C.params[0]));
  return count_nth_roots(E, target, C.n) > 0 && count_nth_roots(E, target, C.m) > 0;
}

int catalog_extension_degree(const CurveSpec& C) {
  for (int L = 1; L <= 12; ++L) {
    if (catalog_constants_exist(C, ext_of_degree(C.base, L))) return L;
  }
  fail(errc::raise_extension, "no catalog extension of degree <= 12");
}

}  // namespace

GeneratorCatalog generator_catalog(const CurveSpec& C) {
  require(C.family == Family::I || C.family == Family::IIb1, errc::unsupported_normal_form,
          "families IIb2/IIb3 get their catalog after the quadratic base change");
  int L = catalog_extension_degree(C);
  GeneratorCatalog cat = catalog_over(C, ext_of_degree(C.base, L));
  cat.coefficient_extension_degree = L;
  cat.coeffs_in_quadratic_extension = L <= 2;
  return cat;
}

// --- group tables ------------------------------------------------------------------

int GroupTable::index_of(const CurveAut& g) const {
  auto k = g.key();
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].key() == k) return static_cast<int>(i);
  return -1;
}

GroupTable generated_group(const std::vector<CurveAut>& gens, int bound) {
  require(!gens.empty(), errc::invalid_parameter, "no generators");
  const FieldPtr F = gens.front().xm.scale.field()->self();
  std::map<std::array<int64_t, 5>, CurveAut> seen;
  CurveAut id = CurveAut::identity(F);
  seen.emplace(id.key(), id);
  std::deque<CurveAut> todo{id};
  while (!todo.empty()) {
    CurveAut cur = todo.front();
    todo.pop_front();
    for (const CurveAut& g : gens) {
      CurveAut nxt = g.compose(cur);
      if (seen.emplace(nxt.key(), nxt).second) {
        require(static_cast<int>(seen.size()) <= bound, errc::bound_exceeded,
                "group closure exceeds the requested bound");
        todo.push_back(nxt);
      }
    }
  }
  GroupTable T;
  T.elements.reserve(seen.size());
  T.elements.push_back(id);
  for (auto& [k, g] : seen)
    if (!g.is_identity()) T.elements.push_back(g);
  std::sort(T.elements.begin() + 1, T.elements.end(),
            [](const CurveAut& a, const CurveAut& b) { return a.key() < b.key(); });
  std::map<std::array<int64_t, 5>, int> idx;
  for (size_t i = 0; i < T.elements.size(); ++i) idx[T.elements[i].key()] = static_cast<int>(i);
  int N = T.order();
  T.mul.assign(N, std::vector<int>(N, -1));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      auto it = idx.find(T.elements[i].compose(T.elements[j]).key());
      require(it != idx.end(), errc::oracle_failure, "closure is not closed");
      T.mul[i][j] = it->second;
    }
  return T;
}

// --- structure recognition ----------------------------------------------------------

namespace {

struct AbsTable {
  int n = 1;
  std::vector<std::vector<int>> mul;
  int id = 0;

  int elem_order(int g) const {
    int k = 1, cur = g;
    while (cur != id) {
      cur = mul[cur][g];
      ++k;
      if (k > n + 1) fail(errc::oracle_failure, "order computation ran away");
    }
    return k;
  }
  bool abelian() const {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mul[i][j] != mul[j][i]) return false;
    return true;
  }
};

StructureDescriptor recognize_abs(const AbsTable& T) {
  StructureDescriptor d;
  d.order = T.n;
  d.abelian = T.abelian();
  std::vector<int> ord(T.n);
  for (int i = 0; i < T.n; ++i) {
    ord[i] = T.elem_order(i);
    d.order_histogram[ord[i]] += 1;
  }
  if (T.n == 1) {
    d.kind = StructureDescriptor::Kind::trivial;
    return d;
  }
  int max_ord = *std::max_element(ord.begin(), ord.end());
  if (max_ord == T.n) {
    d.kind = StructureDescriptor::Kind::cyclic;
    d.k = T.n;
    return d;
  }
  if (d.abelian) {
    auto pf = prime_factors(max_ord);
    if (pf.size() == 1 && max_ord == pf[0]) {
      // all nontrivial elements of prime order p and |G| = p^rank
      int64_t p = pf[0], size = T.n, rank = 0;
      while (size % p == 0) {
        size /= p;
        ++rank;
      }
      if (size == 1) {
        d.kind = StructureDescriptor::Kind::elementary_abelian;
        d.p = p;
        d.rank = rank;
        return d;
      }
    }
    d.kind = StructureDescriptor::Kind::abelian;
    d.k = max_ord;  // exponent
    return d;
  }
  // dihedral test: a cyclic half plus an inverting involution
  if (T.n % 2 == 0) {
    int half = T.n / 2;
    for (int r = 0; r < T.n; ++r) {
      if (ord[r] != half) continue;
      // collect <r>
      std::set<int> cyc{T.id};
      int cur = r;
      while (cur != T.id) {
        cyc.insert(cur);
        cur = T.mul[cur][r];
      }
      // r^{-1}
      int rinv = r;
      while (T.mul[rinv][r] != T.id) rinv = T.mul[rinv][r];
      for (int s = 0; s < T.n; ++s) {
        if (cyc.count(s) || ord[s] != 2) continue;
        // s r s = r^{-1} (s is an involution)
        if (T.mul[T.mul[s][r]][s] == rinv) {
          d.kind = StructureDescriptor::Kind::dihedral;
          d.k = half;
          return d;
        }
      }
    }
  }
  d.kind = StructureDescriptor::Kind::other;
  return d;
}

AbsTable abs_of(const GroupTable& T) {
  AbsTable A;
  A.n = T.order();
  A.mul = T.mul;
  A.id = 0;
  return A;
}

}  // namespace

std::string StructureDescriptor::str() const {
  switch (kind) {
    case Kind::trivial: return "C1";
    case Kind::cyclic: return "C" + std::to_string(k);
    case Kind::dihedral: return "D" + std::to_string(k) + "(order " + std::to_string(2 * k) + ")";
    case Kind::elementary_abelian: {
      std::string s = "C" + std::to_string(p);
      for (int64_t j = 1; j < rank; ++j) s += " x C" + std::to_string(p);
      return s;
    }
    case Kind::abelian: return "abelian(order " + std::to_string(order) + ", exponent " + std::to_string(k) + ")";
    case Kind::other: return "unrecognized(order " + std::to_string(order) + ")";
  }
  return "?";
}

StructureDescriptor recognize_group(const GroupTable& T) {
  require(T.order() <= 10000, errc::desk_scale_exceeded, "recognition guarded at order 10^4");
  return recognize_abs(abs_of(T));
}

StructureDescriptor quotient_structure(const GroupTable& T, const std::vector<int>& N) {
  const int n = T.order();
  std::set<int> NS(N.begin(), N.end());
  require(NS.count(0) == 1, errc::invalid_parameter, "subgroup must contain the identity");
  for (int a : NS)
    for (int b : NS)
      require(NS.count(T.mul[a][b]), errc::invalid_parameter, "index set is not a subgroup");
  // normality sweep
  for (int g = 0; g < n; ++g) {
    // find g^{-1}
    int ginv = -1;
    for (int h = 0; h < n; ++h)
      if (T.mul[g][h] == 0) {
        ginv = h;
        break;
      }
    for (int h : NS) {
      int conj = T.mul[T.mul[g][h]][ginv];
      if (!NS.count(conj))
        fail(errc::not_normal, "conjugation witness: g = " + T.elements[g].str() +
                                   ", h = " + T.elements[h].str());
    }
  }
  // cosets
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : NS) coset_of[T.mul[g][h]] = c;
  }
  AbsTable Q;
  Q.n = static_cast<int>(reps.size());
  Q.id = coset_of[0];
  Q.mul.assign(Q.n, std::vector<int>(Q.n, -1));
  for (int i = 0; i < Q.n; ++i)
    for (int j = 0; j < Q.n; ++j) Q.mul[i][j] = coset_of[T.mul[reps[i]][reps[j]]];
  // relabel so the identity coset is index 0
  if (Q.id != 0) {
    std::vector<int> relabel(Q.n);
    for (int i = 0; i < Q.n; ++i) relabel[i] = i == Q.id ? 0 : (i == 0 ? Q.id : i);
    AbsTable R;
    R.n = Q.n;
    R.id = 0;
    R.mul.assign(Q.n, std::vector<int>(Q.n, -1));
    for (int i = 0; i < Q.n; ++i)
      for (int j = 0; j < Q.n; ++j) R.mul[relabel[i]][relabel[j]] = relabel[Q.mul[i][j]];
    Q = R;
  }
  return recognize_abs(Q);
}

const char* frob_case_name(FrobCase c) {
  switch (c) {
    case FrobCase::T3_all_preserved: return "T3-all-preserved";
    case FrobCase::T4_all_preserved: return "T4-all-preserved";
    case FrobCase::T4_two_preserved: return "T4-two-preserved";
    case FrobCase::T4_none_preserved: return "T4-none-preserved";
  }
  return "?";
}

bool kontogeorgis_normal(int64_t r, int64_t s) { return 2 * r < s; }

// --- place actions ------------------------------------------------------------------

namespace {

// Point map acting on places of the model y^m = f over E: a Moebius on the
// x-line, a monomial map on the model variable, optionally preceded by the
// coordinate swap (normalized IIb1 with n = m only).
struct PlaceMap {
  bool swap = false;
  Moebius x_map;
  MonomialMap y_map;
};

ProjPoint yvalue_of(const SmoothPlace& P, const FieldPtr& E) {
  if (P.v == 0) return ProjPoint::affine(P.coord);
  return P.v > 0 ? ProjPoint::affine(E->zero()) : ProjPoint::infinity(E);
}

ProjPoint apply_mono(const MonomialMap& m, const ProjPoint& P) {
  return act(m.as_moebius(), P);
}

// value of f * t^{-v} at x0 (finite or infinity) together with v
struct LocalVU {
  int v;
  Elem u;
};

LocalVU local_vu(const RatFun& f, const ProjPoint& x) {
  const FieldPtr E = f.field();
  if (x.at_infinity()) return {f.den().deg() - f.num().deg(), f.num().lc() / f.den().lc()};
  Elem nv = f.num().eval(x.x0), dv = f.den().eval(x.x0);
  if (!nv.is_zero() && !dv.is_zero()) return {0, nv / dv};
  Poly lin = Poly::linear_root(E, x.x0);
  auto strip = [&](Poly g) {
    int mult = 0;
    for (;;) {
      auto [qt, r] = g.divmod(lin);
      if (!r.is_zero()) break;
      ++mult;
      g = qt;
    }
    return std::pair<int, Elem>{mult, g.eval(x.x0)};
  };
  auto [vn, un] = strip(f.num());
  auto [vd, ud] = strip(f.den());
  return {vn - vd, un / ud};
}

// derivative unit J0 of a Moebius at x0: t' o A = J * t with J(x0) = J0
Elem moebius_jacobian_unit(const Moebius& A, const ProjPoint& x0, const ProjPoint& x1) {
  const FieldPtr E = x0.x0.field()->self();
  Elem a = E->lift(A.a), b = E->lift(A.b), c = E->lift(A.c), d = E->lift(A.d);
  Elem det = a * d - b * c;
  if (!x0.at_infinity() && !x1.at_infinity()) {
    Elem q = c * x0.x0 + d;
    return det / (q * q);
  }
  if (!x0.at_infinity()) return c / (a * x0.x0 + b);  // image at infinity
  if (!x1.at_infinity()) return -det / (c * c);       // from infinity to finite
  return d / a;                                       // c = 0
}

SmoothPlace rebuild_place(const RatFun& f, int64_t m, const ProjPoint& x, int expect_v_sign,
                          const ProjPoint& yval) {
  LocalVU vu = local_vu(f, x);
  SmoothPlace P;
  P.x = x;
  P.v = vu.v;
  if (vu.v == 0) {
    require(expect_v_sign == 0 && !yval.at_infinity() && !yval.x0.is_zero(), errc::oracle_failure,
            "place image inconsistent with the model");
    P.coord = yval.x0;
    return P;
  }
  require((vu.v > 0) == (expect_v_sign > 0), errc::oracle_failure, "branch sign mismatch");
  require(std::gcd<int64_t>(m, vu.v < 0 ? -vu.v : vu.v) == 1, errc::oracle_failure,
          "cannot rebuild a split branch place without its residue");
  P.coord = vu.u;
  return P;
}

SmoothPlace act_on_place(const RatFun& f, int64_t m, const PlaceMap& g, const SmoothPlace& P) {
  const FieldPtr E = f.field();
  if (g.swap) {
    ProjPoint new_x = act(g.x_map, yvalue_of(P, E));
    ProjPoint new_y = apply_mono(g.y_map, P.x.at_infinity() ? ProjPoint::infinity(E) : P.x);
    int sign = new_y.at_infinity() ? -1 : (new_y.x0.is_zero() ? 1 : 0);
    return rebuild_place(f, m, new_x, sign, new_y);
  }
  ProjPoint new_x = act(g.x_map, P.x);
  int eps = g.y_map.inverted ? -1 : 1;
  if (P.v == 0) {
    SmoothPlace Q;
    Q.x = new_x;
    Q.v = 0;
    Elem y = P.coord;
    require(!y.is_zero(), errc::oracle_failure, "unramified place with zero model coordinate");
    Q.coord = g.y_map.inverted ? g.y_map.scale / y : g.y_map.scale * y;
    return Q;
  }
  int64_t av = P.v < 0 ? -P.v : P.v;
  int64_t r = std::gcd<int64_t>(m, av);
  if (r == 1) {
    ProjPoint new_y = apply_mono(g.y_map, yvalue_of(P, E));
    int sign = new_y.at_infinity() ? -1 : 1;
    return rebuild_place(f, m, new_x, sign, new_y);
  }
  // split branch place: transform the residue of w = y^{m/r} / t^{v/r}
  int64_t m1 = m / r, v1 = P.v / r;
  Elem J = moebius_jacobian_unit(g.x_map, P.x, new_x);
  Elem beta = E->lift(g.y_map.scale);
  Elem w = eps == 1 ? P.coord : E->inv(P.coord);
  SmoothPlace Q;
  Q.x = new_x;
  Q.v = eps * P.v;
  Q.coord = E->pow(beta, m1) * E->pow(J, -eps * v1) * w;
  return Q;
}

PlaceMap place_map_of_aut(const CurveAut& g, const FieldPtr& E) {
  PlaceMap pm;
  pm.swap = g.swap;
  pm.x_map = g.xm.as_moebius().lift_to(E);
  pm.y_map = {E->lift(g.ym.scale), g.ym.inverted};
  return pm;
}

struct PlaceKey {
  bool x_inf;
  int64_t x_idx;
  int v;
  int64_t c_idx;
  bool operator<(const PlaceKey& o) const {
    return std::tie(x_inf, x_idx, v, c_idx) < std::tie(o.x_inf, o.x_idx, o.v, o.c_idx);
  }
};

PlaceKey key_of(const SmoothPlace& P, const FieldPtr& E) {
  return {P.x.at_infinity(), P.x.at_infinity() ? 0 : E->index_of(P.x.x0), P.v, E->index_of(P.coord)};
}

struct ModelContext {
  CurveSpec C;
  KummerModel km;
  FieldPtr E;       // census field
  int L = 1;        // degree over F_q
  RatFun f;         // model over E
  bool w_model = false;
  PlaceMap s1, s2;  // the C_n and C_m generators as place maps
  int64_t q0 = 0;   // |F_q| for the Frobenius
  mutable std::map<int64_t, std::vector<std::vector<int64_t>>> fiber_cache;
  bool enumerable() const { return E->order() <= 13 * 13 * 13 * 13; }

  // Fiber tables pay off only when the census sweeps the whole field;
  // isolated lookups go through factorization.
  std::vector<Elem> roots_of_power(const Elem& u, int64_t r) const {
    if (enumerable()) {
      auto it = fiber_cache.find(r);
      if (it == fiber_cache.end()) it = fiber_cache.emplace(r, power_fibers(E, r)).first;
      std::vector<Elem> out;
      for (int64_t k : it->second[E->index_of(u)]) out.push_back(E->elem_of_index(k));
      return out;
    }
    return nth_roots(E, u, r);
  }
};

SmoothPlace frobenius_place(const ModelContext& M, const SmoothPlace& P) {
  const FieldPtr& E = M.E;
  auto powq = [&](const Elem& e) { return E->pow(e, M.q0); };
  ProjPoint x1 = P.x.at_infinity() ? ProjPoint::infinity(E) : ProjPoint::affine(powq(P.x.x0));
  if (!M.w_model) {
    SmoothPlace Q;
    Q.x = x1;
    Q.v = P.v;
    Q.coord = powq(P.coord);
    return Q;
  }
  // The w-model conjugates to its reciprocal: w goes to 1/w^q and branch
  // valuations flip sign.
  if (P.v == 0) {
    SmoothPlace Q;
    Q.x = x1;
    Q.v = 0;
    Q.coord = E->inv(powq(P.coord));
    return Q;
  }
  return rebuild_place(M.f, M.km.exponent, x1, -P.v,
                       P.v > 0 ? ProjPoint::infinity(E) : ProjPoint::affine(E->zero()));
}

// Materialize the degree-1 places over the given x-point; returns the number
// of places the point carries over the algebraic closure for comparison.
int64_t places_over(const ModelContext& M, const ProjPoint& x, std::vector<SmoothPlace>& out) {
  LocalVU vu = local_vu(M.f, x);
  int64_t r = std::gcd<int64_t>(M.km.exponent, vu.v < 0 ? -vu.v : vu.v);
  for (const Elem& w : M.roots_of_power(vu.u, r)) out.push_back({x, vu.v, w});
  return r;
}

// The x-locus of the short orbits: fixed points of the C_n generator on the
// x-line plus the branch x-values of f (zeros/poles of y). Returns nullopt
// when any of those places fails to be rational over E.
std::optional<std::vector<SmoothPlace>> short_locus(const ModelContext& M) {
  std::vector<SmoothPlace> out;
  std::set<std::pair<bool, int64_t>> xs_seen;
  auto add_x = [&](const ProjPoint& x) -> bool {
    if (!xs_seen.emplace(x.at_infinity(), x.at_infinity() ? 0 : M.E->index_of(x.x0)).second)
      return true;
    size_t before = out.size();
    int64_t expect = places_over(M, x, out);
    return static_cast<int64_t>(out.size() - before) == expect;
  };

  bool split_x = M.C.family == Family::I || M.C.family == Family::IIb1;
  if (split_x) {
    if (!add_x(ProjPoint::affine(M.E->zero()))) return std::nullopt;
    if (!add_x(ProjPoint::infinity(M.E))) return std::nullopt;
  } else {
    // fixed points of the nonsplit torus: the two roots of x^2 = s
    Elem s_lift = M.E->lift(M.C.tower->s);
    auto roots = nth_roots(M.E, s_lift, 2);
    if (roots.size() != 2) return std::nullopt;
    for (const Elem& r : roots)
      if (!add_x(ProjPoint::affine(r))) return std::nullopt;
  }
  // branch x-values: every root of num and den must be rational over E
  for (const Poly* part : {&M.f.num(), &M.f.den()}) {
    if (part->deg() < 1) continue;
    for (const auto& [g, mult] : factorize(*part).factors) {
      if (g.deg() != 1) return std::nullopt;
      if (!add_x(ProjPoint::affine(-g.coeff(0)))) return std::nullopt;
    }
  }
  if (M.f.den().deg() != M.f.num().deg()) {
    if (!add_x(ProjPoint::infinity(M.E))) return std::nullopt;
  }
  return out;
}

std::optional<ModelContext> make_context(const CurveSpec& C, int L) {
  ModelContext M;
  M.C = C;
  M.km = kummer_model(C);
  M.q0 = C.base->order();
  M.w_model = C.family == Family::IIb3;
  M.L = L;
  if (C.family == Family::IIb3) {
    if (L % 2 != 0) return std::nullopt;
    M.E = ext_of_degree(M.km.working, L / 2);
  } else if (C.family == Family::IIb2) {
    if (L % 2 != 0) return std::nullopt;  // the x-side fixed points are quadratic
    M.E = ext_of_degree(M.km.working, L);
  } else {
    M.E = ext_of_degree(M.km.working, L);
  }
  M.f = M.km.f.lift_to(M.E);

  const FieldPtr& E = M.E;
  switch (C.family) {
    case Family::I:
    case Family::IIb1: {
      Elem z1 = E->lift(root_of_unity(C.base, C.n));
      Elem z2 = E->lift(root_of_unity(C.base, C.m));
      M.s1 = {false, Moebius::scaling(z1), MonomialMap::identity(E)};
      M.s2 = {false, Moebius::identity(E).lift_to(E), {z2, false}};
      break;
    }
    case Family::IIb2: {
      Moebius tau = nonsplit_cyclic_generator(*C.tower, C.n);
      Elem z2 = E->lift(root_of_unity(C.base, C.m));
      M.s1 = {false, tau.lift_to(E), MonomialMap::identity(E)};
      M.s2 = {false, Moebius::identity(E), {z2, false}};
      break;
    }
    case Family::IIb3: {
      Moebius tau = nonsplit_cyclic_generator(*C.tower, C.n);
      auto det = nonsplit_cyclic_generator_detail(*C.tower, C.m);
      Elem delta = C.tower->conj(det.lambda) / det.lambda;  // w -> delta w
      require(C.tower->top->mult_order(delta) == C.m, errc::oracle_failure,
              "torus character has the wrong order");
      M.s1 = {false, tau.lift_to(E), MonomialMap::identity(E)};
      M.s2 = {false, Moebius::identity(E), {E->lift(delta), false}};
      break;
    }
  }
  return M;
}

}  // namespace

OrbitReport g_orbits(const CurveSpec& C, int L_arg) {
  std::optional<ModelContext> M;
  std::optional<std::vector<SmoothPlace>> locus;
  int L = 0;
  for (int cand = L_arg > 0 ? L_arg : 1; cand <= (L_arg > 0 ? L_arg : 12); ++cand) {
    M = make_context(C, cand);
    if (!M) continue;
    locus = short_locus(*M);
    if (locus) {
      L = cand;
      break;
    }
  }
  require(locus.has_value(), errc::raise_extension,
          "no extension of degree <= 12 makes all short-orbit places rational");

  const FieldPtr& E = M->E;
  const int64_t mn = C.n * C.m;
  OrbitReport rep;
  rep.L = L;

  std::map<PlaceKey, int> orbit_of;
  std::vector<OrbitData> orbits;
  auto run_orbit = [&](const SmoothPlace& start) {
    if (orbit_of.count(key_of(start, E))) return;
    int id = static_cast<int>(orbits.size());
    std::deque<SmoothPlace> todo{start};
    orbit_of[key_of(start, E)] = id;
    int64_t size = 0;
    while (!todo.empty()) {
      SmoothPlace cur = todo.front();
      todo.pop_front();
      ++size;
      for (const PlaceMap* g : {&M->s1, &M->s2}) {
        SmoothPlace img = act_on_place(M->f, M->km.exponent, *g, cur);
        if (orbit_of.emplace(key_of(img, E), id).second) todo.push_back(img);
      }
    }
    OrbitData od;
    od.size = size;
    od.representative = start;
    od.stabilizer_order = mn / size;
    require(mn % size == 0, errc::oracle_failure, "orbit size does not divide |G|");
    od.is_short = size < mn;
    orbits.push_back(od);
  };

  for (const SmoothPlace& P : *locus) run_orbit(P);
  for (const OrbitData& od : orbits)
    require(od.is_short, errc::oracle_failure, "long orbit met the short locus");
  size_t n_short = orbits.size();

  // full census when the field is enumerable
  if (M->enumerable()) {
    rep.full_census = true;
    int64_t total = 0;
    std::vector<SmoothPlace> all;
    for (int64_t k = 0; k < E->order(); ++k) {
      all.clear();
      places_over(*M, ProjPoint::affine(E->elem_of_index(k)), all);
      for (const SmoothPlace& P : all) run_orbit(P);
      total += static_cast<int64_t>(all.size());
    }
    all.clear();
    places_over(*M, ProjPoint::infinity(E), all);
    for (const SmoothPlace& P : all) run_orbit(P);
    total += static_cast<int64_t>(all.size());
    rep.total_places = total;
    int64_t in_orbits = 0;
    for (size_t j = 0; j < orbits.size(); ++j) {
      in_orbits += orbits[j].size;
      if (j >= n_short)
        require(!orbits[j].is_short, errc::oracle_failure,
                "short orbit found outside the branch locus");
    }
    require(in_orbits == total, errc::oracle_failure, "orbit sizes do not sum to the place count");
  }

  rep.orbits = orbits;
  for (size_t j = 0; j < n_short; ++j) rep.short_sizes.push_back(orbits[j].size);
  std::sort(rep.short_sizes.rbegin(), rep.short_sizes.rend());

  // Frobenius permutation of the short orbits
  rep.frobenius_perm.assign(n_short, -1);
  int preserved = 0;
  for (size_t j = 0; j < n_short; ++j) {
    SmoothPlace img = frobenius_place(*M, orbits[j].representative);
    auto it = orbit_of.find(key_of(img, E));
    require(it != orbit_of.end() && static_cast<size_t>(it->second) < n_short,
            errc::oracle_failure, "Frobenius left the short locus");
    rep.frobenius_perm[j] = it->second;
    if (it->second == static_cast<int>(j)) ++preserved;
  }
  if (n_short == 3) {
    require(preserved == 3, errc::theorem_violation,
            "three short orbits must all be Frobenius-stable");
    rep.frob_case = FrobCase::T3_all_preserved;
  } else {
    require(n_short == 4, errc::theorem_violation, "expected 3 or 4 short orbits");
    require(preserved == 4 || preserved == 2 || preserved == 0, errc::theorem_violation,
            "Frobenius preserved an impossible number of short orbits");
    rep.frob_case = preserved == 4 ? FrobCase::T4_all_preserved
                    : preserved == 2 ? FrobCase::T4_two_preserved
                                     : FrobCase::T4_none_preserved;
  }

  // genus via the short-orbit count identity
  int64_t t = static_cast<int64_t>(n_short);
  int64_t sum_sizes = 0;
  for (int64_t s : rep.short_sizes) sum_sizes += s;
  int64_t two_g_minus_2 = (t - 2) * mn - sum_sizes;
  require((two_g_minus_2 + 2) % 2 == 0, errc::oracle_failure, "orbit identity parity failure");
  rep.genus_rhp = (two_g_minus_2 + 2) / 2;
  return rep;
}

FrobCase frobenius_orbit_action(const CurveSpec& C, const OrbitReport& R) {
  int64_t q = C.base->order();
  bool n_minus = (q - 1) % C.n == 0, m_minus = (q - 1) % C.m == 0;
  bool n_plus = (q + 1) % C.n == 0, m_plus = (q + 1) % C.m == 0;
  switch (R.frob_case) {
    case FrobCase::T3_all_preserved:
    case FrobCase::T4_all_preserved:
      require(n_minus && m_minus, errc::theorem_violation,
              "all short orbits preserved but n, m do not both divide q - 1");
      break;
    case FrobCase::T4_two_preserved:
      require((n_minus && m_plus) || (m_minus && n_plus), errc::theorem_violation,
              "two preserved orbits need the mixed divisibility pattern");
      require(!(n_minus && m_minus), errc::theorem_violation,
              "two preserved orbits with both orders dividing q - 1");
      break;
    case FrobCase::T4_none_preserved:
      require(n_plus && m_plus && !(n_minus && m_minus), errc::theorem_violation,
              "no preserved orbits but n, m do not both divide q + 1");
      break;
  }
  return R.frob_case;
}

// --- four-set permutation representation -------------------------------------------

std::vector<std::array<int, 4>> orbit_permutation_table(const CurveSpec& C, const GroupTable& T,
                                                        const FieldPtr& E) {
  require(C.family == Family::IIb1 || C.family == Family::I, errc::unsupported_normal_form,
          "the four-set representation needs the plane-model families");
  auto M = make_context(C, static_cast<int>(E->abs_degree() / C.base->abs_degree()));
  require(M.has_value(), errc::raise_extension, "context construction failed");
  require(M->E == E, errc::field_mismatch, "table field and census field must agree");

  RatFun f = M->f;
  // the four loci: zeros of y (v > 0), poles of y (v < 0), fiber over x = 0,
  // fiber over x = infinity
  std::map<PlaceKey, int> locus_of;
  auto locus = short_locus(*M);
  require(locus.has_value(), errc::raise_extension, "short locus not rational over E");
  for (const SmoothPlace& P : *locus) {
    int id;
    if (!P.x.at_infinity() && P.x.x0.is_zero())
      id = 2;
    else if (P.x.at_infinity())
      id = 3;
    else
      id = P.v > 0 ? 0 : 1;
    locus_of[key_of(P, E)] = id;
  }
  std::vector<std::array<int, 4>> out;
  out.reserve(T.order());
  for (const CurveAut& g : T.elements) {
    PlaceMap pm = place_map_of_aut(g, E);
    std::array<int, 4> perm{-1, -1, -1, -1};
    for (const SmoothPlace& P : *locus) {
      int from = locus_of.at(key_of(P, E));
      SmoothPlace img = act_on_place(f, M->km.exponent, pm, P);
      auto it = locus_of.find(key_of(img, E));
      require(it != locus_of.end(), errc::oracle_failure,
              "automorphism moved a short-orbit place off the locus");
      if (perm[from] == -1) perm[from] = it->second;
      require(perm[from] == it->second, errc::oracle_failure,
              "automorphism split one of the four point sets");
    }
    out.push_back(perm);
  }
  return out;
}

bool dihedral_transitive_on_pair(const CurveSpec& C, int side) {
  require(side == 1 || side == 2, errc::invalid_parameter, "side must be 1 (y) or 2 (x)");
  GeneratorCatalog cat = generator_catalog(C);
  require(cat.mu.has_value(), errc::unsupported_normal_form, "needs the normalized catalog with mu");
  // census field must also carry the catalog constants
  int Lg = cat.coefficient_extension_degree;
  std::optional<ModelContext> M;
  std::optional<std::vector<SmoothPlace>> locus;
  for (int L = Lg; L <= 12; L += Lg) {
    M = make_context(C, L);
    if (!M) continue;
    locus = short_locus(*M);
    if (locus) break;
  }
  require(locus.has_value(), errc::raise_extension, "no common extension for catalog and locus");
  const FieldPtr& E = M->E;
  GeneratorCatalog cat_E = catalog_over(C, E);

  // side 1: <sigma1, mu> on zeros+poles of y; side 2: <sigma2, mu> on the
  // fibers over x = 0 and x = infinity
  std::vector<SmoothPlace> target;
  for (const SmoothPlace& P : *locus) {
    bool y_side = P.v != 0;
    if ((side == 1) == y_side) target.push_back(P);
  }
  PlaceMap g1 = place_map_of_aut(side == 1 ? cat_E.sigma1 : cat_E.sigma2, E);
  PlaceMap g2 = place_map_of_aut(*cat_E.mu, E);
  std::set<PlaceKey> reached;
  std::deque<SmoothPlace> todo{target.front()};
  reached.insert(key_of(target.front(), E));
  while (!todo.empty()) {
    SmoothPlace cur = todo.front();
    todo.pop_front();
    for (const PlaceMap* g : {&g1, &g2}) {
      SmoothPlace img = act_on_place(M->f, M->km.exponent, *g, cur);
      if (reached.insert(key_of(img, E)).second) todo.push_back(img);
    }
  }
  for (const SmoothPlace& P : target)
    if (!reached.count(key_of(P, E))) return false;
  return reached.size() == target.size();
}

// --- Artin-Schreier model generators ------------------------------------------------

ArtinSchreierGenerators artin_schreier_generators(int64_t p, int r) {
  require(r >= 1, errc::invalid_parameter, "r must be positive");
  ArtinSchreierGenerators out;
  FieldPtr K = make_field(p, 2 * r);
  out.field = K;
  int64_t pr = 1;
  for (int j = 0; j < r; ++j) pr *= p;

  // f(z) = z^{p^r} + z
  std::vector<Elem> fc(pr + 1, K->zero());
  fc[1] = K->one();
  fc[pr] = fc[pr] + K->one();
  Poly f(K, std::move(fc));

  // translations: roots of c^{p^r} + c = 0
  std::vector<Elem> tc(pr + 1, K->zero());
  tc[1] = K->one();
  tc[pr] = tc[pr] + K->one();
  out.translations = poly_roots(Poly(K, std::move(tc)));
  out.translations_ok = static_cast<int64_t>(out.translations.size()) == pr;
  for (const Elem& c : out.translations) {
    // f(z + c) must equal f(z)
    Poly shifted = f.subst(Poly(K, {c, K->one()}));
    out.translations_ok = out.translations_ok && shifted == f;
  }

  // scalings: (z, w) -> (a^2 z, a w) for a^{2(p^r - 1)} = 1
  out.scaling_generator = root_of_unity(K, 2 * (pr - 1));
  out.scalings_ok = true;
  for (const Elem& a : {out.scaling_generator, -K->one()}) {
    Elem a2 = a * a;
    Poly scaled = f.subst(Poly(K, {K->zero(), a2}));  // f(a^2 z)
    out.scalings_ok = out.scalings_ok && scaled == f.scaled(a2);
  }

  // inversion: (z, w) -> (1/z, w / z^{(p^r+1)/2});
  // (1/z)^{p^r} + 1/z = (z^{p^r} + z)/z^{p^r+1}
  RatFun z = RatFun::x(K);
  RatFun lhs = z.inverse().pow(pr) + z.inverse();
  RatFun rhs = RatFun::from_poly(f) / z.pow(pr + 1);
  out.inversion_ok = lhs == rhs;
  return out;
}

}  // namespace gfc
