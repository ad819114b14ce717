#include "gfc/moebius.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gfc {

// --- ProjPoint ---------------------------------------------------------------

ProjPoint ProjPoint::make(const Elem& a, const Elem& b) {
  require(a.field() == b.field(), errc::field_mismatch, "projective point coordinates");
  require(!(a.is_zero() && b.is_zero()), errc::invalid_parameter, "(0 : 0) is not projective");
  const Field* F = a.field();
  ProjPoint P;
  if (!b.is_zero()) {
    P.x0 = a / b;
    P.x1 = F->one();
  } else {
    P.x0 = F->one();
    P.x1 = F->zero();
  }
  return P;
}

ProjPoint ProjPoint::affine(const Elem& a) { return make(a, a.field()->one()); }

ProjPoint ProjPoint::infinity(const FieldPtr& F) { return make(F->one(), F->zero()); }

std::string ProjPoint::str() const { return "(" + x0.str() + " : " + x1.str() + ")"; }

// --- Moebius -----------------------------------------------------------------

Moebius Moebius::make(const Elem& a, const Elem& b, const Elem& c, const Elem& d) {
  const Field* F = a.field();
  require(b.field() == F && c.field() == F && d.field() == F, errc::field_mismatch,
          "matrix entries over different fields");
  require(!(a * d - b * c).is_zero(), errc::invalid_parameter, "singular matrix");
  Moebius M{a, b, c, d};
  for (Elem* e : {&M.a, &M.b, &M.c, &M.d}) {
    if (!e->is_zero()) {
      Elem s = F->inv(*e);
      M.a = M.a * s;
      M.b = M.b * s;
      M.c = M.c * s;
      M.d = M.d * s;
      break;
    }
  }
  return M;
}

Moebius Moebius::identity(const FieldPtr& F) {
  return make(F->one(), F->zero(), F->zero(), F->one());
}

Moebius Moebius::scaling(const Elem& z) {
  const Field* F = z.field();
  return make(z, F->zero(), F->zero(), F->one());
}

Moebius Moebius::inversion_through(const Elem& z) {
  const Field* F = z.field();
  return make(F->zero(), z, F->one(), F->zero());
}

bool Moebius::is_identity() const {
  return a.is_one() && b.is_zero() && c.is_zero() && d.is_one();
}

bool Moebius::operator==(const Moebius& o) const {
  return a == o.a && b == o.b && c == o.c && d == o.d;
}

Moebius Moebius::compose(const Moebius& o) const {
  return make(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

Moebius Moebius::inverse() const { return make(d, -b, -c, a); }

int Moebius::order(int bound) const {
  Moebius M = *this;
  for (int k = 1; k <= bound; ++k) {
    if (M.is_identity()) return k;
    M = M.compose(*this);
  }
  fail(errc::bound_exceeded, "element order exceeds bound");
}

Moebius Moebius::lift_to(const FieldPtr& E) const {
  return make(E->lift(a), E->lift(b), E->lift(c), E->lift(d));
}

RatFun Moebius::as_ratfun() const {
  FieldPtr F = a.field()->self();
  return RatFun(Poly(F, {b, a}), Poly(F, {d, c}));
}

std::string Moebius::str() const {
  return "[" + a.str() + " " + b.str() + "; " + c.str() + " " + d.str() + "]";
}

// --- actions -----------------------------------------------------------------

ProjPoint act(const Moebius& M, const ProjPoint& P) {
  FieldPtr E = P.x0.field()->self();
  require(E->has_in_chain(M.a.field()), errc::field_mismatch, "point field must admit the entries");
  Elem a = E->lift(M.a), b = E->lift(M.b), c = E->lift(M.c), d = E->lift(M.d);
  return ProjPoint::make(a * P.x0 + b * P.x1, c * P.x0 + d * P.x1);
}

ProjPoint act_value(const Moebius& M, const Elem& x) { return act(M, ProjPoint::affine(x)); }

std::vector<ProjPoint> all_proj_points(const FieldPtr& E) {
  require(E->order() <= (int64_t{1} << 21), errc::desk_scale_exceeded, "P^1 enumeration too large");
  std::vector<ProjPoint> out;
  out.reserve(E->order() + 1);
  for (int64_t k = 0; k < E->order(); ++k) out.push_back(ProjPoint::affine(E->elem_of_index(k)));
  out.push_back(ProjPoint::infinity(E));
  return out;
}

// --- cyclic subgroup generators ----------------------------------------------

Moebius split_cyclic_generator(const FieldPtr& F, int64_t n) {
  require(n >= 1, errc::invalid_parameter, "order must be positive");
  require((F->order() - 1) % n == 0, errc::no_such_subgroup,
          "split cyclic subgroup needs n | q - 1");
  return Moebius::scaling(root_of_unity(F, n));
}

NonsplitGen nonsplit_cyclic_generator_detail(const Tower& T, int64_t n) {
  const FieldPtr& F = T.base;
  int64_t q = F->order();
  require(n >= 1, errc::invalid_parameter, "order must be positive");
  require((q + 1) % n == 0, errc::no_such_subgroup, "nonsplit cyclic subgroup needs n | q + 1");

  if (n == 1) return {Moebius::identity(F), T.top->one(), false};

  auto build = [&](const Elem& lambda) -> std::optional<Moebius> {
    Elem u = lambda.coords()[0], v = lambda.coords()[1];
    if (v.is_zero()) return std::nullopt;  // scalar matrix, dies in PGL
    Moebius tau = Moebius::make(u, T.s * v, v, u);
    if (tau.order(static_cast<int>(2 * n + 2)) != n) return std::nullopt;
    return tau;
  };

  // The construction wants a primitive 2n-th root of unity u + iv of F_{q^2};
  // candidates walk the coprime multiples of the canonical exponent.
  Elem g = least_primitive_root(T.top);
  int64_t e0 = (T.top->order() - 1) / (2 * n);
  for (int64_t k = 1; k < 2 * n; ++k) {
    if (std::gcd(k, 2 * n) != 1) continue;
    Elem lambda = T.top->pow(g, k * e0);
    if (auto tau = build(lambda)) return {*tau, lambda, true};
  }
  // For q = 1 mod 4 and n even, every primitive 2n-th root of unity meets the
  // scalars in more than {1, -1} and the image drops below order n. Fall back
  // to a lambda whose class generates the order-n subgroup of the torus
  // quotient F_{q^2}^* / F_q^* directly.
  for (int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    Elem lambda = T.top->pow(g, k * (q + 1) / n);
    if (auto tau = build(lambda)) return {*tau, lambda, false};
  }
  fail(errc::no_such_subgroup, "no valid nonsplit generator found");
}

Moebius nonsplit_cyclic_generator(const Tower& T, int64_t n) {
  return nonsplit_cyclic_generator_detail(T, n).tau;
}

std::vector<ProjPoint> fixed_points(const Moebius& M, const FieldPtr& E) {
  std::vector<ProjPoint> out;
  for (const ProjPoint& P : all_proj_points(E))
    if (act(M, P) == P) out.push_back(P);
  return out;
}

// --- Dickson audit -----------------------------------------------------------

std::vector<Moebius> all_pgl2(const FieldPtr& F) {
  std::vector<Moebius> out;
  int64_t q = F->order();
  out.reserve(q * q * q - q);
  for (int64_t bi = 0; bi < q; ++bi)
    for (int64_t ci = 0; ci < q; ++ci)
      for (int64_t di = 0; di < q; ++di) {
        Elem b = F->elem_of_index(bi), c = F->elem_of_index(ci), d = F->elem_of_index(di);
        if ((d - b * c).is_zero()) continue;
        out.push_back(Moebius{F->one(), b, c, d});
      }
  for (int64_t ci = 1; ci < q; ++ci)
    for (int64_t di = 0; di < q; ++di)
      out.push_back(Moebius{F->zero(), F->one(), F->elem_of_index(ci), F->elem_of_index(di)});
  return out;
}

namespace {

std::array<int64_t, 4> moebius_key(const Moebius& M) {
  const Field* F = M.a.field();
  return {F->index_of(M.a), F->index_of(M.b), F->index_of(M.c), F->index_of(M.d)};
}

// all cyclic subgroups of order n among `elems`, as sorted key sets
std::vector<std::vector<std::array<int64_t, 4>>> cyclic_subgroups_of_order(
    const std::vector<Moebius>& elems, int n, const FieldPtr& F) {
  std::set<std::vector<std::array<int64_t, 4>>> seen;
  for (const Moebius& M : elems) {
    if (M.order(4096) != n) continue;
    std::vector<std::array<int64_t, 4>> key;
    Moebius P = Moebius::identity(F);
    for (int j = 0; j < n; ++j) {
      key.push_back(moebius_key(P));
      P = P.compose(M);
    }
    std::sort(key.begin(), key.end());
    seen.insert(key);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

AuditReport dickson_audit(int64_t p, int h) {
  FieldPtr F = make_field(p, h);
  int64_t q = F->order();
  require(q <= 169, errc::desk_scale_exceeded, "audit limited to q <= 13^2");
  Tower T = Tower::make(F);

  AuditReport rep;
  rep.q = q;
  auto elems = all_pgl2(F);
  rep.group_order = static_cast<int64_t>(elems.size());

  for (const Moebius& M : elems) {
    int k = M.order(static_cast<int>(q + 2));
    rep.orders_histogram[k] += 1;
    if (k == 1) continue;
    if (std::gcd<int64_t>(k, p) != 1) continue;  // wild elements are out of scope here

    bool div_minus = (q - 1) % k == 0, div_plus = (q + 1) % k == 0;
    if (!div_minus && !div_plus) {
      rep.dichotomy_violations.push_back("order " + std::to_string(k) + " divides neither q-1 nor q+1: " + M.str());
      continue;
    }
    size_t fp_base = fixed_points(M, F).size();
    size_t fp_top = fixed_points(M.lift_to(T.top), T.top).size();
    if (fp_top != 2) {
      rep.dichotomy_violations.push_back("tame element without exactly two fixed points over F_{q^2}: " + M.str());
      continue;
    }
    if (k == 2) continue;  // 2 divides both q-1 and q+1; either fixed-point type occurs
    bool rational = fp_base > 0;
    if (rational != div_minus) {
      rep.dichotomy_violations.push_back("fixed-point rationality disagrees with the q-1 branch for order " +
                                         std::to_string(k) + ": " + M.str());
    }
  }

  if (q <= 9) {
    rep.conjugacy_checked = true;
    for (int64_t n = 3; n <= q + 1; ++n) {
      if ((q + 1) % n != 0) continue;
      auto subs = cyclic_subgroups_of_order(elems, static_cast<int>(n), F);
      if (subs.size() <= 1) continue;
      for (size_t j = 1; j < subs.size() && rep.conjugacy_ok; ++j) {
        bool conj = false;
        for (const Moebius& g : elems) {
          std::vector<std::array<int64_t, 4>> img;
          img.reserve(subs[0].size());
          Moebius gi = g.inverse();
          for (const auto& key : subs[0]) {
            Moebius m{F->elem_of_index(key[0]), F->elem_of_index(key[1]), F->elem_of_index(key[2]),
                      F->elem_of_index(key[3])};
            img.push_back(moebius_key(g.compose(m).compose(gi)));
          }
          std::sort(img.begin(), img.end());
          if (img == subs[j]) {
            conj = true;
            break;
          }
        }
        if (!conj) rep.conjugacy_ok = false;
      }
    }
  }
  return rep;
}

}  // namespace gfc
