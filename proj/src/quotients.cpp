#include "gfc/quotients.hpp"

#include <map>

namespace gfc {

namespace {

// Coefficientwise projection of a rational function over base(i) down to base.
std::optional<RatFun> project_to_base(const RatFun& f) {
  const FieldPtr& E = f.field();
  const FieldPtr& B = E->base();
  auto down = [&](const Poly& g) -> std::optional<Poly> {
    std::vector<Elem> c;
    c.reserve(g.deg() + 1);
    for (int j = 0; j <= g.deg(); ++j) {
      auto b = E->to_base(g.coeff(j));
      if (!b) return std::nullopt;
      c.push_back(*b);
    }
    return Poly(B, std::move(c));
  };
  auto n = down(f.num());
  auto d = down(f.den());
  if (!n || !d) return std::nullopt;
  return RatFun(*n, *d);
}

}  // namespace

QuotientDatum split_quotient(const FieldPtr& F, int64_t n) {
  require(n >= 1, errc::invalid_parameter, "order must be positive");
  require((F->order() - 1) % n == 0, errc::no_such_subgroup, "split quotient needs n | q - 1");
  QuotientDatum out;
  out.kind = QuotientDatum::Kind::split;
  out.n = n;
  out.generator = split_cyclic_generator(F, n);
  out.invariant = RatFun::x(F).pow(n);
  return out;
}

QuotientDatum nonsplit_quotient(const Tower& T, int64_t n) {
  require(n >= 1, errc::invalid_parameter, "order must be positive");
  require((T.base->order() + 1) % n == 0, errc::no_such_subgroup,
          "nonsplit quotient needs n | q + 1");
  const FieldPtr& E = T.top;
  Poly xp = Poly::x(E);
  Poly plus = Poly(E, {T.i(), E->one()});   // x + i
  Poly minus = Poly(E, {-T.i(), E->one()});  // x - i
  Poly A = plus.pow(n), B = minus.pow(n);
  RatFun z_top(Poly::constant(E, T.i()) * (A - B), A + B);
  auto z = project_to_base(z_top);
  require(z.has_value(), errc::oracle_failure, "quotient function has a coefficient outside F_q");

  QuotientDatum out;
  out.kind = QuotientDatum::Kind::nonsplit;
  out.n = n;
  out.generator = nonsplit_cyclic_generator(T, n);
  out.invariant = *z;
  require(out.invariant.map_degree() == n, errc::oracle_failure, "quotient function degree mismatch");
  require(out.invariant.subst(out.generator.as_ratfun()) == out.invariant, errc::oracle_failure,
          "quotient function is not invariant");
  return out;
}

RatFun intermediate_h(const Tower& T, int64_t n) {
  require(n >= 1, errc::invalid_parameter, "order must be positive");
  require((T.base->order() + 1) % n == 0, errc::no_such_subgroup, "needs n | q + 1");
  const FieldPtr& E = T.top;
  Poly plus = Poly(E, {T.i(), E->one()});
  Poly minus = Poly(E, {-T.i(), E->one()});
  RatFun h(minus.pow(n), plus.pow(n));

  Moebius tau = nonsplit_cyclic_generator(T, n).lift_to(E);
  require(h.subst(tau.as_ratfun()) == h, errc::oracle_failure, "h is not invariant under tau");

  // i (h - 1)/(h + 1) is the sign-flipped form of the quotient function.
  RatFun one = RatFun::constant(E, E->one());
  RatFun z_from_h = RatFun::constant(E, T.i()) * (h - one) / (h + one);
  RatFun z = nonsplit_quotient(T, n).invariant.lift_to(E);
  require(z_from_h == -z, errc::oracle_failure, "h does not reproduce the quotient function");
  return h;
}

RatFun norm_map(const FieldPtr& F, int64_t n) {
  require(n >= 1, errc::invalid_parameter, "order must be positive");
  require((F->order() - 1) % n == 0, errc::no_such_subgroup, "norm map needs n | q - 1");
  Moebius sigma = split_cyclic_generator(F, n);
  RatFun out = RatFun::constant(F, F->one());
  Moebius p = Moebius::identity(F);
  for (int64_t j = 0; j < n; ++j) {
    out = out * p.as_ratfun();
    p = p.compose(sigma);
  }
  return out;
}

RatFun trace_map(const Tower& T, int64_t n) {
  require(n >= 1, errc::invalid_parameter, "order must be positive");
  require((T.base->order() + 1) % n == 0, errc::no_such_subgroup, "trace map needs n | q + 1");
  Moebius tau = nonsplit_cyclic_generator(T, n);
  RatFun out = RatFun::constant(T.base, T.base->zero());
  Moebius p = Moebius::identity(T.base);
  for (int64_t j = 0; j < n; ++j) {
    out = out + p.as_ratfun();
    p = p.compose(tau);
  }
  return out;
}

Moebius moebius_three_points(const std::array<ProjPoint, 3>& src,
                             const std::array<ProjPoint, 3>& dst) {
  const Field* F = src[0].x0.field();
  // Map sending (p0, p1, p2) to (0, 1, oo).
  auto to_std = [&](const std::array<ProjPoint, 3>& p) -> Moebius {
    const Elem z = F->zero(), o = F->one();
    if (p[0].at_infinity()) {
      return Moebius::make(z, p[1].x0 - p[2].x0, o, -p[2].x0);
    }
    if (p[1].at_infinity()) {
      return Moebius::make(o, -p[0].x0, o, -p[2].x0);
    }
    if (p[2].at_infinity()) {
      return Moebius::make(o, -p[0].x0, z, p[1].x0 - p[0].x0);
    }
    Elem d12 = p[1].x0 - p[2].x0, d10 = p[1].x0 - p[0].x0;
    return Moebius::make(d12, -(p[0].x0 * d12), d10, -(p[2].x0 * d10));
  };
  return to_std(dst).inverse().compose(to_std(src));
}

std::optional<Moebius> moebius_relating(const RatFun& from, const RatFun& to) {
  const FieldPtr& F = from.field();
  require(to.field() == F, errc::field_mismatch, "functions over different fields");
  // Sample over F_q(i) so three distinct values always exist at desk scale.
  Tower T = Tower::make(F);
  const FieldPtr& E = T.top;
  RatFun f = from.lift_to(E), g = to.lift_to(E);

  std::array<ProjPoint, 3> src_pts{}, dst_pts{};
  int found = 0;
  auto push = [&](const ProjPoint& v, const ProjPoint& w) {
    for (int j = 0; j < found; ++j)
      if (src_pts[j] == v || dst_pts[j] == w) return;
    src_pts[found] = v;
    dst_pts[found] = w;
    ++found;
  };
  for (int64_t k = 0; k < E->order() && found < 3; ++k) {
    Elem x0 = E->elem_of_index(k);
    auto [fn, fd] = f.eval_proj(x0);
    auto [gn, gd] = g.eval_proj(x0);
    push(ProjPoint::make(fn, fd), ProjPoint::make(gn, gd));
  }
  if (found < 3) return std::nullopt;

  Moebius M_top = moebius_three_points(src_pts, dst_pts);
  if (M_top.as_ratfun().subst(f) != g) return std::nullopt;
  auto a = E->to_base(M_top.a), b = E->to_base(M_top.b);
  auto c = E->to_base(M_top.c), d = E->to_base(M_top.d);
  if (!a || !b || !c || !d) return std::nullopt;
  Moebius M = Moebius::make(*a, *b, *c, *d);
  if (M.as_ratfun().subst(from) != to) return std::nullopt;
  return M;
}

}  // namespace gfc
