#include <doctest.h>

#include "gfc/polyplaces.hpp"

using namespace gfc;

namespace {

// deterministic sample polynomials
Poly sample_poly(const FieldPtr& F, uint64_t seed, int max_deg) {
  uint64_t s = seed * 6364136223846793005ull + 1442695040888963407ull;
  int d = static_cast<int>(s >> 60) % (max_deg + 1);
  std::vector<Elem> c;
  for (int j = 0; j <= d; ++j) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    c.push_back(F->elem_of_index(static_cast<int64_t>(s % static_cast<uint64_t>(F->order()))));
  }
  return Poly(F, std::move(c));
}

}  // namespace

TEST_CASE("factorize: split cubic over F_7") {
  auto F7 = make_field(7, 1);
  Poly f = Poly::from_ints(F7, {-1, 0, 0, 1});  // x^3 - 1
  auto fac = factorize(f);
  REQUIRE(fac.factors.size() == 3);
  CHECK(fac.unit == F7->one());
  std::vector<int64_t> roots;
  for (auto& [g, m] : fac.factors) {
    CHECK(m == 1);
    CHECK(g.deg() == 1);
    roots.push_back(F7->index_of(-g.coeff(0)));
  }
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<int64_t>{1, 2, 4});
  CHECK(poly_roots(f) == std::vector<Elem>{F7->from_int(1), F7->from_int(2), F7->from_int(4)});
}

TEST_CASE("factorize over F_5") {
  auto F5 = make_field(5, 1);
  auto fac = factorize(Poly::from_ints(F5, {1, 0, 1}));  // x^2 + 1 = (x-2)(x-3)
  REQUIRE(fac.factors.size() == 2);
  CHECK(poly_roots(Poly::from_ints(F5, {1, 0, 1})) ==
        std::vector<Elem>{F5->from_int(2), F5->from_int(3)});

  Poly g = Poly::from_ints(F5, {-2, 0, 1});  // x^2 - 2 irreducible
  CHECK(is_irreducible(g));
  auto fg = factorize(g);
  REQUIRE(fg.factors.size() == 1);
  CHECK(fg.factors[0].first == g);
}

TEST_CASE("factorize roundtrip on deterministic samples") {
  for (auto [p, h] : {std::pair<int64_t, int>{7, 1}, {5, 1}, {3, 2}}) {
    auto F = make_field(p, h);
    for (uint64_t seed = 1; seed <= 25; ++seed) {
      Poly f = sample_poly(F, seed, 8);
      if (f.is_zero()) continue;
      auto fac = factorize(f);
      Poly prod = Poly::constant(F, fac.unit);
      for (auto& [g, m] : fac.factors) {
        CHECK(is_irreducible(g));
        prod = prod * g.pow(m);
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("factorize handles repeated and p-th power factors") {
  auto F3 = make_field(3, 1);
  Poly x = Poly::x(F3);
  Poly one = Poly::constant(F3, F3->one());
  Poly f = (x - one).pow(3) * (x + one).pow(2) * x.pow(6);
  auto fac = factorize(f);
  REQUIRE(fac.factors.size() == 3);
  // canonical order: x, x + 1, x + 2
  CHECK(fac.factors[0].second == 6);
  CHECK(fac.factors[1].second == 2);
  CHECK(fac.factors[2].second == 3);
  Poly prod = Poly::constant(F3, fac.unit);
  for (auto& [g, m] : fac.factors) prod = prod * g.pow(m);
  CHECK(prod == f);
}

TEST_CASE("valuations") {
  auto F7 = make_field(7, 1);
  RatFun f(Poly::from_ints(F7, {0, 0, 0, 1}), Poly::from_ints(F7, {-1, 1}));  // x^3/(x-1)
  CHECK(valuation(Place::finite(Poly::x(F7)), f) == 3);
  CHECK(valuation(Place::finite(Poly::from_ints(F7, {-1, 1})), f) == -1);
  CHECK(valuation(Place::infinity(F7), f) == -2);

  RatFun one = RatFun::constant(F7, F7->one());
  CHECK(valuation(Place::finite(Poly::x(F7)), one) == 0);
  CHECK(valuation(Place::infinity(F7), one) == 0);

  RatFun g = RatFun::from_poly(Poly::from_ints(F7, {1, 0, 0, -1}));  // 1 - x^3
  CHECK(valuation(Place::finite(Poly::from_ints(F7, {-2, 1})), g) == 1);

  CHECK_THROWS_AS(valuation(Place::infinity(F7), RatFun::constant(F7, F7->zero())), error);
}

TEST_CASE("valuation product rule on samples") {
  auto F5 = make_field(5, 1);
  Place P = Place::finite(Poly::from_ints(F5, {-1, 1}));
  Place Q = Place::infinity(F5);
  for (uint64_t s = 1; s < 12; ++s) {
    Poly a = sample_poly(F5, 3 * s, 5), b = sample_poly(F5, 3 * s + 1, 4);
    Poly c = sample_poly(F5, 3 * s + 2, 4);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    RatFun f(a, c), g(b, c * c);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(valuation(P, f * g) == valuation(P, f) + valuation(P, g));
    CHECK(valuation(Q, f * g) == valuation(Q, f) + valuation(Q, g));
  }
}

TEST_CASE("principal divisors") {
  auto F7 = make_field(7, 1);
  Divisor d1 = principal_divisor(RatFun::x(F7));
  REQUIRE(d1.terms.size() == 2);
  CHECK(d1.terms[0].first.pi == Poly::x(F7));
  CHECK(d1.terms[0].second == 1);
  CHECK(d1.terms[1].first.at_infinity);
  CHECK(d1.terms[1].second == -1);
  CHECK(d1.total_degree() == 0);

  Divisor d2 = principal_divisor(RatFun::from_poly(Poly::from_ints(F7, {-1, 0, 0, 1})));
  REQUIRE(d2.terms.size() == 4);
  CHECK(d2.terms[3].second == -3);
  CHECK(d2.total_degree() == 0);

  auto F5 = make_field(5, 1);
  RatFun f(Poly::from_ints(F5, {-2, 0, 1}), Poly::x(F5));
  Divisor d3 = principal_divisor(f);
  REQUIRE(d3.terms.size() == 3);
  CHECK(d3.terms[0].first.pi == Poly::x(F5));
  CHECK(d3.terms[0].second == -1);
  CHECK(d3.terms[1].first.degree == 2);
  CHECK(d3.terms[1].second == 1);
  CHECK(d3.terms[2].first.at_infinity);
  CHECK(d3.terms[2].second == -1);
  CHECK(d3.total_degree() == 0);
}

TEST_CASE("degree-zero law on samples") {
  auto F9 = make_field(3, 2);
  for (uint64_t s = 1; s < 10; ++s) {
    Poly a = sample_poly(F9, 7 * s, 5), b = sample_poly(F9, 7 * s + 3, 5);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(principal_divisor(RatFun(a, b)).total_degree() == 0);
  }
}

TEST_CASE("d-th power tests") {
  auto F7 = make_field(7, 1);
  CHECK(is_dth_power(RatFun::from_poly(Poly::from_ints(F7, {0, 0, 1})), 2));
  CHECK_FALSE(is_dth_power(RatFun::from_poly(Poly::from_ints(F7, {1, 0, 0, -1})), 3));
  CHECK(is_dth_power(RatFun::from_poly(Poly::from_ints(F7, {0, 0, 4})), 2));
  // 3 x^2: constant 3 is a nonsquare, so not a literal square but still a
  // constant multiple of one
  RatFun g = RatFun::from_poly(Poly::from_ints(F7, {0, 0, 3}));
  CHECK_FALSE(is_dth_power(g, 2));
  CHECK(is_const_times_dth_power(g, 2));
}

TEST_CASE("rational function canonical form") {
  auto F7 = make_field(7, 1);
  // (2x^2 + 2x)/(4x) reduces to (2x + 2)/4 with monic denominator -> (4x+4)/1
  RatFun f(Poly::from_ints(F7, {0, 2, 2}), Poly::from_ints(F7, {0, 4}));
  CHECK(f.den() == Poly::constant(F7, F7->one()));
  CHECK(f.num() == Poly::from_ints(F7, {4, 4}));
  RatFun g = RatFun::x(F7) * RatFun::x(F7);
  CHECK(g.num() == Poly::from_ints(F7, {0, 0, 1}));
}

TEST_CASE("substitution is exact") {
  auto F7 = make_field(7, 1);
  RatFun x = RatFun::x(F7);
  RatFun f = (x * x + RatFun::constant(F7, F7->one())) / x;  // (x^2+1)/x
  RatFun g = RatFun::constant(F7, F7->from_int(3)) / x;      // 3/x
  RatFun h = f.subst(g);
  // f(3/x) = (9/x^2 + 1)/(3/x) = (9 + x^2)/(3x)
  RatFun expect(Poly::from_ints(F7, {9, 0, 1}), Poly::from_ints(F7, {0, 3}));
  CHECK(h == expect);
}

TEST_CASE("least irreducible and lifting") {
  auto F7 = make_field(7, 1);
  Poly m2 = least_irreducible(F7, 2);
  CHECK(is_irreducible(m2));
  CHECK(m2.deg() == 2);
  auto F49 = Field::extension(F7, m2.coeffs());
  CHECK(F49->order() == 49);
  Poly f = Poly::from_ints(F7, {-3, 0, 1});  // x^2 - 3, irreducible (3 is a nonsquare)
  Poly g = f.lift_to(F49);
  CHECK(g.deg() == 2);
  CHECK(poly_roots(g).size() == 2);
  CHECK(poly_roots(f).empty());
}

TEST_CASE("nth_roots agrees with count_nth_roots") {
  auto F9 = make_field(3, 2);
  for (int64_t k = 0; k < 9; ++k) {
    Elem c = F9->elem_of_index(k);
    for (int64_t n : {2, 4, 8}) {
      auto roots = nth_roots(F9, c, n);
      if (!c.is_zero()) CHECK(static_cast<int64_t>(roots.size()) == count_nth_roots(F9, c, n));
      for (const auto& r : roots) CHECK(F9->pow(r, n) == c);
    }
  }
}
