#include <doctest.h>

#include "gfc/autgroup.hpp"
#include "gfc/equiv.hpp"

using namespace gfc;

TEST_CASE("normal form in the relation algebra") {
  auto F7 = make_field(7, 1);
  RatFun f = RatFun::from_poly(Poly::from_ints(F7, {1, 0, 0, -1}));  // 1 - x^3
  AlgebraicRelation rel{3, f};
  AlgebraElem y = AlgebraElem::y_of(rel);
  AlgebraElem one = AlgebraElem::from_ratfun(rel, RatFun::constant(F7, F7->one()));

  // y^3 reduces to (f, 0, 0)
  AlgebraElem y3 = y.pow(3);
  CHECK(y3.coeffs()[0] == f);
  CHECK(y3.coeffs()[1].is_zero());
  CHECK(y3.coeffs()[2].is_zero());
  // y^4 reduces to (0, f, 0)
  AlgebraElem y4 = y.pow(4);
  CHECK(y4.coeffs()[0].is_zero());
  CHECK(y4.coeffs()[1] == f);
  // (y^2+1)(y^2-1) = y^4 - 1 -> (-1, f, 0)
  AlgebraElem prod = (y * y + one) * (y * y - one);
  CHECK(prod.coeffs()[0] == RatFun::constant(F7, F7->from_int(-1)));
  CHECK(prod.coeffs()[1] == f);
  CHECK(prod.coeffs()[2].is_zero());
  // inverse
  AlgebraElem z = y * y + one;
  CHECK((z * z.inverse() - one).is_zero());
}

TEST_CASE("zero divisors are reported in reducible relations") {
  auto F7 = make_field(7, 1);
  // y^2 = x^2 is reducible: y - x is a zero divisor
  AlgebraicRelation rel{2, RatFun::from_poly(Poly::from_ints(F7, {0, 0, 1}))};
  AlgebraElem y = AlgebraElem::y_of(rel);
  AlgebraElem x = AlgebraElem::from_ratfun(rel, RatFun::x(F7));
  CHECK_THROWS_AS((y - x).inverse(), error);
}

TEST_CASE("identity map certificate") {
  auto F7 = make_field(7, 1);
  AlgebraicRelation rel{2, RatFun::from_poly(Poly::from_ints(F7, {1, 0, 0, 0, -1}))};
  BirationalMap id{AlgebraElem::x_of(rel), AlgebraElem::y_of(rel)};
  IdentityCertificate cert = verify_birational_identity(rel, id, rel, 12);
  CHECK(cert.holds);
  CHECK(cert.injective_on_samples);
  CHECK(cert.sample_count >= 12);
}

TEST_CASE("hyperelliptic overlap map") {
  auto F7 = make_field(7, 1);
  for (int64_t n : {3, 6}) {
    IdentityCertificate cert = verify_overlap_map(F7, n);
    CHECK(cert.holds);
    CHECK(cert.injective_on_samples);
  }
  auto F13 = make_field(13, 1);
  for (int64_t n : {3, 4, 6}) CHECK(verify_overlap_map(F13, n).holds);
}

TEST_CASE("artin-schreier to fermat-type substitution") {
  for (auto [p, r] : {std::pair<int64_t, int>{3, 1}, {5, 1}, {3, 2}}) {
    ArtinSchreierSubstitution sub = verify_mainpgroup_substitution(p, r);
    CHECK(sub.scalar_certs_hold);
    CHECK(sub.certificate.holds);
    CHECK(sub.certificate.injective_on_samples);
  }
}

TEST_CASE("quadrex normalization of IIb2") {
  auto F7 = make_field(7, 1);
  CurveSpec C = make_curve(Family::IIb2, F7, 4, 3, {1, 0, 0, 1});
  QuadrexResult R = quadrex_normalize(C);
  CHECK(R.normalized.family == Family::IIb1);
  CHECK(R.normalized.base->order() == 49);
  CHECK(R.genus_before == 6);
  CHECK(R.genus_after == 6);
  CHECK(R.certificate.holds);
  // orbit structure is preserved
  OrbitReport before = g_orbits(C);
  OrbitReport after = g_orbits(R.normalized);
  CHECK(before.short_sizes == after.short_sizes);
}

TEST_CASE("quadrex normalization of IIb3") {
  auto F5 = make_field(5, 1);
  CurveSpec C = make_curve(Family::IIb3, F5, 3, 3, {0, 1, 1, 0});
  QuadrexResult R = quadrex_normalize(C);
  CHECK(R.normalized.base->order() == 25);
  CHECK(R.genus_before == R.genus_after);
  CHECK(R.genus_after == genus_closed_form(C));
  CHECK(R.certificate.holds);
  OrbitReport before = g_orbits(C);
  OrbitReport after = g_orbits(R.normalized);
  CHECK(before.short_sizes == after.short_sizes);
}

TEST_CASE("quadrex rejects family I") {
  auto F7 = make_field(7, 1);
  CurveSpec C = make_curve(Family::I, F7, 3, 3, {1, 1});
  CHECK_THROWS_AS(quadrex_normalize(C), error);
}
