#include <doctest.h>

#include "gfc/moebius.hpp"

using namespace gfc;

TEST_CASE("projective action basics") {
  auto F7 = make_field(7, 1);
  Moebius id = Moebius::identity(F7);
  for (const ProjPoint& P : all_proj_points(F7)) CHECK(act(id, P) == P);

  Moebius M = Moebius::make(F7->zero(), F7->from_int(3), F7->one(), F7->zero());  // x -> 3/x
  CHECK(act(M, ProjPoint::affine(F7->one())) == ProjPoint::affine(F7->from_int(3)));
  CHECK(act(M, ProjPoint::affine(F7->zero())) == ProjPoint::infinity(F7));
  CHECK(act(M, ProjPoint::infinity(F7)) == ProjPoint::affine(F7->zero()));

  // x -> 3/x fixes (i : 1) over F_49, i^2 = 3
  Tower T = Tower::make(F7);
  REQUIRE(T.s == F7->from_int(3));
  CHECK(act(M, ProjPoint::affine(T.i())) == ProjPoint::affine(T.i()));
}

TEST_CASE("composition is associative and matches the group action") {
  auto F5 = make_field(5, 1);
  auto pts = all_proj_points(F5);
  auto elems = all_pgl2(F5);
  REQUIRE(elems.size() == 120);
  // sample triples
  for (size_t i = 0; i < elems.size(); i += 37)
    for (size_t j = 0; j < elems.size(); j += 41) {
      const Moebius &A = elems[i], &B = elems[j];
      Moebius AB = A.compose(B);
      for (const ProjPoint& P : pts) CHECK(act(AB, P) == act(A, act(B, P)));
      CHECK(A.compose(A.inverse()).is_identity());
    }
}

TEST_CASE("split cyclic generators") {
  auto F7 = make_field(7, 1);
  Moebius s3 = split_cyclic_generator(F7, 3);
  CHECK(act(s3, ProjPoint::affine(F7->one())) == ProjPoint::affine(F7->from_int(2)));
  CHECK(s3.order() == 3);
  Moebius s6 = split_cyclic_generator(F7, 6);
  CHECK(act(s6, ProjPoint::affine(F7->one())) == ProjPoint::affine(F7->from_int(3)));
  CHECK(s6.order() == 6);
  CHECK_THROWS_AS(split_cyclic_generator(F7, 4), error);
  // diagonal fixed points
  auto fps = fixed_points(s3, F7);
  REQUIRE(fps.size() == 2);
  CHECK(fps[0] == ProjPoint::affine(F7->zero()));
  CHECK(fps[1] == ProjPoint::infinity(F7));
}

TEST_CASE("nonsplit cyclic generator: q = 7, n = 2 gives x -> 3/x") {
  auto F7 = make_field(7, 1);
  Tower T = Tower::make(F7);
  Moebius tau = nonsplit_cyclic_generator(T, 2);
  CHECK(tau.order() == 2);
  CHECK(tau.as_ratfun() == RatFun(Poly::from_ints(F7, {3}), Poly::x(F7)));
  auto fps = fixed_points(tau.lift_to(T.top), T.top);
  REQUIRE(fps.size() == 2);
  CHECK(fps[0] == ProjPoint::affine(T.i()));
  CHECK(fps[1] == ProjPoint::affine(T.top->neg(T.i())));
  CHECK(fixed_points(tau, F7).empty());
}

TEST_CASE("nonsplit cyclic generator: q = 7, n = 4") {
  auto F7 = make_field(7, 1);
  Tower T = Tower::make(F7);
  auto det = nonsplit_cyclic_generator_detail(T, 4);
  CHECK(det.primitive_2n);
  CHECK(T.top->mult_order(det.lambda) == 8);
  CHECK(det.tau.order() == 4);
  auto fps = fixed_points(det.tau.lift_to(T.top), T.top);
  REQUIRE(fps.size() == 2);
  CHECK(fps[0].x0 == T.i());
  CHECK(fps[1].x0 == T.top->neg(T.i()));
  // ker-scalar law: lambda^j lies in F_q only at j = n and j = 2n
  for (int64_t j = 1; j <= 8; ++j) {
    Elem lj = T.top->pow(det.lambda, j);
    bool in_base = T.top->to_base(lj).has_value();
    CHECK(in_base == (j == 4 || j == 8));
  }
  // the trace certificate (u - iv)^n = (u + iv)^n
  CHECK(T.top->pow(T.conj(det.lambda), 4) == T.top->pow(det.lambda, 4));
}

TEST_CASE("nonsplit cyclic generator: q = 5, n = 3 has no rational fixed point") {
  auto F5 = make_field(5, 1);
  Tower T = Tower::make(F5);
  REQUIRE(T.s == F5->from_int(2));
  Moebius tau = nonsplit_cyclic_generator(T, 3);
  CHECK(tau.order() == 3);
  CHECK(fixed_points(tau, F5).empty());
  auto fps = fixed_points(tau.lift_to(T.top), T.top);
  REQUIRE(fps.size() == 2);
  CHECK(fps[0].x0 == T.i());
  CHECK(fps[1].x0 == T.top->neg(T.i()));
}

TEST_CASE("nonsplit n = 2 fallback for q = 1 mod 4") {
  for (auto [p, h] : {std::pair<int64_t, int>{5, 1}, {13, 1}, {3, 2}}) {
    Tower T = Tower::make(make_field(p, h));
    auto det = nonsplit_cyclic_generator_detail(T, 2);
    CHECK_FALSE(det.primitive_2n);
    CHECK(det.tau.order() == 2);
    // tau is x -> s/x
    CHECK(det.tau.as_ratfun() ==
          RatFun(Poly::constant(T.base, T.s), Poly::x(T.base)));
  }
  // q = 3 mod 4 uses the primitive root construction even for n = 2
  Tower T7 = Tower::make(make_field(7, 1));
  CHECK(nonsplit_cyclic_generator_detail(T7, 2).primitive_2n);
  Tower T11 = Tower::make(make_field(11, 1));
  CHECK(nonsplit_cyclic_generator_detail(T11, 2).primitive_2n);
}

TEST_CASE("generator order certification across the grid") {
  for (auto [p, h] : {std::pair<int64_t, int>{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
    auto F = make_field(p, h);
    Tower T = Tower::make(F);
    int64_t q = F->order();
    for (int64_t n = 1; n <= 10; ++n) {
      if ((q - 1) % n == 0) CHECK(split_cyclic_generator(F, n).order() == (n == 1 ? 1 : n));
      if ((q + 1) % n == 0) CHECK(nonsplit_cyclic_generator(T, n).order() == (n == 1 ? 1 : n));
    }
  }
}

TEST_CASE("dickson audit q = 5") {
  AuditReport rep = dickson_audit(5, 1);
  CHECK(rep.group_order == 120);
  CHECK(rep.pass());
  for (auto& [k, cnt] : rep.orders_histogram) {
    if (k % 5 == 0 || k == 1) continue;
    CHECK((4 % k == 0 || 6 % k == 0));
  }
}

TEST_CASE("dickson audit q = 3") {
  AuditReport rep = dickson_audit(3, 1);
  CHECK(rep.group_order == 24);
  CHECK(rep.pass());
  for (auto& [k, cnt] : rep.orders_histogram) {
    if (k % 3 == 0 || k == 1) continue;
    CHECK((2 % k == 0 || 4 % k == 0));
  }
}

TEST_CASE("dickson audit q = 7") {
  AuditReport rep = dickson_audit(7, 1);
  CHECK(rep.group_order == 336);
  CHECK(rep.pass());
  std::vector<int> orders;
  for (auto& [k, cnt] : rep.orders_histogram) orders.push_back(k);
  CHECK(orders == std::vector<int>{1, 2, 3, 4, 6, 7, 8});
}
