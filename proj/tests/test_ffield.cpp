#include <doctest.h>

#include "gfc/ffield.hpp"

using namespace gfc;

TEST_CASE("prime field construction and arithmetic") {
  auto F7 = make_field(7, 1);
  CHECK(F7->order() == 7);
  CHECK((F7->from_int(3) + F7->from_int(5)) == F7->from_int(1));
  CHECK((F7->from_int(3) * F7->from_int(5)) == F7->from_int(1));
  CHECK(F7->inv(F7->from_int(3)) == F7->from_int(5));
  CHECK(F7->pow(F7->from_int(3), 6) == F7->one());

  CHECK_THROWS_AS(make_field(2, 1), error);
  CHECK_THROWS_AS(make_field(6, 1), error);
  CHECK_THROWS_AS(make_field(7, 0), error);
}

TEST_CASE("canonical modulus of F_9 is t^2 + 1") {
  auto F9 = make_field(3, 2);
  CHECK(F9->order() == 9);
  auto mod = F9->modulus();
  REQUIRE(mod.size() == 3);
  CHECK(mod[0] == F9->base()->one());
  CHECK(mod[1].is_zero());
  CHECK(mod[2] == F9->base()->one());
  // t * t = -1 = 2
  CHECK(F9->mul(F9->gen(), F9->gen()) == F9->from_int(2));
}

TEST_CASE("fermat law and inverse on extensions") {
  auto F9 = make_field(3, 2);
  for (int64_t k = 0; k < 9; ++k) {
    Elem a = F9->elem_of_index(k);
    CHECK(F9->pow(a, 9) == a);
    if (!a.is_zero()) {
      CHECK(F9->mul(a, F9->inv(a)) == F9->one());
      CHECK(F9->pow(a, 8) == F9->one());
    }
  }
}

TEST_CASE("nonsquares") {
  CHECK(find_nonsquare(make_field(7, 1)) == make_field(7, 1)->from_int(3));
  CHECK(find_nonsquare(make_field(5, 1)) == make_field(5, 1)->from_int(2));
  auto F9 = make_field(3, 2);
  Elem s = find_nonsquare(F9);
  CHECK(F9->pow(s, 4) == F9->from_int(-1));
  // square count: exactly (q-1)/2 nonzero squares
  int n_sq = 0;
  for (int64_t k = 1; k < 9; ++k)
    if (F9->is_square(F9->elem_of_index(k))) ++n_sq;
  CHECK(n_sq == 4);
}

TEST_CASE("roots of unity") {
  auto F7 = make_field(7, 1);
  CHECK(root_of_unity(F7, 3) == F7->from_int(2));
  CHECK(root_of_unity(F7, 6) == F7->from_int(3));
  CHECK_THROWS_AS(root_of_unity(F7, 4), error);
  for (int64_t n : {1, 2, 3, 6}) {
    Elem z = root_of_unity(F7, n);
    CHECK(F7->mult_order(z) == n);
  }
}

TEST_CASE("frobenius") {
  auto F9 = make_field(3, 2);
  // t -> t^3 = 2t since t^2 = -1
  CHECK(F9->frobenius(F9->gen()) == F9->make_elem({F9->base()->zero(), F9->base()->from_int(2)}));
  CHECK(F9->frobenius(F9->gen(), 0) == F9->gen());
  CHECK(F9->frobenius(F9->gen(), 2) == F9->gen());

  auto F7 = make_field(7, 1);
  Tower T = Tower::make(F7);
  CHECK(T.s == F7->from_int(3));
  Elem a = T.top->make_elem({F7->from_int(2), F7->from_int(5)});
  Elem c = T.top->frobenius(a);
  CHECK(c == T.top->make_elem({F7->from_int(2), F7->from_int(2)}));
  CHECK(c == T.conj(a));
  // frobenius fixes the embedded base field pointwise
  for (int64_t k = 0; k < 7; ++k) {
    Elem b = T.embed(F7->elem_of_index(k));
    CHECK(T.top->frobenius(b) == b);
  }
}

TEST_CASE("frobenius is a field automorphism on sampled pairs") {
  auto F = make_field(5, 2);
  for (int64_t j = 0; j < 25; j += 3) {
    for (int64_t k = 1; k < 25; k += 4) {
      Elem a = F->elem_of_index(j), b = F->elem_of_index(k);
      CHECK(F->frobenius(a + b) == F->frobenius(a) + F->frobenius(b));
      CHECK(F->frobenius(a * b) == F->frobenius(a) * F->frobenius(b));
    }
  }
}

TEST_CASE("tower over F_9") {
  auto F9 = make_field(3, 2);
  Tower T = Tower::make(F9);
  CHECK(T.top->order() == 81);
  CHECK(T.top->mul(T.i(), T.i()) == T.embed(T.s));
  // conjugation = q-power frobenius on the top field
  for (int64_t k = 0; k < 81; k += 7) {
    Elem a = T.top->elem_of_index(k);
    CHECK(T.conj(a) == T.top->frobenius(a));
  }
}

TEST_CASE("interning gives pointer-stable fields") {
  auto a = make_field(7, 1);
  auto b = make_field(7, 1);
  CHECK(a.get() == b.get());
  auto c = make_field(3, 2);
  auto d = Field::extension_canonical(Field::prime(3), 2);
  CHECK(c.get() == d.get());
}

TEST_CASE("field mismatch is rejected") {
  auto F7 = make_field(7, 1);
  auto F5 = make_field(5, 1);
  CHECK_THROWS_AS(F7->add(F7->one(), F5->one()), error);
  CHECK_THROWS_AS(F7->inv(F7->zero()), error);
}

TEST_CASE("count_nth_roots closed form") {
  auto F7 = make_field(7, 1);
  CHECK(count_nth_roots(F7, F7->one(), 3) == 3);
  CHECK(count_nth_roots(F7, F7->from_int(3), 3) == 0);
  CHECK(count_nth_roots(F7, F7->from_int(6), 2) == 0);
  CHECK(count_nth_roots(F7, F7->from_int(2), 2) == 2);
  CHECK(count_nth_roots(F7, F7->zero(), 5) == 1);
}
