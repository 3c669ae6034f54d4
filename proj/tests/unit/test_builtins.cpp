#include <catch2/catch_amalgamated.hpp>

#include "nilrep/builtins.hpp"
#include "nilrep/collect.hpp"

using namespace nilrep;

TEST_CASE("heisenberg coincides with free_nilpotent_class2(2)") {
  CHECK(heisenberg().same_tables(free_nilpotent_class2(2)));
}

TEST_CASE("free nilpotent class-2 layout") {
  NilpotentPresentation p = free_nilpotent_class2(3);
  CHECK(p.n == 6);
  CHECK(p.names == std::vector<std::string>{"x1", "x2", "x3", "c12", "c13", "c23"});
  CHECK(p.pos_tail(1, 0) == Tail{{3, Int(1)}});   // x2^x1 = x2 c12
  CHECK(p.pos_tail(2, 0) == Tail{{4, Int(1)}});   // x3^x1 = x3 c13
  CHECK(p.pos_tail(2, 1) == Tail{{5, Int(1)}});   // x3^x2 = x3 c23
  CHECK(p.neg_tail(2, 1) == Tail{{5, Int(-1)}});
  // commutators are central
  CHECK(p.pos_tail(3, 0).empty());
  CHECK(p.pos_tail(5, 2).empty());
  CHECK(free_nilpotent_class2(5).n == 15);
}

TEST_CASE("unitriangular sizes and generator order") {
  NilpotentPresentation p3 = unitriangular(3);
  CHECK(p3.n == 3);
  CHECK(p3.names == std::vector<std::string>{"e12", "e23", "e13"});
  CHECK(unitriangular(4).n == 6);
  CHECK(unitriangular(6).n == 15);
  CHECK_THROWS_AS(unitriangular(1), input_error);
}

TEST_CASE("unitriangular(3) is the Heisenberg group with x3 inverted") {
  // In the matrix model e23^e12 = e23 e13^{-1}, so relabeling the central
  // generator by its inverse recovers the classical tables.
  NilpotentPresentation ut3 = unitriangular(3);
  CHECK(ut3.pos_tail(1, 0) == Tail{{2, Int(-1)}});
  CHECK(ut3.neg_tail(1, 0) == Tail{{2, Int(1)}});
  NilpotentPresentation relabeled = heisenberg();
  for (auto* table : {&relabeled.conj_pos, &relabeled.conj_neg}) {
    for (auto& [key, tail] : *table) {
      for (auto& [k, e] : tail) {
        if (k == 2) e = -e;
      }
    }
  }
  CHECK(ut3.same_tables(relabeled));
}

TEST_CASE("unitriangular tails live strictly above the conjugated generator") {
  for (int m : {3, 4, 5, 6}) {
    NilpotentPresentation p = unitriangular(m);
    for (const auto& table : {p.conj_pos, p.conj_neg}) {
      for (const auto& [key, tail] : table) {
        auto [i, j] = key;
        CHECK(j < i);
        for (const auto& [k, e] : tail) {
          CHECK(k > i);
          CHECK(e != 0);
        }
      }
    }
  }
}

TEST_CASE("builtin lookup accepts the documented syntax") {
  CHECK(builtin("heisenberg").same_tables(heisenberg()));
  CHECK(builtin("free_nilpotent_class2:3").n == 6);
  CHECK(builtin("unitriangular:4").n == 6);
  CHECK_THROWS_AS(builtin("unitriangular"), input_error);
  CHECK_THROWS_AS(builtin("unitriangular:x"), input_error);
  CHECK_THROWS_AS(builtin("heisenberg:3"), input_error);
  CHECK_THROWS_AS(builtin("lamplighter"), input_error);
  CHECK_THROWS_AS(builtin("free_nilpotent_class2:0"), input_error);
}

TEST_CASE("matrix model round trip for exponent vectors") {
  UnitriangularModel model(4);
  NilpotentPresentation p = unitriangular(4);
  Rng rng(55);
  for (int t = 0; t < 20; t++) {
    ExponentVector e(p.n);
    for (int i = 0; i < p.n; i++) e[i] = rng.uniform(-4, 4);
    CHECK(model.exponents_of(model.image_of(e)) == e);
  }
}
