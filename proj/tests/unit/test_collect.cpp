#include <catch2/catch_amalgamated.hpp>

#include "nilrep/builtins.hpp"
#include "nilrep/collect.hpp"
#include "nilrep/rng.hpp"

using namespace nilrep;

namespace {

// Independent ground truth for the Heisenberg group, from the closed-form
// product (a,b,c)(d,e,f) = (a+d, b+e, c+f+b*d).
ExponentVector heis_mul(const ExponentVector& u, const ExponentVector& v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2] + u[1] * v[0]};
}

ExponentVector random_vec(Rng& rng, int n, long box) {
  ExponentVector e(n);
  for (int i = 0; i < n; i++) e[i] = rng.uniform(-box, box);
  return e;
}

}  // namespace

TEST_CASE("collect on the documented Heisenberg words") {
  NilpotentPresentation p = heisenberg();
  CHECK(collect(p, word_from_string(p, "x2 x1")) ==
        ExponentVector{Int(1), Int(1), Int(1)});
  CHECK(collect(p, word_from_string(p, "x2^3 x1^2")) ==
        ExponentVector{Int(2), Int(3), Int(6)});
  CHECK(collect(p, Word{}) == ExponentVector{Int(0), Int(0), Int(0)});
}

TEST_CASE("collect leaves normal forms alone") {
  NilpotentPresentation p = heisenberg();
  Rng rng(11);
  for (int t = 0; t < 20; t++) {
    ExponentVector e = random_vec(rng, 3, 9);
    CHECK(collect(p, e) == e);
  }
}

TEST_CASE("multiply matches the Heisenberg closed form") {
  NilpotentPresentation p = heisenberg();
  Rng rng(12);
  for (int t = 0; t < 50; t++) {
    ExponentVector u = random_vec(rng, 3, 8);
    ExponentVector v = random_vec(rng, 3, 8);
    CHECK(multiply(p, u, v) == heis_mul(u, v));
  }
}

TEST_CASE("invert and power on the documented examples") {
  NilpotentPresentation p = heisenberg();
  ExponentVector g{Int(1), Int(1), Int(0)};
  CHECK(invert(p, g) == ExponentVector{Int(-1), Int(-1), Int(1)});
  CHECK(power(p, g, 2) == ExponentVector{Int(2), Int(2), Int(1)});
  CHECK(power(p, g, 0) == identity_exponents(p));
  CHECK(power(p, g, 1) == g);
}

TEST_CASE("inverse and power properties on random elements") {
  NilpotentPresentation p = free_nilpotent_class2(3);
  Rng rng(13);
  for (int t = 0; t < 30; t++) {
    ExponentVector u = random_vec(rng, p.n, 6);
    CHECK(is_identity(multiply(p, u, invert(p, u))));
    CHECK(is_identity(multiply(p, invert(p, u), u)));
    CHECK(power(p, u, -3) == invert(p, power(p, u, 3)));
    // power by repeated multiplication
    ExponentVector acc = identity_exponents(p);
    for (int k = 0; k <= 5; k++) {
      CHECK(power(p, u, k) == acc);
      acc = multiply(p, acc, u);
    }
  }
}

TEST_CASE("collected words agree with the unitriangular matrix model") {
  for (int m : {3, 4, 5}) {
    NilpotentPresentation p = unitriangular(m);
    UnitriangularModel model(m);
    Rng rng(100 + m);
    for (int t = 0; t < 25; t++) {
      Word w;
      int len = (int)rng.uniform(0, 8);
      for (int i = 0; i < len; i++)
        w.push_back({(int)rng.uniform(0, p.n - 1), rng.uniform_nonzero(-3, 3)});
      CHECK(model.exponents_of(model.image_of_word(w)) == collect(p, w));
    }
  }
}

TEST_CASE("associativity spot checks") {
  CHECK(associativity_check(heisenberg(), 100, 42).passed());
  CHECK(associativity_check(unitriangular(4), 50, 43).passed());
  CHECK(associativity_check(free_nilpotent_class2(4), 50, 44).passed());
  CHECK(associativity_check(free_abelian(1), 1, 45).passed());
}

TEST_CASE("the rewrite-step guard fires on tiny budgets") {
  NilpotentPresentation p = heisenberg();
  CollectOptions opts;
  opts.max_steps = 3;
  CHECK_THROWS_AS(collect(p, word_from_string(p, "x3^5 x2^5 x1^5"), opts),
                  divergence_error);
}

TEST_CASE("collection in the free abelian group is exponent addition") {
  NilpotentPresentation p = free_abelian(3);
  Rng rng(14);
  for (int t = 0; t < 10; t++) {
    ExponentVector u = random_vec(rng, 3, 9);
    ExponentVector v = random_vec(rng, 3, 9);
    ExponentVector w = multiply(p, u, v);
    for (int i = 0; i < 3; i++) CHECK(w[i] == u[i] + v[i]);
  }
}
