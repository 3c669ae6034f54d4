#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "nilrep/basis.hpp"
#include "nilrep/builtins.hpp"
#include "nilrep/matrep.hpp"
#include "nilrep/rng.hpp"

using namespace nilrep;

namespace {

MatrixRep make_rep(const NilpotentPresentation& p) {
  std::vector<ActionPolys> all = all_action_polys(p);
  PolyBasis B = build_basis_coordinate(p, all);
  return representation(p, B, all);
}

}  // namespace

TEST_CASE("decomposition of a difference of coordinates") {
  NilpotentPresentation p = heisenberg();
  PolyBasis B = build_basis_coordinate(p);
  std::vector<Rat> c = decompose(B, poly_from_string("x3 - x2", 3));
  REQUIRE(c.size() == 4);
  CHECK(c[0] == 0);
  CHECK(c[1] == 0);
  CHECK(c[2] == -1);
  CHECK(c[3] == 1);
}

TEST_CASE("rank one free abelian representation") {
  NilpotentPresentation p = free_abelian(1);
  MatrixRep rep = make_rep(p);
  REQUIRE(rep.dim == 2);
  const Matrix& m = rep.mats[0];
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(1, 0) == -1);
  CHECK(m.at(1, 1) == 1);
}

TEST_CASE("Heisenberg generator matrices") {
  NilpotentPresentation p = heisenberg();
  MatrixRep rep = make_rep(p);
  REQUIRE(rep.dim == 4);
  // Basis order (1, x1, x2, x3); the top generator only shifts x3 by -1.
  const Matrix& m3 = rep.mats[2];
  for (int r = 0; r < 3; r++)
    for (int c = 0; c < 4; c++) CHECK(m3.at(r, c) == (r == c ? 1 : 0));
  CHECK(m3.at(3, 0) == -1);
  CHECK(m3.at(3, 1) == 0);
  CHECK(m3.at(3, 2) == 0);
  CHECK(m3.at(3, 3) == 1);
}

TEST_CASE("matrix rows reproduce the action on random span elements") {
  NilpotentPresentation p = unitriangular(4);
  std::vector<ActionPolys> all = all_action_polys(p);
  PolyBasis B = build_basis_coordinate(p, all);
  MatrixRep rep = representation(p, B, all);
  Rng rng(4242);
  for (int trial = 0; trial < 20; trial++) {
    Polynomial f(p.n);
    for (const Polynomial& b : B.elems) {
      Polynomial scaled = b * Rat(rng.uniform(-5, 5), rng.uniform(1, 2));
      f += scaled;
    }
    std::vector<Rat> row = decompose(B, f);
    for (int j = 0; j < p.n; j++) {
      std::vector<Rat> want = decompose(B, act(f, all[j]));
      for (int c = 0; c < rep.dim; c++) {
        Rat got(0);
        for (int k = 0; k < rep.dim; k++) got += row[k] * rep.mats[j].at(k, c);
        CAPTURE(trial, j, c);
        REQUIRE(got == want[c]);
      }
    }
  }
}

TEST_CASE("decompose and recombine round-trip on the span") {
  NilpotentPresentation p = free_nilpotent_class2(3);
  PolyBasis B = build_basis_coordinate(p);
  Rng rng(99);
  for (int trial = 0; trial < 20; trial++) {
    Polynomial f(p.n);
    for (const Polynomial& b : B.elems) {
      Polynomial scaled = b * Rat(rng.uniform(-9, 9), rng.uniform(1, 3));
      f += scaled;
    }
    std::vector<Rat> c = decompose(B, f);
    Polynomial back(p.n);
    for (std::size_t k = 0; k < c.size(); k++) {
      Polynomial scaled = B.elems[k] * c[k];
      back += scaled;
    }
    CHECK(back == f);
  }
}

TEST_CASE("images of words") {
  NilpotentPresentation p = heisenberg();
  MatrixRep rep = make_rep(p);
  CHECK(image_of_word(rep, {}).is_identity());

  Rng rng(31);
  for (int trial = 0; trial < 50; trial++) {
    Word w = detail::random_word(rng, p.n, 8, 5);
    CHECK(image_of_word(rep, word_concat(w, word_inverse(w))).is_identity());
  }

  // The commutator of the first two generators is a power of the third;
  // its image must match whatever collection says that power is.
  Word comm = {{1, 1}, {0, 1}, {1, -1}, {0, -1}};
  ExponentVector e = collect(p, comm);
  CHECK(e[0] == 0);
  CHECK(e[1] == 0);
  CHECK((e[2] == 1 || e[2] == -1));
  CHECK(image_of_word(rep, comm) == image_of_power(rep, 2, e[2]));
}

TEST_CASE("all relations hold as matrix identities") {
  for (const NilpotentPresentation& p :
       {heisenberg(), free_abelian(3), free_nilpotent_class2(3),
        unitriangular(4), unitriangular(5)}) {
    MatrixRep rep = make_rep(p);
    RelationCheck rc = verify_relations(p, rep);
    CAPTURE(p.n, rc.first_failure);
    CHECK(rc.passed());
    CHECK(rc.checked == 1L * p.n * (p.n - 1));
  }
}

TEST_CASE("a corrupted representation fails relation checking") {
  NilpotentPresentation p = heisenberg();
  MatrixRep rep = make_rep(p);
  rep.mats[0].at(0, 1) += 1;
  rep.inv_mats[0] = matrix_inverse(rep.mats[0]);
  RelationCheck rc = verify_relations(p, rep);
  CHECK(rc.failures > 0);
}

TEST_CASE("relation checking is vacuous at rank one") {
  NilpotentPresentation p = free_abelian(1);
  MatrixRep rep = make_rep(p);
  RelationCheck rc = verify_relations(p, rep);
  CHECK(rc.checked == 0);
  CHECK(rc.passed());
}

TEST_CASE("sampled faithfulness and homomorphism") {
  NilpotentPresentation p = heisenberg();
  MatrixRep rep = make_rep(p);
  FaithfulnessCheck fc = verify_faithful_sample(p, rep, 200, 16, 5, 12345);
  CAPTURE(fc.first_failure);
  CHECK(fc.passed());
  CHECK(fc.trials == 200);

  // Explicit endpoints of the equivalence.
  CHECK(image_of_word(rep, {{2, 1}, {2, -1}}).is_identity());
  CHECK_FALSE(image_of_word(rep, {{2, 1}}).is_identity());
}

TEST_CASE("sampled checks pass on a deeper group") {
  NilpotentPresentation p = unitriangular(4);
  MatrixRep rep = make_rep(p);
  FaithfulnessCheck fc = verify_faithful_sample(p, rep, 50, 10, 4, 777);
  CAPTURE(fc.first_failure);
  CHECK(fc.passed());
}

TEST_CASE("integral unitriangular shape") {
  for (const NilpotentPresentation& p :
       {heisenberg(), free_abelian(2), free_nilpotent_class2(3),
        unitriangular(4)}) {
    MatrixRep rep = make_rep(p);
    UnitriangularCheck uc = check_unitriangular(rep);
    CAPTURE(p.n);
    CHECK(uc.integral);
    CHECK(uc.lower_as_produced);
    CHECK(uc.upper_reversed);
    CHECK(uc.passed());
  }
}

TEST_CASE("generator images are unipotent") {
  for (const NilpotentPresentation& p :
       {heisenberg(), free_nilpotent_class2(3), unitriangular(4)}) {
    MatrixRep rep = make_rep(p);
    CHECK(nilpotency_check(rep));
  }
}

TEST_CASE("matrix helpers") {
  Matrix m = Matrix::identity(3);
  m.at(2, 0) = Rat(1, 2);
  CHECK_FALSE(m.is_integral());
  CHECK(m.is_lower_unitriangular());
  CHECK_FALSE(m.is_upper_unitriangular());
  Matrix inv = matrix_inverse(m);
  CHECK((m * inv).is_identity());
  CHECK(matrix_pow(m, Int(0)).is_identity());
  CHECK(matrix_pow(m, Int(-2)) == matrix_inverse(m * m));
  Matrix n = m - Matrix::identity(3);
  CHECK(matrix_pow(n, 3).is_zero());
  Matrix singular(2);
  singular.at(0, 0) = 1;
  CHECK_THROWS_WITH(matrix_inverse(singular),
                    Catch::Matchers::ContainsSubstring("singular"));
}
