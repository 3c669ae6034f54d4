#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/basis.hpp"
#include "nilrep/collect.hpp"
#include "nilrep/multpoly.hpp"
#include "nilrep/polynomial.hpp"
#include "nilrep/presentation.hpp"
#include "nilrep/rng.hpp"

namespace nilrep {

// Dense square matrix with exact rational entries.
struct Matrix {
  int d = 0;
  std::vector<Rat> a;

  Matrix() = default;
  explicit Matrix(int dim) : d(dim), a(static_cast<std::size_t>(dim) * dim) {}

  static Matrix identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; i++) m.at(i, i) = 1;
    return m;
  }

  Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * d + c]; }
  const Rat& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * d + c];
  }

  bool operator==(const Matrix& o) const { return d == o.d && a == o.a; }

  bool is_identity() const {
    for (int r = 0; r < d; r++)
      for (int c = 0; c < d; c++)
        if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
  }

  bool is_zero() const {
    for (const Rat& x : a)
      if (x != 0) return false;
    return true;
  }

  bool is_integral() const {
    for (const Rat& x : a)
      if (!is_integer(x)) return false;
    return true;
  }

  bool is_lower_unitriangular() const {
    for (int r = 0; r < d; r++) {
      if (at(r, r) != 1) return false;
      for (int c = r + 1; c < d; c++)
        if (at(r, c) != 0) return false;
    }
    return true;
  }

  bool is_upper_unitriangular() const {
    for (int r = 0; r < d; r++) {
      if (at(r, r) != 1) return false;
      for (int c = 0; c < r; c++)
        if (at(r, c) != 0) return false;
    }
    return true;
  }
};

// Row-accumulation product that skips zero entries; generator images and
// their products are mostly zeros, so this saves most of the rational work.
inline Matrix operator*(const Matrix& A, const Matrix& B) {
  if (A.d != B.d) throw internal_error("matrix dimension mismatch");
  const int d = A.d;
  Matrix C(d);
  for (int i = 0; i < d; i++)
    for (int k = 0; k < d; k++) {
      const Rat& s = A.at(i, k);
      if (s == 0) continue;
      for (int l = 0; l < d; l++) {
        const Rat& b = B.at(k, l);
        if (b != 0) C.at(i, l) += s * b;
      }
    }
  return C;
}

inline Matrix operator-(const Matrix& A, const Matrix& B) {
  if (A.d != B.d) throw internal_error("matrix dimension mismatch");
  Matrix C(A.d);
  for (std::size_t i = 0; i < C.a.size(); i++) C.a[i] = A.a[i] - B.a[i];
  return C;
}

// Gauss-Jordan with exact arithmetic; group-element images are always
// invertible, so a missing pivot means the pipeline is broken.
inline Matrix matrix_inverse(const Matrix& M) {
  const int d = M.d;
  Matrix work = M;
  Matrix inv = Matrix::identity(d);
  for (int col = 0; col < d; col++) {
    int pivot = col;
    while (pivot < d && work.at(pivot, col) == 0) pivot++;
    if (pivot == d) throw internal_error("matrix is singular");
    if (pivot != col)
      for (int c = 0; c < d; c++) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    Rat scale = Rat(1) / work.at(col, col);
    for (int c = 0; c < d; c++) {
      work.at(col, c) *= scale;
      inv.at(col, c) *= scale;
    }
    for (int r = 0; r < d; r++) {
      if (r == col) continue;
      Rat f = work.at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < d; c++) {
        work.at(r, c) -= f * work.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

inline Matrix matrix_pow(const Matrix& M, const Int& e) {
  if (e < 0) return matrix_pow(matrix_inverse(M), -e);
  Matrix result = Matrix::identity(M.d);
  Matrix base = M;
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

// Matrices for the right-translation action on the module basis: row k of
// mats[j] holds the coordinates of b_k's image under a_j.  With coefficient
// ROW vectors multiplying from the left, words map to ordered products.
// nilpowers[j] caches the powers of mats[j] - I up to the first vanishing
// one; since the images are unipotent, arbitrary integer powers of mats[j]
// are short binomial series in these instead of long multiplication chains.
struct MatrixRep {
  int dim = 0;
  std::vector<Matrix> mats;
  std::vector<Matrix> inv_mats;
  std::vector<std::vector<Matrix>> nilpowers;
  std::vector<Polynomial> basis_order;
};

inline MatrixRep representation(const NilpotentPresentation& p,
                                const PolyBasis& B,
                                const std::vector<ActionPolys>& all) {
  if (static_cast<int>(all.size()) != p.n)
    throw internal_error("need one action-polynomial set per generator");
  MatrixRep rep;
  rep.dim = B.dim();
  rep.basis_order = B.elems;
  rep.mats.reserve(p.n);
  for (int j = 0; j < p.n; j++) {
    Matrix m(rep.dim);
    for (int k = 0; k < rep.dim; k++) {
      std::vector<Rat> row = decompose(B, act(B.elems[k], all[j]));
      for (int c = 0; c < rep.dim; c++) m.at(k, c) = row[c];
    }
    rep.mats.push_back(std::move(m));
  }
  rep.inv_mats.reserve(p.n);
  for (int j = 0; j < p.n; j++)
    rep.inv_mats.push_back(matrix_inverse(rep.mats[j]));
  Matrix id = Matrix::identity(rep.dim);
  rep.nilpowers.resize(p.n);
  for (int j = 0; j < p.n; j++) {
    Matrix power = id;
    Matrix nil = rep.mats[j] - id;
    for (int k = 0; k <= rep.dim && !power.is_zero(); k++) {
      rep.nilpowers[j].push_back(power);
      power = power * nil;
    }
    if (!power.is_zero())
      throw internal_error("generator image is not unipotent");
  }
  return rep;
}

inline MatrixRep representation(const NilpotentPresentation& p,
                                const PolyBasis& B) {
  return representation(p, B, all_action_polys(p));
}

inline Matrix image_of_power(const MatrixRep& rep, int gen, const Int& e) {
  if (gen < 0 || gen >= static_cast<int>(rep.mats.size()))
    throw input_error("generator index out of range");
  if (gen < static_cast<int>(rep.nilpowers.size()) &&
      !rep.nilpowers[gen].empty()) {
    // (I + N)^e = sum_k binom(e, k) N^k, exact for any integer e because N
    // is nilpotent; binom(e, k) accumulates as e(e-1)...(e-k+1)/k!.
    const auto& powers = rep.nilpowers[gen];
    Matrix out(rep.dim);
    Rat binom(1);
    for (std::size_t k = 0; k < powers.size(); k++) {
      if (k > 0) binom *= Rat(e - Int(k - 1), Int(k));
      if (binom == 0) break;
      for (std::size_t t = 0; t < out.a.size(); t++)
        if (powers[k].a[t] != 0) out.a[t] += binom * powers[k].a[t];
    }
    return out;
  }
  if (e >= 0) return matrix_pow(rep.mats[gen], e);
  return matrix_pow(rep.inv_mats[gen], -e);
}

inline Matrix image_of_word(const MatrixRep& rep, const Word& w) {
  Matrix img = Matrix::identity(rep.dim);
  for (const auto& [gen, e] : w) img = img * image_of_power(rep, gen, e);
  return img;
}

inline Matrix image_of_exponents(const MatrixRep& rep,
                                 const ExponentVector& e) {
  return image_of_word(rep, word_from_exponents(e));
}

// Checks every conjugation relation as a matrix identity,
// rho(x_j)^-1 rho(x_i) rho(x_j) = rho(x_i * tail), exactly.
struct RelationCheck {
  long checked = 0;
  long failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

inline RelationCheck verify_relations(const NilpotentPresentation& p,
                                      const MatrixRep& rep) {
  RelationCheck out;
  auto run = [&](int i, int j, bool positive, const Tail& tail) {
    Matrix conjugator = positive ? rep.mats[j] : rep.inv_mats[j];
    Matrix conjugator_inv = positive ? rep.inv_mats[j] : rep.mats[j];
    Matrix lhs = conjugator_inv * rep.mats[i] * conjugator;
    Matrix rhs = rep.mats[i];
    for (const auto& [gen, e] : tail) rhs = rhs * image_of_power(rep, gen, e);
    out.checked++;
    if (!(lhs == rhs)) {
      out.failures++;
      if (out.first_failure.empty())
        out.first_failure = p.names[i] + "^" + p.names[j] +
                            (positive ? "" : "^-1");
    }
  };
  for (int i = 0; i < p.n; i++)
    for (int j = 0; j < i; j++) {
      run(i, j, true, p.pos_tail(i, j));
      run(i, j, false, p.neg_tail(i, j));
    }
  return out;
}

// Sampled behavioural checks: each trial draws one random word pair for the
// homomorphism identity and one word (sometimes a deliberately constructed
// identity) for the faithfulness equivalence.
struct FaithfulnessCheck {
  long trials = 0;
  long hom_failures = 0;
  long faith_failures = 0;
  std::string first_failure;

  bool passed() const { return hom_failures == 0 && faith_failures == 0; }
};

namespace detail {

inline Word random_word(Rng& rng, int n, int max_len, long box) {
  Word w;
  long len = rng.uniform(0, max_len);
  for (long t = 0; t < len; t++)
    w.emplace_back(static_cast<int>(rng.uniform(0, n - 1)),
                   Int(rng.uniform_nonzero(-box, box)));
  return w;
}

}  // namespace detail

inline FaithfulnessCheck verify_faithful_sample(const NilpotentPresentation& p,
                                                const MatrixRep& rep,
                                                long trials, int max_len,
                                                long box, std::uint64_t seed) {
  FaithfulnessCheck out;
  out.trials = trials;
  Rng rng(seed);
  for (long t = 0; t < trials; t++) {
    // Homomorphism: the image of a product of two collected elements equals
    // the product of their images.
    Word u = detail::random_word(rng, p.n, max_len, box);
    Word v = detail::random_word(rng, p.n, max_len, box);
    ExponentVector eu = collect(p, u);
    ExponentVector ev = collect(p, v);
    Matrix lhs = image_of_exponents(rep, eu) * image_of_exponents(rep, ev);
    Matrix rhs = image_of_exponents(rep, multiply(p, eu, ev));
    if (!(lhs == rhs)) {
      out.hom_failures++;
      if (out.first_failure.empty())
        out.first_failure = "product of " + word_to_string(p, u) + " and " +
                            word_to_string(p, v);
    }
    // Faithfulness: the image is the identity matrix exactly when the word
    // collects to the identity.  Every fourth trial feeds a guaranteed
    // identity word so that direction is really exercised.
    Word w = detail::random_word(rng, p.n, max_len, box);
    if (t % 4 == 0) w = word_concat(w, word_inverse(w));
    bool is_id_group = is_identity(collect(p, w));
    bool is_id_matrix = image_of_word(rep, w).is_identity();
    if (is_id_group != is_id_matrix) {
      out.faith_failures++;
      if (out.first_failure.empty())
        out.first_failure = "word " + word_to_string(p, w);
    }
  }
  return out;
}

// Shape report: integral entries, and unitriangular either as indexed
// (ascending basis order, lower triangular) or after reversing the order.
struct UnitriangularCheck {
  bool integral = true;
  bool lower_as_produced = true;
  bool upper_reversed = true;

  bool passed() const { return integral && (lower_as_produced || upper_reversed); }
};

inline UnitriangularCheck check_unitriangular(const MatrixRep& rep) {
  UnitriangularCheck out;
  for (const Matrix& m : rep.mats) {
    if (!m.is_integral()) out.integral = false;
    if (!m.is_lower_unitriangular()) out.lower_as_produced = false;
    Matrix reversed(m.d);
    for (int r = 0; r < m.d; r++)
      for (int c = 0; c < m.d; c++)
        reversed.at(r, c) = m.at(m.d - 1 - r, m.d - 1 - c);
    if (!reversed.is_upper_unitriangular()) out.upper_reversed = false;
  }
  return out;
}

// (rho(a_j) - I)^dim must vanish exactly for every generator.
inline bool nilpotency_check(const MatrixRep& rep) {
  Matrix id = Matrix::identity(rep.dim);
  for (const Matrix& m : rep.mats)
    if (!matrix_pow(m - id, rep.dim).is_zero()) return false;
  return true;
}

}  // namespace nilrep
