#pragma once

#include <list>
#include <string>

#include "nilrep/presentation.hpp"
#include "nilrep/rng.hpp"

namespace nilrep {

// Raised when collection exceeds its rewrite-step budget, which indicates an
// inconsistent presentation (or a hostile input size).
class divergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CollectOptions {
  long long max_steps = 10000000;  // rewrite-step guard
};

namespace detail {

using Block = std::pair<int, Int>;  // generator, nonzero exponent
using BlockList = std::list<Block>;

inline void splice_tail_pow(BlockList& w, BlockList::iterator pos, int gen,
                            const Tail& tail, int sgn) {
  // Inserts (x_gen * tail)^{sgn} before pos, sgn in {+1, -1}.
  if (sgn > 0) {
    w.insert(pos, {gen, 1});
    for (const auto& [k, e] : tail) w.insert(pos, {k, e});
  } else {
    for (auto it = tail.rbegin(); it != tail.rend(); ++it)
      w.insert(pos, {it->first, -it->second});
    w.insert(pos, {gen, -1});
  }
}

}  // namespace detail

// Collection from the left: repeatedly locate the leftmost out-of-order
// adjacent pair and rewrite it via the conjugation tails, splitting powers one
// letter at a time, until the word is the normal form x_1^{e_1}...x_n^{e_n}.
inline ExponentVector collect(const NilpotentPresentation& p, const Word& word,
                              const CollectOptions& opts = {}) {
  detail::BlockList w;
  for (const auto& [g, e] : word) {
    if (g < 0 || g >= p.n) throw input_error("word references generator out of range");
    if (e != 0) w.push_back({g, e});
  }

  long long steps = 0;
  auto it = w.begin();
  // Merge a block with its neighbours and return an iterator no further right
  // than the affected position.
  auto merged = [&](detail::BlockList::iterator at) {
    if (at != w.end() && at->second == 0) at = w.erase(at);
    if (at == w.end() || at == w.begin()) return at;
    auto prev = std::prev(at);
    if (prev->first == at->first) {
      prev->second += at->second;
      w.erase(at);
      if (prev->second == 0) return w.erase(prev);
      return prev;
    }
    return at;
  };

  while (it != w.end()) {
    auto next = std::next(it);
    if (next == w.end()) break;
    int a = it->first, b = next->first;
    if (a < b) {
      ++it;
      continue;
    }
    if (a == b) {
      it->second += next->second;
      w.erase(next);
      if (it->second == 0) {
        it = w.erase(it);
        if (it != w.begin()) --it;
      }
      continue;
    }

    // Out of order: move one letter of the right block left past one letter
    // of the left block.
    if (++steps > opts.max_steps)
      throw divergence_error("collection exceeded " +
                             std::to_string(opts.max_steps) +
                             " rewrite steps; presentation is likely inconsistent");
    int sa = it->second > 0 ? 1 : -1;
    int sb = next->second > 0 ? 1 : -1;
    const Tail& tail = sb > 0 ? p.pos_tail(a, b) : p.neg_tail(a, b);

    it->second -= sa;
    next->second -= sb;
    // Build [x_b^{sb}, (x_a * tail)^{sa}] in front of what is left of the
    // right block.
    auto rest = next->second == 0 ? w.erase(next) : next;
    auto inserted = w.insert(rest, {b, Int(sb)});
    detail::splice_tail_pow(w, rest, a, tail, sa);
    if (it->second == 0) w.erase(it);
    // The moved letter may now be out of order with what precedes it.
    it = merged(inserted);
    if (it != w.begin()) --it;
  }

  ExponentVector result(p.n, Int(0));
  int prev = -1;
  for (const auto& [g, e] : w) {
    if (g <= prev) throw internal_error("collection left an unsorted word");
    result[g] = e;
    prev = g;
  }
  return result;
}

inline ExponentVector collect(const NilpotentPresentation& p,
                              const ExponentVector& e,
                              const CollectOptions& opts = {}) {
  return collect(p, word_from_exponents(e), opts);
}

inline ExponentVector multiply(const NilpotentPresentation& p,
                               const ExponentVector& u, const ExponentVector& v,
                               const CollectOptions& opts = {}) {
  return collect(p, word_concat(word_from_exponents(u), word_from_exponents(v)),
                 opts);
}

inline ExponentVector invert(const NilpotentPresentation& p,
                             const ExponentVector& u,
                             const CollectOptions& opts = {}) {
  return collect(p, word_inverse(word_from_exponents(u)), opts);
}

inline ExponentVector identity_exponents(const NilpotentPresentation& p) {
  return ExponentVector(p.n, Int(0));
}

inline bool is_identity(const ExponentVector& e) {
  for (const auto& v : e)
    if (v != 0) return false;
  return true;
}

// u^k by binary powering; k may be negative or zero.
inline ExponentVector power(const NilpotentPresentation& p,
                            const ExponentVector& u, const Int& k,
                            const CollectOptions& opts = {}) {
  Int e = k;
  ExponentVector base = u;
  if (e < 0) {
    base = invert(p, u, opts);
    e = -e;
  }
  ExponentVector acc = identity_exponents(p);
  while (e > 0) {
    if ((e & 1) != 0) acc = multiply(p, acc, base, opts);
    e >>= 1;
    if (e > 0) base = multiply(p, base, base, opts);
  }
  return acc;
}

// Checks that conjugating x_i by x_j and then by x_j^{-1} (and vice versa)
// returns x_i, for every pair j < i.  A cheap necessary condition for the two
// conjugation tables to be mutually consistent.
inline void check_conjugation_roundtrip(const NilpotentPresentation& p,
                                        const CollectOptions& opts = {}) {
  for (int i = 1; i < p.n; i++) {
    for (int j = 0; j < i; j++) {
      // x_j (x_i^{x_j}) x_j^{-1} should collect to x_i.
      Word w{{j, 1}, {i, 1}};
      for (const auto& [k, e] : p.pos_tail(i, j)) w.push_back({k, e});
      w.push_back({j, -1});
      ExponentVector r = collect(p, w, opts);
      Word w2{{j, -1}, {i, 1}};
      for (const auto& [k, e] : p.neg_tail(i, j)) w2.push_back({k, e});
      w2.push_back({j, 1});
      ExponentVector r2 = collect(p, w2, opts);
      bool ok = true;
      for (int k = 0; k < p.n; k++) {
        Int want = k == i ? 1 : 0;
        if (r[k] != want || r2[k] != want) ok = false;
      }
      if (!ok)
        throw input_error("inconsistent presentation: conjugating " +
                          p.names[i] + " by " + p.names[j] +
                          " does not round-trip");
    }
  }
}

struct AssociativityReport {
  long trials = 0;
  long failures = 0;
  std::string first_counterexample;  // empty when passed
  bool passed() const { return failures == 0; }
};

// Randomized associativity test: (u*v)*w == u*(v*w) for random exponent
// vectors.  Consistency of the presentation is equivalent to associativity of
// the collected product, so this is a practical consistency check.
inline AssociativityReport associativity_check(const NilpotentPresentation& p,
                                               long trials, std::uint64_t seed,
                                               long box = 5,
                                               const CollectOptions& opts = {}) {
  Rng rng(seed);
  AssociativityReport rep;
  rep.trials = trials;
  for (long t = 0; t < trials; t++) {
    ExponentVector u(p.n), v(p.n), w(p.n);
    for (int i = 0; i < p.n; i++) {
      u[i] = rng.uniform(-box, box);
      v[i] = rng.uniform(-box, box);
      w[i] = rng.uniform(-box, box);
    }
    ExponentVector lhs = multiply(p, multiply(p, u, v, opts), w, opts);
    ExponentVector rhs = multiply(p, u, multiply(p, v, w, opts), opts);
    if (lhs != rhs) {
      rep.failures++;
      if (rep.first_counterexample.empty()) {
        rep.first_counterexample = "u=" + exponents_to_string(u) +
                                   " v=" + exponents_to_string(v) +
                                   " w=" + exponents_to_string(w) +
                                   " (uv)w=" + exponents_to_string(lhs) +
                                   " u(vw)=" + exponents_to_string(rhs);
      }
    }
  }
  return rep;
}

}  // namespace nilrep
