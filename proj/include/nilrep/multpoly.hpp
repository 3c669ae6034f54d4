#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nilrep/collect.hpp"
#include "nilrep/interpolate.hpp"
#include "nilrep/polynomial.hpp"
#include "nilrep/presentation.hpp"
#include "nilrep/rng.hpp"

namespace nilrep {

// Componentwise description of right multiplication by a generator inverse
// on normal-form exponent vectors: if u has exponents e, then u * a_gen^-1
// has exponents (polys[0](e), ..., polys[n-1](e)).
struct ActionPolys {
  int gen = 0;  // 0-based generator index
  std::vector<Polynomial> polys;
};

struct ActionPolyOptions {
  int degree_cap = 0;       // 0 means 2 * n
  int verify_points = 200;  // random points checked against the group oracle
  long verify_box = 8;      // verification points drawn from [-box, box]^n
  int probe_trials = 6;     // probes per variable when testing relevance
  std::uint64_t seed = 1234567891;
};

namespace detail {

class ActionPolyBuilder {
 public:
  ActionPolyBuilder(const NilpotentPresentation& p, int gen,
                    const ActionPolyOptions& opts)
      : p_(p), gen_(gen), opts_(opts), rng_(opts.seed) {
    if (gen < 0 || gen >= p.n) throw input_error("generator index out of range");
    cap_ = opts.degree_cap > 0 ? opts.degree_cap : 2 * p.n;
  }

  ActionPolys build() {
    const int n = p_.n;
    make_verification_table();
    ActionPolys out;
    out.gen = gen_;
    out.polys.reserve(n);
    for (int i = 0; i < n; i++) {
      if (i < gen_) {
        check_fixed_component(i, Rat(0));
        out.polys.push_back(Polynomial::variable(n, i));
      } else if (i == gen_) {
        check_fixed_component(i, Rat(-1));
        out.polys.push_back(Polynomial::variable(n, i) -
                            Polynomial::constant(n, 1));
      } else {
        out.polys.push_back(Polynomial::variable(n, i) + fit_tail(i));
      }
    }
    return out;
  }

 private:
  // Exponents of (group element with exponents pt) * a_gen^-1.
  const ExponentVector& oracle(const std::vector<long>& pt) {
    auto it = cache_.find(pt);
    if (it != cache_.end()) return it->second;
    ExponentVector e(pt.begin(), pt.end());
    Word w = word_from_exponents(e);
    w.emplace_back(gen_, Int(-1));
    return cache_.emplace(pt, collect(p_, w)).first->second;
  }

  // The correction term oracle(pt)[i] - pt[i] for component i.
  Rat tail_value(const std::vector<long>& pt, int i) {
    return Rat(oracle(pt)[i] - pt[i]);
  }

  void make_verification_table() {
    verify_pts_.reserve(opts_.verify_points);
    for (int t = 0; t < opts_.verify_points; t++) {
      std::vector<long> pt(p_.n);
      for (long& c : pt) c = rng_.uniform(-opts_.verify_box, opts_.verify_box);
      verify_pts_.push_back(std::move(pt));
    }
    for (const auto& pt : verify_pts_) oracle(pt);
  }

  // Components at or below gen must shift by a known constant exactly.
  void check_fixed_component(int i, const Rat& shift) {
    for (const auto& pt : verify_pts_)
      if (Rat(oracle(pt)[i]) != Rat(pt[i]) + shift)
        throw internal_error("multiplication action moved a component it must fix");
  }

  bool verified(const Polynomial& tail, int i) {
    for (const auto& pt : verify_pts_) {
      std::vector<Rat> rp(pt.begin(), pt.end());
      if (tail.evaluate(rp) != tail_value(pt, i)) return false;
    }
    return true;
  }

  // Variables the correction for component i can involve at all.
  std::vector<int> candidate_vars(int i) const {
    std::vector<int> vars;
    for (int k = gen_; k < i; k++) vars.push_back(k);
    return vars;
  }

  // Drops candidates that never change the value across a few random probes;
  // a miss here is caught by verification and triggers the full-set retry.
  std::vector<int> probe_relevant(int i) {
    std::vector<int> vars;
    for (int k : candidate_vars(i)) {
      bool relevant = false;
      for (int t = 0; t < opts_.probe_trials && !relevant; t++) {
        std::vector<long> base(p_.n, 0);
        for (int v : candidate_vars(i)) base[v] = rng_.uniform(-3, 3);
        Rat at_base = tail_value(base, i);
        base[k] += 1 + rng_.uniform(0, 1);
        if (tail_value(base, i) != at_base) relevant = true;
      }
      if (relevant) vars.push_back(k);
    }
    return vars;
  }

  // Interpolates the correction polynomial for component i > gen, raising the
  // degree until two consecutive fits agree and the result matches the group
  // oracle on every verification point.
  Polynomial fit_tail(int i) {
    std::vector<int> vars = probe_relevant(i);
    bool full_set = (vars.size() == candidate_vars(i).size());
    std::vector<long> zeros(p_.n, 0);
    auto eval = [&](const std::vector<long>& pt) { return tail_value(pt, i); };
    std::optional<Polynomial> prev;
    for (int d = 0; d <= cap_; d++) {
      Polynomial f = interpolate_lower_set(p_.n, vars, d, zeros, eval);
      if (prev && f == *prev) {
        if (verified(f, i)) return f;
        if (!full_set) {
          // A relevant variable slipped past the probes; refit with all of them.
          vars = candidate_vars(i);
          full_set = true;
          prev.reset();
          d = -1;
          continue;
        }
      }
      prev = std::move(f);
    }
    throw internal_error("degree cap exceeded while fitting multiplication polynomials");
  }

  const NilpotentPresentation& p_;
  int gen_;
  ActionPolyOptions opts_;
  Rng rng_;
  int cap_;
  std::map<std::vector<long>, ExponentVector> cache_;
  std::vector<std::vector<long>> verify_pts_;
};

}  // namespace detail

// Fits the polynomials describing right multiplication by a_gen^-1 from the
// collection oracle and verifies them on random points before returning.
inline ActionPolys action_polys(const NilpotentPresentation& p, int gen,
                                const ActionPolyOptions& opts = {}) {
  detail::ActionPolyBuilder builder(p, gen, opts);
  return builder.build();
}

inline std::vector<ActionPolys> all_action_polys(
    const NilpotentPresentation& p, const ActionPolyOptions& opts = {}) {
  std::vector<ActionPolys> out;
  out.reserve(p.n);
  for (int j = 0; j < p.n; j++) out.push_back(action_polys(p, j, opts));
  return out;
}

// Multiplication by a_gen^-k via k-fold composition.
inline ActionPolys action_polys_pow(const NilpotentPresentation& p, int gen,
                                    long k, const ActionPolyOptions& opts = {}) {
  if (k < 1) throw input_error("power must be a positive integer");
  ActionPolys step = action_polys(p, gen, opts);
  ActionPolys acc = step;
  for (long t = 1; t < k; t++)
    for (Polynomial& f : acc.polys) f = substitute(f, step.polys);
  return acc;
}

// Shape every fitted action must have: components below gen are untouched,
// component gen shifts by -1, and the correction for component i only
// involves the variables from gen up to i-1 and vanishes at the origin.
inline void check_action_structure(const NilpotentPresentation& p,
                                   const ActionPolys& aps) {
  const int n = p.n;
  if (static_cast<int>(aps.polys.size()) != n)
    throw internal_error("action polynomial count does not match the rank");
  for (int i = 0; i < n; i++) {
    const Polynomial& f = aps.polys[i];
    if (f.nvars() != n)
      throw internal_error("action polynomial has the wrong variable count");
    if (i < aps.gen) {
      if (!(f == Polynomial::variable(n, i)))
        throw internal_error("action polynomial below the generator is not the identity");
      continue;
    }
    if (i == aps.gen) {
      if (!(f == Polynomial::variable(n, i) - Polynomial::constant(n, 1)))
        throw internal_error("action polynomial at the generator is not x - 1");
      continue;
    }
    Polynomial tail = f - Polynomial::variable(n, i);
    Monomial origin(n, 0);
    if (tail.coefficient(origin) != 0)
      throw internal_error("action correction does not vanish at the origin");
    for (const auto& [mono, c] : tail.terms()) {
      (void)c;
      for (int v = 0; v < n; v++) {
        if (mono[v] == 0) continue;
        if (v < aps.gen || v >= i)
          throw internal_error("action correction involves a variable outside its window");
      }
    }
  }
}

// Number of monomials in the correction term of component i under generator
// gen, keyed by (i, gen) with i > gen, plus the maximum (floored at 1).
struct QbarCounts {
  std::map<std::pair<int, int>, long> counts;
  long m_hat = 1;
};

inline QbarCounts qbar_term_count(const NilpotentPresentation& p,
                                  const std::vector<ActionPolys>& all) {
  QbarCounts out;
  for (const ActionPolys& aps : all) {
    for (int i = aps.gen + 1; i < p.n; i++) {
      Polynomial tail = aps.polys[i] - Polynomial::variable(p.n, i);
      long count = static_cast<long>(tail.terms().size());
      out.counts[{i, aps.gen}] = count;
      if (count > out.m_hat) out.m_hat = count;
    }
  }
  return out;
}

inline QbarCounts qbar_term_count(const NilpotentPresentation& p,
                                  const ActionPolyOptions& opts = {}) {
  return qbar_term_count(p, all_action_polys(p, opts));
}

}  // namespace nilrep
