#pragma once

#include <vector>

#include "nilrep/multpoly.hpp"
#include "nilrep/polynomial.hpp"
#include "nilrep/presentation.hpp"

namespace nilrep {

// Echelonized list of polynomials: monic, ascending by leading monomial, and
// auto-reduced (no element's leading monomial occurs in any other element).
// The counters record how much work the construction algorithms did.
struct PolyBasis {
  std::vector<Polynomial> elems;
  long insert_count = 0;
  long reduction_steps = 0;

  int dim() const { return static_cast<int>(elems.size()); }
};

struct BasisOptions {
  long orbit_cap = 0;  // max images per orbit before giving up; 0 means auto
};

// Full normal form of f against the basis: one descending pass subtracting
// the matching multiple of each element, which eliminates every occurrence
// of every leading monomial because the basis is auto-reduced.
inline Polynomial normal_form(const PolyBasis& B, Polynomial f,
                              long* steps = nullptr) {
  for (auto it = B.elems.rbegin(); it != B.elems.rend(); ++it) {
    Rat c = f.coefficient(it->leading_monomial());
    if (c != 0) {
      f.sub_scaled(*it, c);
      if (steps) (*steps)++;
    }
  }
  return f;
}

// Span test and extension: returns the residual of f against the basis.  A
// zero residual means f was already in the span; otherwise the monic form of
// the residual is spliced in at its ordered position and the other elements
// are back-reduced so the echelon shape is kept.
inline Polynomial insert(PolyBasis& B, const Polynomial& f) {
  B.insert_count++;
  Polynomial r = normal_form(B, f, &B.reduction_steps);
  if (r.is_zero()) return r;
  Polynomial monic = r * (Rat(1) / r.leading_coefficient());
  const Monomial& lm = monic.leading_monomial();
  auto pos = B.elems.begin();
  while (pos != B.elems.end() &&
         revlex_compare(pos->leading_monomial(), lm) < 0)
    ++pos;
  pos = B.elems.insert(pos, monic);
  for (auto it = B.elems.begin(); it != B.elems.end(); ++it) {
    if (it == pos) continue;
    Rat c = it->coefficient(lm);
    if (c != 0) {
      it->sub_scaled(*pos, c);
      B.reduction_steps++;
    }
  }
  return r;
}

// Right-translation action on polynomial functions: f^{a_gen} in terms of
// exponent coordinates is f composed with the multiplication polynomials.
inline Polynomial act(const Polynomial& f, const ActionPolys& aps) {
  return substitute(f, aps.polys);
}

// Coefficients expressing f as a linear combination of the basis elements.
inline std::vector<Rat> decompose(const PolyBasis& B, Polynomial f) {
  std::vector<Rat> coeffs(B.elems.size(), Rat(0));
  for (std::size_t k = B.elems.size(); k-- > 0;) {
    Rat c = f.coefficient(B.elems[k].leading_monomial());
    if (c != 0) {
      f.sub_scaled(B.elems[k], c);
      coeffs[k] = c;
    }
  }
  if (!f.is_zero())
    throw internal_error("decompose: polynomial is not in the span of the basis");
  return coeffs;
}

// Worst-case bounds on the basis size and on the insert counts of the two
// construction algorithms, in terms of the Hirsch length n and the largest
// number m_hat of correction monomials any generator action adds to a
// coordinate.  The test harness and the bench tables measure against these.
inline long dimension_bound(int n, long m_hat) {
  Int b = Int(m_hat) * n * (n + 1) / 2 + 1;
  return static_cast<long>(b);
}

inline long general_insert_bound(int n, long m_hat) {
  Int b = Int(n) + 1 + (Int(m_hat + 1) * n * n + Int(1 - m_hat) * n) / 2;
  return static_cast<long>(b);
}

inline long coordinate_insert_bound(int n, long m_hat) {
  Int b = Int(n) + 1 + Int(m_hat) * n * (n - 1) / 2;
  return static_cast<long>(b);
}

namespace detail {

inline long orbit_cap_for(const NilpotentPresentation& p,
                          const std::vector<ActionPolys>& all,
                          const BasisOptions& opts) {
  if (opts.orbit_cap > 0) return opts.orbit_cap;
  long m_hat = qbar_term_count(p, all).m_hat;
  return 4 * (dimension_bound(p.n, m_hat) - 1) + 4;
}

// Index i when f is exactly the coordinate function x_i, otherwise -1.
inline int coordinate_index(const Polynomial& f) {
  if (f.num_terms() != 1) return -1;
  const auto& [m, c] = *f.terms().begin();
  if (c != 1) return -1;
  int idx = -1;
  for (int v = 0; v < static_cast<int>(m.size()); v++) {
    if (m[v] == 0) continue;
    if (m[v] != 1 || idx != -1) return -1;
    idx = v;
  }
  return idx;
}

// Closes the basis under repeated application of one generator action,
// starting from f: insert successive images until one reduces to zero.  A
// fixed point of the action is skipped outright; its orbit is {f} and can
// contribute nothing beyond f itself.
inline void close_orbit(PolyBasis& B, const Polynomial& f,
                        const ActionPolys& aps, long cap) {
  Polynomial g = act(f, aps);
  if (g == f) return;
  for (long iter = 0; iter <= cap; iter++) {
    Polynomial r = insert(B, g);
    if (r.is_zero()) return;
    g = act(g, aps);
  }
  throw internal_error("module closure diverged");
}

}  // namespace detail

inline std::vector<Polynomial> coordinate_seeds(int n) {
  std::vector<Polynomial> out;
  out.reserve(n);
  for (int i = 0; i < n; i++) out.push_back(Polynomial::variable(n, i));
  return out;
}

// General module-closure algorithm: seed the basis, then work up the central
// series; for each generator from the top down, close the orbit of every
// element the basis had when that stage began.
inline PolyBasis build_basis_general(const NilpotentPresentation& p,
                                     const std::vector<Polynomial>& seeds,
                                     const std::vector<ActionPolys>& all,
                                     const BasisOptions& opts = {}) {
  if (static_cast<int>(all.size()) != p.n)
    throw internal_error("need one action-polynomial set per generator");
  long cap = detail::orbit_cap_for(p, all, opts);
  PolyBasis B;
  for (const Polynomial& f : seeds) {
    if (f.nvars() != p.n) throw input_error("seed has the wrong variable count");
    insert(B, f);
  }
  for (int j = p.n - 1; j >= 0; j--) {
    std::vector<Polynomial> snapshot = B.elems;
    for (const Polynomial& f : snapshot) detail::close_orbit(B, f, all[j], cap);
  }
  return B;
}

inline PolyBasis build_basis_general(const NilpotentPresentation& p,
                                     const std::vector<Polynomial>& seeds,
                                     const BasisOptions& opts = {}) {
  return build_basis_general(p, seeds, all_action_polys(p), opts);
}

// Coordinate-function variant: seeds are the coordinate functions, and the
// stages skip the orbits that provably add nothing.  The top generator only
// needs to act on its own coordinate (the others are fixed); every lower
// generator a_j skips the coordinates x_i with i <= j, whose images already
// reduce to zero once the constant is in the basis.  Residual elements that
// earlier stages created still get their orbits closed, exactly as in the
// general algorithm; dropping them can lose module elements (the span would
// no longer match the general algorithm on unitriangular groups of size
// five and up).
inline PolyBasis build_basis_coordinate(const NilpotentPresentation& p,
                                        const std::vector<ActionPolys>& all,
                                        const BasisOptions& opts = {}) {
  if (static_cast<int>(all.size()) != p.n)
    throw internal_error("need one action-polynomial set per generator");
  long cap = detail::orbit_cap_for(p, all, opts);
  const int n = p.n;
  PolyBasis B;
  for (const Polynomial& f : coordinate_seeds(n)) insert(B, f);
  detail::close_orbit(B, Polynomial::variable(n, n - 1), all[n - 1], cap);
  for (int j = n - 2; j >= 0; j--) {
    std::vector<Polynomial> snapshot = B.elems;
    for (const Polynomial& f : snapshot) {
      int i = detail::coordinate_index(f);
      if (i >= 0 && i <= j) continue;
      detail::close_orbit(B, f, all[j], cap);
    }
  }
  return B;
}

inline PolyBasis build_basis_coordinate(const NilpotentPresentation& p,
                                        const BasisOptions& opts = {}) {
  return build_basis_coordinate(p, all_action_polys(p), opts);
}

// True when every basis element's image under every generator action stays
// inside the span; the property the builders must deliver.
inline bool is_closed(const PolyBasis& B,
                      const std::vector<ActionPolys>& all) {
  for (const ActionPolys& aps : all)
    for (const Polynomial& b : B.elems)
      if (!normal_form(B, act(b, aps)).is_zero()) return false;
  return true;
}

}  // namespace nilrep
