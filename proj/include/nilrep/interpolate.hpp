#pragma once

#include <functional>
#include <map>
#include <vector>

#include "nilrep/polynomial.hpp"

namespace nilrep {

namespace detail {

// Enumerates {t in N^k : sum t_i <= degree} in lexicographic order.
inline void lower_set_tuples(int k, int degree, std::vector<int>& prefix,
                             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  for (int t = 0; t <= degree; t++) {
    prefix.push_back(t);
    lower_set_tuples(k, degree - t, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

// Interpolates the polynomial of total degree <= degree in the ambient
// variables listed in `vars` (0-based, ascending) that matches `eval` on the
// integer simplex grid {t : sum t <= degree}; the remaining coordinates of
// every evaluation point are pinned to `base_point`.  Newton's form with
// axis-wise divided differences over the triangular grid reproduces any
// polynomial of total degree <= degree exactly, with one evaluation per node.
inline Polynomial interpolate_lower_set(
    int ambient_vars, const std::vector<int>& vars, int degree,
    const std::vector<long>& base_point,
    const std::function<Rat(const std::vector<long>&)>& eval) {
  const int k = static_cast<int>(vars.size());
  std::vector<std::vector<int>> grid;
  {
    std::vector<int> prefix;
    detail::lower_set_tuples(k, degree, prefix, grid);
  }

  std::map<std::vector<int>, Rat> val;
  std::vector<long> point = base_point;
  for (const auto& t : grid) {
    for (int a = 0; a < k; a++) point[vars[a]] = t[a];
    val[t] = eval(point);
  }

  // One axis at a time, replace values by Newton divided-difference
  // coefficients along that axis.  Nodes are 0, 1, 2, ... so the denominator
  // for a j-th order difference is j.
  for (int axis = 0; axis < k; axis++) {
    std::map<std::vector<int>, std::vector<std::vector<int>>> lines;
    for (const auto& t : grid) {
      std::vector<int> key = t;
      key[axis] = 0;
      lines[key].push_back(t);
    }
    for (auto& [key, line] : lines) {
      (void)key;
      // Lexicographic enumeration already orders a line by its axis value.
      const int m = static_cast<int>(line.size()) - 1;
      for (int j = 1; j <= m; j++)
        for (int i = m; i >= j; i--) {
          Rat diff = val[line[i]] - val[line[i - 1]];
          val[line[i]] = diff / j;
        }
    }
  }

  // Newton basis along each variable: prod_{s < t} (x - s), precomputed up
  // to the full degree.
  std::vector<std::vector<Polynomial>> basis(k);
  for (int a = 0; a < k; a++) {
    Polynomial x = Polynomial::variable(ambient_vars, vars[a]);
    basis[a].push_back(Polynomial::constant(ambient_vars, 1));
    for (int t = 1; t <= degree; t++)
      basis[a].push_back(basis[a].back() *
                         (x - Polynomial::constant(ambient_vars, t - 1)));
  }

  Polynomial total(ambient_vars);
  for (const auto& t : grid) {
    const Rat& c = val[t];
    if (c == 0) continue;
    Polynomial term = Polynomial::constant(ambient_vars, c);
    for (int a = 0; a < k; a++)
      if (t[a] > 0) term = term * basis[a][t[a]];
    total += term;
  }
  return total;
}

}  // namespace nilrep
