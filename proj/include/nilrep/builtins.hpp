#pragma once

#include <string>
#include <vector>

#include "nilrep/collect.hpp"
#include "nilrep/presentation.hpp"

namespace nilrep {

// Free abelian group of rank r: no relations at all.
inline NilpotentPresentation free_abelian(int r) {
  if (r < 1) throw input_error("free_abelian: rank must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= r; i++) names.push_back("x" + std::to_string(i));
  NilpotentPresentation p(r, std::move(names));
  p.validate_shape();
  return p;
}

// Free nilpotent group of class 2 on r generators: x1..xr followed by the
// central commutators c_ij = [x_j, x_i] for i < j in lexicographic order.
// Hirsch length r + r(r-1)/2.
inline NilpotentPresentation free_nilpotent_class2(int r) {
  if (r < 1) throw input_error("free_nilpotent_class2: rank must be >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= r; i++) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= r; i++) {
    for (int j = i + 1; j <= r; j++)
      names.push_back("c" + std::to_string(i) + std::to_string(j));
  }
  int n = r + r * (r - 1) / 2;
  NilpotentPresentation p(n, std::move(names));
  int c = r;  // next commutator index (0-based)
  for (int i = 1; i <= r; i++) {
    for (int j = i + 1; j <= r; j++, c++) {
      // x_j^{x_i} = x_j c_ij, x_j^{x_i^{-1}} = x_j c_ij^{-1}
      p.set_pos_tail(j - 1, i - 1, Tail{{c, Int(1)}});
      p.set_neg_tail(j - 1, i - 1, Tail{{c, Int(-1)}});
    }
  }
  p.validate_shape();
  check_conjugation_roundtrip(p);
  return p;
}

// The discrete Heisenberg group; identical tables to free_nilpotent_class2(2)
// with the classical generator names.
inline NilpotentPresentation heisenberg() {
  NilpotentPresentation p(3, {"x1", "x2", "x3"});
  p.set_pos_tail(1, 0, Tail{{2, Int(1)}});
  p.set_neg_tail(1, 0, Tail{{2, Int(-1)}});
  p.validate_shape();
  check_conjugation_roundtrip(p);
  return p;
}

// ---------------------------------------------------------------------------
// Upper unitriangular integer matrices.
// ---------------------------------------------------------------------------

// Concrete m x m matrix model of UT(m, Z).  Generators are the elementary
// matrices e_{p,q} = I + E_{p,q} for p < q, ordered by superdiagonal (q - p
// ascending, then p ascending); positions are 0-based.
struct UnitriangularModel {
  using Mat = std::vector<std::vector<Int>>;

  int m;
  std::vector<std::pair<int, int>> positions;  // generator -> (p, q)

  explicit UnitriangularModel(int m_) : m(m_) {
    if (m < 2) throw input_error("unitriangular: size must be >= 2");
    for (int s = 1; s < m; s++) {
      for (int pp = 0; pp + s < m; pp++) positions.push_back({pp, pp + s});
    }
  }

  int n() const { return (int)positions.size(); }

  Mat identity() const {
    Mat a(m, std::vector<Int>(m, Int(0)));
    for (int i = 0; i < m; i++) a[i][i] = 1;
    return a;
  }

  static Mat mul(const Mat& a, const Mat& b) {
    int m = (int)a.size();
    Mat c(m, std::vector<Int>(m, Int(0)));
    for (int i = 0; i < m; i++) {
      for (int k = 0; k < m; k++) {
        if (a[i][k] == 0) continue;
        for (int j = 0; j < m; j++) {
          if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
        }
      }
    }
    return c;
  }

  // (I + e E_{p,q})^k = I + k e E_{p,q}; in particular inverses are cheap.
  Mat generator_power(int gen, const Int& k) const {
    Mat a = identity();
    auto [pp, qq] = positions.at(gen);
    a[pp][qq] = k;
    return a;
  }

  Mat image_of(const ExponentVector& e) const {
    Mat a = identity();
    for (int g = 0; g < n(); g++) {
      if (e[g] != 0) a = mul(a, generator_power(g, e[g]));
    }
    return a;
  }

  Mat image_of_word(const Word& w) const {
    Mat a = identity();
    for (const auto& [g, e] : w) a = mul(a, generator_power(g, e));
    return a;
  }

  // Reads off normal-form exponents along successive superdiagonals: strip
  // generators in presentation order; entry (p,q) of the remainder is the
  // exponent of e_{p,q} when all earlier generators have been removed.
  ExponentVector exponents_of(Mat a) const {
    ExponentVector e(n());
    for (int g = 0; g < n(); g++) {
      auto [pp, qq] = positions[g];
      e[g] = a[pp][qq];
      if (e[g] != 0) {
        // a := (I + e E_{p,q})^{-1} a, i.e. row_p -= e * row_q.
        for (int j = 0; j < m; j++) a[pp][j] -= e[g] * a[qq][j];
      }
    }
    for (int i = 0; i < m; i++) {
      for (int j = 0; j < m; j++) {
        if (a[i][j] != (i == j ? 1 : 0))
          throw internal_error("unitriangular extraction did not terminate at identity");
      }
    }
    return e;
  }
};

// Nilpotent presentation of UT(m, Z) with conjugation tails computed in the
// matrix model.
inline NilpotentPresentation unitriangular(int m) {
  UnitriangularModel model(m);
  int n = model.n();
  std::vector<std::string> names;
  for (auto [p, q] : model.positions)
    names.push_back("e" + std::to_string(p + 1) + std::to_string(q + 1));
  NilpotentPresentation pres(n, std::move(names));
  for (int i = 1; i < n; i++) {
    for (int j = 0; j < i; j++) {
      for (int sign : {+1, -1}) {
        // x_i^{x_j^{sign}} = x_j^{-sign} x_i x_j^{sign}
        auto conj = UnitriangularModel::mul(
            UnitriangularModel::mul(model.generator_power(j, Int(-sign)),
                                    model.generator_power(i, Int(1))),
            model.generator_power(j, Int(sign)));
        ExponentVector e = model.exponents_of(conj);
        Tail tail;
        for (int k = 0; k < n; k++) {
          if (e[k] == 0) continue;
          if (k < i || (k == i && e[k] != 1))
            throw internal_error("unitriangular conjugate is not x_i * tail");
          if (k > i) tail.push_back({k, e[k]});
        }
        if (e[i] != 1)
          throw internal_error("unitriangular conjugate is not x_i * tail");
        if (sign > 0)
          pres.set_pos_tail(i, j, std::move(tail));
        else
          pres.set_neg_tail(i, j, std::move(tail));
      }
    }
  }
  pres.validate_shape();
  check_conjugation_roundtrip(pres);
  return pres;
}

// Resolves "heisenberg", "free_nilpotent_class2:r", "unitriangular:m".
inline NilpotentPresentation builtin(const std::string& spec) {
  std::string name = spec;
  std::string param;
  std::size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    name = spec.substr(0, colon);
    param = spec.substr(colon + 1);
  }
  auto need_param = [&]() {
    try {
      std::size_t used = 0;
      int v = std::stoi(param, &used);
      if (used != param.size()) throw std::invalid_argument(param);
      return v;
    } catch (const std::exception&) {
      throw input_error("builtin " + name + " needs an integer parameter, got '" +
                        param + "'");
    }
  };
  if (name == "heisenberg") {
    if (!param.empty()) throw input_error("heisenberg takes no parameter");
    return heisenberg();
  }
  if (name == "free_nilpotent_class2") return free_nilpotent_class2(need_param());
  if (name == "unitriangular") return unitriangular(need_param());
  throw input_error("unknown builtin '" + name +
                    "' (expected heisenberg, free_nilpotent_class2:r, or "
                    "unitriangular:m)");
}

}  // namespace nilrep
