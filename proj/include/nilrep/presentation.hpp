#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nilrep/rational.hpp"

namespace nilrep {

// Errors raised on malformed or inconsistent user input.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors raised when an internal invariant is violated.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A word in the generators: blocks (generator index, exponent), exponents
// nonzero.  Indices are 0-based internally.
using Word = std::vector<std::pair<int, Int>>;

// Normal-form exponent tuple (e_1, ..., e_n) of x_1^{e_1} ... x_n^{e_n}.
using ExponentVector = std::vector<Int>;

// Tail of a conjugation relation x_i^{x_j^{±1}} = x_i * tail: sparse list of
// (generator, exponent) with generators strictly above i, strictly ascending.
using Tail = std::vector<std::pair<int, Int>>;

// A consistent nilpotent presentation of a finitely generated torsion-free
// nilpotent group: generators x_1 < ... < x_n with conjugation relations
//   x_i^{x_j}      = x_i * x_{i+1}^{b_{ij,i+1}} ... x_n^{b_{ij,n}}
//   x_i^{x_j^{-1}} = x_i * x_{i+1}^{c_{ij,i+1}} ... x_n^{c_{ij,n}}
// for j < i, and no power relations.  Only nonempty tails are stored.
struct NilpotentPresentation {
  int n = 0;
  std::vector<std::string> names;
  std::map<std::pair<int, int>, Tail> conj_pos;  // key (i, j), j < i
  std::map<std::pair<int, int>, Tail> conj_neg;

  NilpotentPresentation() = default;
  NilpotentPresentation(int n_, std::vector<std::string> names_)
      : n(n_), names(std::move(names_)) {}

  const Tail& pos_tail(int i, int j) const { return find_tail(conj_pos, i, j); }
  const Tail& neg_tail(int i, int j) const { return find_tail(conj_neg, i, j); }

  void set_pos_tail(int i, int j, Tail t) { set_tail(conj_pos, i, j, std::move(t)); }
  void set_neg_tail(int i, int j, Tail t) { set_tail(conj_neg, i, j, std::move(t)); }

  bool same_tables(const NilpotentPresentation& o) const {
    return n == o.n && conj_pos == o.conj_pos && conj_neg == o.conj_neg;
  }

  bool operator==(const NilpotentPresentation& o) const {
    return same_tables(o) && names == o.names;
  }

  // Structural well-formedness: index ranges, tail supports, name uniqueness.
  void validate_shape() const {
    if (n < 1) throw input_error("presentation needs at least one generator");
    if ((int)names.size() != n)
      throw internal_error("presentation: name count mismatch");
    for (int i = 0; i < n; i++) {
      if (names[i].empty())
        throw input_error("presentation: empty generator name");
      for (int k = i + 1; k < n; k++) {
        if (names[i] == names[k])
          throw input_error("duplicate generator name '" + names[i] + "'");
      }
    }
    validate_table(conj_pos);
    validate_table(conj_neg);
  }

 private:
  static const Tail& find_tail(const std::map<std::pair<int, int>, Tail>& t,
                               int i, int j) {
    static const Tail empty;
    auto it = t.find({i, j});
    return it == t.end() ? empty : it->second;
  }

  static void set_tail(std::map<std::pair<int, int>, Tail>& t, int i, int j,
                       Tail tail) {
    if (tail.empty())
      t.erase({i, j});
    else
      t[{i, j}] = std::move(tail);
  }

  void validate_table(const std::map<std::pair<int, int>, Tail>& t) const {
    for (const auto& [key, tail] : t) {
      auto [i, j] = key;
      if (!(0 <= j && j < i && i < n))
        throw internal_error("presentation: conjugation pair out of range");
      if (tail.empty())
        throw internal_error("presentation: stored empty tail");
      int prev = i;
      for (const auto& [k, e] : tail) {
        if (!(prev < k && k < n))
          throw internal_error("presentation: tail support out of range");
        if (e == 0) throw internal_error("presentation: zero tail exponent");
        prev = k;
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Words and text forms.
// ---------------------------------------------------------------------------

inline Word word_inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->first, -it->second});
  return r;
}

inline Word word_concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word word_from_exponents(const ExponentVector& e) {
  Word w;
  for (std::size_t i = 0; i < e.size(); i++) {
    if (e[i] != 0) w.push_back({(int)i, e[i]});
  }
  return w;
}

inline std::string word_to_string(const NilpotentPresentation& p, const Word& w) {
  std::string s;
  for (const auto& [g, e] : w) {
    if (!s.empty()) s += " ";
    s += p.names.at(g);
    if (e != 1) s += "^" + e.str();
  }
  return s;
}

// Parses a whitespace-separated word, e.g. "x2 x1" or "x3^-2".
inline Word word_from_string(const NilpotentPresentation& p, const std::string& text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) pos++;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace((unsigned char)text[end])) end++;
    std::string tok = text.substr(pos, end - pos);
    pos = end;
    std::string name = tok;
    Int exp = 1;
    std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string es = tok.substr(caret + 1);
      try {
        exp = Int(es);
      } catch (const std::exception&) {
        throw input_error("malformed exponent in word token '" + tok + "'");
      }
    }
    int gen = -1;
    for (int i = 0; i < p.n; i++) {
      if (p.names[i] == name) {
        gen = i;
        break;
      }
    }
    if (gen < 0) throw input_error("unknown generator '" + name + "' in word");
    if (exp != 0) w.push_back({gen, exp});
  }
  return w;
}

inline std::string exponents_to_string(const ExponentVector& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); i++) {
    if (i) s += ", ";
    s += e[i].str();
  }
  return s + ")";
}

// Serializes a presentation in the input grammar; parsing the result yields
// the same presentation back.
inline std::string render_presentation(const NilpotentPresentation& p) {
  std::string out = "gens:";
  for (const auto& nm : p.names) out += " " + nm;
  out += "\n";
  auto tail_word = [&](int i, const Tail& t) {
    Word w{{i, 1}};
    for (const auto& [k, e] : t) w.push_back({k, e});
    return word_to_string(p, w);
  };
  for (const auto& [key, tail] : p.conj_pos) {
    auto [i, j] = key;
    out += "rel: " + p.names[i] + "^" + p.names[j] + " = " + tail_word(i, tail) + "\n";
  }
  for (const auto& [key, tail] : p.conj_neg) {
    auto [i, j] = key;
    out += "rel: " + p.names[i] + "^(" + p.names[j] + "^-1) = " +
           tail_word(i, tail) + "\n";
  }
  return out;
}

}  // namespace nilrep
