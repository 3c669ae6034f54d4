#pragma once

#include <sstream>
#include <string>

#include "nilrep/collect.hpp"
#include "nilrep/presentation.hpp"

namespace nilrep {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); i++)
    if (!std::isdigit((unsigned char)s[i])) return false;
  return true;
}

}  // namespace detail

// Derives the missing x_i^{x_j^{-1}} tails from the positive ones: the tail
// equals the collected form of x_j (tail_pos)^{-1} x_j^{-1}, which only needs
// negative tails with first index above i, so filling the table from the top
// down is well defined.  Pairs listed in `given` were stated explicitly (even
// if trivial) and are left alone.
inline void derive_negative_tails(
    NilpotentPresentation& p,
    const std::map<std::pair<int, int>, bool>& given = {},
    const CollectOptions& opts = {}) {
  for (int i = p.n - 1; i >= 1; i--) {
    for (int j = 0; j < i; j++) {
      if (p.conj_neg.count({i, j}) || given.count({i, j})) continue;
      const Tail& pos = p.pos_tail(i, j);
      if (pos.empty()) continue;  // commuting pair
      Word w{{j, 1}};
      for (auto it = pos.rbegin(); it != pos.rend(); ++it)
        w.push_back({it->first, -it->second});
      w.push_back({j, -1});
      ExponentVector v = collect(p, w, opts);
      Tail tail;
      for (int k = 0; k < p.n; k++) {
        if (v[k] == 0) continue;
        if (k <= i)
          throw input_error("inconsistent presentation: derived tail for " +
                            p.names[i] + "^(" + p.names[j] +
                            "^-1) touches generator " + p.names[k]);
        tail.push_back({k, v[k]});
      }
      p.set_neg_tail(i, j, std::move(tail));
    }
  }
}

// Parses the presentation grammar:
//   # comment
//   gens: x1 x2 x3
//   rel: x2^x1 = x2 x3
//   rel: x2^(x1^-1) = x2 x3^-1
// Missing negative-conjugation relations are derived; power relations are
// rejected (the groups are torsion-free).
inline NilpotentPresentation parse_presentation(const std::string& text) {
  NilpotentPresentation p;
  bool have_gens = false;
  std::map<std::pair<int, int>, bool> seen_pos, seen_neg;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  auto fail = [&](const std::string& why) -> input_error {
    return input_error("line " + std::to_string(lineno) + ": " + why);
  };

  auto gen_index = [&](const std::string& name) {
    for (int i = 0; i < p.n; i++)
      if (p.names[i] == name) return i;
    throw fail("unknown generator '" + name + "'");
  };

  while (std::getline(in, raw)) {
    lineno++;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (line.rfind("gens:", 0) == 0) {
      if (have_gens) throw fail("duplicate gens: line");
      auto names = detail::split_ws(line.substr(5));
      if (names.empty()) throw fail("gens: line lists no generators");
      for (const auto& nm : names) {
        for (char c : nm) {
          if (!(std::isalnum((unsigned char)c) || c == '_'))
            throw fail("invalid generator name '" + nm + "'");
        }
        if (std::isdigit((unsigned char)nm[0]))
          throw fail("invalid generator name '" + nm + "'");
      }
      p.n = (int)names.size();
      p.names = names;
      have_gens = true;
      continue;
    }

    if (line.rfind("rel:", 0) == 0) {
      if (!have_gens) throw fail("rel: before gens:");
      std::string body = detail::trim(line.substr(4));
      std::size_t eq = body.find('=');
      if (eq == std::string::npos) throw fail("relation is missing '='");
      std::string lhs = detail::trim(body.substr(0, eq));
      std::string rhs = detail::trim(body.substr(eq + 1));

      std::size_t caret = lhs.find('^');
      if (caret == std::string::npos)
        throw fail("relation left side must be xi^xj or xi^(xj^-1)");
      std::string base = lhs.substr(0, caret);
      std::string conj = lhs.substr(caret + 1);
      int i = gen_index(base);
      int j;
      bool negative;
      if (!conj.empty() && conj.front() == '(') {
        if (conj.size() < 2 || conj.back() != ')')
          throw fail("unbalanced parentheses in '" + lhs + "'");
        std::string inner = detail::trim(conj.substr(1, conj.size() - 2));
        std::size_t c2 = inner.find('^');
        if (c2 == std::string::npos || detail::trim(inner.substr(c2 + 1)) != "-1")
          throw fail("parenthesized conjugator must be (xj^-1)");
        j = gen_index(detail::trim(inner.substr(0, c2)));
        negative = true;
      } else if (detail::is_integer_token(conj)) {
        throw fail("power relations are not allowed; groups are torsion-free");
      } else {
        j = gen_index(conj);
        negative = false;
      }
      if (!(j < i))
        throw fail("conjugator must come earlier in the generator order (need j < i in xi^xj)");

      Word w = word_from_string(p, rhs);  // throws input_error on bad tokens
      if (w.empty() || w[0].first != i || w[0].second != 1)
        throw fail("relation right side must start with " + p.names[i]);
      Tail tail;
      int prev = i;
      for (std::size_t t = 1; t < w.size(); t++) {
        auto [k, e] = w[t];
        if (k <= prev)
          throw fail("relation right side is not in normal form (ascending generators)");
        if (k <= i) throw fail("relation tail must use generators above " + p.names[i]);
        tail.push_back({k, e});
        prev = k;
      }
      auto& seen = negative ? seen_neg : seen_pos;
      if (seen[{i, j}]) throw fail("duplicate relation for " + lhs);
      seen[{i, j}] = true;
      if (negative)
        p.set_neg_tail(i, j, std::move(tail));
      else
        p.set_pos_tail(i, j, std::move(tail));
      continue;
    }

    throw fail("expected 'gens:' or 'rel:' line");
  }

  if (!have_gens) throw input_error("presentation has no gens: line");
  p.validate_shape();
  derive_negative_tails(p, seen_neg);
  check_conjugation_roundtrip(p);
  return p;
}

}  // namespace nilrep
