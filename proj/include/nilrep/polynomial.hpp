#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilrep/rational.hpp"

namespace nilrep {

// A monomial in a fixed number of variables: the exponent tuple, zeros
// explicit, so every monomial of a polynomial has the same length.
using Monomial = std::vector<int>;

// Reverse lexicographic order: scan exponents from the last variable down;
// the first position where the tuples differ decides.  Under this order
// x1 < x2 < ... < xn and (2,1,0) < (0,2,0).
inline int revlex_compare(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("revlex_compare: mixed variable counts");
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

struct RevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return revlex_compare(a, b) > 0;
  }
};

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Sparse multivariate polynomial with exact rational coefficients.  Terms are
// kept in descending revlex order and zero coefficients are never stored, so
// equal polynomials compare equal structurally.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, RevlexGreater>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }

  // The coordinate polynomial x_{var+1} (0-based index).
  static Polynomial variable(int nvars, int var) {
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m.at(var) = 1;
    p.terms_[m] = 1;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;  // -1 for the zero polynomial
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty())
      throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
  }

  const Rat& leading_coefficient() const {
    if (terms_.empty())
      throw std::logic_error("leading_coefficient of zero polynomial");
    return terms_.begin()->second;
  }

  Rat coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Monomial& m, const Rat& c) {
    if ((int)m.size() != nvars_)
      throw std::invalid_argument("add_term: wrong monomial length");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }

  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }

  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.nvars_);
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
  }

  Polynomial& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator*(Polynomial a, const Rat& s) {
    a *= s;
    return a;
  }

  friend Polynomial operator*(const Rat& s, Polynomial a) {
    a *= s;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial r(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; i++) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Subtracts s * g and reports whether anything changed.
  void sub_scaled(const Polynomial& g, const Rat& s) {
    if (s == 0) return;
    check_vars(g);
    for (const auto& [m, c] : g.terms_) add_term(m, -s * c);
  }

  template <typename T>
  Rat evaluate(const std::vector<T>& point) const {
    if ((int)point.size() != nvars_)
      throw std::invalid_argument("evaluate: wrong point length");
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
      Rat v = c;
      for (int i = 0; i < nvars_; i++) {
        for (int e = 0; e < m[i]; e++) v *= point[i];
      }
      total += v;
    }
    return total;
  }

 private:
  void check_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("polynomial arithmetic: mixed variable counts");
  }

  int nvars_;
  TermMap terms_;
};

// x^k by repeated squaring.
inline Polynomial poly_pow(const Polynomial& base, int k) {
  if (k < 0) throw std::invalid_argument("poly_pow: negative exponent");
  Polynomial acc = Polynomial::constant(base.nvars(), 1);
  Polynomial sq = base;
  while (k > 0) {
    if (k & 1) acc = acc * sq;
    k >>= 1;
    if (k) sq = sq * sq;
  }
  return acc;
}

// f(args[0], ..., args[n-1]).  The arguments live in a common variable space
// of their own; the result does too.  Powers of each argument are computed by
// repeated squaring and cached across terms.
inline Polynomial substitute(const Polynomial& f,
                             const std::vector<Polynomial>& args) {
  if ((int)args.size() != f.nvars())
    throw std::invalid_argument("substitute: wrong argument count");
  int out_vars = f.nvars() == 0 ? 0 : args[0].nvars();
  for (const auto& a : args) {
    if (a.nvars() != out_vars)
      throw std::invalid_argument("substitute: arguments in mixed variable counts");
  }
  // power_cache[i][e] = args[i]^e, filled on demand.
  std::vector<std::map<int, Polynomial>> power_cache(args.size());
  auto arg_power = [&](int i, int e) -> const Polynomial& {
    auto it = power_cache[i].find(e);
    if (it == power_cache[i].end())
      it = power_cache[i].emplace(e, poly_pow(args[i], e)).first;
    return it->second;
  };
  Polynomial result(out_vars);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(out_vars, c);
    for (int i = 0; i < f.nvars(); i++) {
      if (m[i] > 0) term = term * arg_power(i, m[i]);
    }
    result += term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text form.  Terms in descending revlex; fractions parenthesized:
//   (3/2)*x1^2*x3 - x2 + 1
// ---------------------------------------------------------------------------

inline std::string monomial_to_string(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); i++) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

inline std::string poly_to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vars = monomial_to_string(m);
    std::string coef;
    if (mag != 1 || vars.empty()) {
      coef = rat_to_string(mag);
      if (!is_integer(mag)) coef = "(" + coef + ")";
    }
    if (!coef.empty() && !vars.empty())
      out += coef + "*" + vars;
    else
      out += coef + vars;
  }
  return out;
}

namespace detail {

// Recursive-descent parser for the polynomial text form.
class PolyParser {
 public:
  PolyParser(const std::string& src, int nvars) : src_(src), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial p = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::runtime_error("polynomial parse error at offset " +
                             std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) pos_++;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      pos_++;
      return true;
    }
    return false;
  }

  Polynomial parse_sum() {
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial acc = parse_term();
    if (neg) acc *= Rat(-1);
    for (;;) {
      skip_ws();
      if (eat('+')) {
        acc += parse_term();
      } else if (eat('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected factor");
    char c = src_[pos_];
    if (c == '(') {
      pos_++;
      Polynomial inner = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == 'x') {
      pos_++;
      long idx = parse_int();
      if (idx < 1 || idx > nvars_)
        fail("variable x" + std::to_string(idx) + " out of range");
      Polynomial v = Polynomial::variable(nvars_, (int)idx - 1);
      if (eat('^')) {
        long e = parse_int();
        if (e < 0) fail("negative exponent");
        return poly_pow(v, (int)e);
      }
      return v;
    }
    if (std::isdigit((unsigned char)c)) {
      Int num = parse_bigint();
      if (eat('/')) {
        Int den = parse_bigint();
        if (den == 0) fail("zero denominator");
        return Polynomial::constant(nvars_, Rat(num, den));
      }
      return Polynomial::constant(nvars_, Rat(num));
    }
    fail("unexpected character");
  }

  long parse_int() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit((unsigned char)src_[pos_]))
      fail("expected integer");
    long v = 0;
    while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) {
      v = v * 10 + (src_[pos_] - '0');
      if (v > 1000000000L) fail("integer too large");
      pos_++;
    }
    return neg ? -v : v;
  }

  Int parse_bigint() {
    skip_ws();
    if (pos_ >= src_.size() || !std::isdigit((unsigned char)src_[pos_]))
      fail("expected integer");
    std::string digits;
    while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_]))
      digits += src_[pos_++];
    return Int(digits);
  }

  const std::string& src_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial poly_from_string(const std::string& s, int nvars) {
  return detail::PolyParser(s, nvars).parse();
}

}  // namespace nilrep
