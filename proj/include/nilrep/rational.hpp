#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nilrep {

// Arbitrary-precision integers and exact rationals.  Rationals are kept
// normalized (reduced, positive denominator) by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

// Renders "p/q", omitting the denominator when it is 1.
inline std::string rat_to_string(const Rat& q) {
  std::string s = rat_num(q).str();
  if (!is_integer(q)) s += "/" + rat_den(q).str();
  return s;
}

// Parses "p" or "p/q" with an optional leading sign.  Throws on malformed
// input or a zero denominator.
inline Rat rat_from_string(const std::string& s) {
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("malformed rational: '" + s + "'");
  };
  if (s.empty()) throw bad();
  std::string::size_type slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw bad();
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

}  // namespace nilrep
