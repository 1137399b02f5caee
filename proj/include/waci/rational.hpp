#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace waci {

// Exact scalar types. All library arithmetic is over Q; no floating point
// appears in any result path.
using Integer = mpz_class;
using Rational = mpq_class;

// Invalid user input or a degenerate algebra (maps to CLI exit code 2).
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& n) { return sgn(n); }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
Rational parse_rational(std::string_view text);

}  // namespace waci
