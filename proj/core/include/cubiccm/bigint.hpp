#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cubiccm {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool fits_int64(const Integer& z) {
  return z >= Integer(INT64_MIN) && z <= Integer(INT64_MAX);
}

inline std::int64_t to_int64(const Integer& z) {
  // mpz_get_si is exact whenever the value fits a signed long (LP64).
  return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Floor division and non-negative remainder.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

IntVector parse_int_vector(const std::string& text);

}  // namespace cubiccm
