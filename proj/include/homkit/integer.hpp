#ifndef HOMKIT_INTEGER_HPP
#define HOMKIT_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace homkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error the library raises on invalid input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses an optionally signed decimal integer. Throws Error on junk.
Integer parse_integer(std::string_view text);

/// Parses "a" or "a/b"; the result is canonicalized.
Rational parse_rational(std::string_view text);

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool fits_int64(const Integer& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && sizeof(long) == sizeof(std::int64_t);
}

/// Floor division remainder in [0, |b|).
inline Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace homkit

#endif  // HOMKIT_INTEGER_HPP
