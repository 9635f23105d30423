#ifndef DELSTAR_RATIONAL_HPP
#define DELSTAR_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace delstar {

/* Exact scalars. GMP keeps rationals canonical: lowest terms, denominator > 0.
 * No floating point is used anywhere in this library. */
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using QVec = std::vector<Rational>;

/* Lattice points live in basis coordinates and stay tiny in every construction
 * in scope, so plain 64-bit coordinates suffice; all metric arithmetic is done
 * in Rational. */
using Coord = std::int64_t;
using PointVec = std::vector<Coord>;

inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  // The two-arg mpq constructor misreads negative builtin denominators; going
  // through mpz_int avoids that.
  return Rational(Int(num), Int(den));
}

/* Parses "p/q" or "p" with optional sign. Rejects zero denominators before GMP
 * ever sees them (mpq canonicalization would raise SIGFPE on q = 0). */
Rational parse_rational(const std::string& s);

/* Serializes as "p/q", or "p" when the denominator is 1. */
std::string format_rational(const Rational& r);

Int floor_q(const Rational& r);
Int ceil_q(const Rational& r);

/* Largest n >= 0 with n*n <= r. Requires r >= 0. */
Int floor_sqrt_q(const Rational& r);

QVec to_qvec(const PointVec& p);

inline Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace delstar

#endif
