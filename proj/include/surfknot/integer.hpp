#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace surfknot {

/// Arbitrary-precision integer used for every coefficient in the library.
using Integer = mpz_class;

inline Integer gcd(const Integer& a, const Integer& b)
{
	Integer g;
	mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return g;
}

/// Floor division: returns q with a = q*b + r and 0 <= r < |b| for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b)
{
	Integer q;
	mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
	return q;
}

inline bool divides(const Integer& d, const Integer& a)
{
	return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_prime(const Integer& n)
{
	return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::int64_t to_int64(const Integer& n)
{
	return static_cast<std::int64_t>(n.get_si());
}

}  // namespace surfknot
