#pragma once

#include "surfknot/integer.hpp"
#include "surfknot/laurent.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace surfknot {

/// Dense univariate polynomial over the prime field F_p, coefficients in [0, p)
/// stored lowest degree first with no trailing zeros.
class FpPoly {
public:
	explicit FpPoly(std::int64_t p);
	FpPoly(std::int64_t p, std::vector<std::int64_t> coefficients);

	/// Reduces a mod p and strips the lowest power of t, so the result has a
	/// nonzero constant term (or is zero).
	static FpPoly from_laurent(const LaurentPoly& a, std::int64_t p);
	static FpPoly monomial(std::int64_t p, std::int64_t coefficient, std::size_t degree);

	std::int64_t prime() const noexcept { return p_; }
	const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }
	bool is_zero() const noexcept { return c_.empty(); }
	/// -1 for the zero polynomial.
	int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
	std::int64_t leading() const { return c_.back(); }

	FpPoly monic() const;
	/// Integer lift with coefficients in [0, p).
	LaurentPoly lift() const;

	friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
	friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
	friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
	friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

	/// Quotient and remainder; divisor must be nonzero.
	std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
	FpPoly operator%(const FpPoly& divisor) const { return divmod(divisor).second; }

private:
	void trim();

	std::int64_t p_;
	std::vector<std::int64_t> c_;
};

std::int64_t inverse_mod(std::int64_t a, std::int64_t p);

/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);

/// base^e mod m.
FpPoly pow_mod(const FpPoly& base, const Integer& e, const FpPoly& m);

/// Exact irreducibility test (Ben-Or): h of degree n >= 1 is irreducible iff
/// gcd(h, t^(p^i) - t) = 1 for every i <= n/2.
bool is_irreducible(const FpPoly& h);

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
/// Distinct-degree splitting followed by Cantor-Zassenhaus with a fixed seed.
std::vector<std::pair<FpPoly, int>> factor(const FpPoly& h);

}  // namespace surfknot
