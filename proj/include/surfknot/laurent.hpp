#pragma once

#include "surfknot/integer.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace surfknot {

/// Exact Laurent polynomial in Z[t, t^-1], stored sparsely as exponent -> coefficient.
/// No stored coefficient is ever zero; the zero polynomial has no terms.
class LaurentPoly {
public:
	using Exponent = std::int64_t;
	using TermMap = std::map<Exponent, Integer>;

	LaurentPoly() = default;
	LaurentPoly(const Integer& constant);
	LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}
	LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

	/// Coefficients in increasing exponent order, starting at t^low.
	LaurentPoly(std::initializer_list<long> coefficients, Exponent low = 0);
	static LaurentPoly from_coefficients(const std::vector<Integer>& coefficients, Exponent low = 0);

	static LaurentPoly monomial(const Integer& coefficient, Exponent exponent);
	static LaurentPoly t(Exponent exponent = 1) { return monomial(Integer(1), exponent); }

	const TermMap& terms() const noexcept { return terms_; }
	bool is_zero() const noexcept { return terms_.empty(); }
	bool is_constant() const noexcept;
	Integer coefficient(Exponent exponent) const;

	// Both require a nonzero polynomial.
	Exponent min_exponent() const;
	Exponent max_exponent() const;
	Exponent span() const { return max_exponent() - min_exponent(); }

	/// Multiplication by t^k.
	LaurentPoly shifted(Exponent k) const;
	/// Nonnegative gcd of the coefficients (0 for the zero polynomial).
	Integer content() const;

	LaurentPoly operator-() const;
	LaurentPoly& operator+=(const LaurentPoly& rhs);
	LaurentPoly& operator-=(const LaurentPoly& rhs);
	LaurentPoly& operator*=(const LaurentPoly& rhs);
	/// Multiplies every coefficient by c.
	LaurentPoly& scale(const Integer& c);

	friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
	friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
	friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
	friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

	/// Adds c*t^k in place.
	void add_term(const Integer& c, Exponent k);

private:
	TermMap terms_;
};

/// Returns u*a for the unique unit u = +-t^k making the lowest exponent 0 and the
/// constant term positive. Throws DomainError on zero.
LaurentPoly normalize_unit(const LaurentPoly& a);

/// True when a = u*b for a unit u = +-t^k.
bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b);

/// Unit-normalized gcd. gcd(a, 0) = normalize_unit(a); throws DomainError if both are zero.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact value at t = x for x in {+1, -1}; other points are rejected with DomainError.
Integer eval_at(const LaurentPoly& a, int x);

/// a(t^-1).
LaurentPoly invert_t(const LaurentPoly& a);

/// q with a = q*b, or nullopt when b does not divide a. Throws DomainError if b = 0.
std::optional<LaurentPoly> div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// n-th cyclotomic polynomial, n >= 1.
LaurentPoly cyclotomic(int n);

/// Compact canonical text, highest exponent first: "t^2-t+1", "2t^-1+1", "0".
std::string to_string(const LaurentPoly& a);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& a);

/// Total order used for canonical sorting: by span, then coefficient tuple from the
/// lowest exponent upwards, then lowest exponent.
bool canonical_less(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace surfknot
