#pragma once

// Strong Groebner bases over Z for ideals of Z[t, t^-1], modelled as ideals of
// Z[t, s] containing ts - 1. Term order: graded lexicographic with t > s.

#include "surfknot/integer.hpp"
#include "surfknot/laurent.hpp"

#include <cstdint>
#include <vector>

namespace surfknot::detail {

struct Monomial {
	std::uint32_t t = 0;
	std::uint32_t s = 0;

	std::uint32_t degree() const { return t + s; }
	bool divides(const Monomial& m) const { return t <= m.t && s <= m.s; }
	friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Strict grlex comparison, t > s.
inline bool monomial_less(const Monomial& a, const Monomial& b)
{
	if (a.degree() != b.degree())
		return a.degree() < b.degree();
	return a.t < b.t;
}

struct Term {
	Monomial m;
	Integer c;
	friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial in Z[t, s]; terms strictly decreasing in the term order, no zero coefficients.
struct Poly2 {
	std::vector<Term> terms;

	bool is_zero() const { return terms.empty(); }
	const Term& lead() const { return terms.front(); }
	friend bool operator==(const Poly2&, const Poly2&) = default;
};

Poly2 to_poly2(const LaurentPoly& a);
/// Image under t -> t, s -> t^-1.
LaurentPoly to_laurent(const Poly2& a);

/// Reduced strong Groebner basis of (gens, ts - 1), sorted by leading term. Unique for
/// the ideal: positive leading coefficients, and every non-leading coefficient at a
/// reducible monomial lies in [0, c) where c is the least leading coefficient among the
/// basis elements whose leading monomial divides it.
std::vector<Poly2> reduced_strong_basis(const std::vector<Poly2>& gens);

/// Canonical remainder of f modulo a reduced strong basis. Zero iff f lies in the ideal.
Poly2 normal_form(const Poly2& f, const std::vector<Poly2>& basis);

}  // namespace surfknot::detail
