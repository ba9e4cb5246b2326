#pragma once

#include "surfknot/fp_poly.hpp"
#include "surfknot/integer.hpp"
#include "surfknot/laurent.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace surfknot {

/// Desk-scale bounds. Exceeding one raises BoundExceeded naming it.
inline constexpr std::int64_t kMaxPrime = 97;
inline constexpr int kMaxIrreducibleDegree = 12;
inline constexpr long kMaxEnumeratedQuotient = 100000;

struct IdealData;

/// Nonzero finitely generated ideal of Z[t, t^-1].
///
/// Construction computes the reduced strong Groebner basis of the ideal in the model
/// Z[t, s]/(ts - 1) (grlex, t > s). The basis is canonical, so equality of ideals is
/// equality of bases. The zero ideal is not representable; operations that can yield it
/// return std::optional<LaurentIdeal>.
class LaurentIdeal {
public:
	/// Throws DomainError when every generator is zero.
	explicit LaurentIdeal(std::vector<LaurentPoly> generators);
	LaurentIdeal(std::initializer_list<LaurentPoly> generators)
		: LaurentIdeal(std::vector<LaurentPoly>(generators)) {}

	static LaurentIdeal unit();
	static LaurentIdeal principal(const LaurentPoly& f) { return LaurentIdeal({f}); }

	/// The generators the ideal was built from (zeros dropped).
	const std::vector<LaurentPoly>& user_generators() const;
	/// Canonical generating set: basis elements mapped back to Z[t, t^-1],
	/// unit-normalized, deduplicated and sorted by canonical_less.
	const std::vector<LaurentPoly>& generators() const;

	bool is_unit() const;
	/// Canonical text, e.g. "3; t+1".
	std::string to_string() const;
	/// Basis of the two-variable model, one polynomial per line in t and s.
	std::string basis_text() const;

	const IdealData& data() const { return *data_; }

	friend bool operator==(const LaurentIdeal& a, const LaurentIdeal& b);

private:
	std::shared_ptr<const IdealData> data_;
};

std::ostream& operator<<(std::ostream& os, const LaurentIdeal& ideal);

/// Class of an ideal in the ideal class monoid, represented by the canonical
/// generators of its content-free part.
struct IdealClass {
	std::vector<LaurentPoly> primitive_generators;

	std::string to_string() const;
	friend bool operator==(const IdealClass&, const IdealClass&) = default;
};

bool member(const LaurentIdeal& ideal, const LaurentPoly& f);
bool equals(const LaurentIdeal& a, const LaurentIdeal& b);
LaurentIdeal product(const LaurentIdeal& a, const LaurentIdeal& b);
LaurentIdeal sum(const LaurentIdeal& a, const LaurentIdeal& b);
LaurentIdeal power(const LaurentIdeal& a, int n);

/// Nonnegative generator of the ideal's intersection with Z.
Integer intersect_Z(const LaurentIdeal& ideal);

/// Nonnegative generator of { f(x) : f in I } for x in {+1, -1}.
Integer eval_ideal(const LaurentIdeal& ideal, int x);

/// |Z[t, t^-1] / I|; nullopt when the quotient is infinite.
std::optional<Integer> quotient_size(const LaurentIdeal& ideal);

bool is_principal(const LaurentIdeal& ideal);
/// Unit-normalized generator, or nullopt when the ideal is not principal.
std::optional<LaurentPoly> principal_generator(const LaurentIdeal& ideal);

/// Monic generator of the image of I in F_p[t, t^-1] with nonzero constant term
/// (zero polynomial when the image is zero). Rejects composite p.
FpPoly image_mod_p(const LaurentIdeal& ideal, std::int64_t p);

/// Maximal iff I = (p, f) with p prime and f irreducible mod p.
bool is_maximal(const LaurentIdeal& ideal);

struct ContentSplit {
	LaurentPoly content;
	LaurentIdeal primitive;
};

/// I = (content) * primitive, where the primitive part's generators have gcd 1.
ContentSplit content_split(const LaurentIdeal& ideal);

IdealClass class_canonical(const LaurentIdeal& ideal);
/// (x)I = (y)J for some nonzero x, y; decided by comparing content-free parts.
bool class_equivalent(const LaurentIdeal& a, const LaurentIdeal& b);

struct MaximalFactor {
	LaurentIdeal ideal;
	std::int64_t prime;
	FpPoly residue;
	int multiplicity;
};

/// Result of factor_maximals. When `complete` is false the primitive part is not a
/// product of maximal ideals; `factors` holds what was split off and `remainder` the
/// part that could not be factored.
struct MaximalFactorization {
	std::vector<MaximalFactor> factors;
	bool complete;
	LaurentIdeal remainder;
};

/// Factors the content-free part of I into maximal ideals. Every complete result is
/// verified by multiplying back.
MaximalFactorization factor_maximals(const LaurentIdeal& ideal);

/// log_q |R/m^(n+1)| / |R/m^n| with q = |R/m|; m must be maximal.
int hilbert_function(const LaurentIdeal& maximal, int n);

LaurentIdeal invert_t_ideal(const LaurentIdeal& ideal);

}  // namespace surfknot
