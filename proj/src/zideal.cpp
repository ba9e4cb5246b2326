#include "surfknot/zideal.hpp"

#include "groebner.hpp"
#include "surfknot/errors.hpp"

#include <algorithm>
#include <sstream>

namespace surfknot {

struct IdealData {
	std::vector<LaurentPoly> user_generators;
	std::vector<detail::Poly2> basis;
	std::vector<LaurentPoly> generators;
};

namespace {

using detail::Monomial;
using detail::Poly2;

bool mixed(const Monomial& m) { return m.t > 0 && m.s > 0; }

std::vector<LaurentPoly> canonical_generators(const std::vector<Poly2>& basis)
{
	std::vector<LaurentPoly> out;
	for (const auto& g : basis)
		if (!mixed(g.lead().m))
			out.push_back(normalize_unit(detail::to_laurent(g)));
	std::sort(out.begin(), out.end(), canonical_less);
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

std::string poly2_text(const Poly2& p)
{
	std::ostringstream os;
	bool first = true;
	for (const auto& [m, c] : p.terms) {
		if (c < 0)
			os << '-';
		else if (!first)
			os << '+';
		first = false;
		const Integer mag = abs(c);
		const bool bare = m.t == 0 && m.s == 0;
		if (mag != 1 || bare)
			os << mag;
		if (m.t > 0)
			os << 't' << (m.t > 1 ? "^" + std::to_string(m.t) : "");
		if (m.s > 0)
			os << 's' << (m.s > 1 ? "^" + std::to_string(m.s) : "");
	}
	return os.str();
}

// Residue-group description: the standard monomials of the basis with their index
// L = [Z : leading-coefficient ideal]. Monomials with L = 1 are omitted; L = 0 means Z.
struct StandardMonomial {
	LaurentPoly::Exponent exponent;
	Integer index;
};

// Returns nullopt when infinitely many standard monomials have index > 1.
std::optional<std::vector<StandardMonomial>> residue_structure(const std::vector<Poly2>& basis)
{
	std::optional<Integer> constant;
	std::vector<std::pair<std::uint32_t, Integer>> t_side, s_side;
	for (const auto& g : basis) {
		const auto& [m, c] = g.lead();
		if (m.t == 0 && m.s == 0)
			constant = c;
		else if (m.s == 0)
			t_side.emplace_back(m.t, c);
		else if (m.t == 0)
			s_side.emplace_back(m.s, c);
	}
	std::vector<StandardMonomial> out;
	const Integer base = constant.value_or(Integer(0));
	if (base != 1)
		out.push_back({0, base});

	auto walk = [&](std::vector<std::pair<std::uint32_t, Integer>>& side, int sign) -> bool {
		std::sort(side.begin(), side.end());
		Integer current = base;
		std::size_t next = 0;
		for (std::uint32_t k = 1;; ++k) {
			while (next < side.size() && side[next].first <= k) {
				if (current == 0 || side[next].second < current)
					current = side[next].second;
				++next;
			}
			if (current == 1)
				return true;
			if (next == side.size())
				return false;  // the index stays > 1 (or 0) forever
			out.push_back({sign * static_cast<LaurentPoly::Exponent>(k), current});
		}
	};
	if (!walk(t_side, 1) || !walk(s_side, -1))
		return std::nullopt;
	return out;
}

void require_prime(std::int64_t p)
{
	if (!is_prime(Integer(static_cast<long>(p))))
		throw DomainError("modulus " + std::to_string(p) + " is not prime");
	if (p > kMaxPrime)
		throw BoundExceeded("prime " + std::to_string(p) + " exceeds bound " + std::to_string(kMaxPrime));
}

// (I : m) for I with finite quotient, by enumerating residues of R/I.
LaurentIdeal colon_by_enumeration(const LaurentIdeal& ideal, const LaurentIdeal& m)
{
	const auto structure = residue_structure(ideal.data().basis);
	if (!structure)
		throw DomainError("colon enumeration needs a finite quotient");
	Integer size = 1;
	for (const auto& sm : *structure)
		size *= sm.index;
	if (size == 0)
		throw DomainError("colon enumeration needs a finite quotient");
	if (size > kMaxEnumeratedQuotient)
		throw BoundExceeded("quotient of order " + size.get_str() + " exceeds enumeration bound " +
		                    std::to_string(kMaxEnumeratedQuotient));

	LaurentIdeal colon = ideal;
	std::vector<long> digits(structure->size(), 0);
	for (;;) {
		LaurentPoly r;
		for (std::size_t i = 0; i < digits.size(); ++i)
			r.add_term(Integer(digits[i]), (*structure)[i].exponent);
		if (!r.is_zero() && !member(colon, r)) {
			const bool annihilates = std::all_of(
				m.generators().begin(), m.generators().end(),
				[&](const LaurentPoly& g) { return member(ideal, r * g); });
			if (annihilates)
				colon = sum(colon, LaurentIdeal({r}));
		}
		std::size_t i = 0;
		while (i < digits.size() && ++digits[i] == (*structure)[i].index.get_si()) {
			digits[i] = 0;
			++i;
		}
		if (i == digits.size())
			break;
	}
	return colon;
}

std::vector<std::int64_t> prime_divisors(Integer n)
{
	std::vector<std::int64_t> out;
	for (std::int64_t p = 2; p <= kMaxPrime && n > 1; ++p) {
		if (!divides(Integer(static_cast<long>(p)), n))
			continue;
		out.push_back(p);
		while (divides(Integer(static_cast<long>(p)), n))
			n /= p;
	}
	if (n > 1)
		throw BoundExceeded("integer " + n.get_str() + " has a prime factor above bound " +
		                    std::to_string(kMaxPrime));
	return out;
}

}  // namespace

LaurentIdeal::LaurentIdeal(std::vector<LaurentPoly> generators)
{
	auto data = std::make_shared<IdealData>();
	for (auto& g : generators)
		if (!g.is_zero())
			data->user_generators.push_back(std::move(g));
	if (data->user_generators.empty())
		throw DomainError("an ideal needs at least one nonzero generator");

	std::vector<LaurentPoly> distinct;
	for (const auto& g : data->user_generators)
		distinct.push_back(normalize_unit(g));
	std::sort(distinct.begin(), distinct.end(), canonical_less);
	distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

	std::vector<Poly2> gens;
	for (const auto& g : distinct)
		gens.push_back(detail::to_poly2(g));
	data->basis = detail::reduced_strong_basis(gens);
	data->generators = canonical_generators(data->basis);
	data_ = std::move(data);
}

LaurentIdeal LaurentIdeal::unit() { return LaurentIdeal({LaurentPoly(1)}); }

const std::vector<LaurentPoly>& LaurentIdeal::user_generators() const { return data_->user_generators; }
const std::vector<LaurentPoly>& LaurentIdeal::generators() const { return data_->generators; }

bool LaurentIdeal::is_unit() const
{
	return data_->generators.size() == 1 && data_->generators.front() == LaurentPoly(1);
}

std::string LaurentIdeal::to_string() const
{
	std::string out;
	for (const auto& g : data_->generators) {
		if (!out.empty())
			out += "; ";
		out += surfknot::to_string(g);
	}
	return out;
}

std::string LaurentIdeal::basis_text() const
{
	std::string out;
	for (const auto& g : data_->basis)
		out += poly2_text(g) + "\n";
	return out;
}

bool operator==(const LaurentIdeal& a, const LaurentIdeal& b)
{
	return a.data_ == b.data_ || a.data_->basis == b.data_->basis;
}

std::ostream& operator<<(std::ostream& os, const LaurentIdeal& ideal)
{
	return os << '(' << ideal.to_string() << ')';
}

std::string IdealClass::to_string() const
{
	std::string out;
	for (const auto& g : primitive_generators) {
		if (!out.empty())
			out += "; ";
		out += surfknot::to_string(g);
	}
	return out;
}

bool member(const LaurentIdeal& ideal, const LaurentPoly& f)
{
	return detail::normal_form(detail::to_poly2(f), ideal.data().basis).is_zero();
}

bool equals(const LaurentIdeal& a, const LaurentIdeal& b) { return a == b; }

LaurentIdeal product(const LaurentIdeal& a, const LaurentIdeal& b)
{
	std::vector<LaurentPoly> gens;
	for (const auto& f : a.generators())
		for (const auto& g : b.generators())
			gens.push_back(f * g);
	return LaurentIdeal(std::move(gens));
}

LaurentIdeal sum(const LaurentIdeal& a, const LaurentIdeal& b)
{
	std::vector<LaurentPoly> gens = a.generators();
	gens.insert(gens.end(), b.generators().begin(), b.generators().end());
	return LaurentIdeal(std::move(gens));
}

LaurentIdeal power(const LaurentIdeal& a, int n)
{
	if (n < 0)
		throw DomainError("negative ideal power");
	LaurentIdeal result = LaurentIdeal::unit();
	for (int i = 0; i < n; ++i)
		result = product(result, a);
	return result;
}

Integer intersect_Z(const LaurentIdeal& ideal)
{
	for (const auto& g : ideal.data().basis)
		if (g.lead().m.t == 0 && g.lead().m.s == 0)
			return g.lead().c;
	return 0;
}

Integer eval_ideal(const LaurentIdeal& ideal, int x)
{
	Integer g = 0;
	for (const auto& f : ideal.user_generators())
		g = gcd(g, eval_at(f, x));
	return g;
}

std::optional<Integer> quotient_size(const LaurentIdeal& ideal)
{
	const auto structure = residue_structure(ideal.data().basis);
	if (!structure)
		return std::nullopt;
	Integer size = 1;
	for (const auto& sm : *structure) {
		if (sm.index == 0)
			return std::nullopt;
		size *= sm.index;
	}
	return size;
}

std::optional<LaurentPoly> principal_generator(const LaurentIdeal& ideal)
{
	// I = (f) forces f ~ gcd of any generating set, so I is principal iff it equals
	// the ideal of that gcd.
	LaurentPoly g;
	for (const auto& f : ideal.generators())
		g = gcd(g.is_zero() ? f : g, f);
	if (LaurentIdeal({g}) == ideal)
		return g;
	return std::nullopt;
}

bool is_principal(const LaurentIdeal& ideal)
{
	if (ideal.generators().size() == 1)
		return true;
	return principal_generator(ideal).has_value();
}

FpPoly image_mod_p(const LaurentIdeal& ideal, std::int64_t p)
{
	require_prime(p);
	FpPoly h(p);
	for (const auto& g : ideal.generators())
		h = gcd(h, FpPoly::from_laurent(g, p));
	return h;
}

bool is_maximal(const LaurentIdeal& ideal)
{
	const Integer n = intersect_Z(ideal);
	if (!is_prime(n))
		return false;
	if (n > kMaxPrime)
		throw BoundExceeded("prime " + n.get_str() + " exceeds bound " + std::to_string(kMaxPrime));
	const FpPoly h = image_mod_p(ideal, n.get_si());
	if (h.degree() < 1)
		return false;
	if (h.degree() > kMaxIrreducibleDegree)
		throw BoundExceeded("residue degree " + std::to_string(h.degree()) + " exceeds bound " +
		                    std::to_string(kMaxIrreducibleDegree));
	return is_irreducible(h);
}

ContentSplit content_split(const LaurentIdeal& ideal)
{
	LaurentPoly content;
	for (const auto& f : ideal.user_generators())
		content = gcd(content.is_zero() ? f : content, f);
	std::vector<LaurentPoly> quotients;
	for (const auto& f : ideal.user_generators()) {
		auto q = div_exact(f, content);
		if (!q)
			throw InternalError("content does not divide a generator");
		quotients.push_back(std::move(*q));
	}
	return {content, LaurentIdeal(std::move(quotients))};
}

IdealClass class_canonical(const LaurentIdeal& ideal)
{
	return {content_split(ideal).primitive.generators()};
}

bool class_equivalent(const LaurentIdeal& a, const LaurentIdeal& b)
{
	return content_split(a).primitive == content_split(b).primitive;
}

MaximalFactorization factor_maximals(const LaurentIdeal& ideal)
{
	const LaurentIdeal primitive = content_split(ideal).primitive;
	MaximalFactorization result{{}, false, primitive};
	if (primitive.is_unit()) {
		result.complete = true;
		return result;
	}
	const Integer n = intersect_Z(primitive);
	if (n == 0 || !quotient_size(primitive))
		return result;

	LaurentIdeal current = primitive;
	for (const std::int64_t p : prime_divisors(n)) {
		for (const auto& [residue, mult] : factor(image_mod_p(primitive, p))) {
			if (residue.degree() > kMaxIrreducibleDegree)
				throw BoundExceeded("residue degree exceeds bound " + std::to_string(kMaxIrreducibleDegree));
			const LaurentIdeal m({LaurentPoly(static_cast<long>(p)), residue.lift()});
			int count = 0;
			while (!current.is_unit() &&
			       std::all_of(current.generators().begin(), current.generators().end(),
			                   [&](const LaurentPoly& g) { return member(m, g); })) {
				LaurentIdeal colon = colon_by_enumeration(current, m);
				if (!(product(m, colon) == current))
					break;
				current = colon;
				++count;
			}
			if (count > 0)
				result.factors.push_back({m, p, residue, count});
		}
	}
	result.remainder = current;
	result.complete = current.is_unit();
	if (result.complete) {
		LaurentIdeal check = LaurentIdeal::unit();
		for (const auto& f : result.factors)
			check = product(check, power(f.ideal, f.multiplicity));
		if (!(check == primitive))
			throw InternalError("maximal factorization does not multiply back");
	}
	return result;
}

int hilbert_function(const LaurentIdeal& maximal, int n)
{
	if (n < 0)
		throw DomainError("hilbert_function needs n >= 0");
	if (!is_maximal(maximal))
		throw DomainError("hilbert_function needs a maximal ideal");
	const Integer q = *quotient_size(maximal);
	const LaurentIdeal lower = power(maximal, n);
	const LaurentIdeal upper = product(lower, maximal);
	const auto a = quotient_size(upper);
	const auto b = quotient_size(lower);
	if (!a || !b || !divides(*b, *a))
		throw InternalError("powers of a maximal ideal must have nested finite quotients");
	Integer ratio = *a / *b;
	int k = 0;
	while (ratio > 1 && divides(q, ratio)) {
		ratio /= q;
		++k;
	}
	if (ratio != 1)
		throw InternalError("Hilbert function value is not an integral logarithm");
	return k;
}

LaurentIdeal invert_t_ideal(const LaurentIdeal& ideal)
{
	std::vector<LaurentPoly> gens;
	for (const auto& f : ideal.user_generators())
		gens.push_back(invert_t(f));
	return LaurentIdeal(std::move(gens));
}

}  // namespace surfknot
