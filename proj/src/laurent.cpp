#include "surfknot/laurent.hpp"

#include "surfknot/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace surfknot {

namespace {

// Dense coefficient vectors (index = exponent) for the Z[t] algorithms below.
using Dense = std::vector<Integer>;

void trim(Dense& v)
{
	while (!v.empty() && v.back() == 0)
		v.pop_back();
}

// Strips the lowest power of t; a must be nonzero.
Dense to_dense(const LaurentPoly& a)
{
	const auto low = a.min_exponent();
	Dense v(static_cast<std::size_t>(a.span() + 1));
	for (const auto& [k, c] : a.terms())
		v[static_cast<std::size_t>(k - low)] = c;
	return v;
}

Integer dense_content(const Dense& v)
{
	Integer g = 0;
	for (const auto& c : v)
		g = gcd(g, c);
	return g;
}

void make_primitive(Dense& v)
{
	const Integer g = dense_content(v);
	if (g > 1)
		for (auto& c : v)
			mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero, a possibly zero).
Dense pseudo_remainder(Dense a, const Dense& b)
{
	const std::size_t db = b.size() - 1;
	const Integer& lb = b.back();
	while (!a.empty() && a.size() - 1 >= db) {
		const Integer lead = a.back();
		const std::size_t shift = a.size() - 1 - db;
		for (auto& c : a)
			c *= lb;
		for (std::size_t i = 0; i <= db; ++i)
			a[i + shift] -= lead * b[i];
		trim(a);
	}
	return a;
}

}  // namespace

LaurentPoly::LaurentPoly(const Integer& constant)
{
	if (constant != 0)
		terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<long> coefficients, Exponent low)
{
	Exponent k = low;
	for (long c : coefficients) {
		if (c != 0)
			terms_.emplace(k, Integer(c));
		++k;
	}
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<Integer>& coefficients, Exponent low)
{
	LaurentPoly p;
	Exponent k = low;
	for (const auto& c : coefficients) {
		if (c != 0)
			p.terms_.emplace(k, c);
		++k;
	}
	return p;
}

LaurentPoly LaurentPoly::monomial(const Integer& coefficient, Exponent exponent)
{
	LaurentPoly p;
	if (coefficient != 0)
		p.terms_.emplace(exponent, coefficient);
	return p;
}

bool LaurentPoly::is_constant() const noexcept
{
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Integer LaurentPoly::coefficient(Exponent exponent) const
{
	auto it = terms_.find(exponent);
	return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const
{
	if (terms_.empty())
		throw DomainError("min_exponent of the zero polynomial");
	return terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const
{
	if (terms_.empty())
		throw DomainError("max_exponent of the zero polynomial");
	return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const
{
	LaurentPoly p;
	for (const auto& [e, c] : terms_)
		p.terms_.emplace_hint(p.terms_.end(), e + k, c);
	return p;
}

Integer LaurentPoly::content() const
{
	Integer g = 0;
	for (const auto& [e, c] : terms_)
		g = gcd(g, c);
	return g;
}

void LaurentPoly::add_term(const Integer& c, Exponent k)
{
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(k, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

LaurentPoly LaurentPoly::operator-() const
{
	LaurentPoly p = *this;
	for (auto& [e, c] : p.terms_)
		c = -c;
	return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs)
{
	for (const auto& [e, c] : rhs.terms_)
		add_term(c, e);
	return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs)
{
	for (const auto& [e, c] : rhs.terms_)
		add_term(-c, e);
	return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
	LaurentPoly p;
	for (const auto& [ea, ca] : a.terms_)
		for (const auto& [eb, cb] : b.terms_)
			p.add_term(ca * cb, ea + eb);
	return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs)
{
	*this = *this * rhs;
	return *this;
}

LaurentPoly& LaurentPoly::scale(const Integer& c)
{
	if (c == 0) {
		terms_.clear();
		return *this;
	}
	for (auto& [e, v] : terms_)
		v *= c;
	return *this;
}

LaurentPoly normalize_unit(const LaurentPoly& a)
{
	if (a.is_zero())
		throw DomainError("normalize_unit of the zero polynomial");
	LaurentPoly p = a.shifted(-a.min_exponent());
	if (p.coefficient(0) < 0)
		p = -p;
	return p;
}

bool unit_equivalent(const LaurentPoly& a, const LaurentPoly& b)
{
	if (a.is_zero() || b.is_zero())
		return a.is_zero() && b.is_zero();
	return normalize_unit(a) == normalize_unit(b);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b)
{
	if (a.is_zero() && b.is_zero())
		throw DomainError("gcd of two zero polynomials");
	if (a.is_zero())
		return normalize_unit(b);
	if (b.is_zero())
		return normalize_unit(a);

	const Integer content = gcd(a.content(), b.content());
	Dense x = to_dense(a);
	Dense y = to_dense(b);
	make_primitive(x);
	make_primitive(y);
	if (x.size() < y.size())
		std::swap(x, y);
	// Primitive remainder sequence: every step stays in Z[t] and, by Gauss's lemma,
	// the last nonzero primitive remainder is the primitive gcd over Q[t].
	while (!y.empty()) {
		Dense r = pseudo_remainder(x, y);
		make_primitive(r);
		x = std::move(y);
		y = std::move(r);
	}
	LaurentPoly g = LaurentPoly::from_coefficients(x);
	g.scale(content);
	return normalize_unit(g);
}

Integer eval_at(const LaurentPoly& a, int x)
{
	if (x != 1 && x != -1)
		throw DomainError("eval_at supports only t = 1 and t = -1");
	Integer v = 0;
	for (const auto& [e, c] : a.terms()) {
		if (x == -1 && (e % 2 != 0))
			v -= c;
		else
			v += c;
	}
	return v;
}

LaurentPoly invert_t(const LaurentPoly& a)
{
	LaurentPoly p;
	for (const auto& [e, c] : a.terms())
		p.add_term(c, -e);
	return p;
}

std::optional<LaurentPoly> div_exact(const LaurentPoly& a, const LaurentPoly& b)
{
	if (b.is_zero())
		throw DomainError("division by the zero polynomial");
	if (a.is_zero())
		return LaurentPoly();

	// Over Z[t^{+-1}], b | a iff the t-stripped parts divide in Z[t].
	Dense num = to_dense(a);
	const Dense den = to_dense(b);
	if (num.size() < den.size())
		return std::nullopt;
	const std::size_t dd = den.size() - 1;
	Dense quot(num.size() - dd);
	while (!num.empty() && num.size() - 1 >= dd) {
		const Integer& lead = num.back();
		if (!divides(den.back(), lead))
			return std::nullopt;
		const Integer q = lead / den.back();
		const std::size_t shift = num.size() - 1 - dd;
		quot[shift] = q;
		for (std::size_t i = 0; i <= dd; ++i)
			num[i + shift] -= q * den[i];
		trim(num);
	}
	if (!num.empty())
		return std::nullopt;
	return LaurentPoly::from_coefficients(quot, a.min_exponent() - b.min_exponent());
}

LaurentPoly cyclotomic(int n)
{
	if (n < 1)
		throw DomainError("cyclotomic index must be positive");
	LaurentPoly p = LaurentPoly::t(n) - LaurentPoly(1);
	for (int d = 1; d < n; ++d) {
		if (n % d != 0)
			continue;
		auto q = div_exact(p, cyclotomic(d));
		if (!q)
			throw InternalError("cyclotomic division failed");
		p = *q;
	}
	return p;
}

std::string to_string(const LaurentPoly& a)
{
	if (a.is_zero())
		return "0";
	std::string out;
	bool first = true;
	for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
		const auto& [e, c] = *it;
		Integer mag = abs(c);
		if (c < 0)
			out += '-';
		else if (!first)
			out += '+';
		first = false;
		if (e == 0) {
			out += mag.get_str();
			continue;
		}
		if (mag != 1)
			out += mag.get_str();
		out += 't';
		if (e != 1)
			out += '^' + std::to_string(e);
	}
	return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a)
{
	return os << to_string(a);
}

bool canonical_less(const LaurentPoly& a, const LaurentPoly& b)
{
	if (a.is_zero() || b.is_zero())
		return a.is_zero() && !b.is_zero();
	if (a.span() != b.span())
		return a.span() < b.span();
	const auto la = a.min_exponent();
	const auto lb = b.min_exponent();
	for (LaurentPoly::Exponent i = 0; i <= a.span(); ++i) {
		const Integer ca = a.coefficient(la + i);
		const Integer cb = b.coefficient(lb + i);
		if (ca != cb)
			return ca < cb;
	}
	return la < lb;
}

}  // namespace surfknot
