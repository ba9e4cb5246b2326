#include "surfknot/fp_poly.hpp"

#include "surfknot/errors.hpp"

#include <algorithm>
#include <random>

namespace surfknot {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p)
{
	a %= p;
	return a < 0 ? a + p : a;
}

bool factor_less(const FpPoly& a, const FpPoly& b)
{
	if (a.degree() != b.degree())
		return a.degree() < b.degree();
	return a.coefficients() < b.coefficients();
}

FpPoly x_poly(std::int64_t p) { return FpPoly::monomial(p, 1, 1); }

// t^(p^d) mod m, by d successive p-th powers.
FpPoly frobenius_power(const FpPoly& m, int d)
{
	FpPoly u = x_poly(m.prime()) % m;
	for (int i = 0; i < d; ++i)
		u = pow_mod(u, Integer(m.prime()), m);
	return u;
}

// Splits a monic squarefree g whose irreducible factors all have degree d.
void equal_degree_split(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out)
{
	if (g.degree() == d) {
		out.push_back(g);
		return;
	}
	const std::int64_t p = g.prime();
	Integer pd = 1;
	for (int i = 0; i < d; ++i)
		pd *= p;
	std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
	for (;;) {
		std::vector<std::int64_t> c(static_cast<std::size_t>(g.degree()));
		for (auto& v : c)
			v = coeff(rng);
		FpPoly a(p, c);
		if (a.degree() < 1)
			continue;
		FpPoly b(p);
		if (p == 2) {
			// Trace map to F_2.
			FpPoly term = a % g;
			b = term;
			for (int i = 1; i < d; ++i) {
				term = (term * term) % g;
				b = b + term;
			}
		} else {
			b = pow_mod(a, (pd - 1) / 2, g) - FpPoly(p, {1});
		}
		FpPoly f = gcd(g, b);
		if (f.degree() > 0 && f.degree() < g.degree()) {
			equal_degree_split(f, d, rng, out);
			equal_degree_split(g.divmod(f).first.monic(), d, rng, out);
			return;
		}
	}
}

}  // namespace

FpPoly::FpPoly(std::int64_t p) : p_(p)
{
	if (p < 2 || p > (std::int64_t{1} << 31))
		throw DomainError("FpPoly modulus out of range");
}

FpPoly::FpPoly(std::int64_t p, std::vector<std::int64_t> coefficients) : FpPoly(p)
{
	c_ = std::move(coefficients);
	for (auto& v : c_)
		v = mod(v, p_);
	trim();
}

FpPoly FpPoly::from_laurent(const LaurentPoly& a, std::int64_t p)
{
	FpPoly out(p);
	if (a.is_zero())
		return out;
	std::vector<std::int64_t> c(static_cast<std::size_t>(a.span() + 1));
	const Integer modulus(p);
	for (const auto& [e, v] : a.terms()) {
		Integer r;
		mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
		c[static_cast<std::size_t>(e - a.min_exponent())] = r.get_si();
	}
	// Reduction mod p may have killed low terms; strip t-powers again.
	auto first = std::find_if(c.begin(), c.end(), [](std::int64_t v) { return v != 0; });
	c.erase(c.begin(), first);
	return FpPoly(p, std::move(c));
}

FpPoly FpPoly::monomial(std::int64_t p, std::int64_t coefficient, std::size_t degree)
{
	std::vector<std::int64_t> c(degree + 1, 0);
	c[degree] = coefficient;
	return FpPoly(p, std::move(c));
}

void FpPoly::trim()
{
	while (!c_.empty() && c_.back() == 0)
		c_.pop_back();
}

FpPoly FpPoly::monic() const
{
	if (is_zero())
		return *this;
	const std::int64_t inv = inverse_mod(leading(), p_);
	FpPoly out = *this;
	for (auto& v : out.c_)
		v = v * inv % p_;
	return out;
}

LaurentPoly FpPoly::lift() const
{
	std::vector<Integer> c;
	c.reserve(c_.size());
	for (auto v : c_)
		c.emplace_back(static_cast<long>(v));
	return LaurentPoly::from_coefficients(c);
}

FpPoly operator+(const FpPoly& a, const FpPoly& b)
{
	std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
	for (std::size_t i = 0; i < a.c_.size(); ++i)
		c[i] += a.c_[i];
	for (std::size_t i = 0; i < b.c_.size(); ++i)
		c[i] += b.c_[i];
	return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b)
{
	std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
	for (std::size_t i = 0; i < a.c_.size(); ++i)
		c[i] += a.c_[i];
	for (std::size_t i = 0; i < b.c_.size(); ++i)
		c[i] -= b.c_[i];
	return FpPoly(a.p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b)
{
	if (a.is_zero() || b.is_zero())
		return FpPoly(a.p_);
	std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
	for (std::size_t i = 0; i < a.c_.size(); ++i)
		for (std::size_t j = 0; j < b.c_.size(); ++j)
			c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % a.p_;
	return FpPoly(a.p_, std::move(c));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const
{
	if (divisor.is_zero())
		throw DomainError("FpPoly division by zero");
	FpPoly rem = *this;
	if (rem.degree() < divisor.degree())
		return {FpPoly(p_), rem};
	std::vector<std::int64_t> q(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), 0);
	const std::int64_t inv = inverse_mod(divisor.leading(), p_);
	const std::size_t dd = static_cast<std::size_t>(divisor.degree());
	while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
		const std::size_t shift = static_cast<std::size_t>(rem.degree()) - dd;
		const std::int64_t factor = rem.leading() * inv % p_;
		q[shift] = factor;
		for (std::size_t i = 0; i <= dd; ++i)
			rem.c_[i + shift] = mod(rem.c_[i + shift] - factor * divisor.c_[i], p_);
		rem.trim();
	}
	return {FpPoly(p_, std::move(q)), rem};
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
	std::int64_t r0 = mod(a, p), r1 = p, s0 = 1, s1 = 0;
	while (r1 != 0) {
		const std::int64_t q = r0 / r1;
		std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
		std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
	}
	if (r0 != 1)
		throw DomainError("element is not invertible mod p");
	return mod(s0, p);
}

FpPoly gcd(const FpPoly& a, const FpPoly& b)
{
	FpPoly x = a, y = b;
	while (!y.is_zero()) {
		FpPoly r = x % y;
		x = std::move(y);
		y = std::move(r);
	}
	return x.monic();
}

FpPoly pow_mod(const FpPoly& base, const Integer& e, const FpPoly& m)
{
	FpPoly result = FpPoly(m.prime(), {1}) % m;
	FpPoly b = base % m;
	const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
	for (std::size_t i = bits; i-- > 0;) {
		result = (result * result) % m;
		if (mpz_tstbit(e.get_mpz_t(), i))
			result = (result * b) % m;
	}
	return result;
}

bool is_irreducible(const FpPoly& h)
{
	if (h.degree() < 1)
		return false;
	const FpPoly m = h.monic();
	const FpPoly x = x_poly(m.prime());
	FpPoly u = x % m;
	for (int i = 1; 2 * i <= m.degree(); ++i) {
		u = pow_mod(u, Integer(m.prime()), m);
		if (gcd(m, u - x).degree() > 0)
			return false;
	}
	return true;
}

std::vector<std::pair<FpPoly, int>> factor(const FpPoly& h)
{
	std::vector<std::pair<FpPoly, int>> out;
	if (h.degree() < 1)
		return out;
	const std::int64_t p = h.prime();
	std::mt19937_64 rng(0x5eed);
	FpPoly rest = h.monic();
	std::vector<FpPoly> irreducibles;
	for (int d = 1; rest.degree() >= d; ++d) {
		if (2 * d > rest.degree()) {
			// Whatever remains has no factor of degree < d, so it is irreducible.
			irreducibles.push_back(rest);
			break;
		}
		const FpPoly u = frobenius_power(rest, d);
		const FpPoly g = gcd(rest, u - x_poly(p));
		if (g.degree() < 1)
			continue;
		std::vector<FpPoly> found;
		equal_degree_split(g, d, rng, found);
		for (auto& f : found) {
			irreducibles.push_back(f);
			while (true) {
				auto [q, r] = rest.divmod(f);
				if (!r.is_zero())
					break;
				rest = q.monic();
			}
		}
	}
	std::sort(irreducibles.begin(), irreducibles.end(), factor_less);
	irreducibles.erase(std::unique(irreducibles.begin(), irreducibles.end()), irreducibles.end());
	for (const auto& f : irreducibles) {
		int mult = 0;
		FpPoly cur = h.monic();
		while (true) {
			auto [q, r] = cur.divmod(f);
			if (!r.is_zero())
				break;
			cur = q;
			++mult;
		}
		out.emplace_back(f, mult);
	}
	return out;
}

}  // namespace surfknot
