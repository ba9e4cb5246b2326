#include "oracles.hpp"

#include "surfknot/errors.hpp"
#include "surfknot/fp_poly.hpp"
#include "surfknot/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace surfknot;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int max_span = 4, long height = 5)
{
	std::uniform_int_distribution<int> low(-3, 3), span(0, max_span);
	std::uniform_int_distribution<long> coeff(-height, height);
	std::vector<Integer> c(static_cast<std::size_t>(span(rng)) + 1);
	for (auto& x : c)
		x = coeff(rng);
	return LaurentPoly::from_coefficients(c, low(rng));
}

const LaurentPoly t = LaurentPoly::t();

}  // namespace

TEST_CASE("multiplication examples")
{
	CHECK((t + 1) * (t - 1) == LaurentPoly({-1, 0, 1}));
	CHECK((LaurentPoly::t(-1) + 1) * t == 1 + t);
	CHECK((t + 1) * cyclotomic(6) == LaurentPoly({1, 0, 0, 1}));
	CHECK((t - t).is_zero());
	CHECK((t - t).terms().empty());
}

TEST_CASE("normalize_unit")
{
	const LaurentPoly f({1, -3, 1});
	CHECK(normalize_unit(-LaurentPoly::t(-1) * f) == f);
	CHECK(normalize_unit(LaurentPoly({-1, 2})) == LaurentPoly({1, -2}));
	CHECK(normalize_unit(LaurentPoly({1, 1}, 2)) == LaurentPoly({1, 1}));
	CHECK_THROWS_AS(normalize_unit(LaurentPoly()), DomainError);
}

TEST_CASE("gcd examples")
{
	CHECK(gcd(LaurentPoly({-1, 0, 1}), LaurentPoly({1, -1, 1})) == LaurentPoly(1));
	CHECK(gcd(LaurentPoly(6), LaurentPoly({2, 2})) == LaurentPoly(2));
	const LaurentPoly f({2, -5, 2}), g({1, 1}, -2);
	CHECK(gcd(f, f * g) == normalize_unit(f));
	CHECK(gcd(f, LaurentPoly()) == normalize_unit(f));
	CHECK_THROWS_AS(gcd(LaurentPoly(), LaurentPoly()), DomainError);
}

TEST_CASE("eval_at and invert_t")
{
	CHECK(eval_at(cyclotomic(6), -1) == 3);
	CHECK(eval_at(cyclotomic(6), 1) == 1);
	CHECK(eval_at(LaurentPoly({2, -5, 2}), -1) == 9);
	CHECK(eval_at(LaurentPoly::t(-3), -1) == -1);
	CHECK_THROWS_AS(eval_at(t, 2), DomainError);

	CHECK(invert_t(LaurentPoly({-1, 2})) == LaurentPoly({2, -1}, -1));
	CHECK(unit_equivalent(invert_t(LaurentPoly({1, -3, 1})), LaurentPoly({1, -3, 1})));
}

TEST_CASE("div_exact")
{
	CHECK(div_exact(LaurentPoly({0, -1, 1}), LaurentPoly({-1, 1})) == t);
	CHECK(div_exact(LaurentPoly({1, 0, 0, 1}), LaurentPoly({1, 1})) == cyclotomic(6));
	CHECK_FALSE(div_exact(LaurentPoly({2, 1}), LaurentPoly({1, 1})).has_value());
	CHECK_FALSE(div_exact(LaurentPoly(3), LaurentPoly(2)).has_value());
	CHECK(div_exact(LaurentPoly(), t) == LaurentPoly());
	CHECK_THROWS_AS(div_exact(t, LaurentPoly()), DomainError);
}

TEST_CASE("cyclotomic polynomials")
{
	CHECK(cyclotomic(1) == LaurentPoly({-1, 1}));
	CHECK(cyclotomic(6) == LaurentPoly({1, -1, 1}));
	CHECK(cyclotomic(5) == LaurentPoly({1, 1, 1, 1, 1}));
	CHECK(cyclotomic(10) == LaurentPoly({1, -1, 1, -1, 1}));
	// t^n - 1 is the product of Phi_d over d | n.
	for (int n = 1; n <= 30; ++n) {
		LaurentPoly prod(1);
		for (int d = 1; d <= n; ++d)
			if (n % d == 0)
				prod *= cyclotomic(d);
		CHECK(prod == LaurentPoly::t(n) - 1);
	}
	CHECK_THROWS_AS(cyclotomic(0), DomainError);
}

TEST_CASE("printing")
{
	CHECK(to_string(LaurentPoly({1, -1, 1})) == "t^2-t+1");
	CHECK(to_string(LaurentPoly({2, 1}, -1)) == "1+2t^-1");
	CHECK(to_string(LaurentPoly()) == "0");
	CHECK(to_string(LaurentPoly(-3)) == "-3");
	CHECK(to_string(-t) == "-t");
}

TEST_CASE("ring laws on random inputs")
{
	std::mt19937_64 rng(7);
	for (int i = 0; i < 300; ++i) {
		const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
		CHECK(a * b == b * a);
		CHECK(a - a == LaurentPoly());
		for (int x : {1, -1}) {
			CHECK(eval_at(a * b, x) == eval_at(a, x) * eval_at(b, x));
			CHECK(eval_at(a + b, x) == eval_at(a, x) + eval_at(b, x));
		}
		CHECK(invert_t(invert_t(a)) == a);
		CHECK(invert_t(a * b) == invert_t(a) * invert_t(b));
		if (!a.is_zero()) {
			const LaurentPoly u = -LaurentPoly::t(i % 7 - 3);
			CHECK(normalize_unit(u * a) == normalize_unit(a));
			CHECK(div_exact(a * b, a) == b);
		}
		if (!a.is_zero() || !b.is_zero()) {
			const LaurentPoly g = gcd(a, b);
			CHECK(div_exact(a, g).has_value());
			CHECK(div_exact(b, g).has_value());
			CHECK(gcd(-t * a, b) == g);
		}
	}
}

TEST_CASE("gcd of products is the common factor")
{
	std::mt19937_64 rng(11);
	for (int i = 0; i < 100; ++i) {
		const LaurentPoly f = random_poly(rng, 3, 4), g = random_poly(rng, 3, 4), h = random_poly(rng, 3, 4);
		if (f.is_zero() || g.is_zero() || h.is_zero())
			continue;
		// gcd(f g, f h) is f times gcd(g, h).
		CHECK(gcd(f * g, f * h) == normalize_unit(f * gcd(g, h)));
	}
}

TEST_CASE("F_p polynomials")
{
	const FpPoly phi5 = FpPoly::from_laurent(cyclotomic(5), 2);
	CHECK(phi5.degree() == 4);
	CHECK(is_irreducible(phi5));
	CHECK_FALSE(is_irreducible(FpPoly::from_laurent(cyclotomic(7), 2)));  // splits into two cubics
	CHECK(is_irreducible(FpPoly::from_laurent(cyclotomic(3), 2)));
	CHECK(FpPoly::from_laurent(LaurentPoly({3, 3}, 2), 3).is_zero());
	CHECK(FpPoly::from_laurent(LaurentPoly({1, 1}, -2), 5) == FpPoly(5, {1, 1}));

	const auto parts = factor(FpPoly::from_laurent(cyclotomic(7), 2));
	REQUIRE(parts.size() == 2);
	CHECK(parts[0].first.degree() == 3);
	CHECK(parts[1].first.degree() == 3);
	CHECK(parts[0].second == 1);
}

TEST_CASE("irreducibility agrees with trial division")
{
	std::mt19937_64 rng(3);
	for (const std::int64_t p : {2, 3, 5, 7}) {
		for (int i = 0; i < 150; ++i) {
			std::uniform_int_distribution<int> deg(1, 6);
			std::uniform_int_distribution<std::int64_t> c(0, p - 1);
			std::vector<std::int64_t> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
			for (auto& x : coeffs)
				x = c(rng);
			coeffs.back() = 1;
			const FpPoly h(p, coeffs);
			CHECK(is_irreducible(h) == oracle::trial_division_irreducible(h));
		}
	}
}

TEST_CASE("factorization multiplies back into irreducibles")
{
	std::mt19937_64 rng(5);
	for (const std::int64_t p : {2, 3, 5, 97}) {
		for (int i = 0; i < 60; ++i) {
			std::uniform_int_distribution<int> deg(1, 8);
			std::uniform_int_distribution<std::int64_t> c(0, p - 1);
			std::vector<std::int64_t> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
			for (auto& x : coeffs)
				x = c(rng);
			coeffs.back() = 1;
			const FpPoly h(p, coeffs);
			FpPoly prod(p, {1});
			for (const auto& [f, m] : factor(h)) {
				CHECK(is_irreducible(f));
				for (int k = 0; k < m; ++k)
					prod = prod * f;
			}
			CHECK(prod == h.monic());
		}
	}
}
