#include "catalog.hpp"
#include "oracles.hpp"

#include "surfknot/errors.hpp"
#include "surfknot/knots.hpp"

#include <doctest.h>

#include <random>

using namespace surfknot;

namespace {

const LaurentPoly t = LaurentPoly::t();

LaurentIdeal ideal(std::initializer_list<LaurentPoly> g) { return LaurentIdeal(g); }

LaurentPoly random_knot_poly(std::mt19937_64& rng)
{
	// g(t) random with f = 1 + (t - 1) g, so f(1) = 1.
	std::uniform_int_distribution<int> deg(0, 7);
	std::uniform_int_distribution<long> c(-4, 4);
	std::vector<Integer> g(static_cast<std::size_t>(deg(rng)) + 1);
	for (auto& x : g)
		x = c(rng);
	return LaurentPoly(1) + (t - 1) * LaurentPoly::from_coefficients(g);
}

}  // namespace

TEST_CASE("two-bridge presentations")
{
	const SurfaceKnot trefoil = two_bridge(3, 1);
	REQUIRE(trefoil.presentation.relators.size() == 1);
	CHECK(trefoil.presentation.relators[0] ==
	      Word({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}}));
	CHECK(trefoil.is_classical());
	CHECK(alexander_ideal(trefoil) == ideal({cyclotomic(6)}));
	CHECK(alexander_ideal(two_bridge(5, 3)) == ideal({LaurentPoly({1, -3, 1})}));
	CHECK(alexander_ideal(two_bridge(9, 7)) == ideal({LaurentPoly({2, -5, 2})}));
	CHECK(alexander_ideal(two_bridge(5, 1)) == ideal({cyclotomic(10)}));

	CHECK_THROWS_AS(two_bridge(4, 1), DomainError);
	CHECK_THROWS_AS(two_bridge(9, 3), DomainError);
	CHECK_THROWS_AS(two_bridge(5, 5), DomainError);
	CHECK_THROWS_AS(two_bridge(1, 1), DomainError);
}

TEST_CASE("twist spins")
{
	const SurfaceKnot trefoil = two_bridge(3, 1);
	CHECK(alexander_ideal(twist_spin(trefoil, 2)) == ideal({LaurentPoly(3), t + 1}));
	CHECK(alexander_ideal(twist_spin(trefoil, 5)).is_unit());
	CHECK(alexander_ideal(twist_spin(two_bridge(9, 7), 2)) == ideal({LaurentPoly(9), t + 1}));
	CHECK(alexander_ideal(twist_spin(trefoil, 1)).is_unit());
	CHECK(alexander_ideal(twist_spin(trefoil, -1)).is_unit());
	const SurfaceKnot spun = spin(trefoil);
	CHECK(spun.presentation.relators.size() == 1);
	CHECK(alexander_ideal(spun) == alexander_ideal(trefoil));
	CHECK(spun.genus == 0);
	CHECK_FALSE(spun.is_classical());
	CHECK_THROWS_AS(twist_spin(twist_spin(trefoil, 2), 2), DomainError);
}

TEST_CASE("commutator and power relators give the same ideals")
{
	for (const auto& k : catalog::classical())
		for (int n = -4; n <= 6; ++n)
			CHECK(alexander_ideal(twist_spin(k, n, TwistRelators::Commutator)) ==
			      alexander_ideal(twist_spin(k, n, TwistRelators::Power)));
}

TEST_CASE("connected sums")
{
	const SurfaceKnot tau2 = twist_spin(two_bridge(3, 1), 2);
	const SurfaceKnot spun = spin(two_bridge(3, 1));
	CHECK(alexander_ideal(connect_sum(tau2, unknot())) == alexander_ideal(tau2));
	const SurfaceKnot twice = connect_sum(tau2, tau2);
	CHECK(alexander_ideal(twice) == power(ideal({LaurentPoly(3), t + 1}), 2));
	CHECK(twice.presentation.generators == std::vector<std::string>{"x", "y", "x'", "y'"});
	CHECK(alexander_ideal(connect_sum(tau2, spun)) == product(ideal({cyclotomic(6)}), alexander_ideal(tau2)));
	const SurfaceKnot r = realize_ideal(ideal({LaurentPoly(3), t + 1}));
	CHECK(connect_sum(r, r).genus == 4);
	CHECK_THROWS_AS(connect_sum(tau2, two_bridge(3, 1)), DomainError);
	CHECK(alexander_ideal(connect_sum(two_bridge(3, 1), two_bridge(5, 3))) ==
	      ideal({cyclotomic(6) * LaurentPoly({1, -3, 1})}));
}

TEST_CASE("Kinoshita realization")
{
	const SurfaceKnot u = kinoshita_realize(LaurentPoly(1));
	REQUIRE(u.presentation.relators.size() == 1);
	CHECK(u.presentation.relators[0] == Word({{0, 1}, {1, -1}}));

	const SurfaceKnot k = kinoshita_realize(cyclotomic(6));
	CHECK(k.presentation.relators[0] == two_bridge(3, 1).presentation.relators[0]);

	const SurfaceKnot k2 = kinoshita_realize(LaurentPoly({-1, 2}));
	// w = x y^-1 x, relator x w y^-1 w^-1.
	CHECK(k2.presentation.relators[0] == Word({{0, 2}, {1, -1}, {0, 1}, {1, -1}, {0, -1}, {1, 1}, {0, -1}}));
	CHECK(alexander_ideal(k2) == ideal({LaurentPoly({-1, 2})}));

	CHECK(alexander_ideal(kinoshita_realize(-LaurentPoly::t(3) * LaurentPoly({-1, 2}))) ==
	      ideal({LaurentPoly({-1, 2})}));
	CHECK_THROWS_AS(kinoshita_realize(LaurentPoly({1, 1})), DomainError);
	CHECK_THROWS_AS(kinoshita_realize(LaurentPoly()), DomainError);

	std::mt19937_64 rng(41);
	for (int i = 0; i < 40; ++i) {
		const LaurentPoly f = random_knot_poly(rng);
		CHECK(alexander_ideal(kinoshita_realize(f)) == ideal({f}));
	}
}

TEST_CASE("ideal realization")
{
	const LaurentIdeal m3({LaurentPoly(3), t + 1});
	const SurfaceKnot k = realize_ideal(m3);
	CHECK(k.genus == 2);
	CHECK(k.presentation.relators.size() == 3);
	CHECK(alexander_ideal(k) == m3);
	// f0 = 2 - t, f1 = f2 = 2t - 1.
	CHECK(k.presentation.relators[0] == kinoshita_realize(LaurentPoly({2, -1})).presentation.relators[0]);
	CHECK(k.presentation.relators[1] == kinoshita_realize(LaurentPoly({-1, 2})).presentation.relators[0]);
	CHECK(k.presentation.relators[2] == k.presentation.relators[1]);

	const SurfaceKnot principal = realize_ideal(ideal({LaurentPoly({-1, 2})}));
	CHECK(principal.genus == 0);
	CHECK(principal.presentation.relators == kinoshita_realize(LaurentPoly({-1, 2})).presentation.relators);

	const SurfaceKnot unit = realize_ideal(ideal({LaurentPoly(2), t}));
	CHECK(alexander_ideal(unit).is_unit());
	CHECK(unit.genus == 0);

	CHECK_THROWS_AS(realize_ideal(ideal({LaurentPoly(3)})), DomainError);
	CHECK_THROWS_AS(realize_ideal(ideal({t + 1})), DomainError);
}

TEST_CASE("determinants")
{
	const SurfaceKnot trefoil = two_bridge(3, 1);
	CHECK(determinant(twist_spin(trefoil, 2)) == 3);
	CHECK(determinant(twist_spin(trefoil, 3)) == 1);
	CHECK(determinant(twist_spin(two_bridge(9, 7), 2)) == 9);
	for (int p = 3; p <= 19; p += 2)
		for (int q = 1; q < p; ++q)
			if (std::gcd(p, q) == 1)
				CHECK(determinant(two_bridge(p, q)) == p);
}

TEST_CASE("twist-spin formula")
{
	const SurfaceKnot trefoil = two_bridge(3, 1);
	CHECK(twist_spin_ideal_formula(trefoil, 2) == ideal({LaurentPoly(3), t + 1}));
	CHECK(twist_spin_ideal_formula(trefoil, 1).is_unit());
	CHECK(twist_spin_ideal_formula(two_bridge(5, 3), 2) == ideal({LaurentPoly(5), t + 1}));
	CHECK(twist_spin_ideal_formula(trefoil, 0) == ideal({cyclotomic(6)}));
	CHECK_THROWS_AS(twist_spin_ideal_formula(twist_spin(trefoil, 2), 2), DomainError);
}

TEST_CASE("colorings")
{
	const SurfaceKnot trefoil = two_bridge(3, 1);
	CHECK(colorings_count(trefoil, 3) == 9);
	CHECK(has_nontrivial_coloring(trefoil, 3));
	CHECK(colorings_count(twist_spin(trefoil, 2), 3) == 9);
	CHECK(colorings_count(twist_spin(trefoil, 3), 3) == 3);
	CHECK_FALSE(has_nontrivial_coloring(twist_spin(trefoil, 3), 3));
	CHECK(colorings_count(two_bridge(5, 3), 5) == 25);
	CHECK(colorings_count(two_bridge(5, 3), 3) == 3);
	CHECK_THROWS_AS(colorings_count(trefoil, 2), DomainError);
	CHECK_THROWS_AS(colorings_count(trefoil, 9), DomainError);

	for (const auto& k : catalog::classical())
		for (const std::int64_t p : {3, 5, 7})
			CHECK(colorings_count(k, p) == oracle::dihedral_colorings(k.presentation, p));
	for (const auto& k : catalog::surfaces())
		for (const std::int64_t p : {3, 5})
			CHECK(colorings_count(k, p) == oracle::dihedral_colorings(k.presentation, p));
}

TEST_CASE("reversal")
{
	CHECK(reverse_ideal(twist_spin(two_bridge(3, 1), 2)) == ideal({LaurentPoly(3), t + 1}));
	const SurfaceKnot r = realize_ideal(ideal({LaurentPoly({-1, 2}), LaurentPoly(5)}));
	CHECK(reverse_ideal(r) == ideal({LaurentPoly({2, -1}), LaurentPoly(5)}));
	CHECK_FALSE(reverse_ideal(r) == alexander_ideal(r));
	CHECK(reverse_ideal(two_bridge(3, 1)) == ideal({cyclotomic(6)}));
}

TEST_CASE("elementary ideals of classical knots are symmetric")
{
	for (const auto& k : catalog::classical())
		for (int j = 1; j <= static_cast<int>(k.presentation.generator_count()); ++j) {
			const auto e = elementary_ideal(k, j);
			REQUIRE(e.has_value());
			CHECK(invert_t_ideal(*e) == *e);
		}
}

TEST_CASE("determinants are odd across the catalog")
{
	for (const auto& k : catalog::surfaces()) {
		const Integer d = determinant(k);
		CHECK(d % 2 == 1);
	}
}
