#include "surfknot/knots.hpp"

#include "surfknot/errors.hpp"

#include <algorithm>
#include <numeric>

namespace surfknot {

namespace {

Word x_gen(std::size_t i, std::int64_t e = 1) { return Word::letter(i, e); }

Presentation two_generator(std::vector<Word> relators)
{
	Presentation p;
	p.generators = {"x", "y"};
	p.weights = {1, 1};
	p.relators = std::move(relators);
	return p;
}

// x w y^-1 w^-1 with w = y^n1 x^n2 y^n3 ...
Word schubert_relator(const std::vector<std::int64_t>& exponents)
{
	std::vector<Syllable> s;
	s.reserve(exponents.size());
	for (std::size_t i = 0; i < exponents.size(); ++i)
		s.push_back({i % 2 == 0 ? std::size_t{1} : std::size_t{0}, exponents[i]});
	const Word w(std::move(s));
	return x_gen(0) * w * x_gen(1, -1) * w.inverse();
}

// Kinoshita's word exponents for f with f(1) = 1 and lowest exponent 0.
std::vector<std::int64_t> kinoshita_exponents(const LaurentPoly& f)
{
	const auto g = div_exact(f - LaurentPoly(1), LaurentPoly({-1, 1}));
	if (!g)
		throw InternalError("f - 1 is not divisible by t - 1");
	std::vector<std::int64_t> m;
	for (const auto& [k, c] : g->terms()) {
		const long count = Integer(abs(c)).get_si();
		for (long i = 0; i < count; ++i) {
			if (c > 0) {
				m.push_back(k);
				m.push_back(1);
			} else {
				m.push_back(k + 1);
				m.push_back(-1);
			}
		}
	}
	if (m.empty())
		return m;
	std::vector<std::int64_t> n(m.size());
	n[0] = m[0];
	for (std::size_t i = 1; i < m.size(); ++i) {
		// 0-based: odd i is m_{2j}, even i >= 2 is m_{2j+1}.
		if (i % 2 == 1)
			n[i] = m[i];
		else
			n[i] = m[i] - (m[i - 2] + m[i - 1]);
	}
	return n;
}

LaurentPoly normalize_at_one(const LaurentPoly& f)
{
	if (f.is_zero())
		throw DomainError("cannot realize the zero polynomial");
	LaurentPoly g = f.shifted(-f.min_exponent());
	const Integer v = eval_at(g, 1);
	if (v == -1)
		g = -g;
	else if (v != 1)
		throw DomainError("f(1) = " + v.get_str() + "; a knot polynomial needs f(1) = +-1");
	return g;
}

void verify_ideal(const SurfaceKnot& k, const LaurentIdeal& expected)
{
	if (!(alexander_ideal(k) == expected))
		throw InternalError("constructed presentation of " + k.name + " has the wrong Alexander ideal");
}

}  // namespace

void check_knot(const SurfaceKnot& knot)
{
	knot.presentation.validate();
	if (!knot.presentation.is_wirtinger())
		throw DomainError("presentation of " + knot.name + " is not a Wirtinger presentation");
	if (knot.genus < 0)
		throw DomainError("negative genus");
}

SurfaceKnot unknot()
{
	SurfaceKnot k;
	k.name = "unknot";
	k.presentation.generators = {"x"};
	k.presentation.weights = {1};
	k.provenance = "unknot";
	return k;
}

SurfaceKnot two_bridge(int p, int q)
{
	if (p < 3 || p % 2 == 0)
		throw DomainError("two_bridge needs an odd p >= 3");
	if (q <= 0 || q >= p || std::gcd(p, q) != 1)
		throw DomainError("two_bridge needs 0 < q < p with gcd(p, q) = 1");
	std::vector<std::int64_t> eps;
	for (int i = 1; i < p; ++i)
		eps.push_back(((static_cast<long>(i) * q) / p) % 2 == 0 ? 1 : -1);
	SurfaceKnot k;
	k.name = "b(" + std::to_string(p) + "," + std::to_string(q) + ")";
	k.kind = KnotKind::Classical;
	k.presentation = two_generator({schubert_relator(eps)});
	k.provenance = "two_bridge(" + std::to_string(p) + "," + std::to_string(q) + ")";
	return k;
}

SurfaceKnot twist_spin(const SurfaceKnot& classical, int n, TwistRelators form)
{
	if (!classical.is_classical())
		throw DomainError("twist spinning needs a classical knot; " + classical.name + " is a surface knot");
	check_knot(classical);
	SurfaceKnot k;
	k.name = n == 0 ? "spun(" + classical.name + ")" : "tau^" + std::to_string(n) + "(" + classical.name + ")";
	k.kind = KnotKind::Surface;
	k.genus = 0;
	k.presentation = classical.presentation;
	const Word x0n = x_gen(0, n);
	for (std::size_t i = 1; i < k.presentation.generator_count(); ++i) {
		const Word r = form == TwistRelators::Commutator ? commutator(x0n, x_gen(i))
		                                                 : x0n * x_gen(i, -n);
		if (!r.empty())
			k.presentation.relators.push_back(r);
	}
	k.provenance = (n == 0 ? "spin(" : "twist_spin(" + std::to_string(n) + ", ") + classical.provenance + ")";
	return k;
}

SurfaceKnot spin(const SurfaceKnot& classical) { return twist_spin(classical, 0); }

SurfaceKnot connect_sum(const SurfaceKnot& a, const SurfaceKnot& b)
{
	check_knot(a);
	check_knot(b);
	if (a.kind != b.kind)
		throw DomainError("cannot connect a classical knot with a surface knot");
	SurfaceKnot k;
	k.name = a.name + " # " + b.name;
	k.kind = a.kind;
	k.genus = a.genus + b.genus;
	Presentation& p = k.presentation;
	p.generators = a.presentation.generators;
	p.weights = a.presentation.weights;
	const std::size_t offset = p.generators.size();
	for (const auto& name : b.presentation.generators) {
		std::string fresh = name;
		while (p.index_of(fresh))
			fresh += "'";
		p.generators.push_back(fresh);
		p.weights.push_back(1);
	}
	p.relators.push_back(x_gen(0) * x_gen(offset, -1));
	p.relators.insert(p.relators.end(), a.presentation.relators.begin(), a.presentation.relators.end());
	for (const auto& r : b.presentation.relators) {
		std::vector<Syllable> shifted = r.syllables();
		for (auto& s : shifted)
			s.generator += offset;
		p.relators.emplace_back(shifted);
	}
	k.provenance = "connect_sum(" + a.provenance + ", " + b.provenance + ")";
	return k;
}

SurfaceKnot kinoshita_realize(const LaurentPoly& f)
{
	const LaurentPoly g = normalize_at_one(f);
	SurfaceKnot k;
	k.name = "R(" + to_string(g) + ")";
	k.presentation = two_generator({schubert_relator(kinoshita_exponents(g))});
	k.provenance = "kinoshita_realize(" + to_string(g) + ")";
	verify_ideal(k, LaurentIdeal({g}));
	return k;
}

SurfaceKnot realize_ideal(const LaurentIdeal& ideal)
{
	const Integer at_one = eval_ideal(ideal, 1);
	if (at_one != 1)
		throw DomainError("an Alexander ideal must evaluate to (1) at t = 1; this one gives (" +
		                  at_one.get_str() + ")");
	if (ideal.is_unit()) {
		SurfaceKnot k = unknot();
		k.provenance = "realize_ideal(1)";
		return k;
	}
	if (const auto f = principal_generator(ideal)) {
		SurfaceKnot k = kinoshita_realize(*f);
		k.provenance = "realize_ideal(" + ideal.to_string() + ")";
		return k;
	}

	const auto& gens = ideal.generators();
	std::vector<Integer> values, coeffs;
	Integer d = 0;
	for (const auto& g : gens) {
		const Integer v = eval_at(g, 1);
		values.push_back(v);
		if (coeffs.empty()) {
			d = v;
			coeffs.push_back(1);
			continue;
		}
		Integer e, s, t;
		mpz_gcdext(e.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), v.get_mpz_t());
		for (auto& c : coeffs)
			c *= s;
		coeffs.push_back(t);
		d = e;
	}
	if (d == -1)
		for (auto& c : coeffs)
			c = -c;
	else if (d != 1)
		throw InternalError("generator values at 1 do not combine to 1");

	LaurentPoly f0;
	for (std::size_t i = 0; i < gens.size(); ++i)
		f0 += LaurentPoly(coeffs[i]) * gens[i];
	std::vector<Word> relators{schubert_relator(kinoshita_exponents(normalize_at_one(f0)))};
	for (std::size_t i = 0; i < gens.size(); ++i) {
		const LaurentPoly fi = gens[i] - LaurentPoly(values[i] - 1) * f0;
		relators.push_back(schubert_relator(kinoshita_exponents(normalize_at_one(fi))));
	}
	SurfaceKnot k;
	k.name = "R(" + ideal.to_string() + ")";
	k.genus = static_cast<int>(relators.size()) - 1;
	k.presentation = two_generator(std::move(relators));
	k.provenance = "realize_ideal(" + ideal.to_string() + ")";
	verify_ideal(k, ideal);
	return k;
}

LaurentIdeal alexander_ideal(const SurfaceKnot& knot)
{
	check_knot(knot);
	return alexander_ideal(knot.presentation);
}

std::optional<LaurentIdeal> elementary_ideal(const SurfaceKnot& knot, int k)
{
	check_knot(knot);
	return elementary_ideal(knot.presentation, k);
}

Integer determinant(const SurfaceKnot& knot)
{
	const Integer d = eval_ideal(alexander_ideal(knot), -1);
	if (!divides(Integer(2), d) && d > 0)
		return d;
	throw InternalError("determinant " + d.get_str() + " of " + knot.name + " is not odd");
}

LaurentIdeal twist_spin_ideal_formula(const SurfaceKnot& classical, int n)
{
	if (!classical.is_classical())
		throw DomainError("the twist-spin formula needs a classical knot");
	check_knot(classical);
	const LaurentPoly step = LaurentPoly::t(n) - LaurentPoly(1);
	std::optional<LaurentIdeal> total;
	LaurentPoly factor(1);
	const int count = static_cast<int>(classical.presentation.generator_count());
	for (int j = 1; j <= count; ++j, factor *= step) {
		if (factor.is_zero())
			break;
		const auto eps = elementary_ideal(classical.presentation, j);
		if (!eps)
			continue;
		const LaurentIdeal term = product(LaurentIdeal({factor}), *eps);
		total = total ? sum(*total, term) : term;
	}
	if (!total)
		throw DomainError("every summand of the twist-spin formula is zero");
	return *total;
}

Integer colorings_count(const SurfaceKnot& knot, std::int64_t p)
{
	if (p < 3 || !is_prime(Integer(static_cast<long>(p))))
		throw DomainError("colorings need an odd prime, got " + std::to_string(p));
	if (p > kMaxPrime)
		throw BoundExceeded("prime " + std::to_string(p) + " exceeds bound " + std::to_string(kMaxPrime));
	check_knot(knot);
	const AlexanderMatrix m = alexander_matrix(knot.presentation);
	std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols));
	for (std::size_t i = 0; i < m.rows; ++i)
		for (std::size_t j = 0; j < m.cols; ++j) {
			Integer v = eval_at(m.at(i, j), -1) % p;
			if (v < 0)
				v += p;
			a[i][j] = v.get_si();
		}
	std::size_t rank = 0;
	for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
		std::size_t r = rank;
		while (r < m.rows && a[r][c] == 0)
			++r;
		if (r == m.rows)
			continue;
		std::swap(a[r], a[rank]);
		const std::int64_t inv = inverse_mod(a[rank][c], p);
		for (auto& x : a[rank])
			x = x * inv % p;
		for (std::size_t i = 0; i < m.rows; ++i) {
			if (i == rank || a[i][c] == 0)
				continue;
			const std::int64_t f = a[i][c];
			for (std::size_t j = 0; j < m.cols; ++j)
				a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
		}
		++rank;
	}
	Integer count = 1;
	for (std::size_t i = rank; i < m.cols; ++i)
		count *= p;
	return count;
}

bool has_nontrivial_coloring(const SurfaceKnot& knot, std::int64_t p)
{
	return colorings_count(knot, p) > Integer(static_cast<long>(p));
}

LaurentIdeal reverse_ideal(const SurfaceKnot& knot)
{
	return invert_t_ideal(alexander_ideal(knot));
}

}  // namespace surfknot
