#include "groebner.hpp"

#include "surfknot/errors.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <tuple>

namespace surfknot::detail {

namespace {

constexpr std::size_t kMaxBasisSize = 4000;

Monomial lcm(const Monomial& a, const Monomial& b)
{
	return {std::max(a.t, b.t), std::max(a.s, b.s)};
}

Monomial quotient(const Monomial& m, const Monomial& d)
{
	return {m.t - d.t, m.s - d.s};
}

Monomial product(const Monomial& a, const Monomial& b)
{
	return {a.t + b.t, a.s + b.s};
}

// a*ua*f + b*ub*g, merging the two term sequences.
Poly2 combine(const Poly2& f, const Integer& a, const Monomial& ua,
              const Poly2& g, const Integer& b, const Monomial& ub)
{
	Poly2 out;
	out.terms.reserve(f.terms.size() + g.terms.size());
	std::size_t i = 0, j = 0;
	while (i < f.terms.size() || j < g.terms.size()) {
		if (j == g.terms.size() ||
		    (i < f.terms.size() &&
		     monomial_less(product(g.terms[j].m, ub), product(f.terms[i].m, ua)))) {
			if (a != 0)
				out.terms.push_back({product(f.terms[i].m, ua), a * f.terms[i].c});
			++i;
		} else if (i == f.terms.size() ||
		           monomial_less(product(f.terms[i].m, ua), product(g.terms[j].m, ub))) {
			if (b != 0)
				out.terms.push_back({product(g.terms[j].m, ub), b * g.terms[j].c});
			++j;
		} else {
			Integer c = a * f.terms[i].c + b * g.terms[j].c;
			if (c != 0)
				out.terms.push_back({product(f.terms[i].m, ua), std::move(c)});
			++i;
			++j;
		}
	}
	return out;
}

const Poly2* least_divisor(const Monomial& m, const std::vector<Poly2>& basis)
{
	const Poly2* best = nullptr;
	for (const auto& g : basis)
		if (g.lead().m.divides(m) && (!best || g.lead().c < best->lead().c))
			best = &g;
	return best;
}

Poly2 s_polynomial(const Poly2& f, const Poly2& g)
{
	const auto& [mf, cf] = f.lead();
	const auto& [mg, cg] = g.lead();
	const Monomial m = lcm(mf, mg);
	Integer c;
	mpz_lcm(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
	return combine(f, c / cf, quotient(m, mf), g, -(c / cg), quotient(m, mg));
}

// Combination whose leading coefficient is gcd(lc f, lc g); only useful when neither
// leading coefficient divides the other.
std::optional<Poly2> g_polynomial(const Poly2& f, const Poly2& g)
{
	const auto& [mf, cf] = f.lead();
	const auto& [mg, cg] = g.lead();
	if (divides(cf, cg) || divides(cg, cf))
		return std::nullopt;
	Integer d, a, b;
	mpz_gcdext(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
	const Monomial m = lcm(mf, mg);
	return combine(f, a, quotient(m, mf), g, b, quotient(m, mg));
}

void make_lead_positive(Poly2& f)
{
	if (!f.is_zero() && f.lead().c < 0)
		for (auto& term : f.terms)
			term.c = -term.c;
}

bool lead_less(const Poly2& a, const Poly2& b)
{
	if (!(a.lead().m == b.lead().m))
		return monomial_less(a.lead().m, b.lead().m);
	return a.lead().c < b.lead().c;
}

class Completion {
public:
	explicit Completion(std::vector<Poly2> basis) : basis_(std::move(basis))
	{
		for (std::size_t j = 0; j < basis_.size(); ++j)
			for (std::size_t i = 0; i < j; ++i)
				push_pair(i, j);
	}

	void add(Poly2 h)
	{
		h = normal_form(h, basis_);
		if (h.is_zero())
			return;
		make_lead_positive(h);
		basis_.push_back(std::move(h));
		if (basis_.size() > kMaxBasisSize)
			throw BoundExceeded("Groebner basis size exceeds " + std::to_string(kMaxBasisSize));
		const std::size_t j = basis_.size() - 1;
		for (std::size_t i = 0; i < j; ++i)
			push_pair(i, j);
	}

	void run()
	{
		while (!pairs_.empty()) {
			const auto [deg, t, i, j] = pairs_.top();
			pairs_.pop();
			// Copies: add() may reallocate basis_.
			const Poly2 f = basis_[i];
			const Poly2 g = basis_[j];
			add(s_polynomial(f, g));
			if (auto gp = g_polynomial(f, g))
				add(std::move(*gp));
		}
	}

	std::vector<Poly2>& basis() { return basis_; }

private:
	using Key = std::tuple<std::uint32_t, std::uint32_t, std::size_t, std::size_t>;

	void push_pair(std::size_t i, std::size_t j)
	{
		const Monomial m = lcm(basis_[i].lead().m, basis_[j].lead().m);
		pairs_.emplace(m.degree(), m.t, i, j);
	}

	std::vector<Poly2> basis_;
	std::priority_queue<Key, std::vector<Key>, std::greater<Key>> pairs_;
};

std::vector<Poly2> interreduce(std::vector<Poly2> basis)
{
	std::sort(basis.begin(), basis.end(), lead_less);
	std::vector<Poly2> kept;
	for (auto& g : basis) {
		const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Poly2& h) {
			return h.lead().m.divides(g.lead().m) && divides(h.lead().c, g.lead().c);
		});
		if (!redundant)
			kept.push_back(std::move(g));
	}
	std::vector<Poly2> reduced;
	reduced.reserve(kept.size());
	for (const auto& g : kept) {
		Poly2 tail;
		tail.terms.assign(g.terms.begin() + 1, g.terms.end());
		Poly2 r = normal_form(tail, kept);
		Poly2 out;
		out.terms.reserve(r.terms.size() + 1);
		out.terms.push_back(g.lead());
		out.terms.insert(out.terms.end(), r.terms.begin(), r.terms.end());
		reduced.push_back(std::move(out));
	}
	return reduced;
}

}  // namespace

Poly2 to_poly2(const LaurentPoly& a)
{
	Poly2 p;
	for (const auto& [e, c] : a.terms()) {
		Monomial m = e >= 0 ? Monomial{static_cast<std::uint32_t>(e), 0}
		                    : Monomial{0, static_cast<std::uint32_t>(-e)};
		p.terms.push_back({m, c});
	}
	std::sort(p.terms.begin(), p.terms.end(),
	          [](const Term& x, const Term& y) { return monomial_less(y.m, x.m); });
	return p;
}

LaurentPoly to_laurent(const Poly2& a)
{
	LaurentPoly p;
	for (const auto& [m, c] : a.terms)
		p.add_term(c, static_cast<LaurentPoly::Exponent>(m.t) - static_cast<LaurentPoly::Exponent>(m.s));
	return p;
}

Poly2 normal_form(const Poly2& f, const std::vector<Poly2>& basis)
{
	Poly2 rem = f;
	Poly2 out;
	while (!rem.is_zero()) {
		const Term lead = rem.lead();
		if (const Poly2* g = least_divisor(lead.m, basis)) {
			const Integer q = floor_div(lead.c, g->lead().c);
			if (q != 0)
				rem = combine(rem, Integer(1), Monomial{}, *g, -q, quotient(lead.m, g->lead().m));
			if (rem.is_zero() || !(rem.lead().m == lead.m))
				continue;
		}
		out.terms.push_back(rem.lead());
		rem.terms.erase(rem.terms.begin());
	}
	return out;
}

std::vector<Poly2> reduced_strong_basis(const std::vector<Poly2>& gens)
{
	Poly2 relator;
	relator.terms = {{{1, 1}, Integer(1)}, {{0, 0}, Integer(-1)}};

	Completion completion({relator});
	for (const auto& g : gens)
		completion.add(g);
	for (;;) {
		completion.run();
		std::vector<Poly2> reduced = interreduce(completion.basis());
		// Every S- and G-polynomial of the candidate must reduce to zero; otherwise
		// resume completion from the reduced basis with the leftovers.
		std::vector<Poly2> leftovers;
		for (std::size_t j = 0; j < reduced.size(); ++j)
			for (std::size_t i = 0; i < j; ++i) {
				Poly2 r = normal_form(s_polynomial(reduced[i], reduced[j]), reduced);
				if (!r.is_zero())
					leftovers.push_back(std::move(r));
				if (auto gp = g_polynomial(reduced[i], reduced[j])) {
					Poly2 rg = normal_form(*gp, reduced);
					if (!rg.is_zero())
						leftovers.push_back(std::move(rg));
				}
			}
		if (leftovers.empty())
			return reduced;
		completion = Completion(std::move(reduced));
		for (auto& r : leftovers)
			completion.add(std::move(r));
	}
}

}  // namespace surfknot::detail
