#include "surfknot/word.hpp"

#include "surfknot/errors.hpp"

#include <algorithm>
#include <set>

namespace surfknot {

Word::Word(const std::vector<Syllable>& syllables)
{
	for (const auto& s : syllables)
		push(s);
}

Word Word::letter(std::size_t generator, std::int64_t exponent)
{
	Word w;
	w.push({generator, exponent});
	return w;
}

void Word::push(Syllable s)
{
	if (s.exponent == 0)
		return;
	if (!syllables_.empty() && syllables_.back().generator == s.generator) {
		syllables_.back().exponent += s.exponent;
		if (syllables_.back().exponent == 0)
			syllables_.pop_back();
		return;
	}
	syllables_.push_back(s);
}

std::size_t Word::length() const
{
	std::size_t n = 0;
	for (const auto& s : syllables_)
		n += static_cast<std::size_t>(s.exponent < 0 ? -s.exponent : s.exponent);
	return n;
}

std::int64_t Word::exponent_sum(std::size_t generator) const
{
	std::int64_t sum = 0;
	for (const auto& s : syllables_)
		if (s.generator == generator)
			sum += s.exponent;
	return sum;
}

std::size_t Word::max_generator() const
{
	std::size_t m = 0;
	for (const auto& s : syllables_)
		m = std::max(m, s.generator);
	return m;
}

Word Word::inverse() const
{
	Word w;
	for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
		w.push({it->generator, -it->exponent});
	return w;
}

Word Word::power(std::int64_t n) const
{
	const Word base = n < 0 ? inverse() : *this;
	Word w;
	for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i)
		w = w * base;
	return w;
}

Word operator*(const Word& a, const Word& b)
{
	Word w = a;
	for (const auto& s : b.syllables_)
		w.push(s);
	return w;
}

Word commutator(const Word& a, const Word& b)
{
	return a * b * a.inverse() * b.inverse();
}

namespace {

struct Letter {
	std::size_t generator;
	int sign;
	bool operator==(const Letter&) const = default;
};

std::vector<Letter> letters(const Word& w)
{
	std::vector<Letter> out;
	for (const auto& s : w.syllables()) {
		const int sign = s.exponent > 0 ? 1 : -1;
		for (std::int64_t i = 0; i < s.exponent * sign; ++i)
			out.push_back({s.generator, sign});
	}
	return out;
}

bool inverse_letters(const Letter& a, const Letter& b) { return a.generator == b.generator && a.sign == -b.sign; }

// Freely and cyclically reduced letter sequence of a word (its conjugacy class).
std::vector<Letter> cyclic_reduction(const Word& w)
{
	std::vector<Letter> out;
	for (const auto& l : letters(w)) {
		if (!out.empty() && inverse_letters(out.back(), l))
			out.pop_back();
		else
			out.push_back(l);
	}
	std::size_t lo = 0, hi = out.size();
	while (hi - lo >= 2 && inverse_letters(out[lo], out[hi - 1])) {
		++lo;
		--hi;
	}
	return std::vector<Letter>(out.begin() + static_cast<std::ptrdiff_t>(lo),
	                           out.begin() + static_cast<std::ptrdiff_t>(hi));
}

// A cyclically reduced c is a rotation of x_i u x_j^-1 u^-1 (or its inverse) exactly when
// c is symmetric under inversion about some letter m, c[m - d] = c[m + d]^-1, with
// c[m] and the antipodal letter c[m + L/2] of opposite signs. Manacher's algorithm over
// three copies of the cyclic word finds all symmetry radii in linear time.
bool conjugation_form(const std::vector<Letter>& c)
{
	const std::size_t n = c.size();
	if (n < 2 || n % 2 != 0)
		return false;
	const std::size_t half = n / 2;
	std::vector<Letter> s;
	s.reserve(3 * n);
	for (int k = 0; k < 3; ++k)
		s.insert(s.end(), c.begin(), c.end());
	std::vector<std::size_t> radius(s.size(), 0);
	std::size_t center = 0, right = 0;  // rightmost symmetric window [center - r, center + r]
	for (std::size_t i = 0; i < s.size(); ++i) {
		std::size_t r = 0;
		if (i < right)
			r = std::min(radius[2 * center - i], right - i);
		while (i + r + 1 < s.size() && i >= r + 1 && inverse_letters(s[i - r - 1], s[i + r + 1]))
			++r;
		radius[i] = r;
		if (i + r > right) {
			center = i;
			right = i + r;
		}
	}
	for (std::size_t m = n; m < 2 * n; ++m)
		if (radius[m] + 1 >= half && s[m].sign != s[m + half].sign)
			return true;
	return false;
}
bool power_form(const Word& w)
{
	const auto& s = w.syllables();
	return s.size() == 2 && s[0].exponent == -s[1].exponent;
}

}  // namespace

bool is_wirtinger_relator(const Word& r)
{
	if (power_form(r) || power_form(r.inverse()))
		return true;
	return conjugation_form(cyclic_reduction(r));
}

std::optional<std::size_t> Presentation::index_of(const std::string& name) const
{
	const auto it = std::find(generators.begin(), generators.end(), name);
	if (it == generators.end())
		return std::nullopt;
	return static_cast<std::size_t>(it - generators.begin());
}

bool Presentation::unit_weights() const
{
	return std::all_of(weights.begin(), weights.end(), [](std::int64_t w) { return w == 1; });
}

void Presentation::validate() const
{
	if (generators.empty())
		throw DomainError("presentation has no generators");
	if (weights.size() != generators.size())
		throw DomainError("presentation has " + std::to_string(generators.size()) + " generators but " +
		                  std::to_string(weights.size()) + " weights");
	std::set<std::string> seen;
	for (const auto& g : generators)
		if (!seen.insert(g).second)
			throw DomainError("duplicate generator name '" + g + "'");
	for (std::size_t i = 0; i < relators.size(); ++i) {
		std::int64_t degree = 0;
		for (const auto& s : relators[i].syllables()) {
			if (s.generator >= generators.size())
				throw DomainError("relator " + std::to_string(i + 1) + " uses an unknown generator");
			degree += s.exponent * weights[s.generator];
		}
		if (degree != 0)
			throw DomainError("relator " + std::to_string(i + 1) +
			                  " does not abelianize to 1 (weighted exponent sum " + std::to_string(degree) + ")");
	}
}

bool Presentation::is_wirtinger() const
{
	return unit_weights() && std::all_of(relators.begin(), relators.end(), is_wirtinger_relator);
}

}  // namespace surfknot
