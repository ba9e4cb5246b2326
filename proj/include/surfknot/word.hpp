#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace surfknot {

struct Syllable {
	std::size_t generator;
	std::int64_t exponent;  // nonzero
	friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word in a free group: adjacent syllables have distinct generators.
class Word {
public:
	Word() = default;
	/// Reduces the given syllables (merging neighbours, dropping zero exponents).
	explicit Word(const std::vector<Syllable>& syllables);
	static Word letter(std::size_t generator, std::int64_t exponent = 1);

	const std::vector<Syllable>& syllables() const noexcept { return syllables_; }
	bool empty() const noexcept { return syllables_.empty(); }
	/// Number of letters, i.e. the sum of |exponent|.
	std::size_t length() const;
	std::int64_t exponent_sum(std::size_t generator) const;
	std::size_t max_generator() const;

	Word inverse() const;
	Word power(std::int64_t n) const;
	friend Word operator*(const Word& a, const Word& b);
	friend bool operator==(const Word&, const Word&) = default;

private:
	void push(Syllable s);

	std::vector<Syllable> syllables_;
};

/// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

/// Group presentation with abelianization weights: generator i maps to t^weights[i].
struct Presentation {
	std::vector<std::string> generators;
	std::vector<std::int64_t> weights;
	std::vector<Word> relators;

	std::size_t generator_count() const { return generators.size(); }
	std::optional<std::size_t> index_of(const std::string& name) const;
	bool unit_weights() const;

	/// Throws DomainError on inconsistent sizes, out-of-range generators, duplicate
	/// names, or a relator with nonzero weighted exponent sum.
	void validate() const;

	/// Every weight is 1 and every relator has conjugation form x_i = u x_j u^-1
	/// (up to cyclic rotation and inversion) or power form x_i^n x_j^-n.
	bool is_wirtinger() const;
};

/// True when the word, up to cyclic rotation and inversion, is x_i u x_j^-1 u^-1 or
/// x_i^n x_j^-n.
bool is_wirtinger_relator(const Word& r);

}  // namespace surfknot
