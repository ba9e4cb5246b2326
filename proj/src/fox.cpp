#include "surfknot/fox.hpp"

#include "surfknot/errors.hpp"

#include <algorithm>
#include <set>

namespace surfknot {

LaurentPoly abelianize(const Word& w, std::span<const std::int64_t> weights)
{
	LaurentPoly::Exponent k = 0;
	for (const auto& s : w.syllables())
		k += s.exponent * weights[s.generator];
	return LaurentPoly::t(k);
}

LaurentPoly fox_derivative_ab(const Word& w, std::size_t j, std::span<const std::int64_t> weights)
{
	// Walk left to right keeping the abelianized prefix t^e.
	LaurentPoly out;
	LaurentPoly::Exponent e = 0;
	for (const auto& s : w.syllables()) {
		const std::int64_t wt = weights[s.generator];
		if (s.exponent > 0) {
			for (std::int64_t i = 0; i < s.exponent; ++i) {
				if (s.generator == j)
					out.add_term(Integer(1), e);
				e += wt;
			}
		} else {
			for (std::int64_t i = 0; i < -s.exponent; ++i) {
				e -= wt;
				if (s.generator == j)
					out.add_term(Integer(-1), e);
			}
		}
	}
	return out;
}

AlexanderMatrix alexander_matrix(const Presentation& presentation)
{
	presentation.validate();
	AlexanderMatrix m;
	m.rows = presentation.relators.size();
	m.cols = presentation.generator_count();
	m.wirtinger = presentation.is_wirtinger();
	const std::span<const std::int64_t> weights(presentation.weights);
	m.entries.reserve(m.rows * m.cols);
	for (std::size_t i = 0; i < m.rows; ++i) {
		const Word& r = presentation.relators[i];
		LaurentPoly check = -(abelianize(r, weights) - LaurentPoly(1));
		for (std::size_t j = 0; j < m.cols; ++j) {
			m.entries.push_back(fox_derivative_ab(r, j, weights));
			check += m.entries.back() * (LaurentPoly::t(weights[j]) - LaurentPoly(1));
		}
		if (!check.is_zero())
			throw DomainError("relator " + std::to_string(i + 1) + " violates the fundamental identity");
	}
	return m;
}

LaurentPoly determinant_up_to_unit(std::size_t n, const std::vector<LaurentPoly>& entries)
{
	if (n == 0)
		return LaurentPoly(1);
	std::vector<std::vector<LaurentPoly>> a(n);
	for (std::size_t i = 0; i < n; ++i) {
		a[i].assign(entries.begin() + static_cast<std::ptrdiff_t>(i * n),
		            entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
		// Clear negative exponents so the elimination stays inside Z[t].
		LaurentPoly::Exponent low = 0;
		bool any = false;
		for (const auto& x : a[i])
			if (!x.is_zero()) {
				low = any ? std::min(low, x.min_exponent()) : x.min_exponent();
				any = true;
			}
		if (!any)
			return LaurentPoly();
		for (auto& x : a[i])
			x = x.shifted(-low);
	}

	LaurentPoly prev(1);
	for (std::size_t k = 0; k + 1 < n; ++k) {
		if (a[k][k].is_zero()) {
			std::size_t r = k + 1;
			while (r < n && a[r][k].is_zero())
				++r;
			if (r == n)
				return LaurentPoly();
			std::swap(a[k], a[r]);
		}
		for (std::size_t i = k + 1; i < n; ++i) {
			for (std::size_t j = k + 1; j < n; ++j) {
				LaurentPoly x = a[k][k] * a[i][j] - a[i][k] * a[k][j];
				auto q = div_exact(x, prev);
				if (!q)
					throw InternalError("Bareiss step is not exact");
				a[i][j] = std::move(*q);
			}
			a[i][k] = LaurentPoly();
		}
		prev = a[k][k];
	}
	return a[n - 1][n - 1];
}

namespace {

// Calls visit on every size-s subset of {0..n-1} in lexicographic order; stops early
// when visit returns false.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t s, Visit&& visit)
{
	std::vector<std::size_t> idx(s);
	for (std::size_t i = 0; i < s; ++i)
		idx[i] = i;
	for (;;) {
		if (!visit(idx))
			return false;
		std::size_t i = s;
		while (i > 0 && idx[i - 1] == n - s + i - 1)
			--i;
		if (i == 0)
			return true;
		++idx[i - 1];
		for (std::size_t j = i; j < s; ++j)
			idx[j] = idx[j - 1] + 1;
	}
}

}  // namespace

ElementaryIdeal elementary_ideal(const AlexanderMatrix& matrix, std::size_t generators, int k,
                                 bool delete_column)
{
	if (k < 0)
		throw DomainError("elementary ideal index must be nonnegative");
	const long size_signed = static_cast<long>(generators) - k;
	if (size_signed <= 0)
		return LaurentIdeal::unit();
	const std::size_t s = static_cast<std::size_t>(size_signed);

	const std::size_t first_col = delete_column && matrix.cols > 0 ? 1 : 0;
	const std::size_t cols = matrix.cols - first_col;
	std::vector<std::size_t> rows;
	for (std::size_t i = 0; i < matrix.rows; ++i) {
		bool zero = true;
		for (std::size_t j = first_col; j < matrix.cols; ++j)
			zero = zero && matrix.at(i, j).is_zero();
		if (!zero)
			rows.push_back(i);
	}
	if (s > std::min(rows.size(), cols))
		return std::nullopt;
	if (rows.size() > kMaxMatrixDim || cols > kMaxMatrixDim)
		throw BoundExceeded("Alexander matrix of size " + std::to_string(rows.size()) + "x" +
		                    std::to_string(cols) + " exceeds bound " + std::to_string(kMaxMatrixDim) + "x" +
		                    std::to_string(kMaxMatrixDim));

	std::set<LaurentPoly, decltype(&canonical_less)> minors(&canonical_less);
	bool unit = false;
	for_each_subset(cols, s, [&](const std::vector<std::size_t>& cs) {
		std::vector<std::size_t> live;
		for (const std::size_t i : rows) {
			bool zero = true;
			for (const std::size_t c : cs)
				zero = zero && matrix.at(i, c + first_col).is_zero();
			if (!zero)
				live.push_back(i);
		}
		if (live.size() < s)
			return true;
		return for_each_subset(live.size(), s, [&](const std::vector<std::size_t>& rs) {
			std::vector<LaurentPoly> sub;
			sub.reserve(s * s);
			for (const std::size_t r : rs)
				for (const std::size_t c : cs)
					sub.push_back(matrix.at(live[r], c + first_col));
			const LaurentPoly d = determinant_up_to_unit(s, sub);
			if (d.is_zero())
				return true;
			const LaurentPoly n = normalize_unit(d);
			if (n == LaurentPoly(1)) {
				unit = true;
				return false;
			}
			minors.insert(n);
			return true;
		});
	});
	if (unit)
		return LaurentIdeal::unit();
	if (minors.empty())
		return std::nullopt;
	return LaurentIdeal(std::vector<LaurentPoly>(minors.begin(), minors.end()));
}

ElementaryIdeal elementary_ideal(const Presentation& presentation, int k)
{
	const AlexanderMatrix m = alexander_matrix(presentation);
	return elementary_ideal(m, presentation.generator_count(), k, presentation.unit_weights());
}

LaurentIdeal alexander_ideal(const Presentation& presentation)
{
	auto ideal = elementary_ideal(presentation, 1);
	if (!ideal)
		throw DomainError("the Alexander ideal of this presentation is zero");
	return *ideal;
}

}  // namespace surfknot
