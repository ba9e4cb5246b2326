#pragma once

#include "surfknot/laurent.hpp"
#include "surfknot/word.hpp"
#include "surfknot/zideal.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace surfknot {

/// Largest matrix dimension (rows or columns) accepted by minor enumeration.
inline constexpr std::size_t kMaxMatrixDim = 12;

/// t^k with k the weighted exponent sum of w.
LaurentPoly abelianize(const Word& w, std::span<const std::int64_t> weights);

/// Image of the Fox derivative dw/dx_j under the abelianization x_i -> t^weights[i].
LaurentPoly fox_derivative_ab(const Word& w, std::size_t j, std::span<const std::int64_t> weights);

struct AlexanderMatrix {
	std::size_t rows = 0;
	std::size_t cols = 0;
	std::vector<LaurentPoly> entries;  // row-major
	bool wirtinger = false;

	const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// Throws DomainError when the presentation is malformed or a row violates
/// sum_j a_ij (t^w_j - 1) = 0.
AlexanderMatrix alexander_matrix(const Presentation& presentation);

/// Fraction-free determinant of a square matrix (row-major), up to a unit of Z[t, t^-1].
LaurentPoly determinant_up_to_unit(std::size_t n, const std::vector<LaurentPoly>& entries);

/// An elementary ideal; nullopt stands for the zero ideal.
using ElementaryIdeal = std::optional<LaurentIdeal>;

/// Ideal of the (n-k)-minors, n the generator count. With delete_column the first
/// column is dropped first (legitimate when every weight is 1).
ElementaryIdeal elementary_ideal(const AlexanderMatrix& matrix, std::size_t generators, int k,
                                 bool delete_column);

/// k-th elementary ideal; for unit-weight presentations the first column is deleted.
ElementaryIdeal elementary_ideal(const Presentation& presentation, int k);

/// First elementary ideal. Throws DomainError if it is zero.
LaurentIdeal alexander_ideal(const Presentation& presentation);

}  // namespace surfknot
