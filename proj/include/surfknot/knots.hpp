#pragma once

#include "surfknot/fox.hpp"
#include "surfknot/integer.hpp"
#include "surfknot/laurent.hpp"
#include "surfknot/word.hpp"
#include "surfknot/zideal.hpp"

#include <optional>
#include <string>

namespace surfknot {

enum class KnotKind { Classical, Surface };

/// A classical knot or a closed oriented surface knot in S^4, known through a
/// Wirtinger presentation of its group.
struct SurfaceKnot {
	std::string name;
	KnotKind kind = KnotKind::Surface;
	int genus = 0;  // meaningful for surface knots only
	Presentation presentation;
	std::string provenance;

	bool is_classical() const { return kind == KnotKind::Classical; }
};

/// Throws DomainError unless the presentation is Wirtinger and well formed.
void check_knot(const SurfaceKnot& knot);

/// The unknotted sphere, <x | >.
SurfaceKnot unknot();

/// Schubert normal form of the 2-bridge knot b(p, q); p odd >= 3, 0 < q < p, gcd 1.
SurfaceKnot two_bridge(int p, int q);

enum class TwistRelators { Commutator, Power };

/// n-twist spin of a classical knot; n = 0 gives the spun knot.
SurfaceKnot twist_spin(const SurfaceKnot& classical, int n,
                       TwistRelators form = TwistRelators::Commutator);
SurfaceKnot spin(const SurfaceKnot& classical);

/// Connected sum; generator names of the second summand are renamed on collision.
SurfaceKnot connect_sum(const SurfaceKnot& a, const SurfaceKnot& b);

/// Ribbon 2-knot with a two-generator presentation and Alexander ideal (f).
/// Requires f(1) = +-1.
SurfaceKnot kinoshita_realize(const LaurentPoly& f);

/// Ribbon surface knot with Alexander ideal I; requires I evaluated at 1 to be (1).
SurfaceKnot realize_ideal(const LaurentIdeal& ideal);

LaurentIdeal alexander_ideal(const SurfaceKnot& knot);
std::optional<LaurentIdeal> elementary_ideal(const SurfaceKnot& knot, int k);

/// Alexander ideal evaluated at t = -1. Always odd.
Integer determinant(const SurfaceKnot& knot);

/// sum_j (t^n - 1)^(j-1) eps_j(K) over j = 1..(generator count).
LaurentIdeal twist_spin_ideal_formula(const SurfaceKnot& classical, int n);

/// Number of Fox p-colorings, p an odd prime.
Integer colorings_count(const SurfaceKnot& knot, std::int64_t p);
bool has_nontrivial_coloring(const SurfaceKnot& knot, std::int64_t p);

/// Alexander ideal of the knot with reversed orientation.
LaurentIdeal reverse_ideal(const SurfaceKnot& knot);

}  // namespace surfknot
