#pragma once

#include "surfknot/knots.hpp"
#include "surfknot/laurent.hpp"
#include "surfknot/word.hpp"
#include "surfknot/zideal.hpp"

#include <string>
#include <string_view>

namespace surfknot {

// All parsers throw ParseError carrying a 1-based line and column.

/// Sums of terms c, t, c t^k, c*t^k with optional spaces, e.g. "t^2 - t + 1", "2t^-1+1".
LaurentPoly parse_poly(std::string_view text);

/// Generators separated by ';' or ',', optionally wrapped in parentheses: "3; t+1".
LaurentIdeal parse_ideal(std::string_view text);

/// gens: x y ; weights: 1 1 ; rels: x y x y^-1 x^-1 y^-1 , ... ;
/// Comments run from '#' to the end of the line.
Presentation parse_presentation(std::string_view text);

struct KnotFile {
	SurfaceKnot knot;
	bool genus_given = false;
};

/// Presentation DSL plus optional `name: "..." ;`, `genus: g|classical ;` and
/// `provenance: "..." ;` statements. Without a genus statement the knot is a genus-0
/// surface knot. Non-Wirtinger presentations are rejected unless allowed.
KnotFile parse_knot(std::string_view text, const std::string& default_name = "knot",
                    bool allow_general = false);

std::string format_word(const Word& w, const Presentation& p);
std::string format_presentation(const Presentation& p);
/// Inverse of parse_knot.
std::string format_knot(const SurfaceKnot& k);

}  // namespace surfknot
