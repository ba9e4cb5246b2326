#pragma once

#include "surfknot/knots.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace surfknot {

enum class Conclusion { NotZeroSlice, NotInvertible, NotRibbon };

std::string to_string(Conclusion c);

struct ObstructionReport {
	std::string name;
	int genus = 0;
	bool classical = false;
	LaurentIdeal ideal = LaurentIdeal::unit();
	IdealClass ideal_class;
	bool principal = true;
	Integer determinant;
	std::optional<Integer> quotient_size;  // nullopt: infinite
	bool maximal = false;
	bool symmetric = true;
	std::vector<Conclusion> conclusions;

	/// JSON object with a fixed key order.
	std::string to_json() const;
	/// Human-readable multi-line summary.
	std::string to_text() const;
};

/// Classical knots are reported through their spun 2-knot (same group, genus 0).
ObstructionReport report(const SurfaceKnot& knot);

struct Distinguished {
	IdealClass first;
	IdealClass second;
};
struct IdealsEquivalent {
	IdealClass shared;
};
using Distinction = std::variant<Distinguished, IdealsEquivalent>;

/// Distinguished when the Alexander ideals lie in different classes, which rules out
/// a 0-concordance. IdealsEquivalent is inconclusive.
Distinction distinguish(const SurfaceKnot& a, const SurfaceKnot& b);

enum class IncompatibleReason { NonDividingDeterminant, NonDividingContent, IdealMismatch };
std::string to_string(IncompatibleReason r);

struct Witness {
	LaurentPoly f;
};
struct Incompatible {
	IncompatibleReason reason;
};
using RibbonCompatibility = std::variant<Witness, Incompatible>;

/// Decides whether Delta(K1) = (f) Delta(K0) for some f, the ideal-level condition a
/// ribbon concordance K0 -> K1 must satisfy.
RibbonCompatibility ribbon_compatible(const SurfaceKnot& k0, const SurfaceKnot& k1);
RibbonCompatibility ribbon_compatible(const LaurentIdeal& d0, const LaurentIdeal& d1);

struct CertificateEntry {
	std::string name;
	LaurentIdeal ideal;
	std::int64_t prime;
	FpPoly residue;
};
struct Certificate {
	std::vector<CertificateEntry> entries;
	std::string to_text() const;
};
/// i == j when knot i has a non-maximal ideal; otherwise knots i < j share an ideal.
struct IndependenceFailure {
	std::size_t i;
	std::size_t j;
};
using IndependenceResult = std::variant<Certificate, IndependenceFailure>;

/// Pairwise distinct maximal Alexander ideals generate a free commutative submonoid.
IndependenceResult independence_certificate(const std::vector<SurfaceKnot>& knots);

/// Directed graph with an edge i -> j (i != j) whenever ribbon_compatible(K_i, K_j)
/// yields a witness.
std::string graph_dot(const std::vector<SurfaceKnot>& knots);

}  // namespace surfknot
