#include "surfknot/obstruct.hpp"

#include "surfknot/errors.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace surfknot {

namespace {

std::vector<std::string> poly_strings(const std::vector<LaurentPoly>& polys)
{
	std::vector<std::string> out;
	for (const auto& p : polys)
		out.push_back(to_string(p));
	return out;
}

std::string quoted(const std::string& s)
{
	std::string out = "\"";
	for (const char c : s) {
		if (c == '"')
			out += '\\';
		out += c;
	}
	return out + "\"";
}

}  // namespace

std::string to_string(Conclusion c)
{
	switch (c) {
	case Conclusion::NotZeroSlice: return "NotZeroSlice";
	case Conclusion::NotInvertible: return "NotInvertible";
	case Conclusion::NotRibbon: return "NotRibbon";
	}
	return "";
}

std::string to_string(IncompatibleReason r)
{
	switch (r) {
	case IncompatibleReason::NonDividingDeterminant: return "NonDividingDeterminant";
	case IncompatibleReason::NonDividingContent: return "NonDividingContent";
	case IncompatibleReason::IdealMismatch: return "IdealMismatch";
	}
	return "";
}

std::string ObstructionReport::to_json() const
{
	nlohmann::ordered_json j;
	j["name"] = name;
	j["genus"] = genus;
	j["ideal"] = poly_strings(ideal.generators());
	j["class"] = poly_strings(ideal_class.primitive_generators);
	j["principal"] = principal;
	if (determinant.fits_slong_p())
		j["determinant"] = determinant.get_si();
	else
		j["determinant"] = determinant.get_str();
	if (!quotient_size)
		j["quotient"] = "inf";
	else if (quotient_size->fits_slong_p())
		j["quotient"] = quotient_size->get_si();
	else
		j["quotient"] = quotient_size->get_str();
	j["maximal"] = maximal;
	j["symmetric"] = symmetric;
	j["conclusions"] = nlohmann::ordered_json::array();
	for (const auto c : conclusions)
		j["conclusions"].push_back(surfknot::to_string(c));
	return j.dump();
}

std::string ObstructionReport::to_text() const
{
	auto yes_no = [](bool b) { return b ? "yes" : "no"; };
	std::ostringstream os;
	os << "name: " << name << "\n";
	os << "genus: " << (classical ? std::string("classical (reported via its spin)") : std::to_string(genus)) << "\n";
	os << "ideal: (" << ideal.to_string() << ")\n";
	os << "class: (" << ideal_class.to_string() << ")\n";
	os << "principal: " << yes_no(principal) << "\n";
	os << "determinant: " << determinant << "\n";
	os << "quotient: " << (quotient_size ? quotient_size->get_str() : "inf") << "\n";
	os << "maximal: " << yes_no(maximal) << "\n";
	os << "symmetric: " << yes_no(symmetric) << "\n";
	os << "conclusions:";
	if (conclusions.empty())
		os << " none";
	for (std::size_t i = 0; i < conclusions.size(); ++i)
		os << (i ? ", " : " ") << surfknot::to_string(conclusions[i]);
	os << "\n";
	return os.str();
}

ObstructionReport report(const SurfaceKnot& knot)
{
	ObstructionReport r;
	r.name = knot.name;
	r.classical = knot.is_classical();
	r.genus = knot.is_classical() ? 0 : knot.genus;
	r.ideal = alexander_ideal(knot);
	r.ideal_class = class_canonical(r.ideal);
	r.principal = is_principal(r.ideal);
	r.determinant = determinant(knot);
	r.quotient_size = quotient_size(r.ideal);
	r.maximal = is_maximal(r.ideal);
	r.symmetric = invert_t_ideal(r.ideal) == r.ideal;
	if (!r.principal) {
		r.conclusions.push_back(Conclusion::NotZeroSlice);
		r.conclusions.push_back(Conclusion::NotInvertible);
		if (r.genus == 0)
			r.conclusions.push_back(Conclusion::NotRibbon);
	}
	return r;
}

Distinction distinguish(const SurfaceKnot& a, const SurfaceKnot& b)
{
	IdealClass ca = class_canonical(alexander_ideal(a));
	IdealClass cb = class_canonical(alexander_ideal(b));
	if (ca == cb)
		return IdealsEquivalent{std::move(ca)};
	return Distinguished{std::move(ca), std::move(cb)};
}

RibbonCompatibility ribbon_compatible(const LaurentIdeal& d0, const LaurentIdeal& d1)
{
	const Integer det0 = eval_ideal(d0, -1), det1 = eval_ideal(d1, -1);
	const auto f = div_exact(content_split(d1).content, content_split(d0).content);
	if (!f)
		return Incompatible{divides(det0, det1) ? IncompatibleReason::NonDividingContent
		                                        : IncompatibleReason::NonDividingDeterminant};
	if (det0 * abs(eval_at(*f, -1)) != det1 || !(product(LaurentIdeal({*f}), d0) == d1))
		return Incompatible{IncompatibleReason::IdealMismatch};
	return Witness{normalize_unit(*f)};
}

RibbonCompatibility ribbon_compatible(const SurfaceKnot& k0, const SurfaceKnot& k1)
{
	return ribbon_compatible(alexander_ideal(k0), alexander_ideal(k1));
}

std::string Certificate::to_text() const
{
	std::ostringstream os;
	for (const auto& e : entries)
		os << e.name << ": (" << e.ideal.to_string() << ") p=" << e.prime << " h=" << to_string(e.residue.lift())
		   << "\n";
	return os.str();
}

IndependenceResult independence_certificate(const std::vector<SurfaceKnot>& knots)
{
	Certificate cert;
	for (std::size_t i = 0; i < knots.size(); ++i) {
		LaurentIdeal ideal = alexander_ideal(knots[i]);
		if (!is_maximal(ideal))
			return IndependenceFailure{i, i};
		for (std::size_t j = 0; j < i; ++j)
			if (cert.entries[j].ideal == ideal)
				return IndependenceFailure{j, i};
		const std::int64_t p = intersect_Z(ideal).get_si();
		FpPoly h = image_mod_p(ideal, p);
		cert.entries.push_back({knots[i].name, std::move(ideal), p, std::move(h)});
	}
	return cert;
}

std::string graph_dot(const std::vector<SurfaceKnot>& knots)
{
	std::vector<std::string> names;
	std::map<std::string, int> seen;
	for (const auto& k : knots) {
		const int n = ++seen[k.name];
		names.push_back(n == 1 ? k.name : k.name + " [" + std::to_string(n) + "]");
	}
	for (std::size_t i = 0; i < names.size(); ++i)
		if (seen[names[i]] > 1 && names[i] == knots[i].name)
			names[i] += " [1]";

	std::vector<LaurentIdeal> ideals;
	for (const auto& k : knots)
		ideals.push_back(alexander_ideal(k));

	std::ostringstream os;
	os << "digraph {\n";
	for (std::size_t i = 0; i < knots.size(); ++i)
		os << "  " << quoted(names[i]) << " [label=" << quoted(names[i] + "\\n(" + ideals[i].to_string() + ")\\ndet " +
		                                                   eval_ideal(ideals[i], -1).get_str())
		   << "];\n";
	for (std::size_t i = 0; i < knots.size(); ++i)
		for (std::size_t j = 0; j < knots.size(); ++j) {
			if (i == j)
				continue;
			const auto r = ribbon_compatible(ideals[i], ideals[j]);
			if (const auto* w = std::get_if<Witness>(&r))
				os << "  " << quoted(names[i]) << " -> " << quoted(names[j]) << " [label=" << quoted(to_string(w->f))
				   << "];\n";
		}
	os << "}\n";
	return os.str();
}

}  // namespace surfknot
