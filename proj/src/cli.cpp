#include "surfknot/cli.hpp"

#include "surfknot/errors.hpp"
#include "surfknot/obstruct.hpp"
#include "surfknot/parse.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace surfknot {

namespace {

struct Source {
	std::string text;
	std::string label;
};

Source load(const std::string& arg)
{
	if (!arg.empty() && arg.front() == '@') {
		std::string text = arg.substr(1);
		if (text.size() >= 2 && text.front() == '"' && text.back() == '"')
			text = text.substr(1, text.size() - 2);
		return {text, "inline"};
	}
	std::ifstream in(arg, std::ios::binary);
	if (!in)
		throw DomainError("cannot read '" + arg + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	std::string label = arg;
	const auto slash = label.find_last_of('/');
	if (slash != std::string::npos)
		label = label.substr(slash + 1);
	const auto dot = label.find_last_of('.');
	if (dot != std::string::npos && dot > 0)
		label = label.substr(0, dot);
	return {buf.str(), label};
}

// A parse error located in a named source.
struct SourceError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

template <typename F>
auto parsing(const Source& src, F&& f)
{
	try {
		return f(src.text);
	} catch (const ParseError& e) {
		throw SourceError(src.label + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
		                  e.message());
	}
}

KnotFile load_knot(const std::string& arg, bool allow_general = false)
{
	const Source src = load(arg);
	return parsing(src, [&](const std::string& text) { return parse_knot(text, src.label, allow_general); });
}

std::string class_text(const IdealClass& c) { return "(" + c.to_string() + ")"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Alexander ideals and concordance obstructions for surface knots", "surfknot"};
	app.require_subcommand(1);
	app.set_help_all_flag("--help-all", "Show help for every subcommand");

	std::string file, file_b, poly_text, ideal_text;
	std::vector<std::string> files;
	int elementary = 1, twist = 0, p = 0, q = 0, max_n = 0;
	std::int64_t prime = 0;
	bool json = false, dot = false, power = false;

	auto* ideal_cmd = app.add_subcommand("ideal", "Elementary ideal of a presentation file");
	ideal_cmd->add_option("file", file, "Presentation or knot file (or @text)")->required();
	ideal_cmd->add_option("--elementary,-k", elementary, "Index k of the elementary ideal")->check(CLI::NonNegativeNumber);

	auto* knot_cmd = app.add_subcommand("knot", "Construct a classical knot");
	knot_cmd->require_subcommand(1);
	auto* two_bridge_cmd = knot_cmd->add_subcommand("two-bridge", "2-bridge knot b(p,q)");
	two_bridge_cmd->add_option("p", p)->required();
	two_bridge_cmd->add_option("q", q)->required();

	auto* twist_cmd = app.add_subcommand("twist-spin", "n-twist spin of a classical knot");
	twist_cmd->add_option("-n", twist, "Twist number")->required();
	twist_cmd->add_option("file", file, "Classical knot file")->required();
	twist_cmd->add_flag("--power", power, "Use the relators x0^n xi^-n instead of commutators");

	auto* sum_cmd = app.add_subcommand("sum", "Connected sum of two knots");
	sum_cmd->add_option("a", file)->required();
	sum_cmd->add_option("b", file_b)->required();

	auto* realize_cmd = app.add_subcommand("realize", "Ribbon knot with a given Alexander ideal");
	auto* poly_opt = realize_cmd->add_option("--poly", poly_text, "Polynomial with f(1) = +-1");
	auto* ideal_opt = realize_cmd->add_option("--ideal", ideal_text, "Ideal with I(1) = (1)");
	poly_opt->excludes(ideal_opt);
	realize_cmd->require_option(1);

	auto* det_cmd = app.add_subcommand("det", "Determinant of a knot");
	det_cmd->add_option("file", file)->required();

	auto* colorings_cmd = app.add_subcommand("colorings", "Count Fox p-colorings");
	colorings_cmd->add_option("-p", prime, "Odd prime")->required();
	colorings_cmd->add_option("file", file)->required();

	auto* report_cmd = app.add_subcommand("report", "Obstruction report");
	report_cmd->add_option("file", file)->required();
	report_cmd->add_flag("--json", json, "Emit JSON");

	auto* compare_cmd = app.add_subcommand("compare", "Compare the ideal classes of two knots");
	compare_cmd->add_option("a", file)->required();
	compare_cmd->add_option("b", file_b)->required();

	auto* ribbon_cmd = app.add_subcommand("ribbon-compatible", "Test Delta(B) = (f) Delta(A)");
	ribbon_cmd->add_option("a", file)->required();
	ribbon_cmd->add_option("b", file_b)->required();

	auto* basis_cmd = app.add_subcommand("basis", "Independence certificate for a list of knots");
	basis_cmd->add_option("files", files)->required();

	auto* graph_cmd = app.add_subcommand("graph", "Graph of ribbon-compatible pairs");
	graph_cmd->add_option("files", files)->required();
	graph_cmd->add_flag("--dot", dot, "Emit Graphviz DOT (the only format)");

	auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of a maximal ideal");
	hilbert_cmd->add_option("--ideal", ideal_text, "Maximal ideal")->required();
	hilbert_cmd->add_option("--max-n", max_n, "Largest n")->required()->check(CLI::NonNegativeNumber);

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? kExitOk : kExitUsage;
	}

	try {
		if (ideal_cmd->parsed()) {
			const KnotFile k = load_knot(file, true);
			const auto ideal = elementary_ideal(k.knot.presentation, elementary);
			out << (ideal ? ideal->to_string() : "0") << "\n";
		} else if (two_bridge_cmd->parsed()) {
			out << format_knot(two_bridge(p, q));
		} else if (twist_cmd->parsed()) {
			KnotFile k = load_knot(file);
			if (!k.genus_given)
				k.knot.kind = KnotKind::Classical;
			out << format_knot(twist_spin(k.knot, twist, power ? TwistRelators::Power : TwistRelators::Commutator));
		} else if (sum_cmd->parsed()) {
			out << format_knot(connect_sum(load_knot(file).knot, load_knot(file_b).knot));
		} else if (realize_cmd->parsed()) {
			if (!poly_text.empty()) {
				const LaurentPoly f = parsing({poly_text, "--poly"}, [](const std::string& t) { return parse_poly(t); });
				out << format_knot(kinoshita_realize(f));
			} else {
				const LaurentIdeal i =
					parsing({ideal_text, "--ideal"}, [](const std::string& t) { return parse_ideal(t); });
				out << format_knot(realize_ideal(i));
			}
		} else if (det_cmd->parsed()) {
			out << determinant(load_knot(file).knot) << "\n";
		} else if (colorings_cmd->parsed()) {
			const KnotFile k = load_knot(file);
			const Integer n = colorings_count(k.knot, prime);
			out << n << (n > Integer(static_cast<long>(prime)) ? " nontrivial" : " trivial") << "\n";
		} else if (report_cmd->parsed()) {
			const ObstructionReport r = report(load_knot(file).knot);
			out << (json ? r.to_json() + "\n" : r.to_text());
		} else if (compare_cmd->parsed()) {
			const auto d = distinguish(load_knot(file).knot, load_knot(file_b).knot);
			if (const auto* x = std::get_if<Distinguished>(&d))
				out << "distinguished: " << class_text(x->first) << " vs " << class_text(x->second) << "\n";
			else
				out << "ideals equivalent: " << class_text(std::get<IdealsEquivalent>(d).shared)
				    << " (inconclusive)\n";
		} else if (ribbon_cmd->parsed()) {
			const auto r = ribbon_compatible(load_knot(file).knot, load_knot(file_b).knot);
			if (const auto* w = std::get_if<Witness>(&r))
				out << "witness: " << w->f << "\n";
			else
				out << "incompatible: " << to_string(std::get<Incompatible>(r).reason) << "\n";
		} else if (basis_cmd->parsed()) {
			std::vector<SurfaceKnot> knots;
			for (const auto& f : files)
				knots.push_back(load_knot(f).knot);
			const auto r = independence_certificate(knots);
			if (const auto* c = std::get_if<Certificate>(&r)) {
				out << "independent\n" << c->to_text();
			} else {
				const auto& f = std::get<IndependenceFailure>(r);
				if (f.i == f.j)
					out << "failure: " << knots[f.i].name << " does not have a maximal ideal\n";
				else
					out << "failure: " << knots[f.i].name << " and " << knots[f.j].name << " share an ideal\n";
			}
		} else if (graph_cmd->parsed()) {
			std::vector<SurfaceKnot> knots;
			for (const auto& f : files)
				knots.push_back(load_knot(f).knot);
			out << graph_dot(knots);
		} else if (hilbert_cmd->parsed()) {
			const LaurentIdeal m = parsing({ideal_text, "--ideal"}, [](const std::string& t) { return parse_ideal(t); });
			for (int n = 0; n <= max_n; ++n)
				out << (n ? " " : "") << hilbert_function(m, n);
			out << "\n";
		}
	} catch (const SourceError& e) {
		err << "parse error: " << e.what() << "\n";
		return kExitParse;
	} catch (const ParseError& e) {
		err << "parse error: " << e.what() << "\n";
		return kExitParse;
	} catch (const BoundExceeded& e) {
		err << "bound exceeded: " << e.what() << "\n";
		return kExitBound;
	} catch (const DomainError& e) {
		err << "error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const InternalError& e) {
		err << "internal error: " << e.what() << "\n";
		return kExitUsage;
	}
	return kExitOk;
}

}  // namespace surfknot
