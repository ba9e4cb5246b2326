#include "catalog.hpp"

#include "surfknot/cli.hpp"
#include "surfknot/errors.hpp"
#include "surfknot/parse.hpp"

#include <doctest.h>

#include <sstream>

using namespace surfknot;

namespace {

const LaurentPoly t = LaurentPoly::t();

struct Result {
	int code;
	std::string out;
	std::string err;
};

Result cli(std::vector<std::string> args)
{
	std::ostringstream out, err;
	const int code = run(args, out, err);
	return {code, out.str(), err.str()};
}

const std::string tau2_trefoil = "@gens: x y; rels: x y x y^-1 x^-1 y^-1, x^2 y x^-2 y^-1;";

}  // namespace

TEST_CASE("polynomial parsing")
{
	CHECK(parse_poly("t^2 - t + 1") == cyclotomic(6));
	CHECK(parse_poly("2t^-1+1") == LaurentPoly({2, 1}, -1));
	CHECK(parse_poly("-3*t^2 + t - t") == LaurentPoly::monomial(Integer(-3), 2));
	CHECK(parse_poly("0") == LaurentPoly());
	CHECK(parse_poly("t") == t);
	CHECK(parse_poly(" 100000000000000000000 ") == LaurentPoly(Integer("100000000000000000000")));
	CHECK_THROWS_AS(parse_poly(""), ParseError);
	CHECK_THROWS_AS(parse_poly("t^"), ParseError);
	CHECK_THROWS_AS(parse_poly("x+1"), ParseError);
	try {
		parse_poly("t + + 1");
		FAIL("expected a parse error");
	} catch (const ParseError& e) {
		CHECK(e.line() == 1);
		CHECK(e.column() == 5);
	}
}

TEST_CASE("ideal parsing")
{
	CHECK(parse_ideal("3; t+1") == LaurentIdeal({LaurentPoly(3), t + 1}));
	CHECK(parse_ideal("(t^2-t+1, t^2-1)") == LaurentIdeal({LaurentPoly(3), t + 1}));
	CHECK(parse_ideal("1").is_unit());
	CHECK_THROWS_AS(parse_ideal("3;"), ParseError);
	CHECK_THROWS_AS(parse_ideal("(3; t"), ParseError);
	CHECK_THROWS(parse_ideal("0"));
}

TEST_CASE("presentation parsing")
{
	const Presentation p = parse_presentation("gens: x y ; rels: x y x y^-1 x^-1 y^-1 ;");
	CHECK(p.generators == std::vector<std::string>{"x", "y"});
	CHECK(p.weights == std::vector<std::int64_t>{1, 1});
	REQUIRE(p.relators.size() == 1);
	CHECK(p.relators[0] == two_bridge(3, 1).presentation.relators[0]);

	const Presentation q = parse_presentation("# comment\ngens: a b\n;weights: 2 -1; rels: a b^2, 1;");
	CHECK(q.weights == std::vector<std::int64_t>{2, -1});
	REQUIRE(q.relators.size() == 2);
	CHECK(q.relators[1].empty());

	try {
		parse_presentation("gens: x y;\nrels: x z;");
		FAIL("expected a parse error");
	} catch (const ParseError& e) {
		CHECK(e.line() == 2);
		CHECK(e.column() == 9);
	}
	CHECK_THROWS_AS(parse_presentation("gens: x; rels: x^;"), ParseError);
	CHECK_THROWS_AS(parse_presentation("gens: x; frobnicate: 1;"), ParseError);
	CHECK_THROWS_AS(parse_presentation("rels: x;"), ParseError);
}

TEST_CASE("knot files")
{
	const KnotFile k = parse_knot("name: \"my knot\"; genus: 2;\ngens: x y; rels: x y^-1;");
	CHECK(k.genus_given);
	CHECK(k.knot.name == "my knot");
	CHECK(k.knot.genus == 2);
	CHECK_FALSE(k.knot.is_classical());

	const KnotFile c = parse_knot("genus: classical; gens: x y; rels: x y x y^-1 x^-1 y^-1;", "trefoil");
	CHECK(c.knot.is_classical());
	CHECK(c.knot.name == "trefoil");

	const KnotFile d = parse_knot("gens: x; rels: ;");
	CHECK_FALSE(d.genus_given);
	CHECK(d.knot.genus == 0);

	CHECK_THROWS_AS(parse_knot("gens: x y; rels: x^2 y x^-1 y^-2;"), ParseError);
	CHECK_NOTHROW(parse_knot("gens: x y; rels: x^2 y x^-1 y^-2;", "k", true));
	CHECK_THROWS_AS(parse_knot("gens: x y; rels: x y x;"), ParseError);
}

TEST_CASE("print then parse is the identity")
{
	std::vector<SurfaceKnot> knots = catalog::surfaces();
	for (const auto& k : catalog::classical())
		knots.push_back(k);
	knots.push_back(realize_ideal(LaurentIdeal({LaurentPoly(3), t + 1})));
	for (const auto& k : knots) {
		const std::string text = format_knot(k);
		const KnotFile back = parse_knot(text);
		CHECK(back.knot.name == k.name);
		CHECK(back.knot.kind == k.kind);
		CHECK(back.knot.genus == k.genus);
		CHECK(back.knot.provenance == k.provenance);
		CHECK(back.knot.presentation.generators == k.presentation.generators);
		CHECK(back.knot.presentation.weights == k.presentation.weights);
		CHECK(back.knot.presentation.relators == k.presentation.relators);
		CHECK(format_knot(back.knot) == text);
	}
	for (const auto& s : {"t^2-t+1", "1+2t^-1", "-3", "-t", "0", "t^5-2t^3+7"})
		CHECK(to_string(parse_poly(s)) == s);
	CHECK(parse_ideal("3; t+1").to_string() == "3; t+1");
}

TEST_CASE("report command")
{
	const Result r = cli({"report", tau2_trefoil, "--json"});
	CHECK(r.code == kExitOk);
	CHECK(r.out.find(R"("ideal":["3","t+1"])") != std::string::npos);
	CHECK(r.out.find(R"("determinant":3)") != std::string::npos);
	CHECK(r.out.find(R"("principal":false)") != std::string::npos);
	CHECK(r.err.empty());
	CHECK(cli({"report", tau2_trefoil, "--json"}).out == r.out);

	const Result text = cli({"report", tau2_trefoil});
	CHECK(text.out.find("conclusions: NotZeroSlice, NotInvertible, NotRibbon") != std::string::npos);
}

TEST_CASE("construction commands")
{
	const Result b = cli({"knot", "two-bridge", "3", "1"});
	CHECK(b.code == kExitOk);
	CHECK(b.out.find("x y x y^-1 x^-1 y^-1") != std::string::npos);

	const Result spun = cli({"twist-spin", "-n", "2", "@" + b.out});
	CHECK(spun.code == kExitOk);
	CHECK(cli({"ideal", "@" + spun.out}).out == "3; t+1\n");
	CHECK(cli({"twist-spin", "-n", "2", "--power", "@gens: x y; rels: x y x y^-1 x^-1 y^-1;"}).code == kExitOk);

	const Result r = cli({"realize", "--ideal", "3; t+1"});
	CHECK(r.code == kExitOk);
	CHECK(r.out.find("genus: 2 ;") != std::string::npos);
	const KnotFile k = parse_knot(r.out);
	CHECK(k.knot.presentation.relators.size() == 3);
	CHECK(cli({"ideal", "@" + r.out}).out == "3; t+1\n");

	const Result f = cli({"realize", "--poly", "2t-1"});
	CHECK(f.code == kExitOk);
	CHECK(cli({"det", "@" + f.out}).out == "3\n");

	const Result sum = cli({"sum", tau2_trefoil, tau2_trefoil});
	CHECK(sum.code == kExitOk);
	CHECK(cli({"ideal", "@" + sum.out}).out == power(LaurentIdeal({LaurentPoly(3), t + 1}), 2).to_string() + "\n");
}

TEST_CASE("invariant commands")
{
	CHECK(cli({"hilbert", "--ideal", "3; t+1", "--max-n", "3"}).out == "1 2 3 4\n");
	CHECK(cli({"det", tau2_trefoil}).out == "3\n");
	CHECK(cli({"colorings", "-p", "3", tau2_trefoil}).out == "9 nontrivial\n");
	CHECK(cli({"colorings", "-p", "5", tau2_trefoil}).out == "5 trivial\n");
	CHECK(cli({"ideal", "@gens: x y; rels: ;"}).out == "0\n");
	CHECK(cli({"ideal", "-k", "2", tau2_trefoil}).out == "1\n");
	const std::string t97 = "@" + format_knot(twist_spin(two_bridge(9, 7), 2));
	CHECK(cli({"compare", tau2_trefoil, t97}).out == "distinguished: (3; t+1) vs (9; t+1)\n");
	CHECK(cli({"compare", tau2_trefoil, tau2_trefoil}).out == "ideals equivalent: (3; t+1) (inconclusive)\n");
	CHECK(cli({"ribbon-compatible", tau2_trefoil, tau2_trefoil}).out == "witness: 1\n");
	CHECK(cli({"ribbon-compatible", "@gens: x; rels: ;", tau2_trefoil}).out == "incompatible: IdealMismatch\n");
}

TEST_CASE("basis and graph commands")
{
	const std::string t5 = "@" + format_knot(twist_spin(two_bridge(5, 1), 2));
	const Result b = cli({"basis", tau2_trefoil, t5});
	CHECK(b.code == kExitOk);
	CHECK(b.out.rfind("independent\n", 0) == 0);
	CHECK(b.out.find("p=5") != std::string::npos);
	CHECK(cli({"basis", tau2_trefoil, tau2_trefoil}).out == "failure: inline and inline share an ideal\n");

	const Result g = cli({"graph", "--dot", "@gens: x; rels: ;", "@" + format_knot(kinoshita_realize(LaurentPoly({-1, 2})))});
	CHECK(g.code == kExitOk);
	CHECK(g.out.rfind("digraph {\n", 0) == 0);
	CHECK(g.out.find("\"inline\" -> \"R(2t-1)\" [label=\"-2t+1\"]") != std::string::npos);
}

TEST_CASE("exit codes")
{
	CHECK(cli({}).code == kExitUsage);
	CHECK(cli({"frobnicate"}).code == kExitUsage);
	CHECK(cli({"det", tau2_trefoil, "--unknown"}).code == kExitUsage);
	CHECK(cli({"knot", "two-bridge", "4", "1"}).code == kExitUsage);
	CHECK(cli({"realize", "--poly", "t+1"}).code == kExitUsage);
	CHECK(cli({"det", "/nonexistent/file.knot"}).code == kExitUsage);
	CHECK(cli({"--help"}).code == kExitOk);

	const Result parse = cli({"det", "@gens: x y;\nrels: x q;"});
	CHECK(parse.code == kExitParse);
	CHECK(parse.err == "parse error: inline:2:9: unknown generator 'q'\n");
	CHECK(parse.out.empty());
	CHECK(cli({"hilbert", "--ideal", "3; t+", "--max-n", "1"}).code == kExitParse);

	const Result bound = cli({"colorings", "-p", "101", tau2_trefoil});
	CHECK(bound.code == kExitBound);
	CHECK(bound.err.rfind("bound exceeded: ", 0) == 0);

	std::string big = "@gens:";
	for (int i = 0; i < 14; ++i)
		big += " x" + std::to_string(i);
	big += "; rels:";
	for (int i = 0; i + 1 < 14; ++i)
		big += std::string(i ? "," : "") + " x" + std::to_string(i) + " x" + std::to_string(i + 1) + "^-1";
	big += ";";
	CHECK(cli({"det", big}).code == kExitBound);
}
