#include "surfknot/parse.hpp"

#include "surfknot/errors.hpp"

#include <cctype>
#include <optional>

namespace surfknot {

namespace {

class Scanner {
public:
	explicit Scanner(std::string_view text, bool comments = false) : text_(text), comments_(comments) {}

	bool done()
	{
		skip();
		return pos_ >= text_.size();
	}

	char peek()
	{
		skip();
		return pos_ < text_.size() ? text_[pos_] : '\0';
	}

	bool accept(char c)
	{
		if (peek() != c)
			return false;
		advance();
		return true;
	}

	void expect(char c, const std::string& what)
	{
		if (!accept(c))
			fail("expected " + what);
	}

	std::string identifier()
	{
		skip();
		const std::size_t start = pos_;
		if (pos_ >= text_.size() || !(std::isalpha(uc(text_[pos_])) || text_[pos_] == '_'))
			fail("expected a name");
		while (pos_ < text_.size() &&
		       (std::isalnum(uc(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
			advance();
		return std::string(text_.substr(start, pos_ - start));
	}

	bool at_digit()
	{
		skip();
		return pos_ < text_.size() && std::isdigit(uc(text_[pos_]));
	}

	bool at_identifier()
	{
		skip();
		return pos_ < text_.size() && (std::isalpha(uc(text_[pos_])) || text_[pos_] == '_');
	}

	Integer natural()
	{
		skip();
		const std::size_t start = pos_;
		while (pos_ < text_.size() && std::isdigit(uc(text_[pos_])))
			advance();
		if (start == pos_)
			fail("expected a number");
		return Integer(std::string(text_.substr(start, pos_ - start)));
	}

	Integer signed_integer()
	{
		bool negative = false;
		if (accept('-'))
			negative = true;
		else
			accept('+');
		Integer n = natural();
		return negative ? Integer(-n) : n;
	}

	std::int64_t small_integer()
	{
		skip();
		const auto [line, col] = location();
		const Integer n = signed_integer();
		if (!n.fits_slong_p())
			throw ParseError(line, col, "integer out of range");
		return n.get_si();
	}

	std::string quoted()
	{
		expect('"', "'\"'");
		std::string out;
		while (pos_ < text_.size() && text_[pos_] != '"') {
			if (text_[pos_] == '\\' && pos_ + 1 < text_.size())
				advance();
			out += text_[pos_];
			advance();
		}
		if (pos_ >= text_.size())
			fail("unterminated string");
		advance();
		return out;
	}

	// Raw text up to (not including) the stop character, trimmed.
	std::string until(char stop)
	{
		skip();
		const std::size_t start = pos_;
		while (pos_ < text_.size() && text_[pos_] != stop && !(comments_ && text_[pos_] == '#'))
			advance();
		std::string out(text_.substr(start, pos_ - start));
		while (!out.empty() && std::isspace(uc(out.back())))
			out.pop_back();
		return out;
	}

	std::pair<std::size_t, std::size_t> location()
	{
		skip();
		return {line_, column_};
	}

	[[noreturn]] void fail(const std::string& message)
	{
		skip();
		throw ParseError(line_, column_, message);
	}

private:
	static unsigned char uc(char c) { return static_cast<unsigned char>(c); }

	void advance()
	{
		if (text_[pos_] == '\n') {
			++line_;
			column_ = 1;
		} else {
			++column_;
		}
		++pos_;
	}

	void skip()
	{
		while (pos_ < text_.size()) {
			if (std::isspace(uc(text_[pos_]))) {
				advance();
			} else if (comments_ && text_[pos_] == '#') {
				while (pos_ < text_.size() && text_[pos_] != '\n')
					advance();
			} else {
				break;
			}
		}
	}

	std::string_view text_;
	bool comments_;
	std::size_t pos_ = 0;
	std::size_t line_ = 1;
	std::size_t column_ = 1;
};

// One term: [c] [*] [t [^ k]]
LaurentPoly parse_term(Scanner& s, bool negative)
{
	Integer c = 1;
	bool any = false;
	if (s.at_digit()) {
		c = s.natural();
		any = true;
		s.accept('*');
	}
	LaurentPoly::Exponent k = 0;
	if (s.peek() == 't') {
		s.accept('t');
		any = true;
		k = 1;
		if (s.accept('^'))
			k = s.small_integer();
	}
	if (!any)
		s.fail("expected a term");
	return LaurentPoly::monomial(negative ? Integer(-c) : c, k);
}

LaurentPoly parse_poly_from(Scanner& s, const std::string& stops)
{
	LaurentPoly out;
	bool negative = s.accept('-');
	if (!negative)
		s.accept('+');
	out += parse_term(s, negative);
	for (;;) {
		const char c = s.peek();
		if (c == '+' || c == '-') {
			s.accept(c);
			out += parse_term(s, c == '-');
		} else if (c == '\0' || stops.find(c) != std::string::npos) {
			return out;
		} else {
			s.fail(std::string("unexpected '") + c + "'");
		}
	}
}

struct RawSyllable {
	std::string name;
	std::int64_t exponent;
	std::size_t line;
	std::size_t column;
};

std::vector<std::vector<RawSyllable>> parse_relators(Scanner& s)
{
	std::vector<std::vector<RawSyllable>> rels;
	if (s.peek() == ';')
		return rels;
	for (;;) {
		std::vector<RawSyllable> word;
		bool identity = false;
		for (;;) {
			const auto [line, col] = s.location();
			if (s.at_identifier()) {
				std::string name = s.identifier();
				std::int64_t e = 1;
				if (s.accept('^'))
					e = s.small_integer();
				word.push_back({std::move(name), e, line, col});
			} else if (s.at_digit()) {
				if (s.natural() != 1)
					throw ParseError(line, col, "only 1 may stand for the empty word");
				identity = true;
			} else {
				break;
			}
		}
		if (word.empty() && !identity)
			s.fail("expected a relator");
		rels.push_back(std::move(word));
		if (!s.accept(','))
			return rels;
	}
}

struct Statements {
	std::optional<std::vector<std::string>> gens;
	std::optional<std::vector<std::int64_t>> weights;
	std::optional<std::vector<std::vector<RawSyllable>>> rels;
	std::optional<std::string> name;
	std::optional<std::string> genus;
	std::optional<std::string> provenance;
	std::pair<std::size_t, std::size_t> weights_at;
};

Statements parse_statements(std::string_view text, bool knot_keys)
{
	Scanner s(text, true);
	Statements st;
	while (!s.done()) {
		const auto [line, col] = s.location();
		const std::string key = s.identifier();
		s.expect(':', "':' after '" + key + "'");
		auto once = [&](bool present) {
			if (present)
				throw ParseError(line, col, "duplicate '" + key + "' statement");
		};
		if (key == "gens") {
			once(st.gens.has_value());
			std::vector<std::string> names;
			while (s.at_identifier())
				names.push_back(s.identifier());
			st.gens = std::move(names);
		} else if (key == "weights") {
			once(st.weights.has_value());
			st.weights_at = {line, col};
			std::vector<std::int64_t> w;
			while (s.at_digit() || s.peek() == '-' || s.peek() == '+')
				w.push_back(s.small_integer());
			st.weights = std::move(w);
		} else if (key == "rels") {
			once(st.rels.has_value());
			st.rels = parse_relators(s);
		} else if (knot_keys && (key == "name" || key == "provenance")) {
			auto& slot = key == "name" ? st.name : st.provenance;
			once(slot.has_value());
			slot = s.peek() == '"' ? s.quoted() : s.until(';');
		} else if (knot_keys && key == "genus") {
			once(st.genus.has_value());
			st.genus = s.until(';');
		} else {
			throw ParseError(line, col, "unknown statement '" + key + "'");
		}
		s.expect(';', "';' to end the '" + key + "' statement");
	}
	return st;
}

Presentation build_presentation(const Statements& st)
{
	if (!st.gens)
		throw ParseError(1, 1, "missing 'gens' statement");
	Presentation p;
	p.generators = *st.gens;
	if (p.generators.empty())
		throw ParseError(1, 1, "a presentation needs at least one generator");
	for (std::size_t i = 0; i < p.generators.size(); ++i)
		for (std::size_t j = 0; j < i; ++j)
			if (p.generators[i] == p.generators[j])
				throw ParseError(1, 1, "duplicate generator '" + p.generators[i] + "'");
	if (st.weights) {
		if (st.weights->size() != p.generators.size())
			throw ParseError(st.weights_at.first, st.weights_at.second,
			                 "expected " + std::to_string(p.generators.size()) + " weights, got " +
			                     std::to_string(st.weights->size()));
		p.weights = *st.weights;
	} else {
		p.weights.assign(p.generators.size(), 1);
	}
	if (st.rels)
		for (const auto& raw : *st.rels) {
			std::vector<Syllable> syl;
			for (const auto& r : raw) {
				const auto idx = p.index_of(r.name);
				if (!idx)
					throw ParseError(r.line, r.column, "unknown generator '" + r.name + "'");
				syl.push_back({*idx, r.exponent});
			}
			p.relators.emplace_back(syl);
		}
	try {
		p.validate();
	} catch (const DomainError& e) {
		throw ParseError(1, 1, e.what());
	}
	return p;
}

std::string quote(const std::string& s)
{
	std::string out = "\"";
	for (const char c : s) {
		if (c == '"' || c == '\\')
			out += '\\';
		out += c;
	}
	return out + "\"";
}

}  // namespace

LaurentPoly parse_poly(std::string_view text)
{
	Scanner s(text);
	LaurentPoly p = parse_poly_from(s, "");
	if (!s.done())
		s.fail("trailing input");
	return p;
}

LaurentIdeal parse_ideal(std::string_view text)
{
	Scanner s(text);
	const bool paren = s.accept('(');
	std::vector<LaurentPoly> gens;
	for (;;) {
		gens.push_back(parse_poly_from(s, paren ? ";,)" : ";,"));
		if (!s.accept(';') && !s.accept(','))
			break;
	}
	if (paren)
		s.expect(')', "')'");
	if (!s.done())
		s.fail("trailing input");
	try {
		return LaurentIdeal(std::move(gens));
	} catch (const DomainError& e) {
		throw ParseError(1, 1, e.what());
	}
}

Presentation parse_presentation(std::string_view text)
{
	return build_presentation(parse_statements(text, false));
}

KnotFile parse_knot(std::string_view text, const std::string& default_name, bool allow_general)
{
	const Statements st = parse_statements(text, true);
	KnotFile out;
	out.knot.presentation = build_presentation(st);
	out.knot.name = st.name.value_or(default_name);
	out.knot.provenance = st.provenance.value_or("file");
	if (st.genus) {
		out.genus_given = true;
		if (*st.genus == "classical") {
			out.knot.kind = KnotKind::Classical;
		} else {
			Scanner g(*st.genus);
			const std::int64_t genus = g.small_integer();
			if (!g.done() || genus < 0 || genus > 1000000)
				throw ParseError(1, 1, "genus must be a nonnegative integer or 'classical'");
			out.knot.genus = static_cast<int>(genus);
		}
	}
	if (!allow_general && !out.knot.presentation.is_wirtinger())
		throw ParseError(1, 1, "knot presentations must be Wirtinger presentations");
	return out;
}

std::string format_word(const Word& w, const Presentation& p)
{
	if (w.empty())
		return "1";
	std::string out;
	for (const auto& s : w.syllables()) {
		if (!out.empty())
			out += ' ';
		out += p.generators[s.generator];
		if (s.exponent != 1)
			out += "^" + std::to_string(s.exponent);
	}
	return out;
}

std::string format_presentation(const Presentation& p)
{
	std::string out = "gens:";
	for (const auto& g : p.generators)
		out += " " + g;
	out += " ;\n";
	if (!p.unit_weights()) {
		out += "weights:";
		for (const auto w : p.weights)
			out += " " + std::to_string(w);
		out += " ;\n";
	}
	out += "rels:";
	for (std::size_t i = 0; i < p.relators.size(); ++i)
		out += (i ? " ,\n      " : " ") + format_word(p.relators[i], p);
	out += " ;\n";
	return out;
}

std::string format_knot(const SurfaceKnot& k)
{
	std::string out = "name: " + quote(k.name) + " ;\n";
	out += "genus: " + (k.is_classical() ? std::string("classical") : std::to_string(k.genus)) + " ;\n";
	out += "provenance: " + quote(k.provenance) + " ;\n";
	return out + format_presentation(k.presentation);
}

}  // namespace surfknot
