#include "knotcert/textio.hpp"

#include <charconv>
#include <vector>

#include "knotcert/errors.hpp"

namespace knotcert {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view s, std::size_t column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back({s.substr(start, i - start), column_offset + start + 1});
  }
  return out;
}

Syllable parse_syllable(const Token& tok, std::size_t line, const Presentation* alphabet) {
  const std::size_t caret = tok.text.find('^');
  const std::string_view name = tok.text.substr(0, caret);
  if (!is_valid_generator_name(name))
    throw SyntaxError(line, tok.column, "bad generator token '" + std::string(tok.text) + "'");
  std::int64_t exp = 1;
  if (caret != std::string_view::npos) {
    const std::string_view num = tok.text.substr(caret + 1);
    const char* first = num.data();
    const char* last = num.data() + num.size();
    if (!num.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exp);
    if (num.empty() || ec != std::errc() || ptr != last)
      throw SyntaxError(line, tok.column + caret + 1,
                        "bad exponent in '" + std::string(tok.text) + "'");
    if (exp == 0)
      throw ZeroExponent("line " + std::to_string(line) + ", column " +
                         std::to_string(tok.column) + ": '" + std::string(tok.text) + "'");
  }
  if (alphabet && !alphabet->has_generator(name))
    throw UnknownGenerator("line " + std::to_string(line) + ", column " +
                           std::to_string(tok.column) + ": '" + std::string(name) + "'");
  return Syllable{std::string(name), exp};
}

Word parse_tokens(const std::vector<Token>& toks, std::size_t line, const Presentation* alphabet) {
  std::vector<Syllable> raw;
  raw.reserve(toks.size());
  for (const Token& t : toks) raw.push_back(parse_syllable(t, line, alphabet));
  return Word::reduce(raw);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::optional<Presentation> gens_only;
  std::vector<Word> rels;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t lead = line.find_first_not_of(" \t");
    if (lead == std::string_view::npos || line[lead] == '#') continue;

    const std::size_t colon = line.find(':', lead);
    const std::string_view key = colon == std::string_view::npos
                                     ? line.substr(lead)
                                     : line.substr(lead, colon - lead);
    if (colon == std::string_view::npos || (key != "gens" && key != "rel"))
      throw SyntaxError(line_no, lead + 1, "expected 'gens:' or 'rel:'");
    const auto toks = split_tokens(line.substr(colon + 1), colon + 1);

    if (key == "gens") {
      if (gens_only) throw SyntaxError(line_no, lead + 1, "duplicate 'gens:' line");
      std::vector<std::string> names;
      for (const Token& t : toks) {
        if (!is_valid_generator_name(t.text))
          throw SyntaxError(line_no, t.column, "bad generator name '" + std::string(t.text) + "'");
        names.emplace_back(t.text);
      }
      try {
        gens_only.emplace(std::move(names), std::vector<Word>{});
      } catch (const InvalidGenerator& e) {
        throw SyntaxError(line_no, lead + 1, e.what());
      }
    } else {
      if (!gens_only) throw SyntaxError(line_no, lead + 1, "'rel:' before 'gens:'");
      rels.push_back(parse_tokens(toks, line_no, &*gens_only));
    }
  }
  if (!gens_only) throw SyntaxError(line_no, 1, "missing 'gens:' line");
  return Presentation(gens_only->generators(), std::move(rels));
}

std::string print_word(const Word& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.gen;
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

std::string print_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators()) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators()) {
    out += "rel:";
    if (!r.is_identity()) out += " " + print_word(r);
    out += "\n";
  }
  return out;
}

Word parse_word(std::string_view text, const Presentation* alphabet) {
  return parse_tokens(split_tokens(text, 0), 1, alphabet);
}

}  // namespace knotcert
