#include "sbaf/io/framework_file.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "sbaf/errors.hpp"

namespace sbaf::io {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == ':') {
      out.push_back({":", i + 1});
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", i + 1});
      i += 2;
    } else if (ident_char(c)) {
      std::size_t start = i;
      while (i < line.size() && ident_char(line[i])) ++i;
      out.push_back({std::string(line.substr(start, i - start)), start + 1});
    } else {
      throw ParseError(line_no, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

bool is_ident(const Token& t) { return t.text != ":" && t.text != "->"; }

struct PendingName {
  std::string argument;
  std::string sentence;
  std::size_t line;
  std::size_t column;
};

}  // namespace

Sbaf parse_framework(std::string_view text) {
  Language language;
  std::vector<Argument> arguments;
  std::map<std::string, std::size_t> argument_lines;
  std::vector<PendingName> names;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    const std::vector<Token> tokens = tokenize(line, line_no);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();
    auto fail = [&](const Token& at, const std::string& message) -> ParseError {
      return ParseError(line_no, at.column, message);
    };
    auto end_column = [&] { return tokens.back().column + tokens.back().text.size(); };
    auto need_idents = [&](std::size_t from, std::size_t to) {
      for (std::size_t k = from; k < to; ++k)
        if (!is_ident(tokens[k])) throw fail(tokens[k], "expected identifier, found '" + tokens[k].text + "'");
    };

    if (head.text == "sent") {
      if (tokens.size() < 2) throw ParseError(line_no, end_column(), "sent needs at least one sentence");
      need_idents(1, tokens.size());
      for (std::size_t k = 1; k < tokens.size(); ++k) language.add_sentence(tokens[k].text);
    } else if (head.text == "inc") {
      if (tokens.size() != 3) throw fail(head, "inc takes exactly two sentences");
      need_idents(1, 3);
      language.add_incompatibility(tokens[1].text, tokens[2].text);
    } else if (head.text == "name") {
      if (tokens.size() != 3) throw fail(head, "name takes an argument and a sentence");
      need_idents(1, 3);
      names.push_back({tokens[1].text, tokens[2].text, line_no, tokens[1].column});
    } else if (head.text == "arg") {
      // arg <id> : <p>+ -> <c>
      if (tokens.size() < 2 || !is_ident(tokens[1])) throw ParseError(line_no, end_column(), "arg needs an identifier");
      if (tokens.size() < 3 || tokens[2].text != ":")
        throw ParseError(line_no, tokens.size() < 3 ? end_column() : tokens[2].column, "expected ':' after argument id");
      std::size_t arrow = 3;
      while (arrow < tokens.size() && tokens[arrow].text != "->") ++arrow;
      if (arrow == tokens.size()) throw ParseError(line_no, end_column(), "expected '->' before the conclusion");
      if (arrow == 3) throw fail(tokens[arrow], "argument '" + tokens[1].text + "' has no premises");
      need_idents(3, arrow);
      if (arrow + 2 != tokens.size()) {
        if (arrow + 1 == tokens.size()) throw ParseError(line_no, end_column(), "expected a conclusion after '->'");
        throw fail(tokens[arrow + 2], "exactly one conclusion expected");
      }
      need_idents(arrow + 1, arrow + 2);
      const std::string& id = tokens[1].text;
      if (argument_lines.count(id))
        throw fail(tokens[1], "duplicate argument id '" + id + "' (first defined on line " +
                                  std::to_string(argument_lines[id]) + ")");
      argument_lines[id] = line_no;
      Argument arg{id, {}, tokens[arrow + 1].text};
      for (std::size_t k = 3; k < arrow; ++k) {
        language.add_sentence(tokens[k].text);
        arg.premises.push_back(tokens[k].text);
      }
      language.add_sentence(arg.conclusion);
      arguments.push_back(std::move(arg));
    } else {
      throw fail(head, "unknown directive '" + head.text + "'");
    }
  }

  for (const auto& n : names) {
    if (!argument_lines.count(n.argument))
      throw ParseError(n.line, n.column, "name assigned to unknown argument '" + n.argument + "'");
    if (language.name_of(n.argument))
      throw ParseError(n.line, n.column, "argument '" + n.argument + "' is already named");
    language.set_name(n.argument, n.sentence);
  }
  if (language.empty()) throw ParseError(1, 1, "empty framework: no sentences declared");
  return Sbaf(std::move(language), std::move(arguments));
}

Sbaf read_framework(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_framework(buffer.str());
}

std::string emit_framework(const Sbaf& sb) {
  const Language& lang = sb.language();
  std::ostringstream out;
  if (!lang.empty()) {
    out << "sent";
    for (const auto& s : lang.sentences()) out << ' ' << s;
    out << '\n';
  }
  for (SentenceIndex s = 0; s < lang.size(); ++s)
    for (auto t : lang.incompatible_with(s))
      if (t >= s) out << "inc " << lang.sentence(s) << ' ' << lang.sentence(t) << '\n';
  for (const auto& arg : sb.arguments()) {
    out << "arg " << arg.id << " :";
    for (const auto& p : arg.premises) out << ' ' << p;
    out << " -> " << arg.conclusion << '\n';
  }
  for (ArgumentIndex a = 0; a < sb.size(); ++a)
    if (auto n = sb.name(a)) out << "name " << sb.id(a) << ' ' << lang.sentence(*n) << '\n';
  return out.str();
}

std::string digest(const Sbaf& sb) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : emit_framework(sb)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace sbaf::io
