#include <cctype>
#include <fstream>
#include <sstream>

#include "stablab/error.hpp"
#include "stablab/fp/presentation.hpp"

namespace stablab::fp {

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  Word parse() {
    Word w = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in \"" +
                     std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Word parse_sequence() {
    Word w;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (c == ')' || c == ']' || c == ',') break;
      w = w * parse_factor();
    }
    return w;
  }

  Word parse_factor() {
    Word base = parse_atom();
    if (at('^')) {
      ++pos_;
      base = base.pow(parse_int());
    }
    return base;
  }

  Word parse_atom() {
    skip_space();
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = parse_sequence();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word x = parse_sequence();
      if (!at(',')) fail("expected ',' in commutator");
      ++pos_;
      Word y = parse_sequence();
      if (!at(']')) fail("expected ']'");
      ++pos_;
      return commutator(x, y);
    }
    if (c == '1' && (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return Word();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string id(text_.substr(start, pos_ - start));
      for (std::size_t g = 0; g < names_.size(); ++g) {
        if (names_[g] == id) return Word::generator(static_cast<std::uint32_t>(g));
      }
      pos_ = start;
      fail("unknown generator '" + id + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  long parse_int() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected integer exponent");
    return std::stol(digits);
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generator_names) {
  return WordParser(text, generator_names).parse();
}

Presentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string name;
  std::vector<std::string> gens;
  bool have_gens = false;
  std::vector<Word> rels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (keyword == "group") {
      std::istringstream rs(rest);
      rs >> name;
    } else if (keyword == "gens") {
      std::istringstream rs(rest);
      std::string id;
      while (rs >> id) {
        for (const auto& g : gens) {
          if (g == id) throw ParseError("duplicate generator '" + id + "' on line " + std::to_string(lineno));
        }
        gens.push_back(id);
      }
      have_gens = true;
    } else if (keyword == "rel") {
      if (!have_gens) throw ParseError("'rel' before 'gens' on line " + std::to_string(lineno));
      rels.push_back(parse_word(rest, gens));
    } else {
      throw ParseError("unknown keyword '" + keyword + "' on line " + std::to_string(lineno));
    }
  }
  if (!have_gens) throw ParseError("presentation has no 'gens' line");
  return Presentation(std::move(gens), std::move(rels), std::move(name));
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace stablab::fp
