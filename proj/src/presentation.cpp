#include "spherescope/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "spherescope/errors.hpp"

namespace spherescope {

namespace {

bool cancels(const Letter& a, const Letter& b) { return a.gen == b.gen && a.sign == -b.sign; }

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      fail(Errc::syntax_error, std::string("expected '") + c + "' at offset " + std::to_string(pos));
    ++pos;
  }
  std::string name() {
    skip_ws();
    if (pos >= text.size() || !is_name_start(text[pos]))
      fail(Errc::syntax_error, "expected generator name at offset " + std::to_string(pos));
    std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }
};

}  // namespace

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word out = free_reduce(w);
  while (out.size() >= 2 && cancels(out.front(), out.back())) {
    out.pop_back();
    out.erase(out.begin());
  }
  return out;
}

Word reduce(const Word& w, bool cyclic) { return cyclic ? cyclic_reduce(w) : free_reduce(w); }

Presentation parse_presentation(const std::string& text) {
  Cursor cur{text};
  Presentation p;
  std::unordered_map<std::string, int> index;

  cur.expect('<');
  for (;;) {
    std::string g = cur.name();
    if (index.count(g)) fail(Errc::syntax_error, "duplicate generator '" + g + "'");
    index.emplace(g, static_cast<int>(p.generators.size()));
    p.generators.push_back(g);
    char c = cur.peek();
    if (c == ',') {
      ++cur.pos;
      continue;
    }
    break;
  }

  char c = cur.peek();
  if (c == '|') {
    ++cur.pos;
    while (cur.peek() != '>') {
      Word w;
      std::string original;
      for (;;) {
        char d = cur.peek();
        if (d == ',' || d == '>' || d == '\0') break;
        std::size_t name_at = cur.pos;
        std::string g = cur.name();
        auto it = index.find(g);
        if (it == index.end())
          fail(Errc::unknown_generator, "'" + g + "' is not a declared generator");
        int sign = +1;
        // Exponents other than an explicit ^-1 are rejected on purpose:
        // relator lengths stay visible in the source text.
        if (cur.pos < text.size() && text[cur.pos] == '^') {
          ++cur.pos;
          if (text.compare(cur.pos, 2, "-1") != 0)
            fail(Errc::syntax_error, "only ^-1 exponents are supported (offset " +
                                         std::to_string(name_at) + ")");
          cur.pos += 2;
          sign = -1;
        }
        if (!original.empty()) original += ' ';
        original += g;
        if (sign < 0) original += "^-1";
        w.push_back(Letter{it->second, sign});
      }
      if (w.empty()) fail(Errc::syntax_error, "empty relator entry");
      Word reduced = cyclic_reduce(w);
      if (reduced.empty())
        fail(Errc::empty_relator, "relator '" + original + "' reduces to the empty word");
      p.relators.push_back(std::move(reduced));
      p.relator_text.push_back(original);
      if (cur.peek() == ',') ++cur.pos;
    }
  }
  cur.expect('>');
  if (!cur.at_end()) fail(Errc::syntax_error, "trailing input after '>'");
  return p;
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open presentation file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

int max_relator_length(const Presentation& p) {
  if (p.relators.empty()) fail(Errc::no_relators, "presentation has no relators");
  std::size_t m = 0;
  for (const Word& w : p.relators) m = std::max(m, w.size());
  return static_cast<int>(m);
}

int theorem_radius(const Presentation& p) {
  // smallest integer r with 2r > max|w|
  return max_relator_length(p) / 2 + 1;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "e";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += names.at(static_cast<std::size_t>(l.gen));
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace spherescope
