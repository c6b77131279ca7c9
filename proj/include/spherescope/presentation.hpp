#pragma once

#include <string>
#include <vector>

namespace spherescope {

// One letter of a word: index into the owning alphabet plus exponent sign.
struct Letter {
  int gen = 0;
  int sign = +1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Finite presentation < g1,...,gk | w1,...,wm >. Relators are kept freely
// and cyclically reduced; the text as written is retained for reporting.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::string> relator_text;
};

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word reduce(const Word& w, bool cyclic);

// Grammar: "<" gen ("," gen)* "|" word ("," word)* ">", a word being
// whitespace-separated letters `g` or `g^-1`. The relator list may be empty
// ("<a,b |>" or "<a,b>"), which denotes a free group.
Presentation parse_presentation(const std::string& text);
Presentation load_presentation_file(const std::string& path);

// Smallest r with 2r > max relator length, i.e. floor(max|w|/2) + 1.
int theorem_radius(const Presentation& p);

int max_relator_length(const Presentation& p);

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

}  // namespace spherescope
