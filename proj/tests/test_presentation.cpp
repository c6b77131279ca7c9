#include <doctest.h>

#include <random>

#include "spherescope/presentation.hpp"
#include "support/util.hpp"

using namespace spherescope;
using testutil::code_of;

namespace {

Word random_word(std::mt19937& rng, int alphabet, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, alphabet - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  Word w(static_cast<std::size_t>(len_dist(rng)));
  for (auto& l : w) l = Letter{gen_dist(rng), sign_dist(rng) ? +1 : -1};
  return w;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i].gen == w[i - 1].gen && w[i].sign == -w[i - 1].sign) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  if (w.size() >= 2 && w.front().gen == w.back().gen && w.front().sign == -w.back().sign)
    return false;
  return true;
}

}  // namespace

TEST_CASE("parse: commutator presentation") {
  Presentation p = parse_presentation("<x,y | x y x^-1 y^-1>");
  CHECK(p.generators == std::vector<std::string>{"x", "y"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 4);
  CHECK(p.relator_text[0] == "x y x^-1 y^-1");
}

TEST_CASE("parse: Heisenberg presentation has relator lengths 5,4,4") {
  Presentation p =
      parse_presentation("<x,y,z | x y x^-1 y^-1 z^-1, x z x^-1 z^-1, y z y^-1 z^-1>");
  CHECK(p.generators.size() == 3);
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0].size() == 5);
  CHECK(p.relators[1].size() == 4);
  CHECK(p.relators[2].size() == 4);
}

TEST_CASE("parse: free groups") {
  CHECK(parse_presentation("<x,y |>").relators.empty());
  CHECK(parse_presentation("<x,y>").relators.empty());
  CHECK(parse_presentation("< a >").generators == std::vector<std::string>{"a"});
}

TEST_CASE("parse: errors") {
  CHECK(code_of([] { parse_presentation("<x | y>"); }) == Errc::unknown_generator);
  CHECK(code_of([] { parse_presentation("<x | x x^-1>"); }) == Errc::empty_relator);
  CHECK(code_of([] { parse_presentation("<x,x | x>"); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_presentation("<x | x^2>"); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_presentation("<x | x^-2>"); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_presentation("<x | x"); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_presentation("x | x>"); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_presentation("<x | x> junk"); }) == Errc::syntax_error);
  CHECK(code_of([] { parse_presentation("<x | ,>"); }) == Errc::syntax_error);
}

TEST_CASE("parse: relators are stored cyclically reduced") {
  Presentation p = parse_presentation("<x,y | x x y x^-1 y^-1 x^-1>");
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 4);
  CHECK(is_cyclically_reduced(p.relators[0]));
  CHECK(p.relator_text[0] == "x x y x^-1 y^-1 x^-1");
}

TEST_CASE("reduce: examples") {
  Word w1{{0, +1}, {0, -1}, {1, +1}};  // x x^-1 y
  CHECK(reduce(w1, false) == Word{{1, +1}});

  Word w2{{0, +1}, {1, +1}, {0, -1}};  // x y x^-1
  CHECK(reduce(w2, false) == w2);
  CHECK(reduce(w2, true) == Word{{1, +1}});

  Word w3{{0, +1}, {0, -1}};  // x x^-1
  CHECK(reduce(w3, false).empty());
}

TEST_CASE("reduce: idempotent, length-monotone, parity-preserving") {
  std::mt19937 rng(20260808);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_word(rng, 3, 64);
    for (bool cyclic : {false, true}) {
      Word once = reduce(w, cyclic);
      CHECK(reduce(once, cyclic) == once);
      CHECK(once.size() <= w.size());
      CHECK((cyclic ? is_cyclically_reduced(once) : is_freely_reduced(once)));
    }
    CHECK(reduce(w, false).size() % 2 == w.size() % 2);
  }
}

TEST_CASE("theorem_radius: examples") {
  CHECK(theorem_radius(parse_presentation("<x,y | x y x^-1 y^-1>")) == 3);
  CHECK(theorem_radius(parse_presentation(
            "<x,y,z | x y x^-1 y^-1 z^-1, x z x^-1 z^-1, y z y^-1 z^-1>")) == 3);
  CHECK(code_of([] { theorem_radius(parse_presentation("<x,y |>")); }) == Errc::no_relators);
}

TEST_CASE("theorem_radius: smallest r with 2r beyond the longest relator") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Presentation p;
    p.generators = {"x", "y", "z"};
    int relators = 1 + trial % 4;
    for (int i = 0; i < relators; ++i) {
      Word w;
      while (w.size() < 2) w = reduce(random_word(rng, 3, 12), true);
      p.relators.push_back(w);
      p.relator_text.push_back("");
    }
    int r = theorem_radius(p);
    int max_w = max_relator_length(p);
    CHECK(2 * r > max_w);
    CHECK(2 * (r - 1) <= max_w);
  }
}

TEST_CASE("word_to_string formatting") {
  Presentation p = parse_presentation("<x,y | x y x^-1 y^-1>");
  CHECK(word_to_string(p.relators[0], p.generators) == "x y x^-1 y^-1");
  CHECK(word_to_string({}, p.generators) == "e");
}
