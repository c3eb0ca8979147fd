#include <doctest.h>

#include <algorithm>
#include <set>

#include "plc/chambers.hpp"

using namespace plc;

TEST_SUITE("chambers") {
  TEST_CASE("word 2343121324") {
    const auto sets = chamber_sets(ReducedWord::parse("2343121324"));
    std::set<std::vector<int>> got;
    for (const auto& s : sets) got.insert(s.members);
    const std::set<std::vector<int>> want{{2, 5}, {2, 4, 5}, {2}, {2, 4}, {1, 2, 4, 5}, {1, 2, 4}};
    CHECK(sets.size() == 6);
    CHECK(got == want);
    for (const auto& s : sets) {
      CHECK(s.open < s.close);
      CHECK(s.gap >= 1);
    }
  }

  TEST_CASE("count and shape over all words of rank <= 4") {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& w : enumerate_reduced_words(n)) {
        const auto sets = chamber_sets(w);
        CHECK(sets.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        for (const auto& s : sets) {
          CHECK_FALSE(is_initial_subset(s.members, n));
          CHECK_FALSE(is_terminal_subset(s.members, n));
          CHECK(std::is_sorted(s.members.begin(), s.members.end()));
        }
        for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1].close < sets[i].close);
      }
    }
  }

  TEST_CASE("initial and terminal subsets") {
    CHECK(is_initial_subset({}, 3));
    CHECK(is_initial_subset({1, 2}, 3));
    CHECK_FALSE(is_initial_subset({2}, 3));
    CHECK(is_terminal_subset({3, 4}, 3));
    CHECK_FALSE(is_terminal_subset({1, 4}, 3));
  }

  TEST_CASE("labels") {
    CHECK(chamber_label({2, 4, 5}, 4) == "245");
    CHECK(chamber_label({2, 10}, 10) == "2,10");
  }

  TEST_CASE("rendering is deterministic") {
    const auto w = ReducedWord::parse("2343121324");
    const auto ascii = render_wiring(w, RenderFormat::ascii);
    CHECK(ascii == render_wiring(w, RenderFormat::ascii));
    CHECK(ascii.find("245") != std::string::npos);
    const auto svg = render_wiring(w, RenderFormat::svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
  }
}
