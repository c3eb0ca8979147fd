#include <doctest.h>

#include <algorithm>
#include <set>

#include "plc/chambers.hpp"
#include "plc/errors.hpp"
#include "plc/quivers.hpp"

using namespace plc;

TEST_SUITE("quivers") {
  TEST_CASE("rank 4 chamber-set table") {
    const std::vector<std::pair<std::vector<int>, std::string>> table{
        {{2, 5}, "RRL"}, {{2}, "--L"}, {{2, 4}, "LRL"}, {{1, 2, 4, 5}, "-R-"}, {{1, 2, 4}, "LR-"}, {{2, 4, 5}, "-RL"}};
    for (const auto& [s, text] : table) {
      CHECK(quiver_from_chamber_set(s, 4).to_string() == text);
      CHECK(chamber_set_from_quiver(PartialQuiver::parse(text)) == s);
    }
    std::set<std::string> got;
    for (const auto& q : quivers_for_word(ReducedWord::parse("2343121324"))) got.insert(q.to_string());
    CHECK(got == std::set<std::string>{"RRL", "-RL", "--L", "LRL", "-R-", "LR-"});
  }

  TEST_CASE("rank 13 example") {
    CHECK(quiver_from_chamber_set({1, 2, 3, 4, 7, 8, 11}, 13).to_string() == "--LRRLLRR---");
  }

  TEST_CASE("counts") {
    const std::vector<std::size_t> want{2, 8, 22, 52};
    for (int n = 2; n <= 5; ++n) {
      CHECK(enumerate_partial_quivers(n).size() == want[static_cast<std::size_t>(n - 2)]);
      CHECK(partial_quiver_count_formula(n) == want[static_cast<std::size_t>(n - 2)]);
    }
    for (int n = 6; n <= 9; ++n) CHECK(enumerate_partial_quivers(n).size() == partial_quiver_count_formula(n));
  }

  TEST_CASE("rank 4 list") {
    std::set<std::string> got;
    for (const auto& q : enumerate_partial_quivers(4)) got.insert(q.to_string());
    const std::set<std::string> want{"L--", "R--", "-L-", "-R-", "--L", "--R", "LL-", "LR-", "RL-", "RR-", "-LL",
                                     "-LR", "-RL", "-RR", "LLL", "LLR", "LRL", "LRR", "RLL", "RLR", "RRL", "RRR"};
    CHECK(got == want);
  }

  TEST_CASE("round trip over every chamber set, ranks <= 6") {
    for (int n = 2; n <= 6; ++n) {
      const int top = n + 1;
      std::size_t seen = 0;
      for (unsigned mask = 0; mask < (1u << top); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < top; ++b) {
          if (mask & (1u << b)) s.push_back(b + 1);
        }
        if (is_initial_subset(s, n) || is_terminal_subset(s, n)) {
          CHECK_THROWS_AS(quiver_from_chamber_set(s, n), DomainError);
          continue;
        }
        const auto q = quiver_from_chamber_set(s, n);
        CHECK(chamber_set_from_quiver(q) == s);
        ++seen;
      }
      CHECK(seen == enumerate_partial_quivers(n).size());
      for (const auto& q : enumerate_partial_quivers(n)) {
        CHECK(quiver_from_chamber_set(chamber_set_from_quiver(q), n) == q);
      }
    }
  }

  TEST_CASE("parsing") {
    const auto q = PartialQuiver::parse("-LLRRRLRR");
    CHECK(q.rank() == 10);
    CHECK(q.rightmost_edge() == 2);
    CHECK(q.leftmost_edge() == 9);
    CHECK(q.label(10) == Arrow::none);
    CHECK(q.label(9) == Arrow::left);
    CHECK(PartialQuiver::parse("\xE2\x88\x92LL").to_string() == "-LL");
    CHECK_THROWS_AS(PartialQuiver::parse("---"), DomainError);
    CHECK_THROWS_AS(PartialQuiver::parse("L-L"), DomainError);
    CHECK_THROWS_AS(PartialQuiver::parse("LXR"), DomainError);
    CHECK_THROWS_AS(PartialQuiver::parse(""), DomainError);
  }
}
