#include <doctest.h>

#include <algorithm>

#include "plc/errors.hpp"
#include "plc/lusztig_cone.hpp"

using namespace plc;

TEST_SUITE("lusztig_cone") {
  TEST_CASE("word 132132") {
    auto d = lusztig_cone(ReducedWord::parse("132132")).describe();
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<std::string>{"c >= a+d", "c >= b+e", "d+e >= c+f"});
  }

  TEST_CASE("rank 2 cones") {
    const auto c = lusztig_cone(ReducedWord::parse("121"));
    CHECK(c.describe() == std::vector<std::string>{"b >= a+c"});
    CHECK(c.contains(Vector{1, 3, 2}));
    CHECK_FALSE(c.contains(Vector{2, 3, 2}));
    CHECK(spanning_rays(ReducedWord::parse("121")).rays.size() == 3);
  }

  TEST_CASE("k - n inequalities") {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& c : commutation_classes(n)) {
        CHECK(lusztig_cone(c.representative).inequalities().size() == longest_length(n) - static_cast<std::size_t>(n));
      }
    }
  }

  TEST_CASE("rank 4 cones are simplicial") {
    for (const auto& c : commutation_classes(4)) CHECK(spanning_rays(c.representative).rays.size() == 10);
  }

  TEST_CASE("commutation moves transport the cone") {
    for (const auto& w : enumerate_reduced_words(4)) {
      for (const auto& m : legal_moves(w)) {
        if (m.kind != MoveKind::commutation) continue;
        const auto perm = transport_under_commutation(w, m);
        const auto moved = lusztig_cone(apply_move(w, m)).cone();
        CHECK(cone_equal(permute_coordinates(lusztig_cone(w).cone(), perm), moved));
      }
    }
    const auto w = ReducedWord::parse("121");
    CHECK_THROWS_AS(transport_under_commutation(w, Move{MoveKind::braid, 0}), DomainError);
  }

  TEST_CASE("coordinate names") {
    CHECK(coordinate_name(0, 6) == "a");
    CHECK(coordinate_name(5, 6) == "f");
    CHECK(coordinate_name(0, 28) == "x1");
  }
}
