#include <doctest.h>

#include <random>

#include "plc/lusztig_cone.hpp"
#include "plc/regions.hpp"

using namespace plc;

TEST_SUITE("regions") {
  TEST_CASE("braid move map") {
    CHECK(apply_braid(Vector{2, 5, 3}) == Vector{6, 2, 5});
    CHECK(apply_braid(Vector{3, 5, 2}) == Vector{5, 2, 6});
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(0, 20);
    for (int t = 0; t < 500; ++t) {
      const Vector v{d(rng), d(rng), d(rng)};
      CHECK(apply_braid(apply_braid(v)) == v);
    }
    const auto [lo, hi] = braid_move_map();
    CHECK(dot(lo.guard, Vector{1, 0, 2}) > 0);
    CHECK(dot(hi.guard, Vector{2, 0, 1}) > 0);
    CHECK(multiply(lo.map, Vector{2, 5, 3}) == Vector{6, 2, 5});
  }

  TEST_CASE("rank 2 atlas") {
    const auto atlas = standard_atlas(2);
    CHECK(atlas.regions.size() == 2);
    CHECK(facet_histogram(atlas) == std::map<std::size_t, std::size_t>{{1, 2}});
    for (const auto& r : atlas.regions) CHECK(std::abs(determinant(r.map).convert_to<double>()) == 1.0);
    const auto g = region_graph(atlas, false);
    CHECK(g.edges.size() == 1);
  }

  TEST_CASE("rank 3 atlas") {
    const auto atlas = standard_atlas(3);
    CHECK(atlas.regions.size() == 10);
    CHECK(facet_histogram(atlas) == std::map<std::size_t, std::size_t>{{3, 8}, {4, 2}});
    CHECK(atlas_equal(atlas, standard_atlas(3, PathStrategy::peel_back)));
    const auto report = match_spanned_regions(atlas);
    CHECK(report.is_bijection());
    CHECK(report.matched() == 8);
  }

  TEST_CASE("evaluation agrees with the atlas") {
    const auto atlas = standard_atlas(3);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(0, 30);
    for (int t = 0; t < 300; ++t) {
      Vector x(6);
      for (auto& c : x) c = d(rng);
      const auto y = evaluate(atlas.source, atlas.target, x);
      const auto hits = atlas.regions_containing(x);
      REQUIRE_FALSE(hits.empty());
      for (auto h : hits) CHECK(multiply(atlas.regions[h].map, x) == y);
    }
    CHECK(evaluate(atlas.source, atlas.target, zero_vector(6)) == zero_vector(6));
  }

  TEST_CASE("simplicial decomposition") {
    CHECK(simplicial_decomposition(HCone::orthant(4)).size() == 1);
    // A square cone over four rays needs two simplices.
    const VCone square{3, {Vector{1, 0, 1}, Vector{0, 1, 1}, Vector{-1, 0, 1}, Vector{0, -1, 1}}};
    CHECK(simplicial_decomposition(cone_from_rays(square)).size() == 2);
  }

  TEST_CASE("orthant restriction at rank 3") {
    const auto atlas = standard_atlas(3);
    const auto rows = orthant_restriction_analysis(atlas);
    CHECK(rows.size() == 10);
    for (const auto& r : rows) CHECK(r.restricted_facets >= 6);
  }
}
