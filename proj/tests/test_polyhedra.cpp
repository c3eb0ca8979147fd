#include <doctest.h>

#include <algorithm>
#include <random>

#include "plc/polyhedra.hpp"

using namespace plc;

namespace {

Vector cross(const Vector& a, const Vector& b) {
  return Vector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Fourier-Motzkin style oracle in R^3: the extreme rays of a pointed,
/// full-dimensional cone are the feasible cross products of row pairs.
std::vector<Vector> rays_by_hand(const std::vector<Vector>& rows) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const Vector c = cross(rows[i], rows[j]);
      if (is_zero(c)) continue;
      for (const Vector& r : {c, negate(c)}) {
        bool ok = true;
        for (const auto& a : rows) ok = ok && sign(dot(a, r)) >= 0;
        if (ok) out.push_back(primitive(r));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Distinct rows tight on two extreme rays: the facets in R^3.
std::size_t facets_by_hand(const std::vector<Vector>& rows, const std::vector<Vector>& rays) {
  std::vector<Vector> facets;
  for (const auto& a : rows) {
    std::size_t tight = 0;
    for (const auto& r : rays) tight += sign(dot(a, r)) == 0;
    if (tight >= 2) facets.push_back(primitive(a));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return facets.size();
}

}  // namespace

TEST_SUITE("polyhedra") {
  TEST_CASE("orthant rays and facets") {
    const auto rays = extreme_rays(HCone::orthant(4));
    CHECK(rays.rays.size() == 4);
    CHECK(irredundant_h(HCone::orthant(4)).facet_count() == 4);
  }

  TEST_CASE("redundant rows are removed") {
    HCone c{2, {{1, 0}, {0, 1}, {1, 1}, {2, 0}}, false};
    const auto h = irredundant_h(c);
    CHECK(h.facet_count() == 2);
    CHECK(cone_equal(h, c));
  }

  TEST_CASE("degenerate and non-pointed cones are reported") {
    CHECK_THROWS_AS(irredundant_h(HCone{2, {{1, 0}, {-1, 0}}, false}), DegenerateCone);
    try {
      extreme_rays(HCone{3, {{1, 0, 0}}, false});
      FAIL("expected NotPointed");
    } catch (const NotPointed& e) {
      CHECK(sign(e.line()[0]) == 0);
    }
  }

  TEST_CASE("extreme rays agree with the cross-product oracle") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3), count(1, 5);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Vector> rows = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
      const int m = count(rng);
      for (int i = 0; i < m; ++i) rows.push_back(Vector{coef(rng), coef(rng), coef(rng)});
      const HCone c{3, rows, false};
      if (!is_full_dimensional(c)) continue;
      ++checked;
      CHECK(extreme_rays(c).rays == rays_by_hand(rows));
      // A facet row is tight on at least two extreme rays.
      CHECK(irredundant_h(c).facet_count() == facets_by_hand(rows, rays_by_hand(rows)));
    }
    CHECK(checked > 100);
  }

  TEST_CASE("cone_from_rays inverts extreme_rays") {
    const HCone c{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, -1}}, false};
    const auto v = extreme_rays(c);
    CHECK(cone_equal(cone_from_rays(v), c));
    CHECK(cone_equal(v, c));
  }

  TEST_CASE("lower-dimensional hulls carry their equalities") {
    const VCone v{3, {{1, 0, 0}, {0, 1, 0}}};
    const auto h = cone_from_rays(v);
    CHECK(h.contains(Vector{2, 3, 0}));
    CHECK_FALSE(h.contains(Vector{2, 3, 1}));
    CHECK_FALSE(h.contains(Vector{-1, 3, 0}));
  }

  TEST_CASE("interiors and containment") {
    const HCone a{2, {{1, 0}, {0, 1}}, false};
    const HCone b{2, {{1, -1}, {0, 1}}, false};
    const HCone c{2, {{-1, 1}, {1, 0}}, false};
    CHECK(contains(a, b));
    CHECK_FALSE(contains(b, a));
    CHECK(interiors_meet(a, b));
    CHECK_FALSE(interiors_meet(b, c));
    CHECK(implies(b, Vector{1, 0}));
    CHECK_FALSE(implies(a, Vector{1, -1}));
  }
}
