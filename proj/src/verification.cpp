#include "plc/verification.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "plc/chambers.hpp"
#include "plc/errors.hpp"
#include "plc/lusztig_cone.hpp"
#include "plc/quivers.hpp"
#include "plc/rectangles.hpp"

namespace plc {

namespace {

CheckResult equal_check(std::string name, const std::string& expected, const std::string& actual) {
  return CheckResult{std::move(name), expected == actual, expected, actual, false};
}

CheckResult count_check(std::string name, std::size_t expected, std::size_t actual) {
  return equal_check(std::move(name), std::to_string(expected), std::to_string(actual));
}

Vector random_point(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> d(0, 30);
  Vector v(dim);
  for (auto& x : v) x = d(rng);
  return v;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::size_t> orthant_counts(const RegionAtlas& atlas) {
  std::vector<std::size_t> out;
  for (const auto& o : orthant_restriction_analysis(atlas)) out.push_back(o.restricted_facets);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_counts(const std::vector<std::size_t>& v) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(std::to_string(x));
  return "[" + join(s) + "]";
}

std::string lusztig_golden() {
  auto d = lusztig_cone(ReducedWord::parse("132132")).describe();
  std::sort(d.begin(), d.end());
  return "{" + join(d) + "}";
}

void add_atlas_checks(SuiteReport& rep, int rank, std::size_t regions, const std::string& histogram,
                      std::size_t classes) {
  const RegionAtlas atlas = standard_atlas(rank);
  rep.checks.push_back(count_check("regions of linearity", regions, atlas.regions.size()));
  rep.checks.push_back(equal_check("facet histogram", histogram, format_histogram(facet_histogram(atlas))));
  const BijectionReport b = match_spanned_regions(atlas);
  rep.checks.push_back(count_check("class-region matches", classes, b.is_bijection() ? b.matched() : 0));
  if (rank >= 3) {
    const auto g = region_graph(atlas, true);
    const auto iso = compare_graphs(class_graph(rank), g, b);
    rep.checks.push_back(CheckResult{"class graph vs minimal region graph", iso.isomorphic, "isomorphic",
                                     (iso.isomorphic ? "isomorphic, " : "not isomorphic, ") +
                                         std::to_string(iso.class_edges) + " / " + std::to_string(iso.region_edges) +
                                         " edges",
                                     true});
  }
  if (rank == 3) {
    rep.checks.push_back(
        equal_check("orthant restriction facets", "[6, 6, 6, 6, 6, 6, 6, 6, 8, 9]", format_counts(orthant_counts(atlas))));
    std::vector<std::string> pieces;
    for (const auto& o : orthant_restriction_analysis(atlas)) {
      if (o.facets > b.minimal_facets) {
        pieces.push_back(std::to_string(o.restricted_facets) + " facets: " +
                         std::to_string(simplicial_decomposition(o.restricted).size()) + " simplicial");
      }
    }
    std::sort(pieces.begin(), pieces.end());
    rep.checks.push_back(
        equal_check("minimal simplicial decompositions", "8 facets: 2 simplicial, 9 facets: 4 simplicial", join(pieces)));
  }
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass || c.informational; });
}

std::string format_histogram(const std::map<std::size_t, std::size_t>& h) {
  std::vector<std::string> parts;
  for (const auto& [f, c] : h) parts.push_back(std::to_string(f) + ":" + std::to_string(c));
  return "{" + join(parts) + "}";
}

CheckResult check_round_trip(int rank, std::size_t points, std::uint64_t seed) {
  const auto [j, jp] = standard_words(rank);
  const auto forward = find_move_path(j, jp);
  const auto backward = find_move_path(jp, j);
  std::mt19937_64 rng(seed);
  std::size_t good = 0;
  for (std::size_t t = 0; t < points; ++t) {
    const Vector x = random_point(rng, j.size());
    const Vector y = evaluate(j, forward, x);
    bool nonneg = std::all_of(y.begin(), y.end(), [](const Rational& v) { return sign(v) >= 0; });
    if (nonneg && evaluate(jp, backward, y) == x) ++good;
  }
  return CheckResult{"round trip rank " + std::to_string(rank), good == points, std::to_string(points) + " points",
                     std::to_string(good) + " points", false};
}

CheckResult check_atlas_agreement(const RegionAtlas& atlas, std::size_t points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t agree = 0, interior = 0, interior_unique = 0;
  for (std::size_t t = 0; t < points; ++t) {
    const Vector x = random_point(rng, atlas.dim());
    const Vector y = evaluate(atlas.source, atlas.path, x);
    std::size_t containing = 0, strict = 0;
    bool ok = true;
    for (const auto& r : atlas.regions) {
      if (!r.cone.contains(x)) continue;
      ++containing;
      if (r.cone.contains_strictly(x)) ++strict;
      if (multiply(r.map, x) != y) ok = false;
    }
    if (ok && containing > 0) ++agree;
    if (strict > 0) {
      ++interior;
      if (containing == 1) ++interior_unique;
    }
  }
  const bool pass = agree == points && interior == interior_unique;
  return CheckResult{"atlas agrees with evaluation rank " + std::to_string(atlas.source.rank()), pass,
                     std::to_string(points) + " points covered and agreeing",
                     std::to_string(agree) + " agreeing, " + std::to_string(interior_unique) + "/" +
                         std::to_string(interior) + " interior points in exactly one region",
                     false};
}

CheckResult check_phi_disjoint(int max_rank) {
  std::size_t total = 0, good = 0;
  std::string first_failure;
  for (int n = 2; n <= max_rank; ++n) {
    for (const auto& q : enumerate_partial_quivers(n)) {
      ++total;
      try {
        const auto cfg = configuration(q);
        if (cfg.columns_on_central_line == 0) ++good;
        else if (first_failure.empty()) first_failure = q.to_string() + ": root column on the central line";
      } catch (const std::exception& e) {
        if (first_failure.empty()) first_failure = q.to_string() + ": " + e.what();
      }
    }
  }
  return CheckResult{"Phi+ disjoint, ranks <= " + std::to_string(max_rank), good == total,
                     std::to_string(total) + " quivers",
                     std::to_string(good) + " quivers" + (first_failure.empty() ? "" : "; " + first_failure), false};
}

CheckResult check_chamber_sets_proper(int max_rank) {
  std::size_t words = 0, sets = 0, bad = 0;
  for (int n = 1; n <= max_rank; ++n) {
    for (const auto& w : enumerate_reduced_words(n)) {
      ++words;
      for (const auto& c : chamber_sets(w)) {
        ++sets;
        if (is_initial_subset(c.members, n) || is_terminal_subset(c.members, n)) ++bad;
      }
    }
  }
  return CheckResult{"chamber sets never initial/terminal, ranks <= " + std::to_string(max_rank), bad == 0,
                     "0 violations", std::to_string(bad) + " violations in " + std::to_string(sets) + " sets of " +
                                         std::to_string(words) + " words",
                     false};
}

CheckResult check_quiver_round_trip(int max_rank) {
  std::size_t checked = 0, bad = 0;
  for (int n = 2; n <= max_rank; ++n) {
    std::set<std::string> from_subsets;
    for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
      std::vector<int> s;
      for (int x = 1; x <= n + 1; ++x) {
        if (mask & (1u << (x - 1))) s.push_back(x);
      }
      if (is_initial_subset(s, n) || is_terminal_subset(s, n)) continue;
      ++checked;
      const auto q = quiver_from_chamber_set(s, n);
      if (chamber_set_from_quiver(q) != s) ++bad;
      from_subsets.insert(q.to_string());
    }
    const auto all = enumerate_partial_quivers(n);
    for (const auto& q : all) {
      ++checked;
      if (quiver_from_chamber_set(chamber_set_from_quiver(q), n) != q) ++bad;
    }
    if (from_subsets.size() != all.size()) ++bad;
  }
  return CheckResult{"quiver bijection round trip, ranks <= " + std::to_string(max_rank), bad == 0, "0 mismatches",
                     std::to_string(bad) + " mismatches in " + std::to_string(checked) + " cases", false};
}

CheckResult check_path_independence(int rank) {
  const auto [j, jp] = standard_words(rank);
  auto first = find_move_path(j, jp, PathStrategy::peel_front);
  auto second = find_move_path(j, jp, PathStrategy::peel_back);
  if (second == first) {
    // Only one minimal path: add a detour through a braid move and back.
    const Move detour = first.front();
    second.insert(second.begin(), {detour, detour});
  }
  const RegionAtlas a = transition_atlas(j, jp, first);
  const RegionAtlas b = transition_atlas(j, jp, second);
  const bool same = atlas_equal(a, b);
  return CheckResult{"path independence rank " + std::to_string(rank), same && first != second,
                     "identical atlases", (same ? "identical, " : "different, ") + std::to_string(a.regions.size()) +
                                              " regions via paths of " + std::to_string(first.size()) + " and " +
                                              std::to_string(second.size()) + " moves",
                     false};
}

SuiteReport run_suite(std::string_view name) {
  SuiteReport rep{std::string(name), {}};
  if (name == "a2") {
    rep.checks.push_back(count_check("reduced words", 2, enumerate_reduced_words(2).size()));
    rep.checks.push_back(count_check("commutation classes", 2, commutation_classes(2).size()));
    add_atlas_checks(rep, 2, 2, "{1:2}", 2);
  } else if (name == "a3") {
    rep.checks.push_back(count_check("reduced words", 16, enumerate_reduced_words(3).size()));
    rep.checks.push_back(count_check("commutation classes", 8, commutation_classes(3).size()));
    rep.checks.push_back(equal_check("Lusztig cone of 132132", "{c >= a+d, c >= b+e, d+e >= c+f}", lusztig_golden()));
    add_atlas_checks(rep, 3, 10, "{3:8, 4:2}", 8);
  } else if (name == "a4") {
    rep.checks.push_back(count_check("reduced words", 768, enumerate_reduced_words(4).size()));
    const auto classes = commutation_classes(4);
    rep.checks.push_back(count_check("commutation classes", 62, classes.size()));
    std::size_t simplicial = 0;
    for (const auto& c : classes) simplicial += spanning_rays(c.representative).rays.size() == 10;
    rep.checks.push_back(count_check("simplicial Lusztig cones", 62, simplicial));
    add_atlas_checks(rep, 4, 144, "{6:62, 7:70, 8:10, 11:2}", 62);
  } else if (name == "properties") {
    for (int n = 2; n <= 4; ++n) {
      rep.checks.push_back(check_round_trip(n, 10000, 1000 + static_cast<std::uint64_t>(n)));
      const std::string name = "convexity certificates rank " + std::to_string(n);
      try {
        const RegionAtlas atlas = standard_atlas(n);
        rep.checks.push_back(CheckResult{name, true, "every region certified",
                                         std::to_string(atlas.regions.size()) + " regions certified", false});
        rep.checks.push_back(check_atlas_agreement(atlas, 10000, 2000 + static_cast<std::uint64_t>(n)));
      } catch (const InvariantError& e) {
        rep.checks.push_back(CheckResult{name, false, "every region certified", e.what(), false});
      }
    }
    rep.checks.push_back(check_phi_disjoint(8));
    rep.checks.push_back(check_chamber_sets_proper(4));
    rep.checks.push_back(check_quiver_round_trip(6));
    for (int n = 2; n <= 3; ++n) rep.checks.push_back(check_path_independence(n));
  } else {
    throw DomainError("unknown verification suite '" + std::string(name) + "' (expected a2, a3, a4 or properties)");
  }
  return rep;
}

}  // namespace plc
