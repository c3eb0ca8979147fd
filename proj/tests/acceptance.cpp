// Acceptance criteria: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "plc/chambers.hpp"
#include "plc/errors.hpp"
#include "plc/lusztig_cone.hpp"
#include "plc/quivers.hpp"
#include "plc/rectangles.hpp"
#include "plc/regions.hpp"
#include "plc/verification.hpp"

using namespace plc;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

Outcome census() {
  const auto start = Clock::now();
  const auto w3 = enumerate_reduced_words(3).size();
  const auto c3 = commutation_classes(3).size();
  const auto c4 = commutation_classes(4).size();
  const double t = seconds_since(start);
  return {w3 == 16 && c3 == 8 && c4 == 62 && t < 1.0,
          "rank 3: " + std::to_string(w3) + " words, " + std::to_string(c3) + " classes; rank 4: " +
              std::to_string(c4) + " classes; " + fmt_seconds(t)};
}

Outcome lusztig_golden() {
  auto d = lusztig_cone(ReducedWord::parse("132132")).describe();
  std::sort(d.begin(), d.end());
  const std::vector<std::string> want{"c >= a+d", "c >= b+e", "d+e >= c+f"};
  return {d == want, "{" + join(d) + "}"};
}

Outcome chamber_golden() {
  std::multiset<std::vector<int>> got;
  std::vector<std::string> labels;
  for (const auto& s : chamber_sets(ReducedWord::parse("2343121324"))) {
    got.insert(s.members);
    labels.push_back(chamber_label(s.members, 4));
  }
  const std::multiset<std::vector<int>> want{{2, 5}, {2, 4, 5}, {2}, {2, 4}, {1, 2, 4, 5}, {1, 2, 4}};
  return {got == want, "{" + join(labels) + "}"};
}

Outcome quiver_golden() {
  const auto start = Clock::now();
  const std::vector<std::pair<std::vector<int>, std::string>> table{
      {{2, 5}, "RRL"}, {{2}, "--L"}, {{2, 4}, "LRL"}, {{1, 2, 4, 5}, "-R-"}, {{1, 2, 4}, "LR-"}, {{2, 4, 5}, "-RL"}};
  std::size_t rows = 0;
  for (const auto& [s, text] : table) rows += quiver_from_chamber_set(s, 4).to_string() == text;
  const auto big = quiver_from_chamber_set({1, 2, 3, 4, 7, 8, 11}, 13).to_string();
  const auto trip = check_quiver_round_trip(6);
  const double t = seconds_since(start);
  return {rows == table.size() && big == "--LRRLLRR---" && trip.pass && t < 1.0,
          std::to_string(rows) + "/6 table rows; rank 13 -> " + big + "; " + trip.actual + "; " + fmt_seconds(t)};
}

Outcome rectangle_golden() {
  const auto q = PartialQuiver::parse("-LLRRRLRR");
  const auto comps = components(q);
  const std::vector<std::pair<int, int>> want_ab{{7, 10}, {4, 8}, {3, 5}, {1, 4}};
  const std::vector<Rectangle> want_rect{{0, 7, 2, 9}, {3, 7, 7, 11}, {0, 3, 7, 10}, {2, 3, 10, 11}};
  bool ok = comps.size() == 4;
  std::vector<std::string> rects;
  for (std::size_t t = 0; ok && t < comps.size(); ++t) {
    ok = std::pair{comps[t].a, comps[t].b} == want_ab[t];
    const auto r = rectangle_for_component(comps[t], 10);
    rects.push_back(r.to_string());
    ok = ok && r == want_rect[t];
  }
  const auto cfg = configuration(q);
  const std::multiset<std::size_t> counts{1, 2, 3, 4};
  const bool diagonal = std::multiset<std::size_t>(cfg.u_counts.begin(), cfg.u_counts.end()) == counts &&
                        std::multiset<std::size_t>(cfg.w_counts.begin(), cfg.w_counts.end()) == counts &&
                        parity_boundary(cfg.u_counts).has_value() && parity_boundary(cfg.w_counts).has_value();
  std::vector<PositiveRoot> want_phi{{2, 2}, {1, 4}, {3, 6}, {7, 7},  {5, 9},   {6, 8},
                                     {4, 10}, {3, 3}, {1, 5}, {2, 7}, {10, 10}, {8, 9}};
  std::sort(want_phi.begin(), want_phi.end());
  const auto phi = phi_plus(q);
  return {ok && diagonal && phi == want_phi,
          "rectangles " + join(rects) + "; diagonals " + (diagonal ? "ok" : "wrong") + "; |Phi+| = " +
              std::to_string(phi.size()) + (phi == want_phi ? " (matches)" : " (differs)")};
}

Outcome atlas_counts(const RegionAtlas& a2, const RegionAtlas& a3, double t3, const RegionAtlas& a4, double t4) {
  const auto h2 = format_histogram(facet_histogram(a2));
  const auto h3 = format_histogram(facet_histogram(a3));
  const auto h4 = format_histogram(facet_histogram(a4));
  const bool pass = a2.regions.size() == 2 && a3.regions.size() == 10 && h3 == "{3:8, 4:2}" &&
                    a4.regions.size() == 144 && h4 == "{6:62, 7:70, 8:10, 11:2}" && t3 < 5.0 && t4 < 600.0;
  return {pass, "rank 2: " + std::to_string(a2.regions.size()) + " " + h2 + "; rank 3: " +
                    std::to_string(a3.regions.size()) + " " + h3 + " in " + fmt_seconds(t3) + "; rank 4: " +
                    std::to_string(a4.regions.size()) + " " + h4 + " in " + fmt_seconds(t4)};
}

Outcome class_region_bijection(const RegionAtlas& a4) {
  const auto b = match_spanned_regions(a4);
  bool six = true;
  std::set<std::size_t> distinct;
  for (const auto& m : b.matches) {
    if (!m.region) continue;
    distinct.insert(*m.region);
    six = six && a4.regions[*m.region].facet_count() == 6;
  }
  return {b.matches.size() == 62 && b.matched() == 62 && distinct.size() == 62 && six && b.degenerate == 0,
          std::to_string(b.matched()) + "/" + std::to_string(b.matches.size()) + " classes matched to " +
              std::to_string(distinct.size()) + " distinct " + (six ? "6-facet" : "mixed") + " regions"};
}

Outcome orthant_restriction(const RegionAtlas& a3) {
  const auto b = match_spanned_regions(a3);
  std::set<std::size_t> class_regions;
  for (const auto& m : b.matches) {
    if (m.region) class_regions.insert(*m.region);
  }
  std::size_t class_six = 0;
  std::vector<std::size_t> others;
  std::vector<std::size_t> pieces;
  for (const auto& o : orthant_restriction_analysis(a3)) {
    if (class_regions.count(o.region)) {
      class_six += o.restricted_facets == 6;
    } else {
      others.push_back(o.restricted_facets);
    }
  }
  std::sort(others.begin(), others.end());
  for (const auto& o : orthant_restriction_analysis(a3)) {
    if (!class_regions.count(o.region)) pieces.push_back(simplicial_decomposition(o.restricted).size());
  }
  std::sort(pieces.begin(), pieces.end());
  const bool pass = class_regions.size() == 8 && class_six == 8 && others == std::vector<std::size_t>{8, 9} &&
                    pieces == std::vector<std::size_t>{2, 4};
  std::string detail = std::to_string(class_six) + "/8 class regions with 6 facets; others:";
  for (std::size_t t = 0; t < others.size(); ++t) detail += " " + std::to_string(others[t]) + " facets";
  detail += "; decompositions:";
  for (auto p : pieces) detail += " " + std::to_string(p);
  return {pass, detail};
}

Outcome properties(const RegionAtlas& a2, const RegionAtlas& a3, const RegionAtlas& a4) {
  std::vector<CheckResult> checks;
  const RegionAtlas* atlases[] = {&a2, &a3, &a4};
  for (int n = 2; n <= 4; ++n) {
    checks.push_back(check_round_trip(n, 10000, 7000 + static_cast<std::uint64_t>(n)));
    checks.push_back(check_atlas_agreement(*atlases[n - 2], 10000, 8000 + static_cast<std::uint64_t>(n)));
  }
  checks.push_back(check_phi_disjoint(8));
  checks.push_back(check_chamber_sets_proper(4));
  std::size_t passed = 0;
  std::string failures;
  for (const auto& c : checks) {
    if (c.pass) ++passed;
    else failures += "; " + c.name + ": " + c.actual;
  }
  // Convexity certificates are issued while building the atlases; reaching
  // this point means every region of ranks 2..4 was certified.
  const std::size_t certified = a2.regions.size() + a3.regions.size() + a4.regions.size();
  return {passed == checks.size(), std::to_string(passed) + "/" + std::to_string(checks.size()) +
                                       " property checks; " + std::to_string(certified) + " regions certified convex" +
                                       failures};
}

Outcome path_independence() {
  std::vector<std::string> parts;
  bool pass = true;
  for (int n = 2; n <= 3; ++n) {
    const auto c = check_path_independence(n);
    pass = pass && c.pass;
    parts.push_back("rank " + std::to_string(n) + ": " + c.actual);
  }
  return {pass, join(parts)};
}

void report(int number, const std::string& name, const std::function<Outcome()>& run, int& failures) {
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", number, name.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  int failures = 0;
  report(1, "reduced-word census", census, failures);
  report(2, "Lusztig cone of 132132", lusztig_golden, failures);
  report(3, "chamber sets of 2343121324", chamber_golden, failures);
  report(4, "quiver bijection", quiver_golden, failures);
  report(5, "rectangle calculus, rank 10", rectangle_golden, failures);

  const RegionAtlas a2 = standard_atlas(2);
  auto start = Clock::now();
  const RegionAtlas a3 = standard_atlas(3);
  const double t3 = seconds_since(start);
  start = Clock::now();
  const RegionAtlas a4 = standard_atlas(4);
  const double t4 = seconds_since(start);

  report(6, "region atlas", [&] { return atlas_counts(a2, a3, t3, a4, t4); }, failures);
  report(7, "class-region bijection, rank 4", [&] { return class_region_bijection(a4); }, failures);
  report(8, "orthant restriction, rank 3", [&] { return orthant_restriction(a3); }, failures);
  report(9, "property suites", [&] { return properties(a2, a3, a4); }, failures);
  report(10, "path independence", path_independence, failures);
  return failures == 0 ? 0 : 1;
}
