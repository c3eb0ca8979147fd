#include "plc/regions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "plc/errors.hpp"
#include "plc/lp.hpp"
#include "plc/parallel.hpp"
#include "plc/rectangles.hpp"

namespace plc {

namespace {

struct Leaf {
  Matrix map;
  std::vector<Vector> constraints;
};

bool has_positive_multiple(const std::vector<Vector>& rows, const Vector& a) {
  return std::any_of(rows.begin(), rows.end(), [&](const Vector& r) { return positively_parallel(r, a); });
}

bool strictly_feasible(const std::vector<Vector>& rows, std::size_t dim) {
  std::vector<std::size_t> all(rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return lp_feasible(HCone{dim, rows, false}, all);
}

class BranchEnumerator {
 public:
  BranchEnumerator(std::size_t dim, const std::vector<Move>& path) : dim_(dim), path_(path) {}

  std::vector<Leaf> run() {
    descend(0, identity_matrix(dim_), {});
    return std::move(leaves_);
  }

 private:
  void descend(std::size_t step, Matrix map, std::vector<Vector> constraints) {
    while (step < path_.size() && path_[step].kind == MoveKind::commutation) {
      std::swap(map[path_[step].position], map[path_[step].position + 1]);
      ++step;
    }
    if (step == path_.size()) {
      leaves_.push_back(Leaf{std::move(map), std::move(constraints)});
      return;
    }
    const std::size_t p = path_[step].position;
    const Vector guard = subtract(map[p + 2], map[p]);  // c - a >= 0 on the a <= c branch
    bool low = true, high = true, split = false;
    if (is_zero(guard) || has_positive_multiple(constraints, guard)) {
      high = false;
    } else if (has_positive_multiple(constraints, negate(guard))) {
      low = false;
    } else {
      auto with = constraints;
      with.push_back(primitive(guard));
      if (!strictly_feasible(with, dim_)) {
        low = false;
      } else {
        with.back() = primitive(negate(guard));
        if (!strictly_feasible(with, dim_)) high = false;
        else split = true;
      }
    }
    if (low) {
      Matrix next = map;
      next[p] = subtract(add(map[p + 1], map[p + 2]), map[p]);
      next[p + 1] = map[p];
      next[p + 2] = map[p + 1];
      auto c = constraints;
      if (split) c.push_back(primitive(guard));
      descend(step + 1, std::move(next), std::move(c));
    }
    if (high) {
      Matrix next = map;
      next[p] = map[p + 1];
      next[p + 1] = map[p + 2];
      next[p + 2] = subtract(add(map[p], map[p + 1]), map[p + 2]);
      if (split) constraints.push_back(primitive(negate(guard)));
      descend(step + 1, std::move(next), std::move(constraints));
    }
  }

  std::size_t dim_;
  const std::vector<Move>& path_;
  std::vector<Leaf> leaves_;
};

std::vector<Vector> dedupe_rows(std::vector<Vector> rows) {
  for (auto& r : rows) r = primitive(r);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

bool cells_disjoint(const HCone& a, const HCone& b) {
  for (const auto& r : a.ineqs) {
    if (has_positive_multiple(b.ineqs, negate(r))) return true;
  }
  return !interiors_meet(a, b);
}

std::string describe_cell(const HCone& c) {
  std::string s;
  for (const auto& r : c.ineqs) s += " " + to_string(r);
  return s;
}

}  // namespace

std::pair<BraidBranch, BraidBranch> braid_move_map() {
  BraidBranch low{{-1, 0, 1}, {{-1, 1, 1}, {1, 0, 0}, {0, 1, 0}}};
  BraidBranch high{{1, 0, -1}, {{0, 1, 0}, {0, 0, 1}, {1, 1, -1}}};
  return {low, high};
}

Vector apply_braid(const Vector& t) {
  if (t.size() != 3) throw DomainError("braid move acts on triples");
  const Rational m = t[0] < t[2] ? t[0] : t[2];
  return Vector{t[1] + t[2] - m, m, t[0] + t[1] - m};
}

std::vector<std::size_t> RegionAtlas::regions_containing(const Vector& point) const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (regions[r].cone.contains(point)) out.push_back(r);
  }
  return out;
}

RegionAtlas transition_atlas(const ReducedWord& src, const ReducedWord& dst, std::optional<std::vector<Move>> path) {
  if (src.rank() != dst.rank()) throw DomainError("words have different ranks");
  std::vector<Move> moves = path ? std::move(*path) : find_move_path(src, dst);
  {
    ReducedWord w = src;
    for (const Move& m : moves) w = apply_move(w, m);
    if (w != dst) throw DomainError("move path does not reach " + dst.to_string());
  }
  const std::size_t k = src.size();
  const std::size_t lp_before = lp::solve_count();

  std::vector<Leaf> leaves = BranchEnumerator(k, moves).run();
  if (leaves.empty()) throw InvariantError("branch enumeration produced no cells");

  std::map<Matrix, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < leaves.size(); ++i) groups[leaves[i].map].push_back(i);

  std::vector<HCone> cell_cones;
  cell_cones.reserve(leaves.size());
  for (const auto& leaf : leaves) cell_cones.push_back(HCone{k, dedupe_rows(leaf.constraints), false});

  RegionAtlas atlas{src, dst, moves, {}, {}, 0};
  std::vector<const std::pair<const Matrix, std::vector<std::size_t>>*> ordered;
  for (const auto& g : groups) ordered.push_back(&g);
  atlas.regions.resize(ordered.size());
  std::vector<std::size_t> cell_region(leaves.size());
  for (std::size_t r = 0; r < ordered.size(); ++r) {
    for (std::size_t c : ordered[r]->second) cell_region[c] = r;
  }

  parallel_for(ordered.size(), [&](std::size_t r) {
    const Matrix& map = ordered[r]->first;
    const auto& members = ordered[r]->second;
    const Rational det = determinant(map);
    if (det != 1 && det != -1) throw InvariantError("linear piece is not unimodular");
    HCone candidate{k, {}, false};
    if (members.size() == 1) {
      candidate = cell_cones[members[0]];
    } else {
      // Inequalities of member cells valid on every member cell.
      std::vector<Vector> rows;
      for (std::size_t c : members) rows.insert(rows.end(), cell_cones[c].ineqs.begin(), cell_cones[c].ineqs.end());
      for (const auto& a : dedupe_rows(std::move(rows))) {
        bool valid = true;
        for (std::size_t c : members) {
          if (has_positive_multiple(cell_cones[c].ineqs, a)) continue;
          if (!implies(cell_cones[c], a)) {
            valid = false;
            break;
          }
        }
        if (valid) candidate.ineqs.push_back(a);
      }
      // The cells tile space, so the hull equals the union iff no foreign
      // cell reaches into it.
      for (std::size_t other = 0; other < leaves.size(); ++other) {
        if (cell_region[other] == r) continue;
        if (!cells_disjoint(candidate, cell_cones[other])) {
          throw InvariantError("region of linearity is not convex: hull of cells" +
                               describe_cell(cell_cones[members[0]]) + " ... meets cell" +
                               describe_cell(cell_cones[other]));
        }
      }
    }
    atlas.regions[r] = Region{map, irredundant_h(candidate), members.size()};
  });

  for (std::size_t c = 0; c < leaves.size(); ++c) atlas.cells.push_back(Cell{cell_cones[c], cell_region[c]});
  atlas.lp_solves = lp::solve_count() - lp_before;
  return atlas;
}

RegionAtlas standard_atlas(int rank, PathStrategy strategy) {
  const auto [j, jp] = standard_words(rank);
  return transition_atlas(j, jp, find_move_path(j, jp, strategy));
}

std::map<std::size_t, std::size_t> facet_histogram(const RegionAtlas& atlas) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& r : atlas.regions) ++h[r.facet_count()];
  return h;
}

Vector evaluate(const ReducedWord& src, const std::vector<Move>& path, const Vector& point) {
  if (point.size() != src.size()) throw DomainError("point dimension does not match the word length");
  Vector y = point;
  for (const Move& m : path) {
    const std::size_t p = m.position;
    if (m.kind == MoveKind::commutation) {
      std::swap(y[p], y[p + 1]);
    } else {
      const Vector t = apply_braid(Vector{y[p], y[p + 1], y[p + 2]});
      y[p] = t[0];
      y[p + 1] = t[1];
      y[p + 2] = t[2];
    }
  }
  return y;
}

Vector evaluate(const ReducedWord& src, const ReducedWord& dst, const Vector& point) {
  return evaluate(src, find_move_path(src, dst), point);
}

bool atlas_equal(const RegionAtlas& a, const RegionAtlas& b) {
  if (a.regions.size() != b.regions.size()) return false;
  for (std::size_t r = 0; r < a.regions.size(); ++r) {
    if (a.regions[r].map != b.regions[r].map) return false;
    if (a.regions[r].cone.ineqs != b.regions[r].cone.ineqs && !cone_equal(a.regions[r].cone, b.regions[r].cone)) {
      return false;
    }
  }
  return true;
}

std::size_t BijectionReport::matched() const {
  return static_cast<std::size_t>(
      std::count_if(matches.begin(), matches.end(), [](const ClassRegionMatch& m) { return m.region.has_value(); }));
}

bool BijectionReport::is_bijection() const {
  if (matched() != matches.size()) return false;
  std::set<std::size_t> hit;
  for (const auto& m : matches) hit.insert(*m.region);
  if (hit.size() != matches.size()) return false;
  const std::set<std::size_t> minimal(minimal_regions.begin(), minimal_regions.end());
  return hit == minimal;
}

BijectionReport match_spanned_regions(const RegionAtlas& atlas) {
  const int rank = atlas.source.rank();
  if (atlas.source != standard_words(rank).first) {
    throw DomainError("class-region matching needs the atlas of the standard word");
  }
  BijectionReport report;
  report.rank = rank;
  const std::size_t k = atlas.dim();
  report.minimal_facets = atlas.regions.front().facet_count();
  for (const auto& r : atlas.regions) report.minimal_facets = std::min(report.minimal_facets, r.facet_count());
  for (std::size_t r = 0; r < atlas.regions.size(); ++r) {
    if (atlas.regions[r].facet_count() == report.minimal_facets) report.minimal_regions.push_back(r);
  }

  // Extreme rays of each closed region within the orthant.
  std::vector<std::vector<Vector>> region_rays(atlas.regions.size());
  parallel_for(atlas.regions.size(), [&](std::size_t r) {
    region_rays[r] = extreme_rays(irredundant_h(intersect(atlas.regions[r].cone, HCone::orthant(k)))).rays;
  });
  std::map<std::vector<Vector>, std::size_t> by_rays;
  for (std::size_t r = 0; r < region_rays.size(); ++r) by_rays.emplace(region_rays[r], r);

  for (const auto& cls : commutation_classes(rank)) {
    ClassRegionMatch m{cls.representative, spanning_vectors(cls.representative), std::nullopt, std::nullopt};
    std::vector<Vector> gens;
    for (const auto& v : m.generators) {
      if (!is_zero(v)) gens.push_back(v);
    }
    if (gens.empty() || plc::rank(gens) < k) {
      ++report.degenerate;
    } else {
      const auto rays = extreme_rays(cone_from_rays(VCone{k, gens})).rays;
      if (auto it = by_rays.find(rays); it != by_rays.end()) m.region = it->second;
    }
    if (!m.region) {
      std::size_t best = 0;
      for (std::size_t r = 0; r < region_rays.size(); ++r) {
        std::size_t shared = 0;
        for (const auto& v : gens) shared += std::count(region_rays[r].begin(), region_rays[r].end(), primitive(v));
        if (!m.nearest || shared > best) {
          best = shared;
          m.nearest = r;
        }
      }
    }
    report.matches.push_back(std::move(m));
  }
  return report;
}

std::vector<OrthantRestriction> orthant_restriction_analysis(const RegionAtlas& atlas) {
  std::vector<OrthantRestriction> out(atlas.regions.size());
  parallel_for(atlas.regions.size(), [&](std::size_t r) {
    const Region& region = atlas.regions[r];
    HCone restricted = irredundant_h(intersect(region.cone, HCone::orthant(atlas.dim())));
    out[r] = OrthantRestriction{r, region.facet_count(), restricted.ineqs.size(), std::move(restricted)};
  });
  return out;
}

namespace {

std::vector<std::size_t> facet_rows(const HCone& h) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.ineqs.size(); ++i) {
    if (std::find(h.ineqs.begin(), h.ineqs.end(), negate(h.ineqs[i])) == h.ineqs.end()) out.push_back(i);
  }
  return out;
}

/// Pulling triangulation of cone(rays), whose linear span has dimension d.
void pull(const std::vector<Vector>& rays, std::size_t d, std::size_t dim, std::vector<std::vector<Vector>>& out) {
  if (rays.size() == d) {
    out.push_back(rays);
    return;
  }
  const Vector& apex = rays.front();
  const HCone h = cone_from_rays(VCone{dim, rays});
  for (std::size_t i : facet_rows(h)) {
    const Vector& a = h.ineqs[i];
    if (sign(dot(a, apex)) == 0) continue;
    std::vector<Vector> face;
    for (const auto& r : rays) {
      if (sign(dot(a, r)) == 0) face.push_back(r);
    }
    std::vector<std::vector<Vector>> sub;
    pull(face, d - 1, dim, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<VCone> simplicial_decomposition(const HCone& cone) {
  const std::size_t k = cone.dim;
  const HCone h = irredundant_h(cone);
  const std::vector<Vector> rays = extreme_rays(h).rays;
  if (rays.size() == k) return {VCone{k, rays}};

  // A functional positive on every ray; simplex volumes are measured on the
  // slice c . x = 1.
  const auto c = interior_point(HCone{k, rays, false});
  if (!c) throw InvariantError("simplicial_decomposition: cone is not pointed");
  auto volume = [&](const std::vector<Vector>& s) {
    Rational v = abs(determinant(s));
    for (const auto& r : s) v /= dot(*c, r);
    return v;
  };

  std::vector<std::vector<Vector>> pulled;
  pull(rays, k, k, pulled);
  Rational total = 0;
  for (const auto& s : pulled) total += volume(s);

  struct Candidate {
    std::vector<Vector> rays;
    Rational volume;
    HCone h;
  };
  std::vector<Candidate> candidates;
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
    if (depth == k) {
      std::vector<Vector> s;
      for (std::size_t i : pick) s.push_back(rays[i]);
      if (sign(determinant(s)) == 0) return;
      const Rational v = volume(s);
      candidates.push_back(Candidate{s, v, cone_from_rays(VCone{k, s})});
      return;
    }
    for (std::size_t i = from; i + (k - depth) <= rays.size(); ++i) {
      pick[depth] = i;
      choose(depth + 1, i + 1);
    }
  };
  choose(0, 0);

  std::map<std::pair<std::size_t, std::size_t>, bool> disjoint_cache;
  auto disjoint = [&](std::size_t a, std::size_t b) {
    auto key = std::minmax(a, b);
    auto it = disjoint_cache.find(key);
    if (it != disjoint_cache.end()) return it->second;
    const bool d = !interiors_meet(candidates[a].h, candidates[b].h);
    disjoint_cache.emplace(key, d);
    return d;
  };

  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, std::size_t, const Rational&)> search = [&](std::size_t target, std::size_t from,
                                                                               const Rational& sum) {
    if (chosen.size() == target) return sum == total;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Rational next = sum + candidates[i].volume;
      if (next > total) continue;
      bool ok = true;
      for (std::size_t j : chosen) {
        if (!disjoint(i, j)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      if (search(target, i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t target = 1; target <= pulled.size(); ++target) {
    chosen.clear();
    if (search(target, 0, Rational(0))) {
      std::vector<VCone> out;
      for (std::size_t i : chosen) out.push_back(VCone{k, candidates[i].rays});
      return out;
    }
  }
  std::vector<VCone> out;
  for (auto& s : pulled) out.push_back(VCone{k, std::move(s)});
  return out;
}

RegionGraph region_graph(const RegionAtlas& atlas, bool minimal_only) {
  RegionGraph g;
  std::size_t minimal = atlas.regions.front().facet_count();
  for (const auto& r : atlas.regions) minimal = std::min(minimal, r.facet_count());
  for (std::size_t r = 0; r < atlas.regions.size(); ++r) {
    if (!minimal_only || atlas.regions[r].facet_count() == minimal) g.vertices.push_back(r);
  }
  const std::size_t k = atlas.dim();
  for (std::size_t x = 0; x < g.vertices.size(); ++x) {
    for (std::size_t y = x + 1; y < g.vertices.size(); ++y) {
      const HCone& A = atlas.regions[g.vertices[x]].cone;
      const HCone& B = atlas.regions[g.vertices[y]].cone;
      for (const auto& a : A.ineqs) {
        const Vector na = negate(a);
        if (std::find(B.ineqs.begin(), B.ineqs.end(), na) == B.ineqs.end()) continue;
        HCone wall{k, {}, false};
        std::vector<std::size_t> strict;
        for (const auto& r : A.ineqs) {
          if (r == a) continue;
          strict.push_back(wall.ineqs.size());
          wall.ineqs.push_back(r);
        }
        for (const auto& r : B.ineqs) {
          if (r == na) continue;
          strict.push_back(wall.ineqs.size());
          wall.ineqs.push_back(r);
        }
        wall.ineqs.push_back(a);
        wall.ineqs.push_back(na);
        if (lp_feasible(wall, strict)) {
          g.edges.push_back({x, y});
          break;
        }
      }
    }
  }
  return g;
}

IsomorphismReport compare_graphs(const ClassGraph& classes, const RegionGraph& regions,
                                 const BijectionReport& matching) {
  IsomorphismReport rep;
  rep.class_edges = classes.edges.size();
  rep.region_edges = regions.edges.size();
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < regions.vertices.size(); ++i) position[regions.vertices[i]] = i;
  std::set<std::pair<std::size_t, std::size_t>> region_edges(regions.edges.begin(), regions.edges.end());
  for (const auto& [a, b] : classes.edges) {
    if (a >= matching.matches.size() || b >= matching.matches.size()) continue;
    const auto& ra = matching.matches[a].region;
    const auto& rb = matching.matches[b].region;
    if (!ra || !rb || !position.count(*ra) || !position.count(*rb)) continue;
    const auto e = std::minmax(position[*ra], position[*rb]);
    if (region_edges.count(e)) ++rep.preserved;
  }
  rep.isomorphic = matching.is_bijection() && classes.vertices.size() == regions.vertices.size() &&
                   rep.class_edges == rep.region_edges && rep.preserved == rep.class_edges;
  return rep;
}

}  // namespace plc
