#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plc/polyhedra.hpp"
#include "plc/rational.hpp"
#include "plc/weyl_words.hpp"

/// The piecewise-linear transition map between the Lusztig parametrizations
/// of two reduced words, as an atlas of linear pieces.
namespace plc {

/// One branch of the braid-move map on a triple (a, b, c): the guard
/// half-space, as a row over (a, b, c), and the image matrix.
struct BraidBranch {
  Vector guard;
  Matrix map;
};

/// (a,b,c) -> (b+c-min(a,c), min(a,c), a+b-min(a,c)); branch 0 has guard
/// a <= c, branch 1 has guard a >= c.
std::pair<BraidBranch, BraidBranch> braid_move_map();

/// Exact evaluation of a single braid move.
Vector apply_braid(const Vector& triple);

struct Region {
  /// The linear piece: y = map * x.
  Matrix map;
  /// Irredundant H-description of the closed region.
  HCone cone;
  /// Number of full-dimensional branch cells merged into this region.
  std::size_t cells = 0;

  std::size_t facet_count() const { return cone.ineqs.size(); }
};

/// A leaf of the branch enumeration.
struct Cell {
  HCone cone;
  /// Index into RegionAtlas::regions.
  std::size_t region = 0;
};

struct RegionAtlas {
  ReducedWord source;
  ReducedWord target;
  std::vector<Move> path;
  /// Sorted lexicographically by matrix.
  std::vector<Region> regions;
  std::vector<Cell> cells;
  /// LPs solved while building (diagnostic).
  std::size_t lp_solves = 0;

  std::size_t dim() const { return source.size(); }
  /// Indices of the closed regions containing the point.
  std::vector<std::size_t> regions_containing(const Vector& point) const;
};

/// Enumerates branch choices along the path (find_move_path if not given),
/// prunes empty cells by exact LP, merges cells sharing a matrix, certifies
/// that every merged region is convex and every map unimodular. Throws
/// InvariantError on a failed certificate.
RegionAtlas transition_atlas(const ReducedWord& src, const ReducedWord& dst,
                             std::optional<std::vector<Move>> path = std::nullopt);

/// Atlas from the standard word j to j'.
RegionAtlas standard_atlas(int rank, PathStrategy strategy = PathStrategy::peel_front);

/// facet count -> number of regions.
std::map<std::size_t, std::size_t> facet_histogram(const RegionAtlas& atlas);

/// Branch-free evaluation of the transition map along the path.
Vector evaluate(const ReducedWord& src, const std::vector<Move>& path, const Vector& point);
Vector evaluate(const ReducedWord& src, const ReducedWord& dst, const Vector& point);

/// Same regions (maps and cones) in the same order.
bool atlas_equal(const RegionAtlas& a, const RegionAtlas& b);

struct ClassRegionMatch {
  ReducedWord representative;
  /// Spanning vectors v_P and v_1..v_n of the class.
  std::vector<Vector> generators;
  std::optional<std::size_t> region;
  /// Region sharing the most extreme rays when there is no match.
  std::optional<std::size_t> nearest;
};

struct BijectionReport {
  int rank = 0;
  std::size_t minimal_facets = 0;
  std::vector<std::size_t> minimal_regions;
  std::vector<ClassRegionMatch> matches;
  /// Classes whose generators are not k independent vectors.
  std::size_t degenerate = 0;

  std::size_t matched() const;
  /// Every class matched, matches pairwise distinct, every matched region of
  /// minimal facet count, and every minimal region hit.
  bool is_bijection() const;
};

/// For each commutation class, compares cone(v_P, v_gen) with the closed
/// regions intersected with the non-negative orthant.
BijectionReport match_spanned_regions(const RegionAtlas& atlas);

struct OrthantRestriction {
  std::size_t region = 0;
  std::size_t facets = 0;
  /// Facets of the region intersected with the non-negative orthant.
  std::size_t restricted_facets = 0;
  HCone restricted;
};

std::vector<OrthantRestriction> orthant_restriction_analysis(const RegionAtlas& atlas);

/// A minimum-cardinality set of simplicial cones on extreme rays of the
/// (pointed, full-dimensional) cone, with pairwise disjoint interiors and
/// union equal to the cone.
std::vector<VCone> simplicial_decomposition(const HCone& cone);

struct RegionGraph {
  /// Region indices.
  std::vector<std::size_t> vertices;
  /// Pairs of positions in `vertices` whose regions meet in a facet.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

RegionGraph region_graph(const RegionAtlas& atlas, bool minimal_only);

struct IsomorphismReport {
  std::size_t class_edges = 0;
  std::size_t region_edges = 0;
  /// Class edges whose endpoints map to adjacent regions.
  std::size_t preserved = 0;
  bool isomorphic = false;
};

/// Compares the braid-move class graph with the facet-adjacency graph of
/// the minimal regions through the class-region matching.
IsomorphismReport compare_graphs(const ClassGraph& classes, const RegionGraph& regions, const BijectionReport& matching);

}  // namespace plc
