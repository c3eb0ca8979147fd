#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plc/quivers.hpp"
#include "plc/rational.hpp"
#include "plc/weyl_words.hpp"

/// Rectangle calculus for partial quivers.
///
/// Rectangles are drawn on a grid of columns x and levels (level 0 at the
/// top). In the rotated frame u = x - level, w = x + level every rectangle is
/// an axis-aligned box with integer bounds.
namespace plc {

struct Component {
  Arrow type = Arrow::left;
  /// Edge following the rightmost arrow.
  int a = 0;
  /// Edge preceding the leftmost arrow.
  int b = 0;

  bool operator==(const Component&) const = default;
};

/// Maximal runs of equally labelled arrows, left to right.
std::vector<Component> components(const PartialQuiver& quiver);

/// Corners on levels i (top), j (left), k (right), l (bottom).
struct Rectangle {
  int i = 0, j = 0, k = 0, l = 0;

  bool operator==(const Rectangle&) const = default;
  std::string to_string() const;
};

/// L -> (0, a, n+2-b, n+a-b+2); R -> (b-a-1, b-1, n+1-a, n+1).
/// Throws InvariantError if i<j<l, i<k<l, i+l=j+k fails.
Rectangle rectangle_for_component(const Component& component, int rank);

struct Box {
  std::int64_t u_lo = 0, u_hi = 0, w_lo = 0, w_hi = 0;

  bool operator==(const Box&) const = default;
};

/// The rectangle with left corner at column x0, level j.
Box box_at(const Rectangle& rect, std::int64_t x0);
/// Inverse of box_at (levels only).
Rectangle rectangle_of_box(const Box& box);

struct PlacedRectangle {
  Component component;
  Rectangle rectangle;
  Box box;
};

/// A column of a rectangle holding a root; x is a half-integer.
struct RootColumn {
  Rational x;
  PositiveRoot root;
};

/// Alternate columns, starting with the first iff its entry (level j) is
/// odd. Throws InvariantError if a column leaves levels 1..rank.
std::vector<RootColumn> roots_of_rectangle(const Box& box, int rank);

struct CornerPoint {
  char label = 'A';
  bool is_left = true;
  std::int64_t u = 0, w = 0;
  /// Extended along the chains of drawn edges through the corner.
  Box maximal;
  /// Root columns of the maximal rectangle strictly on this corner's side of
  /// the central line.
  std::vector<PositiveRoot> phi;

  Rational x() const { return Rational(u + w, 2); }
  Rational level() const { return Rational(w - u, 2); }
};

struct RectangleConfiguration {
  int rank = 0;
  std::vector<PlacedRectangle> placed;
  /// Every u / w coordinate of a box edge, sorted.
  std::vector<std::int64_t> u_cuts, w_cuts;
  /// Covered cells as (u band, w band) index pairs, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  /// Cells per u band (one NW-SE diagonal) and per w band (one NE-SW
  /// diagonal), in increasing coordinate order.
  std::vector<std::size_t> u_counts, w_counts;
  /// Centre O = (u0, w0).
  Rational u0, w0;
  /// True if some direction has a single band, whose lower edge then
  /// serves as the parity boundary.
  bool centre_fallback = false;
  std::vector<CornerPoint> corners;
  /// Root columns of maximal rectangles lying exactly on the central line.
  std::size_t columns_on_central_line = 0;

  /// The central line m is x = central_x().
  Rational central_x() const { return (u0 + w0) / 2; }
  Rational centre_level() const { return (w0 - u0) / 2; }
};

/// Places the rectangles of the components (first left corner at column 0),
/// cuts the union into cells, locates the centre and the corner points.
/// Throws DomainError if a centre direction is ambiguous and InvariantError
/// on any broken structural property (including non-disjoint Phi+).
RectangleConfiguration place_configuration(const std::vector<Component>& comps, int rank);
RectangleConfiguration configuration(const PartialQuiver& quiver);

/// The parity block boundary index of a count list (band index where the
/// second block starts), or nothing if all counts share one parity. Throws
/// InvariantError if there is more than one parity change.
std::optional<std::size_t> parity_boundary(const std::vector<std::size_t>& counts);

/// Union of Phi+(V) over the corner points, sorted.
std::vector<PositiveRoot> phi_plus(const PartialQuiver& quiver);

/// 0/1 vector over positive_root_order of the standard word j.
Vector v_P(const PartialQuiver& quiver);
/// Indicator of the positions of letter gen in the standard word j.
Vector v_generator(int gen, int rank);

/// The generators of the cone attached to a reduced word: v_P for each of
/// its quivers followed by v_generator(1..n).
std::vector<Vector> spanning_vectors(const ReducedWord& word);

std::string render_configuration_svg(const RectangleConfiguration& config);
std::string render_configuration_ascii(const RectangleConfiguration& config);

}  // namespace plc
