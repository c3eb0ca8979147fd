#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "plc/errors.hpp"
#include "plc/rational.hpp"

/// Exact homogeneous polyhedral cones.
///
/// An HCone is { x : a . x >= 0 for every listed a }; a VCone is the set of
/// non-negative combinations of its rays. Everything here is homogeneous:
/// every object of interest is a cone through the origin.
namespace plc {

struct HCone {
  std::size_t dim = 0;
  std::vector<Vector> ineqs;
  /// Set only by irredundant_h().
  bool irredundant = false;

  bool contains(const Vector& point) const;
  /// Strictly inside every listed half-space.
  bool contains_strictly(const Vector& point) const;
  /// Facet count; only meaningful once irredundant.
  std::size_t facet_count() const;

  static HCone full_space(std::size_t dim);
  static HCone orthant(std::size_t dim);
};

struct VCone {
  std::size_t dim = 0;
  std::vector<Vector> rays;
};

/// Thrown by irredundant_h on cones with empty interior.
class DegenerateCone : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Thrown by extreme_rays on cones containing a line; carries the line.
class NotPointed : public DomainError {
 public:
  NotPointed(const std::string& what, Vector line) : DomainError(what), line_(std::move(line)) {}
  const Vector& line() const { return line_; }

 private:
  Vector line_;
};

/// Is there a point satisfying every inequality, strictly on the listed ones?
bool lp_feasible(const HCone& cone, const std::vector<std::size_t>& strict);
/// Strict on every inequality: the cone has nonempty interior.
bool is_full_dimensional(const HCone& cone);
/// A point of the interior, if the cone is full-dimensional.
std::optional<Vector> interior_point(const HCone& cone);

/// True iff a . x >= 0 holds on all of `cone`.
bool implies(const HCone& cone, const Vector& a);

/// Minimal sub-list defining the same (full-dimensional) cone, rows made
/// primitive and sorted. Throws DegenerateCone otherwise.
HCone irredundant_h(const HCone& cone);

/// Primitive extreme rays by the double description method, sorted.
/// Throws NotPointed with a witness line if the cone contains one.
VCone extreme_rays(const HCone& cone);

/// H-description of the conic hull of the rays. Implicit equalities of a
/// lower-dimensional hull are emitted as opposite pairs.
HCone cone_from_rays(const VCone& rays);

bool contains(const HCone& outer, const HCone& inner);
bool cone_equal(const HCone& a, const HCone& b);
bool cone_equal(const HCone& a, const VCone& b);
bool cone_equal(const VCone& a, const HCone& b);
bool cone_equal(const VCone& a, const VCone& b);

/// Concatenation of the inequality lists (not reduced).
HCone intersect(const HCone& a, const HCone& b);

/// Do the interiors of the two cones meet?
bool interiors_meet(const HCone& a, const HCone& b);

}  // namespace plc
