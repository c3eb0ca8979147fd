#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plc/polyhedra.hpp"
#include "plc/weyl_words.hpp"

namespace plc {

/// One defining inequality: for consecutive occurrences t < t' of a letter,
/// sum of a_p over the non-commuting letters strictly between them
/// >= a_t + a_t'.
struct LusztigInequality {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<std::size_t> between;
  /// Normal vector on coordinates indexed by word position.
  Vector normal;
};

/// The Lusztig cone of a reduced word. Coordinates are word positions.
class LusztigCone {
 public:
  explicit LusztigCone(ReducedWord word);

  const ReducedWord& word() const { return word_; }
  std::size_t dim() const { return word_.size(); }

  /// The k - n consecutive-occurrence inequalities, in order of the second
  /// occurrence.
  const std::vector<LusztigInequality>& inequalities() const { return ineqs_; }

  /// The consecutive-occurrence inequalities only (no sign constraints).
  HCone defining_cone() const;

  /// The cone inside the non-negative orthant, as a subset of R^k: the
  /// defining inequalities together with x >= 0.
  HCone cone() const;

  bool contains(const Vector& point) const { return cone().contains(point); }

  /// "c >= a + d" style rendering with coordinate letters a, b, c, ...
  /// (k <= 26) or x1, x2, ... otherwise.
  std::vector<std::string> describe() const;

 private:
  ReducedWord word_;
  std::vector<LusztigInequality> ineqs_;
};

LusztigCone lusztig_cone(const ReducedWord& word);

/// Extreme rays of the cone (with the orthant constraints).
VCone spanning_rays(const ReducedWord& word);

/// Coordinate permutation induced by a commutation move: perm[t] is the
/// position in the moved word that carries coordinate t of the original.
/// Throws DomainError for braid moves or illegal positions.
std::vector<std::size_t> transport_under_commutation(const ReducedWord& word, Move move);

/// Relabels a cone's coordinates: coordinate t becomes perm[t].
HCone permute_coordinates(const HCone& cone, const std::vector<std::size_t>& perm);

std::string coordinate_name(std::size_t index, std::size_t dim);

}  // namespace plc
