#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plc/weyl_words.hpp"

/// Wiring diagrams of reduced words and their bounded-chamber sets.
///
/// Strings are numbered 1..n+1 top to bottom at the left edge. A letter g is
/// a crossing in gap g (between rows g and g+1). The chamber set of a bounded
/// chamber in gap g lists the strings passing below it.
namespace plc {

struct ChamberSet {
  int gap = 0;
  /// Positions (0-based) of the consecutive occurrences of `gap` that bound
  /// the chamber.
  std::size_t open = 0;
  std::size_t close = 0;
  /// Sorted subset of {1, ..., n+1}.
  std::vector<int> members;
};

/// n(n-1)/2 chamber sets, ordered by closing crossing.
std::vector<ChamberSet> chamber_sets(const ReducedWord& word);

/// {1..i} for some i (including the empty set).
bool is_initial_subset(const std::vector<int>& members, int rank);
/// {i..n+1} for some i (including the empty set).
bool is_terminal_subset(const std::vector<int>& members, int rank);

enum class RenderFormat { ascii, svg };

/// Deterministic drawing: one crossing per column, chamber sets written
/// inside their chambers.
std::string render_wiring(const ReducedWord& word, RenderFormat format);

/// "245" for rank <= 8, "2,4,5" otherwise.
std::string chamber_label(const std::vector<int>& members, int rank);

}  // namespace plc
