#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "plc/weyl_words.hpp"

/// Partial quivers of type A_n and their bijection with subsets of
/// {1, ..., n+1} that are neither initial nor terminal segments.
///
/// Edges are numbered 2..n from right to left (1 and n+1 are virtual). The
/// text form lists edges n down to 2, left to right, over {L, R, -}.
namespace plc {

enum class Arrow : char { none = '-', left = 'L', right = 'R' };

class PartialQuiver {
 public:
  /// Throws DomainError unless the labelled edges are nonempty and
  /// consecutive. labels[e - 2] is the label of edge e.
  PartialQuiver(int rank, std::vector<Arrow> labels);

  /// Rank is the text length plus one. Accepts '-' and U+2212 for blanks.
  static PartialQuiver parse(std::string_view text);

  int rank() const { return rank_; }
  Arrow label(int edge) const { return labels_.at(static_cast<std::size_t>(edge - 2)); }
  /// Smallest / largest labelled edge number.
  int rightmost_edge() const;
  int leftmost_edge() const;

  std::string to_string() const;

  auto operator<=>(const PartialQuiver&) const = default;

 private:
  int rank_;
  std::vector<Arrow> labels_;
};

/// Rules: members of S outside an initial run 1..i or terminal run i..n+1 are
/// L edges; an initial run makes edge i+1 the rightmost labelled edge, with
/// label R; a terminal run makes edge i-1 the leftmost, with label R;
/// unlabelled edges strictly between labelled ones get R.
/// Throws DomainError if S is initial or terminal or out of range.
PartialQuiver quiver_from_chamber_set(const std::vector<int>& members, int rank);

/// Inverse of quiver_from_chamber_set. Sorted.
std::vector<int> chamber_set_from_quiver(const PartialQuiver& quiver);

/// One quiver per bounded chamber, in chamber order.
std::vector<PartialQuiver> quivers_for_word(const ReducedWord& word);

/// Every partial quiver of the rank, sorted by text form. Rank >= 2.
std::vector<PartialQuiver> enumerate_partial_quivers(int rank);

/// sum over run lengths r of (n - r) * 2^r; advisory cross-check only.
std::size_t partial_quiver_count_formula(int rank);

}  // namespace plc
