#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

/// Reduced words for the longest element w0 of the symmetric group S_{n+1}
/// (Weyl group of type A_n), their elementary moves, commutation classes, and
/// the positive-root order a reduced word induces.
///
/// Conventions: generator s_i swaps positions i and i+1 of {1, ..., n+1};
/// word positions are 0-based in the API and 1-based in printed output.
namespace plc {

struct ReducedCheck {
  bool reduced = false;
  /// The product is the order-reversing permutation (only set when reduced
  /// and of full length).
  bool is_longest = false;
};

/// Validation utility usable on any word, not only words for w0.
/// Throws DomainError if a letter lies outside [1, rank].
ReducedCheck is_reduced(std::span<const int> letters, int rank);

enum class MoveKind { commutation, braid };

/// A commutation swaps positions (p, p+1); a braid move rewrites the triple
/// starting at p.
struct Move {
  MoveKind kind = MoveKind::commutation;
  std::size_t position = 0;

  bool operator==(const Move&) const = default;
};

/// A reduced word for w0 in type A_rank. Immutable once constructed.
class ReducedWord {
 public:
  /// Throws DomainError unless `letters` is a reduced word for w0.
  ReducedWord(int rank, std::vector<int> letters);

  /// Digit string ("1324132413") or comma-separated integers. The rank is
  /// inferred from the length when not given.
  static ReducedWord parse(std::string_view text, std::optional<int> rank = std::nullopt);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t position) const { return letters_[position]; }
  std::span<const int> letters() const { return letters_; }

  /// Digits without separators for rank <= 9, comma-separated otherwise.
  std::string to_string() const;

  auto operator<=>(const ReducedWord&) const = default;

 private:
  struct Unchecked {};
  ReducedWord(Unchecked, int rank, std::vector<int> letters)
      : rank_(rank), letters_(std::move(letters)) {}

  int rank_ = 0;
  std::vector<int> letters_;

  friend std::vector<ReducedWord> enumerate_reduced_words(int rank);
  friend ReducedWord apply_move(const ReducedWord& word, Move move);
};

/// n(n+1)/2.
std::size_t longest_length(int rank);

/// Rank n with n(n+1)/2 == length, if any.
std::optional<int> rank_for_length(std::size_t length);

bool is_legal(const ReducedWord& word, Move move);

/// Throws DomainError if the move is not legal at its position.
ReducedWord apply_move(const ReducedWord& word, Move move);

/// All legal moves on the word, in increasing position order.
std::vector<Move> legal_moves(const ReducedWord& word);

enum class PathStrategy {
  /// Bring dst's first letter to the front, recurse on the suffix.
  peel_front,
  /// The same construction run on reversed words (peels dst's last letter).
  peel_back,
};

/// Moves taking src to dst. Does not enumerate reduced words.
std::vector<Move> find_move_path(const ReducedWord& src, const ReducedWord& dst,
                                 PathStrategy strategy = PathStrategy::peel_front);

/// Exhaustive enumeration, sorted lexicographically. Ranks 1..5 only.
std::vector<ReducedWord> enumerate_reduced_words(int rank);

inline constexpr int kMaxEnumerationRank = 5;

struct CommutationClass {
  int rank = 0;
  /// Lexicographically least member.
  ReducedWord representative;
  std::size_t size = 0;
};

/// Canonical (lexicographically least) member of the word's commutation class.
ReducedWord class_representative(const ReducedWord& word);

/// All members of the word's commutation class, sorted.
std::vector<ReducedWord> class_members(const ReducedWord& word);

/// All classes, sorted by representative. Ranks 1..5 only.
std::vector<CommutationClass> commutation_classes(int rank);

/// alpha_first + ... + alpha_last, 1 <= first <= last <= n.
struct PositiveRoot {
  int first = 1;
  int last = 1;

  auto operator<=>(const PositiveRoot&) const = default;
  std::string to_string() const;
};

/// alpha^1 = alpha_{i_1}, alpha^t = s_{i_1} ... s_{i_{t-1}} (alpha_{i_t}).
std::vector<PositiveRoot> positive_root_order(const ReducedWord& word);

/// The words j = 135...246...135... and j' = 246...135...246..., truncated to
/// n(n+1)/2 letters.
std::pair<ReducedWord, ReducedWord> standard_words(int rank);

struct ClassGraph {
  std::vector<CommutationClass> vertices;
  /// Index pairs (a < b), sorted; an edge joins classes having members one
  /// braid move apart.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool connected() const;
};

ClassGraph class_graph(int rank);

}  // namespace plc
