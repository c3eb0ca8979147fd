#include "plc/weyl_words.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "plc/errors.hpp"

namespace plc {

namespace {

void check_letters(std::span<const int> letters, int rank) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  for (std::size_t t = 0; t < letters.size(); ++t) {
    if (letters[t] < 1 || letters[t] > rank) {
      throw DomainError("letter " + std::to_string(letters[t]) + " at position " + std::to_string(t + 1) +
                        " outside [1, " + std::to_string(rank) + "]");
    }
  }
}

void check_enumeration_rank(int rank) {
  if (rank < 1 || rank > kMaxEnumerationRank) {
    throw DomainError("exhaustive enumeration supports ranks 1.." + std::to_string(kMaxEnumerationRank) +
                      ", got " + std::to_string(rank));
  }
}

// Four bits per letter; valid for ranks <= 5 (at most 15 letters).
std::uint64_t encode(std::span<const int> letters) {
  std::uint64_t key = 0;
  for (int x : letters) key = (key << 4) | static_cast<std::uint64_t>(x);
  return key;
}

bool commute(int a, int b) { return std::abs(a - b) >= 2; }

// Rewrites w[offset..] so that it starts with g, appending the moves used.
// Requires s_g to be a left descent of the element spelled by w[offset..].
void surface(std::vector<int>& w, std::size_t offset, int g, std::vector<Move>& out) {
  if (offset >= w.size()) throw InvariantError("find_move_path: letter is not a left descent");
  const int a = w[offset];
  if (a == g) return;
  surface(w, offset + 1, g, out);
  if (commute(a, g)) {
    std::swap(w[offset], w[offset + 1]);
    out.push_back({MoveKind::commutation, offset});
    return;
  }
  // a g ... -> a g a ... -> g a g ...
  surface(w, offset + 2, a, out);
  w[offset] = g;
  w[offset + 1] = a;
  w[offset + 2] = g;
  out.push_back({MoveKind::braid, offset});
}

std::vector<Move> peel_front_path(std::vector<int> w, std::span<const int> dst) {
  std::vector<Move> out;
  for (std::size_t p = 0; p < dst.size(); ++p) surface(w, p, dst[p], out);
  return out;
}

}  // namespace

ReducedCheck is_reduced(std::span<const int> letters, int rank) {
  check_letters(letters, rank);
  std::vector<int> arr(static_cast<std::size_t>(rank) + 1);
  std::iota(arr.begin(), arr.end(), 1);
  for (int i : letters) {
    if (arr[i - 1] > arr[i]) return {false, false};
    std::swap(arr[i - 1], arr[i]);
  }
  const bool longest = std::is_sorted(arr.rbegin(), arr.rend()) && letters.size() == longest_length(rank);
  return {true, longest};
}

std::size_t longest_length(int rank) {
  return static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank + 1) / 2;
}

std::optional<int> rank_for_length(std::size_t length) {
  for (int n = 1; longest_length(n) <= length; ++n) {
    if (longest_length(n) == length) return n;
  }
  return std::nullopt;
}

ReducedWord::ReducedWord(int rank, std::vector<int> letters) : rank_(rank), letters_(std::move(letters)) {
  const auto check = is_reduced(letters_, rank_);
  if (!check.reduced) throw DomainError("word " + to_string() + " is not reduced");
  if (!check.is_longest) throw DomainError("word " + to_string() + " is not a reduced word for w0");
}

ReducedWord ReducedWord::parse(std::string_view text, std::optional<int> rank) {
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t field = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view item = text.substr(start, end - start);
      ++field;
      if (item.empty() || item.size() > 4 ||
          !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw DomainError("malformed word: field " + std::to_string(field) + " ('" + std::string(item) +
                          "') is not a positive integer");
      }
      letters.push_back(std::stoi(std::string(item)));
      start = end + 1;
    }
  } else {
    for (std::size_t p = 0; p < text.size(); ++p) {
      const char c = text[p];
      if (c < '1' || c > '9') {
        throw DomainError("malformed word: character '" + std::string(1, c) + "' at position " +
                          std::to_string(p + 1));
      }
      letters.push_back(c - '0');
    }
  }
  if (letters.empty()) throw DomainError("malformed word: empty");
  if (!rank) {
    rank = rank_for_length(letters.size());
    if (!rank) {
      throw DomainError("word of length " + std::to_string(letters.size()) +
                        " cannot spell w0 of any rank (length must be n(n+1)/2)");
    }
  }
  return ReducedWord(*rank, std::move(letters));
}

std::string ReducedWord::to_string() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < letters_.size(); ++t) {
    if (rank_ > 9 && t > 0) os << ',';
    os << letters_[t];
  }
  return os.str();
}

bool is_legal(const ReducedWord& word, Move move) {
  const auto w = word.letters();
  const std::size_t p = move.position;
  if (move.kind == MoveKind::commutation) {
    return p + 1 < w.size() && commute(w[p], w[p + 1]);
  }
  return p + 2 < w.size() && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1;
}

ReducedWord apply_move(const ReducedWord& word, Move move) {
  if (!is_legal(word, move)) {
    throw DomainError(std::string(move.kind == MoveKind::commutation ? "commutation" : "braid") +
                      " move is illegal at position " + std::to_string(move.position + 1) + " of " +
                      word.to_string());
  }
  std::vector<int> w(word.letters().begin(), word.letters().end());
  const std::size_t p = move.position;
  if (move.kind == MoveKind::commutation) {
    std::swap(w[p], w[p + 1]);
  } else {
    const int a = w[p];
    const int b = w[p + 1];
    w[p] = b;
    w[p + 1] = a;
    w[p + 2] = b;
  }
  return ReducedWord(ReducedWord::Unchecked{}, word.rank(), std::move(w));
}

std::vector<Move> legal_moves(const ReducedWord& word) {
  std::vector<Move> out;
  for (std::size_t p = 0; p < word.size(); ++p) {
    for (MoveKind kind : {MoveKind::commutation, MoveKind::braid}) {
      const Move m{kind, p};
      if (is_legal(word, m)) out.push_back(m);
    }
  }
  return out;
}

std::vector<Move> find_move_path(const ReducedWord& src, const ReducedWord& dst, PathStrategy strategy) {
  if (src.rank() != dst.rank()) throw DomainError("find_move_path: rank mismatch");
  const std::size_t k = src.size();
  std::vector<Move> path;
  if (strategy == PathStrategy::peel_front) {
    path = peel_front_path({src.letters().begin(), src.letters().end()}, dst.letters());
  } else {
    // Reversal maps reduced words for w0 to reduced words for w0.
    std::vector<int> rs(src.letters().rbegin(), src.letters().rend());
    std::vector<int> rd(dst.letters().rbegin(), dst.letters().rend());
    for (Move m : peel_front_path(std::move(rs), rd)) {
      const std::size_t span = m.kind == MoveKind::commutation ? 2 : 3;
      path.push_back({m.kind, k - span - m.position});
    }
  }
  ReducedWord w = src;
  for (Move m : path) w = apply_move(w, m);
  if (w != dst) throw InvariantError("find_move_path: replay does not reach the target");
  return path;
}

std::vector<ReducedWord> enumerate_reduced_words(int rank) {
  check_enumeration_rank(rank);
  const std::size_t k = longest_length(rank);
  std::vector<ReducedWord> out;
  std::vector<int> arr(static_cast<std::size_t>(rank) + 1);
  std::iota(arr.begin(), arr.end(), 1);
  std::vector<int> word;
  word.reserve(k);
  // Depth-first in increasing letter order yields lexicographic output.
  auto dfs = [&](auto&& self) -> void {
    if (word.size() == k) {
      out.push_back(ReducedWord(ReducedWord::Unchecked{}, rank, word));
      return;
    }
    for (int i = 1; i <= rank; ++i) {
      if (arr[i - 1] > arr[i]) continue;
      std::swap(arr[i - 1], arr[i]);
      word.push_back(i);
      self(self);
      word.pop_back();
      std::swap(arr[i - 1], arr[i]);
    }
  };
  dfs(dfs);
  return out;
}

std::vector<ReducedWord> class_members(const ReducedWord& word) {
  std::set<ReducedWord> seen{word};
  std::deque<ReducedWord> queue{word};
  while (!queue.empty()) {
    const ReducedWord w = queue.front();
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      const Move m{MoveKind::commutation, p};
      if (!is_legal(w, m)) continue;
      ReducedWord next = apply_move(w, m);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

ReducedWord class_representative(const ReducedWord& word) { return class_members(word).front(); }

namespace {

struct ClassIndex {
  std::vector<ReducedWord> words;
  std::vector<std::size_t> class_of;
  std::vector<CommutationClass> classes;
  std::unordered_map<std::uint64_t, std::size_t> index;
};

ClassIndex build_class_index(int rank) {
  ClassIndex ci;
  ci.words = enumerate_reduced_words(rank);
  for (std::size_t i = 0; i < ci.words.size(); ++i) ci.index.emplace(encode(ci.words[i].letters()), i);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  ci.class_of.assign(ci.words.size(), kUnset);
  for (std::size_t i = 0; i < ci.words.size(); ++i) {
    if (ci.class_of[i] != kUnset) continue;
    const std::size_t c = ci.classes.size();
    // Words are sorted, so the first unvisited member is the least one.
    ci.classes.push_back({rank, ci.words[i], 0});
    std::vector<std::size_t> stack{i};
    ci.class_of[i] = c;
    while (!stack.empty()) {
      const std::size_t w = stack.back();
      stack.pop_back();
      ++ci.classes[c].size;
      std::vector<int> letters(ci.words[w].letters().begin(), ci.words[w].letters().end());
      for (std::size_t p = 0; p + 1 < letters.size(); ++p) {
        if (!commute(letters[p], letters[p + 1])) continue;
        std::swap(letters[p], letters[p + 1]);
        const std::size_t nb = ci.index.at(encode(letters));
        std::swap(letters[p], letters[p + 1]);
        if (ci.class_of[nb] == kUnset) {
          ci.class_of[nb] = c;
          stack.push_back(nb);
        }
      }
    }
  }
  return ci;
}

}  // namespace

std::vector<CommutationClass> commutation_classes(int rank) { return build_class_index(rank).classes; }

std::string PositiveRoot::to_string() const {
  std::ostringstream os;
  for (int p = first; p <= last; ++p) os << (p > first ? "+" : "") << "a" << p;
  return os.str();
}

std::vector<PositiveRoot> positive_root_order(const ReducedWord& word) {
  std::vector<int> arr(static_cast<std::size_t>(word.rank()) + 1);
  std::iota(arr.begin(), arr.end(), 1);
  std::vector<PositiveRoot> roots;
  roots.reserve(word.size());
  for (int i : word.letters()) {
    // w(e_i - e_{i+1}) = e_{w(i)} - e_{w(i+1)} with w(i) < w(i+1).
    roots.push_back({arr[i - 1], arr[i] - 1});
    std::swap(arr[i - 1], arr[i]);
  }
  return roots;
}

std::pair<ReducedWord, ReducedWord> standard_words(int rank) {
  if (rank < 1) throw DomainError("rank must be at least 1");
  std::vector<int> odds, evens;
  for (int i = 1; i <= rank; ++i) (i % 2 ? odds : evens).push_back(i);
  const std::size_t k = longest_length(rank);
  auto build = [&](const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> w;
    for (bool use_first = true; w.size() < k; use_first = !use_first) {
      for (int x : use_first ? first : second) {
        if (w.size() < k) w.push_back(x);
      }
    }
    return ReducedWord(rank, std::move(w));
  };
  return {build(odds, evens), build(evens, odds)};
}

bool ClassGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(vertices.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    ++count;
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return count == vertices.size();
}

ClassGraph class_graph(int rank) {
  const ClassIndex ci = build_class_index(rank);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < ci.words.size(); ++i) {
    std::vector<int> letters(ci.words[i].letters().begin(), ci.words[i].letters().end());
    for (std::size_t p = 0; p + 2 < letters.size(); ++p) {
      if (letters[p] != letters[p + 2] || std::abs(letters[p] - letters[p + 1]) != 1) continue;
      std::vector<int> moved = letters;
      moved[p] = letters[p + 1];
      moved[p + 1] = letters[p];
      moved[p + 2] = letters[p + 1];
      const std::size_t a = ci.class_of[i];
      const std::size_t b = ci.class_of[ci.index.at(encode(moved))];
      if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return {ci.classes, {edges.begin(), edges.end()}};
}

}  // namespace plc
