#include "plc/quivers.hpp"

#include <algorithm>
#include <set>

#include "plc/chambers.hpp"
#include "plc/errors.hpp"

namespace plc {

PartialQuiver::PartialQuiver(int rank, std::vector<Arrow> labels) : rank_(rank), labels_(std::move(labels)) {
  if (rank_ < 2) throw DomainError("partial quivers need rank >= 2");
  if (labels_.size() != static_cast<std::size_t>(rank_ - 1)) {
    throw DomainError("partial quiver of rank " + std::to_string(rank_) + " needs " + std::to_string(rank_ - 1) +
                      " edge labels");
  }
  const auto first = std::find_if(labels_.begin(), labels_.end(), [](Arrow a) { return a != Arrow::none; });
  if (first == labels_.end()) throw DomainError("partial quiver " + to_string() + " has no arrows");
  const auto last = std::find_if(labels_.rbegin(), labels_.rend(), [](Arrow a) { return a != Arrow::none; });
  if (std::find(first, last.base(), Arrow::none) != last.base()) {
    throw DomainError("partial quiver " + to_string() + ": arrows are not connected");
  }
}

PartialQuiver PartialQuiver::parse(std::string_view text) {
  std::vector<Arrow> left_to_right;
  std::size_t column = 0;
  for (std::size_t p = 0; p < text.size(); ++p) {
    ++column;
    const char c = text[p];
    if (c == 'L') {
      left_to_right.push_back(Arrow::left);
    } else if (c == 'R') {
      left_to_right.push_back(Arrow::right);
    } else if (c == '-') {
      left_to_right.push_back(Arrow::none);
    } else if (static_cast<unsigned char>(c) == 0xE2 && p + 2 < text.size() &&
               static_cast<unsigned char>(text[p + 1]) == 0x88 && static_cast<unsigned char>(text[p + 2]) == 0x92) {
      left_to_right.push_back(Arrow::none);  // U+2212 minus sign
      p += 2;
    } else {
      throw DomainError("malformed quiver: character '" + std::string(1, c) + "' at position " +
                        std::to_string(column));
    }
  }
  std::reverse(left_to_right.begin(), left_to_right.end());
  const int rank = static_cast<int>(left_to_right.size()) + 1;
  return PartialQuiver(rank, std::move(left_to_right));
}

int PartialQuiver::rightmost_edge() const {
  for (int e = 2; e <= rank_; ++e) {
    if (label(e) != Arrow::none) return e;
  }
  throw InvariantError("partial quiver without arrows");
}

int PartialQuiver::leftmost_edge() const {
  for (int e = rank_; e >= 2; --e) {
    if (label(e) != Arrow::none) return e;
  }
  throw InvariantError("partial quiver without arrows");
}

std::string PartialQuiver::to_string() const {
  std::string s;
  for (auto it = labels_.rbegin(); it != labels_.rend(); ++it) s.push_back(static_cast<char>(*it));
  return s;
}

PartialQuiver quiver_from_chamber_set(const std::vector<int>& members, int rank) {
  std::vector<int> s(members);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int x : s) {
    if (x < 1 || x > rank + 1) throw DomainError("chamber set element " + std::to_string(x) + " out of range");
  }
  if (is_initial_subset(s, rank)) {
    throw DomainError("subset {" + chamber_label(s, 9) + "} is an initial segment");
  }
  if (is_terminal_subset(s, rank)) {
    throw DomainError("subset {" + chamber_label(s, 9) + "} is a terminal segment");
  }
  const std::set<int> in(s.begin(), s.end());
  std::vector<Arrow> labels(static_cast<std::size_t>(rank - 1), Arrow::none);
  auto set_label = [&](int edge, Arrow a) { labels.at(static_cast<std::size_t>(edge - 2)) = a; };

  int initial_end = 0;  // run 1..initial_end
  while (in.count(initial_end + 1)) ++initial_end;
  int terminal_start = rank + 2;  // run terminal_start..n+1
  while (in.count(terminal_start - 1)) --terminal_start;

  if (initial_end > 0) set_label(initial_end + 1, Arrow::right);
  if (terminal_start <= rank + 1) set_label(terminal_start - 1, Arrow::right);
  for (int x : s) {
    if (x > initial_end && x < terminal_start) set_label(x, Arrow::left);
  }
  int lo = rank + 1, hi = 1;
  for (int e = 2; e <= rank; ++e) {
    if (labels[static_cast<std::size_t>(e - 2)] != Arrow::none) {
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  }
  for (int e = lo + 1; e < hi; ++e) {
    if (labels[static_cast<std::size_t>(e - 2)] == Arrow::none) set_label(e, Arrow::right);
  }
  return PartialQuiver(rank, std::move(labels));
}

std::vector<int> chamber_set_from_quiver(const PartialQuiver& quiver) {
  const int n = quiver.rank();
  const int right = quiver.rightmost_edge();
  const int left = quiver.leftmost_edge();
  std::vector<int> s;
  if (quiver.label(right) == Arrow::right) {
    for (int x = 1; x < right; ++x) s.push_back(x);
  }
  for (int e = right; e <= left; ++e) {
    if (quiver.label(e) == Arrow::left) s.push_back(e);
  }
  if (quiver.label(left) == Arrow::right) {
    for (int x = left + 1; x <= n + 1; ++x) s.push_back(x);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<PartialQuiver> quivers_for_word(const ReducedWord& word) {
  if (word.rank() < 2) return {};
  std::vector<PartialQuiver> out;
  for (const auto& c : chamber_sets(word)) out.push_back(quiver_from_chamber_set(c.members, word.rank()));
  return out;
}

std::vector<PartialQuiver> enumerate_partial_quivers(int rank) {
  if (rank < 2) throw DomainError("partial quivers need rank >= 2");
  std::vector<PartialQuiver> out;
  const int edges = rank - 1;
  for (int lo = 0; lo < edges; ++lo) {
    for (int hi = lo; hi < edges; ++hi) {
      const int len = hi - lo + 1;
      for (unsigned mask = 0; mask < (1u << len); ++mask) {
        std::vector<Arrow> labels(static_cast<std::size_t>(edges), Arrow::none);
        for (int b = 0; b < len; ++b) {
          labels[static_cast<std::size_t>(lo + b)] = (mask >> b) & 1u ? Arrow::right : Arrow::left;
        }
        out.emplace_back(rank, std::move(labels));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PartialQuiver& a, const PartialQuiver& b) {
    return a.to_string() < b.to_string();
  });
  return out;
}

std::size_t partial_quiver_count_formula(int rank) {
  std::size_t total = 0;
  for (int r = 1; r <= rank - 1; ++r) total += static_cast<std::size_t>(rank - r) << r;
  return total;
}

}  // namespace plc
