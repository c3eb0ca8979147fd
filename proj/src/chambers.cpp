#include "plc/chambers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "plc/errors.hpp"

namespace plc {

std::vector<ChamberSet> chamber_sets(const ReducedWord& word) {
  const int n = word.rank();
  std::vector<int> order(static_cast<std::size_t>(n) + 1);
  std::iota(order.begin(), order.end(), 1);
  std::vector<std::ptrdiff_t> last_seen(static_cast<std::size_t>(n) + 1, -1);
  // Below-set of each gap, recorded when the gap last crossed.
  std::vector<std::vector<int>> below_at_open(static_cast<std::size_t>(n) + 1);
  auto below = [&](int gap) {
    std::vector<int> s(order.begin() + gap, order.end());
    std::sort(s.begin(), s.end());
    return s;
  };

  std::vector<ChamberSet> out;
  for (std::size_t t = 0; t < word.size(); ++t) {
    const int g = word[t];
    if (last_seen[g] >= 0) {
      std::vector<int> current = below(g);
      // Only crossings in gap g move strings across gap g.
      if (current != below_at_open[g]) throw InvariantError("chamber_sets: below-set changed inside a chamber");
      out.push_back({g, static_cast<std::size_t>(last_seen[g]), t, std::move(current)});
    }
    std::swap(order[g - 1], order[g]);
    last_seen[g] = static_cast<std::ptrdiff_t>(t);
    below_at_open[g] = below(g);
  }
  return out;
}

bool is_initial_subset(const std::vector<int>& members, int rank) {
  (void)rank;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool is_terminal_subset(const std::vector<int>& members, int rank) {
  const int top = rank + 1;
  const std::size_t m = members.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (members[i] != top - static_cast<int>(m - 1 - i)) return false;
  }
  return true;
}

std::string chamber_label(const std::vector<int>& members, int rank) {
  std::ostringstream os;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0 && rank > 8) os << ',';
    os << members[i];
  }
  return os.str();
}

namespace {

constexpr int kCell = 5;  // characters per crossing column

std::string render_ascii(const ReducedWord& word) {
  const int n = word.rank();
  const std::size_t k = word.size();
  const int label_width = n + 1 >= 10 ? 3 : 2;
  const std::size_t width = static_cast<std::size_t>(label_width) + (k + 2) * kCell;
  // Row 2r holds string position r; row 2r+1 is gap r+1.
  std::vector<std::string> grid(static_cast<std::size_t>(2 * n + 1), std::string(width, ' '));
  std::vector<int> order(static_cast<std::size_t>(n) + 1);
  std::iota(order.begin(), order.end(), 1);
  for (int r = 0; r <= n; ++r) {
    const std::string name = std::to_string(order[r]);
    grid[2 * r].replace(0, name.size(), name);
    for (std::size_t c = label_width; c < width; ++c) grid[2 * r][c] = '-';
  }
  for (std::size_t t = 0; t < k; ++t) {
    const int g = word[t];
    const std::size_t x = label_width + (t + 1) * kCell;
    grid[2 * (g - 1)].replace(x + 1, 3, "\\ /");
    grid[2 * g - 1][x + 2] = 'X';
    grid[2 * g].replace(x + 1, 3, "/ \\");
  }
  // Right-edge string labels.
  std::vector<int> final_order(order);
  for (int g : word.letters()) std::swap(final_order[g - 1], final_order[g]);
  for (int r = 0; r <= n; ++r) grid[2 * r] += " " + std::to_string(final_order[r]);

  std::ostringstream legend;
  for (const auto& c : chamber_sets(word)) {
    const std::string label = chamber_label(c.members, n);
    const std::size_t left = label_width + (c.open + 1) * kCell + 4;
    const std::size_t right = label_width + (c.close + 1) * kCell + 1;
    std::string& line = grid[static_cast<std::size_t>(2 * c.gap - 1)];
    if (right > left + label.size()) {
      const std::size_t at = left + (right - left - label.size()) / 2;
      line.replace(at, label.size(), label);
    }
    legend << "gap " << c.gap << ", crossings " << c.open + 1 << ".." << c.close + 1 << ": {"
           << chamber_label(c.members, 9) << "}\n";
  }
  std::ostringstream os;
  os << "word " << word.to_string() << "\n";
  std::ostringstream letters;
  letters << std::string(static_cast<std::size_t>(label_width), ' ');
  for (std::size_t t = 0; t <= k; ++t) {
    const std::string s = t == 0 ? "" : std::to_string(word[t - 1]);
    letters << std::string(static_cast<std::size_t>(kCell) - s.size() - 2, ' ') << s << "  ";
  }
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  std::string letter_row = letters.str();
  while (!letter_row.empty() && letter_row.back() == ' ') letter_row.pop_back();
  os << letter_row << "\n" << legend.str();
  return os.str();
}

std::string render_svg(const ReducedWord& word) {
  const int n = word.rank();
  const std::size_t k = word.size();
  constexpr int dx = 40, dy = 30, margin = 40;
  const int width = margin * 2 + static_cast<int>(k + 1) * dx;
  const int height = margin * 2 + n * dy + 20;
  auto xcol = [&](std::size_t col) { return margin + static_cast<int>(col) * dx; };
  auto yrow = [&](int row) { return margin + row * dy; };

  std::vector<int> order(static_cast<std::size_t>(n) + 1);
  std::iota(order.begin(), order.end(), 1);
  // position_of[label] per column boundary.
  std::vector<std::vector<std::pair<int, int>>> paths(static_cast<std::size_t>(n) + 2);
  for (int r = 0; r <= n; ++r) paths[order[r]].push_back({xcol(0), yrow(r)});
  for (std::size_t t = 0; t < k; ++t) {
    const int g = word[t];
    const int x0 = xcol(t) + dx / 4;
    const int x1 = xcol(t + 1) - dx / 4;
    for (int r = 0; r <= n; ++r) paths[order[r]].push_back({x0, yrow(r)});
    std::swap(order[g - 1], order[g]);
    for (int r = 0; r <= n; ++r) paths[order[r]].push_back({x1, yrow(r)});
  }
  for (int r = 0; r <= n; ++r) paths[order[r]].push_back({xcol(k + 1) - dx / 2, yrow(r)});

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int label = 1; label <= n + 1; ++label) {
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < paths[label].size(); ++i) {
      os << (i ? " " : "") << paths[label][i].first << ',' << paths[label][i].second;
    }
    os << "\"/>\n";
    os << "<text x=\"" << xcol(0) - 20 << "\" y=\"" << yrow(label - 1) + 5
       << "\" font-family=\"serif\" font-size=\"14\">" << label << "</text>\n";
  }
  for (std::size_t t = 0; t < k; ++t) {
    os << "<text x=\"" << (xcol(t) + xcol(t + 1)) / 2 - 4 << "\" y=\"" << yrow(n) + 30
       << "\" font-family=\"serif\" font-size=\"14\">" << word[t] << "</text>\n";
  }
  for (const auto& c : chamber_sets(word)) {
    const int cx = (xcol(c.open) + xcol(c.open + 1) + xcol(c.close) + xcol(c.close + 1)) / 4;
    const int cy = (yrow(c.gap - 1) + yrow(c.gap)) / 2 + 4;
    os << "<text x=\"" << cx << "\" y=\"" << cy
       << "\" text-anchor=\"middle\" font-family=\"serif\" font-size=\"11\" fill=\"#1f4e9a\">"
       << chamber_label(c.members, n) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_wiring(const ReducedWord& word, RenderFormat format) {
  return format == RenderFormat::ascii ? render_ascii(word) : render_svg(word);
}

}  // namespace plc
