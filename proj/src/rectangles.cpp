#include "plc/rectangles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "plc/errors.hpp"

namespace plc {

namespace {

using I64 = std::int64_t;

I64 halve_exact(I64 v) {
  if (v % 2 != 0) throw InvariantError("rectangle coordinate parity broken");
  return v / 2;
}

std::size_t band_index(const std::vector<I64>& cuts, I64 lo) {
  return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), lo) - cuts.begin());
}

/// Furthest reach from `start` in direction `dir` (+1/-1) along contiguous
/// segments [lo, hi] lying on one line.
I64 extend(const std::vector<std::pair<I64, I64>>& segments, I64 start, int dir) {
  I64 reach = start;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [lo, hi] : segments) {
      if (dir > 0 && lo <= reach && hi > reach) {
        reach = hi;
        grew = true;
      } else if (dir < 0 && hi >= reach && lo < reach) {
        reach = lo;
        grew = true;
      }
    }
  }
  return reach;
}

Rational centre_coordinate(const std::vector<std::size_t>& counts, const std::vector<I64>& cuts, bool& fallback,
                           const char* direction) {
  if (auto t = parity_boundary(counts)) return Rational(cuts[*t]);
  if (counts.size() != 1) {
    throw DomainError(std::string("centre is ambiguous: ") + direction + " diagonal counts have no parity boundary");
  }
  // A lone band: the even block is empty and the boundary is the band's
  // lower edge.
  fallback = true;
  return Rational(cuts[0]);
}

}  // namespace

std::vector<Component> components(const PartialQuiver& quiver) {
  std::vector<Component> out;
  const int left = quiver.leftmost_edge();
  const int right = quiver.rightmost_edge();
  int e = left;
  while (e >= right) {
    const Arrow type = quiver.label(e);
    int f = e;
    while (f - 1 >= right && quiver.label(f - 1) == type) --f;
    out.push_back(Component{type, f - 1, e + 1});
    e = f - 1;
  }
  return out;
}

std::string Rectangle::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
}

Rectangle rectangle_for_component(const Component& c, int rank) {
  const int n = rank;
  if (!(1 <= c.a && c.a < c.b && c.b <= n + 1)) {
    throw InvariantError("component edges out of range: a=" + std::to_string(c.a) + " b=" + std::to_string(c.b));
  }
  Rectangle r;
  if (c.type == Arrow::left) {
    r = Rectangle{0, c.a, n + 2 - c.b, n + c.a - c.b + 2};
  } else if (c.type == Arrow::right) {
    r = Rectangle{c.b - c.a - 1, c.b - 1, n + 1 - c.a, n + 1};
  } else {
    throw InvariantError("component without arrow type");
  }
  if (!(r.i < r.j && r.j < r.l && r.i < r.k && r.k < r.l && r.i + r.l == r.j + r.k)) {
    throw InvariantError("rectangle invariants fail for " + r.to_string());
  }
  return r;
}

Box box_at(const Rectangle& r, I64 x0) {
  return Box{x0 - r.j, x0 + r.j - 2 * r.i, x0 + r.j, x0 + 2 * r.l - r.j};
}

Rectangle rectangle_of_box(const Box& b) {
  const I64 x0 = halve_exact(b.u_lo + b.w_lo);
  const I64 j = halve_exact(b.w_lo - b.u_lo);
  const I64 i = halve_exact(x0 + j - b.u_hi);
  const I64 l = halve_exact(b.w_hi - x0 + j);
  return Rectangle{static_cast<int>(i), static_cast<int>(j), static_cast<int>(i + l - j), static_cast<int>(l)};
}

std::vector<RootColumn> roots_of_rectangle(const Box& b, int rank) {
  const I64 x0 = halve_exact(b.u_lo + b.w_lo);
  const I64 j = halve_exact(b.w_lo - b.u_lo);
  const I64 x_right = halve_exact(b.u_hi + b.w_hi);
  std::vector<RootColumn> out;
  for (I64 d = 0; x0 + d < x_right; ++d) {
    if ((d + j) % 2 == 0) continue;
    const I64 X = 2 * (x0 + d) + 1;  // doubled column coordinate
    const I64 lo = std::max((X - 2 * b.u_hi + 1) / 2, (2 * b.w_lo - X + 1) / 2);
    const I64 hi = std::min((X - 2 * b.u_lo - 1) / 2, (2 * b.w_hi - X - 1) / 2);
    if (lo > hi) continue;
    if (lo < 1 || hi > rank) throw InvariantError("root column leaves levels 1.." + std::to_string(rank));
    out.push_back(RootColumn{Rational(X, 2), PositiveRoot{static_cast<int>(lo), static_cast<int>(hi)}});
  }
  return out;
}

std::optional<std::size_t> parity_boundary(const std::vector<std::size_t>& counts) {
  std::optional<std::size_t> boundary;
  for (std::size_t t = 1; t < counts.size(); ++t) {
    if (counts[t] % 2 != counts[t - 1] % 2) {
      if (boundary) throw InvariantError("diagonal counts change parity more than once");
      boundary = t;
    }
  }
  return boundary;
}

RectangleConfiguration place_configuration(const std::vector<Component>& comps, int rank) {
  if (comps.empty()) throw DomainError("configuration needs at least one component");
  RectangleConfiguration cfg;
  cfg.rank = rank;

  // Placement: L then R share left corners, R then L share right corners.
  for (std::size_t t = 0; t < comps.size(); ++t) {
    const Rectangle r = rectangle_for_component(comps[t], rank);
    Box box;
    if (t == 0) {
      box = box_at(r, 0);
    } else {
      const PlacedRectangle& prev = cfg.placed.back();
      if (comps[t].type == prev.component.type || prev.component.a != comps[t].b - 1) {
        throw InvariantError("components do not alternate with matching edges");
      }
      if (prev.component.type == Arrow::left) {
        if (prev.rectangle.j != r.j) throw InvariantError("shared left corners on different levels");
        box = box_at(r, halve_exact(prev.box.u_lo + prev.box.w_lo));
      } else {
        if (prev.rectangle.k != r.k) throw InvariantError("shared right corners on different levels");
        const I64 prev_right_x = halve_exact(prev.box.u_hi + prev.box.w_hi);
        box = box_at(r, prev_right_x - (r.l - r.i));
      }
    }
    cfg.placed.push_back(PlacedRectangle{comps[t], r, box});
  }

  // Cells and diagonal counts.
  for (const auto& p : cfg.placed) {
    cfg.u_cuts.push_back(p.box.u_lo);
    cfg.u_cuts.push_back(p.box.u_hi);
    cfg.w_cuts.push_back(p.box.w_lo);
    cfg.w_cuts.push_back(p.box.w_hi);
  }
  for (auto* cuts : {&cfg.u_cuts, &cfg.w_cuts}) {
    std::sort(cuts->begin(), cuts->end());
    cuts->erase(std::unique(cuts->begin(), cuts->end()), cuts->end());
  }
  const std::size_t nu = cfg.u_cuts.size() - 1;
  const std::size_t nw = cfg.w_cuts.size() - 1;
  cfg.u_counts.assign(nu, 0);
  cfg.w_counts.assign(nw, 0);
  std::set<std::pair<std::size_t, std::size_t>> cells;
  for (const auto& p : cfg.placed) {
    for (std::size_t a = band_index(cfg.u_cuts, p.box.u_lo); cfg.u_cuts[a] < p.box.u_hi; ++a) {
      for (std::size_t c = band_index(cfg.w_cuts, p.box.w_lo); cfg.w_cuts[c] < p.box.w_hi; ++c) {
        cells.insert({a, c});
      }
    }
  }
  cfg.cells.assign(cells.begin(), cells.end());
  for (const auto& [a, c] : cfg.cells) {
    ++cfg.u_counts[a];
    ++cfg.w_counts[c];
  }
  for (std::size_t v : cfg.u_counts) {
    if (v == 0) throw InvariantError("empty u band in configuration");
  }
  for (std::size_t v : cfg.w_counts) {
    if (v == 0) throw InvariantError("empty w band in configuration");
  }

  cfg.u0 = centre_coordinate(cfg.u_counts, cfg.u_cuts, cfg.centre_fallback, "NW-SE");
  cfg.w0 = centre_coordinate(cfg.w_counts, cfg.w_cuts, cfg.centre_fallback, "NE-SW");

  // Corner points in chain order: the first rectangle's free corner, the
  // shared corners, the last rectangle's free corner.
  struct Raw {
    bool left;
    I64 u, w;
  };
  std::vector<Raw> raw;
  auto left_of = [](const Box& b) { return Raw{true, b.u_lo, b.w_lo}; };
  auto right_of = [](const Box& b) { return Raw{false, b.u_hi, b.w_hi}; };
  const auto& first = cfg.placed.front();
  const auto& last = cfg.placed.back();
  if (cfg.placed.size() == 1) {
    raw.push_back(left_of(first.box));
    raw.push_back(right_of(first.box));
  } else {
    raw.push_back(first.component.type == Arrow::left ? right_of(first.box) : left_of(first.box));
    for (std::size_t t = 0; t + 1 < cfg.placed.size(); ++t) {
      const auto& p = cfg.placed[t];
      raw.push_back(p.component.type == Arrow::left ? left_of(p.box) : right_of(p.box));
    }
    raw.push_back(last.component.type == Arrow::left ? left_of(last.box) : right_of(last.box));
  }

  // Drawn edge segments per line.
  std::map<I64, std::vector<std::pair<I64, I64>>> on_w_line, on_u_line;
  for (const auto& p : cfg.placed) {
    on_w_line[p.box.w_lo].push_back({p.box.u_lo, p.box.u_hi});
    on_w_line[p.box.w_hi].push_back({p.box.u_lo, p.box.u_hi});
    on_u_line[p.box.u_lo].push_back({p.box.w_lo, p.box.w_hi});
    on_u_line[p.box.u_hi].push_back({p.box.w_lo, p.box.w_hi});
  }

  const Rational m2 = cfg.u0 + cfg.w0;  // doubled central column
  std::set<std::pair<I64, I64>> seen;
  std::map<PositiveRoot, char> owner;
  for (const Raw& r : raw) {
    if (!seen.insert({r.u, r.w}).second) continue;
    CornerPoint cp;
    cp.label = static_cast<char>('A' + cfg.corners.size());
    cp.is_left = r.left;
    cp.u = r.u;
    cp.w = r.w;
    if (r.left) {
      cp.maximal = Box{r.u, extend(on_w_line[r.w], r.u, +1), r.w, extend(on_u_line[r.u], r.w, +1)};
    } else {
      cp.maximal = Box{extend(on_w_line[r.w], r.u, -1), r.u, extend(on_u_line[r.u], r.w, -1), r.w};
    }
    for (const RootColumn& col : roots_of_rectangle(cp.maximal, rank)) {
      const Rational x2 = col.x * 2;
      if (x2 == m2) {
        ++cfg.columns_on_central_line;
        continue;
      }
      if ((x2 < m2) != r.left) continue;
      auto [it, fresh] = owner.emplace(col.root, cp.label);
      if (!fresh) {
        throw InvariantError("root " + col.root.to_string() + " lies in Phi+ of corners " + std::string(1, it->second) +
                             " and " + std::string(1, cp.label));
      }
      cp.phi.push_back(col.root);
    }
    cfg.corners.push_back(std::move(cp));
  }
  return cfg;
}

RectangleConfiguration configuration(const PartialQuiver& quiver) {
  return place_configuration(components(quiver), quiver.rank());
}

std::vector<PositiveRoot> phi_plus(const PartialQuiver& quiver) {
  std::vector<PositiveRoot> out;
  for (const auto& c : configuration(quiver).corners) out.insert(out.end(), c.phi.begin(), c.phi.end());
  std::sort(out.begin(), out.end());
  return out;
}

Vector v_P(const PartialQuiver& quiver) {
  const auto roots = phi_plus(quiver);
  const auto order = positive_root_order(standard_words(quiver.rank()).first);
  Vector v = zero_vector(order.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    if (std::binary_search(roots.begin(), roots.end(), order[t])) v[t] = 1;
  }
  return v;
}

Vector v_generator(int gen, int rank) {
  if (gen < 1 || gen > rank) throw DomainError("generator " + std::to_string(gen) + " out of range");
  const ReducedWord j = standard_words(rank).first;
  Vector v = zero_vector(j.size());
  for (std::size_t t = 0; t < j.size(); ++t) {
    if (j[t] == gen) v[t] = 1;
  }
  return v;
}

std::vector<Vector> spanning_vectors(const ReducedWord& word) {
  std::vector<Vector> out;
  for (const auto& q : quivers_for_word(word)) out.push_back(v_P(q));
  for (int g = 1; g <= word.rank(); ++g) out.push_back(v_generator(g, word.rank()));
  return out;
}

namespace {

struct Frame {
  I64 x_min, x_max;
};

Frame frame_of(const RectangleConfiguration& cfg) {
  Frame f{0, 0};
  bool first = true;
  for (const auto& p : cfg.placed) {
    const I64 lo = halve_exact(p.box.u_lo + p.box.w_lo);
    const I64 hi = halve_exact(p.box.u_hi + p.box.w_hi);
    if (first || lo < f.x_min) f.x_min = lo;
    if (first || hi > f.x_max) f.x_max = hi;
    first = false;
  }
  for (const auto& c : cfg.corners) {
    f.x_min = std::min(f.x_min, halve_exact(c.maximal.u_lo + c.maximal.w_lo));
    f.x_max = std::max(f.x_max, halve_exact(c.maximal.u_hi + c.maximal.w_hi));
  }
  return f;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

std::string render_configuration_svg(const RectangleConfiguration& cfg) {
  constexpr double kUnit = 30, kMargin = 40;
  const Frame f = frame_of(cfg);
  auto sx = [&](double x) { return kMargin + (x - static_cast<double>(f.x_min)) * kUnit; };
  auto sy = [&](double level) { return kMargin + level * kUnit; };
  const double width = 2 * kMargin + static_cast<double>(f.x_max - f.x_min) * kUnit;
  const double height = 2 * kMargin + (cfg.rank + 1) * kUnit;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
     << "\" font-family=\"monospace\" font-size=\"11\">\n";
  auto point = [&](I64 u, I64 w) {
    return fmt(sx(static_cast<double>(u + w) / 2)) + "," + fmt(sy(static_cast<double>(w - u) / 2));
  };
  auto outline = [&](const Box& b, const char* style) {
    os << "  <polygon points=\"" << point(b.u_lo, b.w_lo) << " " << point(b.u_hi, b.w_lo) << " "
       << point(b.u_hi, b.w_hi) << " " << point(b.u_lo, b.w_hi) << "\" fill=\"none\" " << style << "/>\n";
  };
  for (const auto& c : cfg.corners) outline(c.maximal, "stroke=\"#bbbbbb\" stroke-dasharray=\"2,3\"");
  for (const auto& p : cfg.placed) {
    outline(p.box, "stroke=\"black\" stroke-width=\"1.5\"");
    for (const RootColumn& col : roots_of_rectangle(p.box, cfg.rank)) {
      for (int lev = col.root.first; lev <= col.root.last; ++lev) {
        os << "  <text x=\"" << fmt(sx(to_double(col.x))) << "\" y=\"" << fmt(sy(lev) + 4)
           << "\" text-anchor=\"middle\">" << lev << "</text>\n";
      }
    }
  }
  const double mx = sx(to_double(cfg.central_x()));
  os << "  <line x1=\"" << fmt(mx) << "\" y1=\"" << fmt(sy(-0.5)) << "\" x2=\"" << fmt(mx) << "\" y2=\""
     << fmt(sy(cfg.rank + 1.5)) << "\" stroke=\"red\" stroke-dasharray=\"6,4\"/>\n";
  os << "  <circle cx=\"" << fmt(mx) << "\" cy=\"" << fmt(sy(to_double(cfg.centre_level())))
     << "\" r=\"3\" fill=\"red\"/>\n";
  for (const auto& c : cfg.corners) {
    const double cx = sx(to_double(c.x()));
    const double cy = sy(to_double(c.level()));
    os << "  <text x=\"" << fmt(c.is_left ? cx - 8 : cx + 8) << "\" y=\"" << fmt(cy + 4) << "\" text-anchor=\""
       << (c.is_left ? "end" : "start") << "\" font-weight=\"bold\">" << c.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_configuration_ascii(const RectangleConfiguration& cfg) {
  const Frame f = frame_of(cfg);
  // Two characters per half column.
  const I64 columns = 2 * (f.x_max - f.x_min) + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(cfg.rank + 2), std::string(static_cast<std::size_t>(2 * columns), ' '));
  auto put = [&](I64 x2, I64 level, const std::string& s) {
    const I64 at = 2 * (x2 - 2 * f.x_min);
    if (level < 0 || level > cfg.rank + 1 || at < 0 || at + 1 >= 2 * columns) return;
    std::string& row = grid[static_cast<std::size_t>(level)];
    for (std::size_t c = 0; c < s.size() && c < 2; ++c) row[static_cast<std::size_t>(at) + c] = s[c];
  };
  const Rational m2 = cfg.central_x() * 2;
  if (denominator(m2) == 1) {
    const I64 mx = static_cast<I64>(numerator(m2));
    for (I64 lev = 0; lev <= cfg.rank + 1; ++lev) put(mx, lev, " :");
  }
  for (const auto& p : cfg.placed) {
    for (I64 lev = 0; lev <= cfg.rank + 1; ++lev) {
      // Edges u = const run down-right, edges w = const run down-left.
      for (I64 u : {p.box.u_lo, p.box.u_hi}) {
        const I64 w = u + 2 * lev;
        if (w >= p.box.w_lo && w <= p.box.w_hi) put(u + w, lev, " \\");
      }
      for (I64 w : {p.box.w_lo, p.box.w_hi}) {
        const I64 u = w - 2 * lev;
        if (u >= p.box.u_lo && u <= p.box.u_hi) put(u + w, lev, " /");
      }
    }
    for (const RootColumn& col : roots_of_rectangle(p.box, cfg.rank)) {
      const I64 x2 = static_cast<I64>(numerator(Rational(col.x * 2)));
      for (int lev = col.root.first; lev <= col.root.last; ++lev) {
        put(x2, lev, lev < 10 ? " " + std::to_string(lev) : std::to_string(lev));
      }
    }
  }
  for (const auto& c : cfg.corners) put(c.u + c.w, halve_exact(c.w - c.u), std::string(" ") + c.label);
  std::ostringstream os;
  for (auto& row : grid) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    os << row << "\n";
  }
  os << "central line x = " << cfg.central_x() << ", centre level " << cfg.centre_level() << "\n";
  return os.str();
}

}  // namespace plc
