#include "plc/polyhedra.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "plc/lp.hpp"

namespace plc {

namespace {

void check_dims(const HCone& cone) {
  for (const auto& a : cone.ineqs) {
    if (a.size() != cone.dim) throw DomainError("cone: inequality dimension mismatch");
  }
}

// Rows made primitive, zero rows dropped, exact duplicates removed, sorted.
std::vector<Vector> normalized_rows(const std::vector<Vector>& rows) {
  std::vector<Vector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (!is_zero(r)) out.push_back(primitive(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Inverse of a square nonsingular matrix by Gauss-Jordan.
Matrix inverse(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(m[p][col])) ++p;
    if (p == n) throw InvariantError("inverse: singular matrix");
    std::swap(m[p], m[col]);
    std::swap(inv[p], inv[col]);
    const Rational f = 1 / m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] *= f;
      inv[col][c] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      const Rational g = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= g * m[col][c];
        inv[r][c] -= g * inv[col][c];
      }
    }
  }
  return inv;
}

struct DdRay {
  Vector ray;
  boost::dynamic_bitset<> tight;
};

}  // namespace

bool HCone::contains(const Vector& point) const {
  for (const auto& a : ineqs) {
    if (sign(dot(a, point)) < 0) return false;
  }
  return true;
}

bool HCone::contains_strictly(const Vector& point) const {
  for (const auto& a : ineqs) {
    if (sign(dot(a, point)) <= 0) return false;
  }
  return true;
}

std::size_t HCone::facet_count() const {
  if (!irredundant) throw InvariantError("facet_count on a cone that has not been reduced");
  return ineqs.size();
}

HCone HCone::full_space(std::size_t dim) { return HCone{dim, {}, true}; }

HCone HCone::orthant(std::size_t dim) {
  HCone c{dim, {}, true};
  for (std::size_t i = 0; i < dim; ++i) c.ineqs.push_back(unit_vector(dim, i));
  return c;
}

bool lp_feasible(const HCone& cone, const std::vector<std::size_t>& strict) {
  check_dims(cone);
  Vector rhs = zero_vector(cone.ineqs.size());
  for (auto i : strict) rhs.at(i) = 1;
  return lp::feasible(cone.ineqs, rhs, cone.dim);
}

std::optional<Vector> interior_point(const HCone& cone) {
  check_dims(cone);
  Vector rhs(cone.ineqs.size(), Rational(1));
  return lp::find_point(cone.ineqs, rhs, cone.dim);
}

bool is_full_dimensional(const HCone& cone) { return interior_point(cone).has_value(); }

bool implies(const HCone& cone, const Vector& a) {
  Matrix rows = cone.ineqs;
  rows.push_back(negate(a));
  Vector rhs = zero_vector(rows.size());
  rhs.back() = 1;
  return !lp::feasible(rows, rhs, cone.dim);
}

HCone irredundant_h(const HCone& cone) {
  check_dims(cone);
  if (!is_full_dimensional(cone)) throw DegenerateCone("irredundant_h: cone is not full-dimensional");
  const std::vector<Vector> rows = normalized_rows(cone.ineqs);
  std::vector<bool> alive(rows.size(), true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    HCone others{cone.dim, {}, false};
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j != i && alive[j]) others.ineqs.push_back(rows[j]);
    }
    if (implies(others, rows[i])) alive[i] = false;
  }
  HCone out{cone.dim, {}, true};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (alive[i]) out.ineqs.push_back(rows[i]);
  }
  return out;
}

VCone extreme_rays(const HCone& cone) {
  check_dims(cone);
  const std::size_t k = cone.dim;
  const std::vector<Vector> rows = normalized_rows(cone.ineqs);
  if (k == 0) return VCone{0, {}};
  if (rank(rows) < k) {
    const auto kernel = null_space(rows, k);
    throw NotPointed("extreme_rays: cone contains a line", kernel.front());
  }
  const std::size_t m = rows.size();

  // Initial simplicial cone from k independent rows.
  std::vector<std::size_t> basis_rows;
  Matrix chosen;
  for (std::size_t i = 0; i < m && chosen.size() < k; ++i) {
    chosen.push_back(rows[i]);
    if (rank(chosen) < chosen.size()) {
      chosen.pop_back();
    } else {
      basis_rows.push_back(i);
    }
  }
  const Matrix inv = inverse(chosen);
  std::vector<DdRay> rays;
  for (std::size_t j = 0; j < k; ++j) {
    DdRay r{zero_vector(k), boost::dynamic_bitset<>(m)};
    for (std::size_t i = 0; i < k; ++i) r.ray[i] = inv[i][j];
    r.ray = primitive(r.ray);
    for (std::size_t b = 0; b < k; ++b) {
      if (b != j) r.tight.set(basis_rows[b]);
    }
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(m, false);
  for (auto b : basis_rows) processed[b] = true;
  for (std::size_t c = 0; c < m; ++c) {
    if (processed[c]) continue;
    processed[c] = true;
    const Vector& a = rows[c];
    std::vector<std::size_t> pos, neg;
    std::vector<Rational> values(rays.size());
    std::vector<DdRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      values[r] = dot(a, rays[r].ray);
      const int s = sign(values[r]);
      if (s > 0) {
        pos.push_back(r);
        next.push_back(rays[r]);
      } else if (s < 0) {
        neg.push_back(r);
      } else {
        next.push_back(rays[r]);
        next.back().tight.set(c);
      }
    }
    for (auto p : pos) {
      for (auto n : neg) {
        const auto common = rays[p].tight & rays[n].tight;
        if (common.count() + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Vector combined = subtract(scale(rays[n].ray, values[p]), scale(rays[p].ray, values[n]));
        DdRay nr{primitive(combined), common};
        nr.tight.set(c);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  VCone out{k, {}};
  for (auto& r : rays) out.rays.push_back(std::move(r.ray));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

HCone cone_from_rays(const VCone& v) {
  const std::size_t k = v.dim;
  for (const auto& r : v.rays) {
    if (r.size() != k) throw DomainError("cone_from_rays: ray dimension mismatch");
  }
  const auto orthogonal = null_space(v.rays, k);
  HCone dual{k, {}, false};
  for (const auto& r : v.rays) dual.ineqs.push_back(r);
  for (const auto& b : orthogonal) {
    dual.ineqs.push_back(b);
    dual.ineqs.push_back(negate(b));
  }
  HCone out{k, {}, false};
  if (!dual.ineqs.empty()) {
    for (auto& facet : extreme_rays(dual).rays) out.ineqs.push_back(std::move(facet));
  }
  for (const auto& b : orthogonal) {
    out.ineqs.push_back(b);
    out.ineqs.push_back(negate(b));
  }
  std::sort(out.ineqs.begin(), out.ineqs.end());
  return out;
}

bool contains(const HCone& outer, const HCone& inner) {
  if (outer.dim != inner.dim) throw DomainError("contains: dimension mismatch");
  for (const auto& a : outer.ineqs) {
    if (!implies(inner, a)) return false;
  }
  return true;
}

bool cone_equal(const HCone& a, const HCone& b) { return contains(a, b) && contains(b, a); }
bool cone_equal(const HCone& a, const VCone& b) { return cone_equal(a, cone_from_rays(b)); }
bool cone_equal(const VCone& a, const HCone& b) { return cone_equal(cone_from_rays(a), b); }
bool cone_equal(const VCone& a, const VCone& b) { return cone_equal(cone_from_rays(a), cone_from_rays(b)); }

HCone intersect(const HCone& a, const HCone& b) {
  if (a.dim != b.dim) throw DomainError("intersect: dimension mismatch");
  HCone out{a.dim, a.ineqs, false};
  out.ineqs.insert(out.ineqs.end(), b.ineqs.begin(), b.ineqs.end());
  return out;
}

bool interiors_meet(const HCone& a, const HCone& b) {
  const HCone both = intersect(a, b);
  return interior_point(both).has_value();
}

}  // namespace plc
