#include "plc/rational.hpp"

#include <sstream>
#include <utility>

#include "plc/errors.hpp"

namespace plc {

Vector zero_vector(std::size_t dim) { return Vector(dim, Rational(0)); }

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v = zero_vector(dim);
  v.at(index) = 1;
  return v;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  }
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}

Vector subtract(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return r;
}

Vector scale(const Vector& a, const Rational& factor) {
  Vector r(a);
  for (auto& x : r) x *= factor;
  return r;
}

Vector negate(const Vector& a) { return scale(a, Rational(-1)); }

bool is_zero(const Vector& a) {
  for (const auto& x : a) {
    if (!is_zero(x)) return false;
  }
  return true;
}

Vector primitive(const Vector& a) {
  Integer lcm_den = 1;
  for (const auto& x : a) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  Integer content = 0;
  std::vector<Integer> ints;
  ints.reserve(a.size());
  for (const auto& x : a) {
    Integer v = numerator(x) * (lcm_den / denominator(x));
    content = boost::multiprecision::gcd(content, v);
    ints.push_back(std::move(v));
  }
  Vector r;
  r.reserve(a.size());
  for (auto& v : ints) r.emplace_back(content == 0 ? Integer(0) : Integer(v / abs(content)));
  return r;
}

bool positively_parallel(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  return primitive(a) == primitive(b) && !is_zero(a);
}

Matrix identity_matrix(std::size_t dim) {
  Matrix m(dim, zero_vector(dim));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

Vector multiply(const Matrix& m, const Vector& x) {
  Vector r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(dot(row, x));
  return r;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const Matrix bt = transpose(b);
  Matrix r;
  r.reserve(a.size());
  for (const auto& row : a) r.push_back(multiply(bt, row));
  return r;
}

Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && is_zero(m[p][col])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix rows) {
  if (rows.empty()) return 0;
  return row_reduce(rows, rows[0].size()).size();
}

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(m[p][col])) ++p;
    if (p == n) return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::vector<Vector> null_space(const Matrix& rows, std::size_t dim) {
  Matrix m = rows;
  const auto pivots = row_reduce(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(dim);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace plc
