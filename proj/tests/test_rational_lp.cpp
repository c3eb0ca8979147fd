#include <doctest.h>

#include <random>

#include "plc/lp.hpp"
#include "plc/polyhedra.hpp"
#include "plc/rational.hpp"

using namespace plc;

namespace {

/// Exact 2D oracle: a homogeneous system has nonempty interior iff one of
/// the candidate directions (rows, and sums of boundary directions) is
/// strictly feasible.
bool interior_2d(const std::vector<Vector>& rows) {
  std::vector<Vector> dirs;
  for (const auto& a : rows) {
    dirs.push_back(a);
    dirs.push_back(Vector{-a[1], a[0]});
    dirs.push_back(Vector{a[1], -a[0]});
  }
  std::vector<Vector> candidates = dirs;
  for (const auto& p : dirs) {
    for (const auto& q : dirs) candidates.push_back(add(p, q));
  }
  if (rows.empty()) return true;
  for (const auto& c : candidates) {
    bool ok = !is_zero(c);
    for (const auto& a : rows) ok = ok && sign(dot(a, c)) > 0;
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("rational_lp") {
  TEST_CASE("determinant and rank") {
    Matrix m{{2, 1}, {1, 1}};
    CHECK(determinant(m) == 1);
    CHECK(rank(Matrix{{1, 2, 3}, {2, 4, 6}}) == 1);
    CHECK(determinant(identity_matrix(4)) == 1);
    CHECK(determinant(Matrix{{1, 2}, {2, 4}}) == 0);
  }

  TEST_CASE("null space is orthogonal and primitive") {
    const Matrix rows{{1, 1, 0}, {0, 1, 1}};
    const auto basis = null_space(rows, 3);
    REQUIRE(basis.size() == 1);
    for (const auto& r : rows) CHECK(dot(r, basis[0]) == 0);
    CHECK(primitive(basis[0]) == basis[0]);
  }

  TEST_CASE("primitive vectors") {
    CHECK(primitive(Vector{2, 4, -6}) == Vector{1, 2, -3});
    CHECK(primitive(Vector{Rational(1, 2), Rational(1, 3)}) == Vector{3, 2});
    CHECK(positively_parallel(Vector{1, 2}, Vector{2, 4}));
    CHECK_FALSE(positively_parallel(Vector{1, 2}, Vector{-1, -2}));
  }

  TEST_CASE("lp finds points of feasible systems") {
    // x + y >= 1, x - y >= 1, x <= 3 (as -x >= -3)
    const Matrix rows{{1, 1}, {1, -1}, {-1, 0}};
    const Vector rhs{1, 1, -3};
    auto p = lp::find_point(rows, rhs, 2);
    REQUIRE(p);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(dot(rows[i], *p) >= rhs[i]);
    CHECK_FALSE(lp::feasible(Matrix{{1, 0}, {-1, 0}}, Vector{1, 0}, 2));
  }

  TEST_CASE("strict feasibility agrees with an exact 2D oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3), count(1, 4);
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<Vector> rows;
      const int m = count(rng);
      for (int i = 0; i < m; ++i) {
        Vector a{coef(rng), coef(rng)};
        if (!is_zero(a)) rows.push_back(a);
      }
      CHECK(is_full_dimensional(HCone{2, rows, false}) == interior_2d(rows));
    }
  }
}
