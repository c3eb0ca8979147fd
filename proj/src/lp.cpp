#include "plc/lp.hpp"

#include <atomic>
#include <limits>

#include "plc/errors.hpp"

namespace plc::lp {

namespace {

std::atomic<std::size_t> g_solves{0};

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Phase-one tableau. Columns: x+ (dim), x- (dim), surplus (m), artificials.
class Tableau {
 public:
  Tableau(const Matrix& rows, const Vector& rhs, std::size_t dim) : dim_(dim), m_(rows.size()) {
    std::size_t artificials = 0;
    for (const auto& b : rhs) artificials += sign(b) > 0 ? 1 : 0;
    cols_ = 2 * dim_ + m_ + artificials;
    t_.assign(m_, Vector(cols_ + 1, Rational(0)));
    cost_.assign(cols_ + 1, Rational(0));
    basis_.assign(m_, kNone);
    banned_.assign(cols_, false);
    first_artificial_ = 2 * dim_ + m_;
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < m_; ++i) {
      auto& row = t_[i];
      const bool positive = sign(rhs[i]) > 0;
      const int s = positive ? 1 : -1;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (is_zero(rows[i][j])) continue;
        row[j] = s * rows[i][j];
        row[dim_ + j] = -s * rows[i][j];
      }
      row[2 * dim_ + i] = -s;
      row[cols_] = s * rhs[i];
      if (positive) {
        row[next_art] = 1;
        basis_[i] = next_art;
        cost_[next_art] = 1;
        ++next_art;
      } else {
        basis_[i] = 2 * dim_ + i;
      }
    }
    // Reduced costs: subtract the artificial rows from the cost row.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!is_zero(t_[i][j])) cost_[j] -= t_[i][j];
      }
    }
  }

  bool run() {
    while (true) {
      if (is_zero(cost_[cols_])) return true;  // no artificial weight left
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!banned_[j] && sign(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return false;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sign(t_[i][enter]) <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) {
        // Unbounded below cannot happen: the phase-one objective is >= 0.
        throw InvariantError("lp: unbounded phase-one objective");
      }
      pivot(leave, enter);
    }
  }

  Vector solution() const {
    Vector x = zero_vector(dim_);
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t b = basis_[i];
      if (b < dim_) x[b] += t_[i][cols_];
      else if (b < 2 * dim_) x[b - dim_] -= t_[i][cols_];
    }
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    auto& prow = t_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (is_zero(prow[j])) continue;
      prow[j] *= inv;
      nz.push_back(j);
    }
    auto eliminate = [&](Vector& row) {
      if (is_zero(row[c])) return;
      const Rational f = row[c];
      for (auto j : nz) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != r) eliminate(t_[i]);
    }
    eliminate(cost_);
    if (basis_[r] >= first_artificial_) banned_[basis_[r]] = true;
    basis_[r] = c;
  }

  std::size_t dim_;
  std::size_t m_;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  std::vector<Vector> t_;
  Vector cost_;
  std::vector<std::size_t> basis_;
  std::vector<bool> banned_;
};

}  // namespace

std::optional<Vector> find_point(const Matrix& rows, const Vector& rhs, std::size_t dim) {
  if (rows.size() != rhs.size()) throw DomainError("lp: rows/rhs size mismatch");
  for (const auto& r : rows) {
    if (r.size() != dim) throw DomainError("lp: row dimension mismatch");
  }
  bool any_positive = false;
  for (const auto& b : rhs) any_positive = any_positive || sign(b) > 0;
  if (!any_positive) return zero_vector(dim);
  ++g_solves;
  Tableau tableau(rows, rhs, dim);
  if (!tableau.run()) return std::nullopt;
  return tableau.solution();
}

bool feasible(const Matrix& rows, const Vector& rhs, std::size_t dim) {
  return find_point(rows, rhs, dim).has_value();
}

std::size_t solve_count() { return g_solves.load(); }

}  // namespace plc::lp
