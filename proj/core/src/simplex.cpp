#include "mukai/simplex.hpp"

#include <cstddef>
#include <stdexcept>

#include "mukai/errors.hpp"

namespace mukai {

Rat rat_from_string(const std::string& text) { return Rat(text); }

namespace {

// Dense tableau simplex over exact rationals. Rows hold B^-1 [A | I] and
// B^-1 b; the artificial block doubles as B^-1 for certificate extraction.
class Tableau {
public:
  Tableau(const RatMat& a, const RatVec& b) : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
    for (const auto& row : a) {
      if (row.size() != n_) throw std::invalid_argument("simplex: ragged matrix");
    }
    if (b.size() != m_) throw std::invalid_argument("simplex: rhs length mismatch");
    rows_.assign(m_, RatVec(n_ + m_, Rat(0)));
    rhs_.assign(m_, Rat(0));
    sign_.assign(m_, 1);
    basis_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i] < 0;
      sign_[i] = flip ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? -a[i][j] : a[i][j];
      rhs_[i] = flip ? -b[i] : b[i];
      rows_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
  }

  // Minimizes the artificial sum. Returns true when it reaches zero.
  bool phase_one() {
    RatVec reduced(n_ + m_, Rat(0));
    // cost 1 on artificials, 0 elsewhere; all artificials start basic
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      Rat acc = j >= n_ ? Rat(1) : Rat(0);
      for (std::size_t i = 0; i < m_; ++i) acc -= rows_[i][j];
      reduced[j] = acc;
    }
    run(reduced, [this](std::size_t j) { return j >= n_ ? Rat(1) : Rat(0); });
    Rat infeas(0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) infeas += rhs_[i];
    }
    return infeas == 0;
  }

  // Farkas vector for the original system (valid after a failed phase one).
  RatVec farkas() const {
    RatVec y(m_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) {
      Rat acc(0);
      for (std::size_t k = 0; k < m_; ++k) {
        if (basis_[k] >= n_) acc += rows_[k][n_ + i];
      }
      y[i] = Rat(sign_[i]) * acc;
    }
    return y;
  }

  // After a successful phase one: pivot artificials out where possible and
  // drop redundant rows, so phase two never touches artificial columns.
  void drop_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0) {
          enter = j;
          break;
        }
      }
      if (enter < n_) pivot(i, enter); // rhs is zero here, stays feasible
    }
    std::size_t keep = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) continue; // redundant constraint
      if (keep != i) {
        rows_[keep] = std::move(rows_[i]);
        rhs_[keep] = std::move(rhs_[i]);
        basis_[keep] = basis_[i];
      }
      ++keep;
    }
    rows_.resize(keep);
    rhs_.resize(keep);
    basis_.resize(keep);
    m_ = keep;
    for (auto& row : rows_) row.resize(n_);
  }

  // Minimizes cost . x over the current feasible basis. Returns false when
  // the objective is unbounded below.
  bool phase_two(const RatVec& cost) {
    RatVec reduced(n_, Rat(0));
    for (std::size_t j = 0; j < n_; ++j) {
      Rat acc = cost[j];
      for (std::size_t i = 0; i < m_; ++i) acc -= cost[basis_[i]] * rows_[i][j];
      reduced[j] = acc;
    }
    return run(reduced, [&cost](std::size_t j) { return cost[j]; });
  }

  RatVec solution(std::size_t want) const {
    RatVec x(want, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < want) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

private:
  void pivot(std::size_t row, std::size_t col) {
    const Rat inv = Rat(1) / rows_[row][col];
    for (auto& v : rows_[row]) v *= inv;
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      const Rat factor = rows_[i][col];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        rows_[i][j] -= factor * rows_[row][j];
      }
      rhs_[i] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  // Bland's rule: smallest improving column, smallest basis index on ties.
  template <typename CostFn>
  bool run(RatVec& reduced, CostFn cost_of) {
    const std::size_t width = reduced.size();
    while (true) {
      std::size_t enter = width;
      for (std::size_t j = 0; j < width; ++j) {
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width) return true;

      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rhs_[i] / rows_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false; // unbounded

      pivot(leave, enter);
      // refresh reduced costs for the new basis
      for (std::size_t j = 0; j < width; ++j) {
        Rat acc = cost_of(j);
        for (std::size_t i = 0; i < m_; ++i) acc -= cost_of(basis_[i]) * rows_[i][j];
        reduced[j] = acc;
      }
    }
  }

  std::size_t m_;
  std::size_t n_;
  RatMat rows_;
  RatVec rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

} // namespace

FeasibilityResult solve_feasibility(const RatMat& a, const RatVec& b) {
  Tableau t(a, b);
  FeasibilityResult result;
  if (t.phase_one()) {
    result.feasible = true;
    result.x = t.solution(a.empty() ? 0 : a[0].size());
  } else {
    result.feasible = false;
    result.farkas = t.farkas();
  }
  return result;
}

OptimizeResult maximize(const RatMat& a, const RatVec& b, const RatVec& objective) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  if (objective.size() != n) throw std::invalid_argument("simplex: objective length mismatch");
  Tableau t(a, b);
  OptimizeResult result;
  if (!t.phase_one()) return result; // infeasible
  result.feasible = true;
  t.drop_artificials();
  RatVec cost(n);
  for (std::size_t j = 0; j < n; ++j) cost[j] = -objective[j];
  if (!t.phase_two(cost)) {
    result.unbounded = true;
    return result;
  }
  result.x = t.solution(n);
  result.objective = 0;
  for (std::size_t j = 0; j < n; ++j) result.objective += objective[j] * result.x[j];
  return result;
}

} // namespace mukai
