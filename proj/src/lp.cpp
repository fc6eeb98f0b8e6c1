#include "acausal/lp.hpp"

#include <algorithm>
#include <cstddef>

#include "acausal/errors.hpp"

namespace acausal {

void LinearProgram::validate() const {
  if (objective.size() != std::size_t(polytope.nonneg_count))
    throw DimensionMismatchError(
        "objective length must equal the number of coordinates");
  if (polytope.eq_lhs.cols() != polytope.nonneg_count)
    throw DimensionMismatchError("malformed polytope");
}

RatVector game_objective(const Game& game,
                         const std::vector<PartyProgram>& programs) {
  game.validate();
  if (programs.size() != std::size_t(game.n))
    throw DimensionMismatchError("need one program per party");
  for (const auto& p : programs) {
    p.validate();
    if (p.d != game.d || p.x_size != game.d ||
        p.a_size != game.d * game.m_size)
      throw DimensionMismatchError("program alphabets do not match the game");
  }
  std::size_t dim = game.joint_dim();
  RatVector c(dim * dim, Rat(0));

  std::vector<int> a_digits(game.n), i_digits(game.n), o_digits(game.n);
  auto decompose = [&](std::size_t joint, std::vector<int>& digits) {
    for (int j = game.n - 1; j >= 0; --j) {
      digits[j] = int(joint % std::size_t(game.d));
      joint /= std::size_t(game.d);
    }
  };

  // c[o * dim + i] = sum over (a, m) of P(a, m) times the probability that
  // the programs, fed (setting, i), emit o and a winning x.
  for (std::size_t a = 0; a < dim; ++a) {
    decompose(a, a_digits);
    for (int m = 0; m < game.m_size; ++m) {
      const Rat& weight = game.input_distribution[a * game.m_size + m];
      if (weight == 0) continue;
      for (std::size_t i = 0; i < dim; ++i) {
        decompose(i, i_digits);
        for (std::size_t o = 0; o < dim; ++o) {
          decompose(o, o_digits);
          Rat win = 0;
          for (std::size_t x = 0; x < dim; ++x) {
            if (!game.wins(a, m, x)) continue;
            Rat term = 1;
            std::size_t xr = x;
            for (int j = game.n - 1; j >= 0 && term != 0; --j) {
              int xj = int(xr % std::size_t(game.d));
              xr /= std::size_t(game.d);
              term *= programs[j].at(xj, o_digits[j],
                                     a_digits[j] * game.m_size + m,
                                     i_digits[j]);
            }
            win += term;
          }
          c[o * dim + i] += weight * win;
        }
      }
    }
  }
  return c;
}

namespace {

// Dense exact simplex tableau. Columns 0..n-1 are the structural
// variables; artificial columns follow during phase 1.
class Simplex {
 public:
  Simplex(const RatMatrix& eq_lhs, const RatVector& eq_rhs)
      : m_(eq_lhs.rows()), n_(eq_lhs.cols()) {
    rows_.assign(m_, RatVector(n_ + m_ + 1, Rat(0)));
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      int sign = eq_rhs[r] < 0 ? -1 : 1;
      for (std::size_t c = 0; c < n_; ++c)
        rows_[r][c] = sign < 0 ? Rat(-eq_lhs(r, c)) : eq_lhs(r, c);
      rows_[r][n_ + r] = 1;
      rows_[r][n_ + m_] = sign < 0 ? Rat(-eq_rhs[r]) : eq_rhs[r];
      basis_[r] = n_ + r;
    }
  }

  // Returns false when the constraints are infeasible.
  bool phase1() {
    RatVector obj(n_ + m_, Rat(0));
    for (std::size_t c = 0; c < n_; ++c) {
      // Maximizing -sum(artificials), priced out over the artificial
      // basis, gives structural reduced costs +sum of column entries.
      Rat coeff = 0;
      for (std::size_t r = 0; r < m_; ++r) coeff += rows_[r][c];
      obj[c] = coeff;
    }
    Rat value = 0;
    for (std::size_t r = 0; r < m_; ++r) value -= rows_[r][n_ + m_];
    run(obj, value, n_ + m_);
    if (value != 0) return false;
    // Pivot any zero-valued artificial out of the basis when possible.
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      std::size_t enter = n_;
      for (std::size_t c = 0; c < n_; ++c)
        if (rows_[r][c] != 0) {
          enter = c;
          break;
        }
      if (enter < n_) pivot(r, enter);
    }
    return true;
  }

  Rat phase2(const RatVector& objective) {
    RatVector obj(n_ + m_, Rat(0));
    Rat value = 0;
    for (std::size_t c = 0; c < n_; ++c) obj[c] = objective[c];
    // Price out the current basis.
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] >= n_ || obj[basis_[r]] == 0) continue;
      Rat coeff = obj[basis_[r]];
      for (std::size_t c = 0; c < n_ + m_; ++c) obj[c] -= coeff * rows_[r][c];
      value += coeff * rows_[r][n_ + m_];
    }
    run(obj, value, n_);  // artificial columns may not re-enter
    return value;
  }

  RatVector solution() const {
    RatVector x(n_, Rat(0));
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) x[basis_[r]] = rows_[r][n_ + m_];
    return x;
  }

 private:
  void run(RatVector& obj, Rat& value, std::size_t enter_limit) {
    const int dantzig_steps = 256;
    for (int iter = 0;; ++iter) {
      std::size_t enter = enter_limit;
      if (iter < dantzig_steps) {
        const Rat* best = nullptr;
        for (std::size_t c = 0; c < enter_limit; ++c)
          if (obj[c] > 0 && (!best || obj[c] > *best)) {
            best = &obj[c];
            enter = c;
          }
      } else {  // Bland's rule: smallest index with positive reduced cost
        for (std::size_t c = 0; c < enter_limit; ++c)
          if (obj[c] > 0) {
            enter = c;
            break;
          }
      }
      if (enter == enter_limit) return;  // optimal

      std::size_t leave = m_;
      Rat best_ratio = 0;
      for (std::size_t r = 0; r < m_; ++r) {
        if (rows_[r][enter] <= 0) continue;
        Rat ratio = rows_[r][n_ + m_] / rows_[r][enter];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == m_)
        throw InternalCheckError(
            "unbounded linear program over a bounded polytope");
      pivot(leave, enter);
      Rat coeff = obj[enter];
      if (coeff != 0) {
        for (std::size_t c = 0; c < n_ + m_; ++c)
          obj[c] -= coeff * rows_[leave][c];
        value += coeff * rows_[leave][n_ + m_];
      }
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rat inv = Rat(1) / rows_[row][col];
    for (auto& entry : rows_[row]) entry *= inv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || rows_[r][col] == 0) continue;
      Rat factor = rows_[r][col];
      for (std::size_t c = 0; c <= n_ + m_; ++c)
        rows_[r][c] -= factor * rows_[row][c];
    }
    basis_[row] = col;
  }

  std::size_t m_, n_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::pair<Rat, Vertex> maximize(const LinearProgram& lp) {
  lp.validate();
  Simplex simplex(lp.polytope.eq_lhs, lp.polytope.eq_rhs);
  if (!simplex.phase1())
    throw InconsistencyError("the polytope is empty");
  Rat value = simplex.phase2(lp.objective);
  Vertex vertex;
  vertex.point = simplex.solution();
  vertex.deterministic = std::all_of(
      vertex.point.begin(), vertex.point.end(),
      [](const Rat& v) { return v == 0 || v == 1; });
  if (!is_vertex(lp.polytope, vertex.point))
    throw InternalCheckError("simplex argmax failed the vertex certificate");
  return {value, vertex};
}

}  // namespace acausal
