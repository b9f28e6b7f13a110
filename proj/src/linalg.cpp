#include "ramify/linalg.hpp"

#include <algorithm>

#include "ramify/errors.hpp"

namespace ramify {

SaturatedSolver::SaturatedSolver(const GroundRing& R, const GMatrix& A) : R_(&R) {
  rows_ = static_cast<int>(A.size());
  cols_ = rows_ ? static_cast<int>(A[0].size()) : 0;
  GMatrix M = A;
  T_.assign(rows_, std::vector<GroundElem>(rows_));
  for (int i = 0; i < rows_; ++i) T_[i][i] = R.one();
  std::vector<bool> used(rows_, false);
  pivot_.assign(cols_, -1);
  GroundElem tmp;
  for (int j = 0; j < cols_; ++j) {
    int pr = -1;
    for (int i = 0; i < rows_ && pr < 0; ++i)
      if (!used[i] && R.val(M[i][j]) == 0) pr = i;
    if (pr < 0) {
      saturated_ = false;
      return;
    }
    used[pr] = true;
    pivot_[j] = pr;
    GroundElem inv = R.inv_unit(M[pr][j]);
    for (int k = 0; k < cols_; ++k) R.mul(M[pr][k], M[pr][k], inv);
    for (int k = 0; k < rows_; ++k) R.mul(T_[pr][k], T_[pr][k], inv);
    for (int i = 0; i < rows_; ++i) {
      if (i == pr || R.is_zero(M[i][j])) continue;
      GroundElem c = M[i][j];
      for (int k = 0; k < cols_; ++k) {
        R.mul(tmp, c, M[pr][k]);
        R.sub(M[i][k], M[i][k], tmp);
      }
      for (int k = 0; k < rows_; ++k) {
        R.mul(tmp, c, T_[pr][k]);
        R.sub(T_[i][k], T_[i][k], tmp);
      }
    }
  }
}

std::vector<GroundElem> SaturatedSolver::solve(const std::vector<GroundElem>& b, int* residual_val) const {
  if (!saturated_) throw DomainError("solve on a non-saturated system");
  const GroundRing& R = *R_;
  std::vector<GroundElem> tb(rows_);
  for (int i = 0; i < rows_; ++i) {
    GroundElem acc;
    for (int k = 0; k < rows_; ++k)
      if (!R.is_zero(T_[i][k]) && !R.is_zero(b[k])) R.addmul(acc, T_[i][k], b[k]);
    R.normalize(acc);
    tb[i] = std::move(acc);
  }
  std::vector<GroundElem> x(cols_);
  std::vector<bool> is_pivot(rows_, false);
  for (int j = 0; j < cols_; ++j) {
    x[j] = tb[pivot_[j]];
    is_pivot[pivot_[j]] = true;
  }
  if (residual_val) {
    *residual_val = R.prec();
    for (int i = 0; i < rows_; ++i)
      if (!is_pivot[i]) *residual_val = std::min(*residual_val, R.val(tb[i]));
  }
  return x;
}

long index_valuation(const GroundRing& R, GMatrix M) {
  const int rows = static_cast<int>(M.size());
  const int cols = rows ? static_cast<int>(M[0].size()) : 0;
  std::vector<bool> row_used(rows, false), col_used(cols, false);
  long total = 0;
  GroundElem tmp;
  for (int step = 0; step < cols; ++step) {
    int bi = -1, bj = -1, bv = R.prec();
    for (int i = 0; i < rows; ++i) {
      if (row_used[i]) continue;
      for (int j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        int v = R.val(M[i][j]);
        if (v < bv) bv = v, bi = i, bj = j;
      }
    }
    if (bi < 0) return total + static_cast<long>(cols - step) * R.prec();
    total += bv;
    row_used[bi] = col_used[bj] = true;
    GroundElem unit_inv = R.inv_unit(R.div_uniformizer(M[bi][bj], bv));
    for (int i = 0; i < rows; ++i) {
      if (row_used[i] || R.is_zero(M[i][bj])) continue;
      GroundElem c = R.div_uniformizer(M[i][bj], bv);
      R.mul(c, c, unit_inv);
      for (int j = 0; j < cols; ++j) {
        R.mul(tmp, c, M[bi][j]);
        R.sub(M[i][j], M[i][j], tmp);
      }
    }
  }
  return total;
}

}  // namespace ramify
