#pragma once

#include <vector>

#include "ramify/ground.hpp"

namespace ramify {

// Row-major matrix over O_K / pi^N.
using GMatrix = std::vector<std::vector<GroundElem>>;

// Solves A x = b for A (rows >= cols) whose columns span a saturated
// sublattice, i.e. some maximal minor is a unit.
class SaturatedSolver {
 public:
  SaturatedSolver(const GroundRing& R, const GMatrix& A);
  bool saturated() const { return saturated_; }
  // Coordinates of b; `residual_val` receives the least valuation of the
  // component of b outside the span (prec when b lies in the span mod pi^N).
  std::vector<GroundElem> solve(const std::vector<GroundElem>& b, int* residual_val = nullptr) const;

 private:
  const GroundRing* R_;
  int rows_, cols_;
  bool saturated_ = true;
  GMatrix T_;               // rows x rows transform
  std::vector<int> pivot_;  // pivot row of each column
};

// Sum of elementary-divisor valuations of the columns of A (v_K of the index
// of the column lattice inside its saturation); rows*prec when rank deficient.
long index_valuation(const GroundRing& R, GMatrix A);

}  // namespace ramify
