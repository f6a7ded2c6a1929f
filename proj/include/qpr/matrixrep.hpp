#pragma once

#include <vector>

#include "qpr/cyclotomic.hpp"
#include "qpr/matrix.hpp"

namespace qpr {

// Matrices of a module over a sector algebra: one matrix per nilpotent
// generator (y absent for theta = 1, signalled by a 0x0 matrix) and one
// diagonal matrix per group generator h_u.
template <class S>
struct GenMatrices {
  long long dim = 0;
  Mat<S> x;
  Mat<S> y;                // 0x0 when the presentation has no y
  std::vector<Mat<S>> h;   // one per invariant factor

  bool has_y() const { return y.rows() > 0; }
};

using MatrixRep = GenMatrices<CycNum>;

}  // namespace qpr
