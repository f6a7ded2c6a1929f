#pragma once

#include <vector>

#include "qpr/cycpoly.hpp"
#include "qpr/embedding.hpp"

namespace qpr {

struct RootFindResult {
  std::vector<ComplexApprox> roots;  // sorted by (re, im); error_bound certified
  bool converged = false;            // every bound below the target 2^(-precision/2)
  BigFloat achieved_bound;           // largest certified bound
};

// All deg(p) complex roots of p under zeta_N -> exp(2 pi i / N).  Simultaneous
// (Durand-Kerner) iteration followed by Newton refinement at doubled
// precision; each root carries a certified inclusion radius
// deg(p) |p(z)| / |p'(z)|.  Working precision doubles until the target
// 2^(-precision/2) is met or 1024 bits is reached; `converged` reports which.
RootFindResult complex_roots(const CycPoly& p, long precision_bits);

}  // namespace qpr
