#pragma once

#include "ptweyl/band_matrix.hpp"
#include "ptweyl/types.hpp"

namespace ptweyl {

// O(h^4) derivatives of uniformly sampled data. Interior points use the
// 5-point central stencil, the two points at each edge one-sided ones.
// Need at least 7 samples.
CVector derivative4(const CVector &f, double h);
CVector second_derivative4(const CVector &f, double h);

// Central-difference operators on n nodes. Neighbours outside [0, n) are
// taken as zero, which is the Dirichlet truncation when the nodes are the
// interior of a grid.
BandMatrix first_derivative_matrix(int n, double h, int order);
BandMatrix second_derivative_matrix(int n, double h, int order);

} // namespace ptweyl
