#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ptweyl/band_matrix.hpp"
#include "ptweyl/grid.hpp"
#include "ptweyl/types.hpp"

namespace ptweyl {

enum class Boundary { dirichlet };

// -d^2/dx^2 + U on the interior points of a grid.
struct OperatorMatrix {
  BandMatrix m;
  Grid grid;
  int order;
  Boundary bc = Boundary::dirichlet;

  int size() const { return m.size(); }
};

OperatorMatrix discretize_schrodinger(const Potential &u, const Grid &grid, int order = 2);

struct EigenDecomposition {
  CVector values;             // sorted by real part, then imaginary part
  Eigen::MatrixXcd vectors;   // columns match values; empty unless requested
  double max_residual = 0.0;  // max ||M v - l v|| / (||M|| ||v||), vectors only
};

inline constexpr int kDenseCap = 4096;

// LAPACK zgeev: Hessenberg reduction plus shifted QR.
EigenDecomposition eig_complex_dense(const Eigen::MatrixXcd &m, bool vectors = true, int cap = kDenseCap);
EigenDecomposition eig_complex_dense(const OperatorMatrix &m, bool vectors = true, int cap = kDenseCap);

// Eigenvalues of a complex symmetric tridiagonal matrix by implicit QL with
// complex orthogonal rotations. Throws NumericFailure on breakdown.
CVector eig_symmetric_tridiagonal(CVector diag, CVector off);

struct OracleOptions {
  double delta = 1e-3;          // bound states need Re l < -delta
  double decay_tol = 1e-5;      // |U| allowed at the outermost interior points
  double boundary_amp = 1e-4;   // eigenvector amplitude at the edges, relative to max
  int order = 2;
  bool force_dense = false;
};

struct BoundState {
  cplx value;
  CVector vector;  // interior points, unit 2-norm
  double residual;
};

std::vector<BoundState> bound_states(const Potential &u, const Grid &grid, const OracleOptions &opts = {});
CVector bound_spectrum(const Potential &u, const Grid &grid, const OracleOptions &opts = {});

struct SpectrumEntry {
  cplx closed_form;
  cplx numeric;
  double abs_err;
  bool matched;
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;
  CVector unmatched_numeric;
  double grid_l = 0.0;
  int grid_n = 0;
  int order = 0;

  bool all_matched() const;
};

// Greedy nearest neighbour, closed values taken in ascending |value|.
SpectrumReport match_spectra(const CVector &closed, const CVector &numeric, double tol);

struct ConvergenceResult {
  std::string name;
  RVector h;
  RVector errors;
  RVector ratios;
  bool inconclusive;
};

ConvergenceResult convergence_study(const std::string &name, const std::function<double(const Grid &)> &quantity,
                                    const std::vector<Grid> &grids);

// |lowest bound eigenvalue - exact|, for convergence_study.
std::function<double(const Grid &)> eigenvalue_error(const Potential &u, cplx exact, OracleOptions opts = {});

} // namespace ptweyl
