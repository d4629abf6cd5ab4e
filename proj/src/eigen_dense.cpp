#include <algorithm>
#include <complex>
#include <numeric>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "ptweyl/errors.hpp"
#include "ptweyl/oracle.hpp"

namespace ptweyl {

EigenDecomposition eig_complex_dense(const Eigen::MatrixXcd &m, bool vectors, int cap) {
  const int n = int(m.rows());
  if (m.cols() != n) throw PreconditionError("eigensolver needs a square matrix");
  if (n > cap) throw PreconditionError("matrix dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (!m.allFinite()) throw NumericFailure("matrix has non-finite entries");
  EigenDecomposition out;
  if (n == 0) return out;

  Eigen::MatrixXcd a = m;
  CVector w(n);
  Eigen::MatrixXcd vr;
  if (vectors) vr.resize(n, n);
  std::complex<double> dummy;
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', vectors ? 'V' : 'N', n, a.data(), n, w.data(),
                                        &dummy, 1, vectors ? vr.data() : &dummy, vectors ? n : 1);
  if (info > 0)
    throw NumericFailure("QR iteration failed to converge; eigenvalues " + std::to_string(info) + ".. not found");
  if (info < 0) throw NumericFailure("zgeev argument " + std::to_string(-info) + " invalid");

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    if (w[i].real() != w[j].real()) return w[i].real() < w[j].real();
    return w[i].imag() < w[j].imag();
  });
  out.values.resize(n);
  for (int k = 0; k < n; ++k) out.values[k] = w[idx[k]];
  if (vectors) {
    out.vectors.resize(n, n);
    const double mnorm = std::max(m.cwiseAbs().rowwise().sum().maxCoeff(), 1e-300);
    for (int k = 0; k < n; ++k) {
      out.vectors.col(k) = vr.col(idx[k]);
      const auto &v = out.vectors.col(k);
      const double r = (m * v - out.values[k] * v).norm() / (mnorm * v.norm());
      out.max_residual = std::max(out.max_residual, r);
    }
    if (out.max_residual > 1e-8)
      throw NumericFailure("eigenpair residual " + std::to_string(out.max_residual) + " above 1e-8");
  }
  return out;
}

EigenDecomposition eig_complex_dense(const OperatorMatrix &m, bool vectors, int cap) {
  if (m.size() > cap)
    throw PreconditionError("matrix dimension " + std::to_string(m.size()) + " exceeds cap " + std::to_string(cap));
  return eig_complex_dense(m.m.dense(), vectors, cap);
}

} // namespace ptweyl
