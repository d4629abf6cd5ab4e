#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ptweyl/errors.hpp"
#include "ptweyl/oracle.hpp"

namespace ptweyl {

// Implicit QL for complex symmetric tridiagonals: the real algorithm with
// complex "rotations" (c^2 + s^2 = 1, not unitary). Those can blow up when
// f^2 + g^2 is near zero; we detect that and give up instead of returning
// garbage, and the caller falls back to the dense solver.
CVector eig_symmetric_tridiagonal(CVector d, CVector e) {
  const int n = int(d.size());
  if (n == 0) return d;
  if (int(e.size()) != n - 1) throw PreconditionError("off-diagonal must have n - 1 entries");
  e.push_back(0.0);
  const double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxIter = 200;
  constexpr double kGrowth = 1e6;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxIter)
          throw NumericFailure("tridiagonal QL did not converge for eigenvalue " + std::to_string(l));
        cplx g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        cplx r = std::sqrt(g * g + 1.0);
        g = d[m] - d[l] + e[l] / (g + (std::abs(g + r) >= std::abs(g - r) ? r : -r));
        cplx s = 1.0, c = 1.0, p = 0.0;
        bool deflated = false;
        for (int i = m - 1; i >= l; --i) {
          const cplx f = s * e[i], b = c * e[i];
          r = std::sqrt(f * f + g * g);
          e[i + 1] = r;
          if (r == 0.0) {
            if (f != 0.0 || g != 0.0) throw NumericFailure("tridiagonal QL breakdown (isotropic rotation)");
            d[i + 1] -= p;
            e[m] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          if (std::abs(s) > kGrowth || std::abs(c) > kGrowth)
            throw NumericFailure("tridiagonal QL breakdown (rotation growth)");
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (deflated) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  for (auto v : d)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw NumericFailure("tridiagonal QL produced NaN");
  return d;
}

} // namespace ptweyl
