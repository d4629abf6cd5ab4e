#include "ptweyl/stencil.hpp"

#include "ptweyl/errors.hpp"

namespace ptweyl {

namespace {

void require_len(const CVector &f) {
  if (f.size() < 7) throw PreconditionError("O(h^4) stencils need at least 7 samples");
}

} // namespace

CVector derivative4(const CVector &f, double h) {
  require_len(f);
  const int n = int(f.size());
  CVector d(n);
  const double c = 1.0 / (12.0 * h);
  for (int i = 2; i < n - 2; ++i) d[i] = c * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
  d[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
  d[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
  d[n - 1] = -c * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]);
  d[n - 2] = -c * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]);
  return d;
}

CVector second_derivative4(const CVector &f, double h) {
  require_len(f);
  const int n = int(f.size());
  CVector d(n);
  const double c = 1.0 / (12.0 * h * h);
  for (int i = 2; i < n - 2; ++i)
    d[i] = c * (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]);
  // one-sided 6-point stencils, 4th order
  d[0] = c * (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]);
  d[1] = c * (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]);
  d[n - 1] = c * (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] + 61.0 * f[n - 5] -
                  10.0 * f[n - 6]);
  d[n - 2] = c * (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] - 6.0 * f[n - 5] +
                  f[n - 6]);
  return d;
}

BandMatrix first_derivative_matrix(int n, double h, int order) {
  if (order == 2) {
    BandMatrix m(n, 1);
    for (int i = 0; i < n; ++i) {
      if (i > 0) m.set(i, i - 1, -0.5 / h);
      if (i + 1 < n) m.set(i, i + 1, 0.5 / h);
    }
    return m;
  }
  if (order == 4) {
    BandMatrix m(n, 2);
    const double c = 1.0 / (12.0 * h);
    const double w[5] = {c, -8.0 * c, 0.0, 8.0 * c, -c};
    for (int i = 0; i < n; ++i)
      for (int o = -2; o <= 2; ++o)
        if (i + o >= 0 && i + o < n && w[o + 2] != 0.0) m.set(i, i + o, w[o + 2]);
    return m;
  }
  throw PreconditionError("stencil order must be 2 or 4");
}

BandMatrix second_derivative_matrix(int n, double h, int order) {
  if (order == 2) {
    BandMatrix m(n, 1);
    const double c = 1.0 / (h * h);
    for (int i = 0; i < n; ++i) {
      m.set(i, i, -2.0 * c);
      if (i > 0) m.set(i, i - 1, c);
      if (i + 1 < n) m.set(i, i + 1, c);
    }
    return m;
  }
  if (order == 4) {
    BandMatrix m(n, 2);
    const double c = 1.0 / (12.0 * h * h);
    const double w[5] = {-c, 16.0 * c, -30.0 * c, 16.0 * c, -c};
    for (int i = 0; i < n; ++i)
      for (int o = -2; o <= 2; ++o)
        if (i + o >= 0 && i + o < n) m.set(i, i + o, w[o + 2]);
    return m;
  }
  throw PreconditionError("stencil order must be 2 or 4");
}

} // namespace ptweyl
