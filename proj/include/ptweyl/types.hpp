#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace ptweyl {

// All quantities use natural units (hbar = c = e = 1): lengths in 1/mu,
// energies in mu^2. The Fermi velocity survives only as a scale factor on
// Dirac energies.
struct UnitsConvention {};

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;
using RVector = std::vector<double>;

// Complex-valued function of a real position.
using ComplexFn = std::function<cplx(double)>;
using RealFn = std::function<double(double)>;

// A potential is sampled pointwise; operators are built from samples.
using Potential = ComplexFn;

inline constexpr cplx I{0.0, 1.0};

inline double sech(double x) { return 1.0 / std::cosh(x); }

} // namespace ptweyl
