#pragma once

#include <string>

#include "ptweyl/types.hpp"

namespace ptweyl {

// Vector-potential profile A_y(x). The derivative is analytic when present;
// tabulated profiles carry none.
struct FieldProfile {
  std::string name;
  ComplexFn value;
  ComplexFn derivative;

  bool has_derivative() const { return static_cast<bool>(derivative); }
};

FieldProfile scarf2_profile(cplx amplitude, double mu);   // amplitude * sech(mu x)
FieldProfile constant_profile(cplx c);
FieldProfile tanh_profile(cplx amplitude, double mu);     // amplitude * tanh(mu x)
FieldProfile zero_profile();

// Linear interpolation through (x, Re A_y[, Im A_y]) rows; x strictly increasing.
FieldProfile table_profile(const RVector &xs, const CVector &values);
FieldProfile load_table_profile(const std::string &path);

struct ProfileParams {
  double amplitude = 1.0;
  double mu = 1.0;
  std::string table_path;
};

// Catalog lookup: "scarf2", "constant", "tanh", "custom-table".
FieldProfile profile_by_name(const std::string &name, const ProfileParams &params);

} // namespace ptweyl
