#include "ptweyl/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "ptweyl/errors.hpp"

namespace ptweyl {

FieldProfile scarf2_profile(cplx amplitude, double mu) {
  return {"scarf2", [=](double x) { return amplitude * sech(mu * x); },
          [=](double x) { return -amplitude * mu * sech(mu * x) * std::tanh(mu * x); }};
}

FieldProfile constant_profile(cplx c) {
  return {"constant", [=](double) { return c; }, [](double) { return cplx(0.0); }};
}

FieldProfile tanh_profile(cplx amplitude, double mu) {
  return {"tanh", [=](double x) { return amplitude * std::tanh(mu * x); },
          [=](double x) {
            const double s = sech(mu * x);
            return amplitude * mu * s * s;
          }};
}

FieldProfile zero_profile() { return constant_profile(0.0); }

FieldProfile table_profile(const RVector &xs, const CVector &values) {
  if (xs.size() != values.size() || xs.size() < 2)
    throw PreconditionError("profile table needs at least two rows of equal length");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1])) throw PreconditionError("profile table x column must increase strictly");
  auto tx = std::make_shared<const RVector>(xs);
  auto tv = std::make_shared<const CVector>(values);
  ComplexFn f = [tx, tv](double x) -> cplx {
    const RVector &X = *tx;
    if (x < X.front() || x > X.back()) throw EvaluationError("outside profile table range", x);
    auto it = std::upper_bound(X.begin(), X.end(), x);
    std::size_t j = std::min<std::size_t>(std::size_t(it - X.begin()), X.size() - 1);
    const std::size_t i = j - 1;
    const double t = (x - X[i]) / (X[j] - X[i]);
    return (1.0 - t) * (*tv)[i] + t * (*tv)[j];
  };
  return {"custom-table", f, nullptr};
}

FieldProfile load_table_profile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open profile table " + path);
  RVector xs;
  CVector vs;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double c[3];
    int k = 0;
    while (k < 3 && ss >> c[k]) ++k;
    if (k == 0) continue;
    if (k < 2) throw PreconditionError("profile table row needs 2 or 3 columns: " + line);
    xs.push_back(c[0]);
    vs.emplace_back(c[1], k == 3 ? c[2] : 0.0);
  }
  return table_profile(xs, vs);
}

FieldProfile profile_by_name(const std::string &name, const ProfileParams &p) {
  if (name == "scarf2") return scarf2_profile(p.amplitude, p.mu);
  if (name == "constant") return constant_profile(p.amplitude);
  if (name == "tanh") return tanh_profile(p.amplitude, p.mu);
  if (name == "custom-table") return load_table_profile(p.table_path);
  throw UnsupportedProfile("unknown profile '" + name + "'");
}

} // namespace ptweyl
