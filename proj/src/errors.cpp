#include "ptweyl/errors.hpp"

#include <sstream>

namespace ptweyl {

namespace {

std::string fmt(cplx v) {
  std::ostringstream s;
  s.precision(17);
  s << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
  return s.str();
}

std::string crossings_msg(const std::vector<double> &xs) {
  std::ostringstream s;
  s.precision(10);
  s << "velocity vanishes on the grid near x =";
  for (double x : xs) s << " " << x;
  return s.str();
}

} // namespace

TranscriptionMismatch::TranscriptionMismatch(cplx printed, cplx definitional, double x)
    : Error("quoted expansion " + fmt(printed) + " disagrees with definitional value " + fmt(definitional) +
            " at x = " + std::to_string(x)),
      printed_(printed), definitional_(definitional), x_(x) {}

SingularVelocity::SingularVelocity(std::vector<double> crossings)
    : Error(crossings_msg(crossings)), crossings_(std::move(crossings)) {}

} // namespace ptweyl
