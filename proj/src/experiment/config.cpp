#include <cmath>
#include <sstream>

#include "flaglab/experiment/experiment.hpp"

#ifndef FLAGLAB_VERSION
#define FLAGLAB_VERSION "unknown"
#endif

namespace flaglab {

double ProbabilitySpec::resolve(std::size_t n, int d) const {
  switch (kind) {
    case Kind::p:
      return value;
    case Kind::c:
      return value * std::pow(static_cast<double>(n), -1.0 / d);
    case Kind::alpha:
      return std::pow(static_cast<double>(n), -value);
  }
  return value;
}

double ProbabilitySpec::scale(std::size_t n, int d) const {
  if (kind == Kind::c) return value;
  return resolve(n, d) * std::pow(static_cast<double>(n), 1.0 / d);
}

std::string ProbabilitySpec::to_string() const {
  std::ostringstream s;
  s << (kind == Kind::p ? "p=" : kind == Kind::c ? "c=" : "alpha=") << value;
  return s.str();
}

const char* to_string(Model m) { return m == Model::flag ? "flag" : "linial_meshulam"; }

Observables Observables::standard() {
  Observables o;
  o.fields = {Coefficients::gf(2), Coefficients::rationals()};
  o.census = true;
  o.collapse = true;
  o.face_degrees = true;
  o.morse = true;
  return o;
}

void ExperimentConfig::validate() const {
  if (d < 1) throw InputError("d must be at least 1");
  if (trials < 1) throw InputError("trials must be at least 1");
  if (workers < 1) throw InputError("workers must be at least 1");
  if (dim_cap >= 0 && dim_cap < d + 1 && (!obs.fields.empty() || obs.euler_check)) {
    throw InputError("dim_cap must be at least d + 1 to compute beta_d");
  }
  if (dim_cap >= 0 && dim_cap < 3 && obs.morse && d == 2) throw InputError("the Morse check needs dim_cap >= 3");
  const double pv = p();
  if (!(pv >= 0.0 && pv <= 1.0)) throw InputError("probability " + prob.to_string() + " resolves outside [0, 1]");
  if (obs.plant_projective_plane && obs.collapse) throw InputError("a planted projective plane is not a flag complex; disable collapse");
  for (int k : obs.torsion_degrees) {
    if (k < 1) throw InputError("torsion degrees must be at least 1");
    if (k + 1 > effective_cap() && model == Model::flag) throw InputError("torsion degree " + std::to_string(k) + " needs dim_cap >= " + std::to_string(k + 1));
  }
}

const char* library_version() { return FLAGLAB_VERSION; }

}  // namespace flaglab
