// Regularized free energy: the delta-weighted |lap d|^2 term, the Frank
// elastic part, and the quartic unit-norm penalty, together with its exact
// L2-gradient (the variational derivative driving the director equation).
#pragma once

#include "elsim/field.hpp"
#include "elsim/oseen_frank.hpp"

namespace elsim {

enum class EpsSchedule { linear, seven_thirds };

struct RegularizationParams {
  double delta = 0.1;
  EpsSchedule schedule = EpsSchedule::linear;
  double epsilon = 0.1;

  static RegularizationParams make(double delta, EpsSchedule s) {
    if (!(delta > 0) || delta > 1.0)
      throw std::invalid_argument("delta must lie in (0,1]");
    RegularizationParams p;
    p.delta = delta;
    p.schedule = s;
    p.epsilon =
        s == EpsSchedule::linear ? delta : std::pow(delta, 7.0 / 3.0);
    return p;
  }
  // explicit penalty weight, for experiments decoupling the two parameters
  static RegularizationParams with_epsilon(double delta, double eps) {
    if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
    if (!(eps > 0)) throw std::invalid_argument("epsilon must be positive");
    RegularizationParams p;
    p.delta = delta;
    p.epsilon = eps;
    return p;
  }
};

struct RegEnergyTerms {
  double delta_term = 0;
  double frank = 0;
  double penalty = 0;
  double total() const { return delta_term + frank + penalty; }
};

// pointwise density; requires the second gradient in the sample
RegEnergyTerms reg_energy_density(const FrankConstants& c,
                                  const RegularizationParams& p,
                                  const DirectorSample& s);

// bundled physical model for a run
struct LeslieCoefficients {
  double mu1 = 0, mu2 = 0, mu3 = 0, mu4 = 1, mu5 = 0, mu6 = 0, lambda = 0;
};

struct PhysicsParams {
  EnergyModel model = EnergyModel::oseen_frank;
  FrankConstants frank;
  double K = 1.0;  // one-constant modulus
  LeslieCoefficients leslie;
  RegularizationParams reg;
};

// elastic/penalty ledger; all entries are grid quadratures over the box
struct EnergyBreakdown {
  double kinetic = 0;
  double frank_k[5] = {0, 0, 0, 0, 0};
  double penalty = 0;
  double reg_delta = 0;
  double total = 0;

  double elastic() const {
    return frank_k[0] + frank_k[1] + frank_k[2] + frank_k[3] + frank_k[4];
  }
};

// free energy of a director field (kinetic slot filled by the caller)
EnergyBreakdown total_free_energy(const SpecVec& d, const PhysicsParams& ph);

// q_delta = R_n(F_h - div F_S + (1/eps)(|d|^2-1)d) + delta lap^2 d.
// galerkin_n < 0 skips the projection (the continuous-system form).
SpecVec variational_derivative_q(const SpecVec& d, const PhysicsParams& ph,
                                 int galerkin_n);

// pointwise derivative kernels dispatching on the energy model
Mat3 model_deriv_S(const PhysicsParams& ph, const Vec3& h, const Mat3& S);
Vec3 model_deriv_h(const PhysicsParams& ph, const Vec3& h, const Mat3& S);

}  // namespace elsim
