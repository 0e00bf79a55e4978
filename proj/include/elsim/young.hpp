// Compactified Young-measure diagnostics: the transform carrying integrands
// to the closed unit balls in (h,S), empirical pairings of field families
// against a vetted list of admissible integrands, and a radial histogram
// summarizing where mass sits in the compactified coordinates.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "elsim/field.hpp"
#include "elsim/oseen_frank.hpp"

namespace elsim {

using Integrand = std::function<double(const Vec3& h, const Mat3& S)>;

struct PairingFunction {
  std::string name;
  Integrand f;
  Integrand recession;  // closed-form boundary extension, when known
  bool has_recession = false;
};

// f~(ht,St) = f(ht/sqrt(1-|ht|^2), St/sqrt(1-|St|^2)) (1-|ht|^2)(1-|St|^2);
// requires |ht| < 1 and |St| < 1, else throws (boundary values must come
// from the closed-form recession function)
double young_transform(const Integrand& f, const Vec3& ht, const Mat3& St);

// vetted integrands (membership in the admissible class is analytic, not
// machine-checked)
PairingFunction make_constant(double c);
PairingFunction make_h2S2();           // |h|^2 |S|^2, transform fixed point
PairingFunction make_support_probe();  // (|h|^2-1)(1+|S|^2) -> 2|ht|^2 - 1
PairingFunction make_linear(const Mat3& B);  // B : S
PairingFunction make_S_norm2();              // |S|^2
PairingFunction make_frank(const FrankConstants& c);
PairingFunction make_frank_term(const FrankConstants& c, int term);  // 1..5

// weighted point samples of (d, grad d); weights sum to the domain volume
struct SampleSet {
  std::vector<Vec3> h;
  std::vector<Mat3> S;
  std::vector<double> w;
};

SampleSet samples_from_director(const SpecVec& d);

// quadrature of f(d, grad d) over the domain
double pairing_value(const SampleSet& s, const PairingFunction& f);

// one value per family member; convergence or stagnation of this sequence is
// the numerical signature of oscillation/concentration content
std::vector<double> empirical_pairing(const std::vector<SampleSet>& family,
                                      const PairingFunction& f);

struct EmpiricalYoungMeasure {
  int bins = 16;
  double total_mass = 0;               // quadrature of (1+|h|^2)(1+|S|^2)
  std::vector<double> radial_mass;     // bins x bins over (|ht|, |St|)
  Vec3 h_mean;                         // mass-weighted mean of ht
  Mat3 S_mean;                         // mass-weighted mean of St
  double mass_at(int ih, int is) const { return radial_mass[ih * bins + is]; }
};

EmpiricalYoungMeasure empirical_measure(const SampleSet& s, int bins = 16);

}  // namespace elsim
