#include "elsim/young.hpp"

#include <cmath>
#include <stdexcept>

namespace elsim {

double young_transform(const Integrand& f, const Vec3& ht, const Mat3& St) {
  const double h2 = norm2(ht);
  const double s2 = norm2(St);
  if (h2 >= 1.0 || s2 >= 1.0)
    throw std::domain_error(
        "transform argument on or outside the unit ball; use the recession "
        "function for boundary values");
  const double fh = 1.0 / std::sqrt(1.0 - h2);
  const double fs = 1.0 / std::sqrt(1.0 - s2);
  return f(fh * ht, fs * St) * (1.0 - h2) * (1.0 - s2);
}

PairingFunction make_constant(double c) {
  PairingFunction p;
  p.name = "const";
  p.f = [c](const Vec3&, const Mat3&) { return c; };
  p.recession = [c](const Vec3& ht, const Mat3& St) {
    return c * (1.0 - norm2(ht)) * (1.0 - norm2(St));
  };
  p.has_recession = true;
  return p;
}

PairingFunction make_h2S2() {
  PairingFunction p;
  p.name = "h2S2";
  p.f = [](const Vec3& h, const Mat3& S) { return norm2(h) * norm2(S); };
  p.recession = p.f;  // transform fixed point
  p.has_recession = true;
  return p;
}

PairingFunction make_support_probe() {
  PairingFunction p;
  p.name = "support_probe";
  p.f = [](const Vec3& h, const Mat3& S) {
    return (norm2(h) - 1.0) * (1.0 + norm2(S));
  };
  p.recession = [](const Vec3& ht, const Mat3&) {
    return 2.0 * norm2(ht) - 1.0;
  };
  p.has_recession = true;
  return p;
}

PairingFunction make_linear(const Mat3& B) {
  PairingFunction p;
  p.name = "linear";
  p.f = [B](const Vec3&, const Mat3& S) { return ddot(B, S); };
  return p;
}

PairingFunction make_S_norm2() {
  PairingFunction p;
  p.name = "S_norm2";
  p.f = [](const Vec3&, const Mat3& S) { return norm2(S); };
  p.recession = [](const Vec3& ht, const Mat3& St) {
    return norm2(St) * (1.0 - norm2(ht));
  };
  p.has_recession = true;
  return p;
}

PairingFunction make_frank(const FrankConstants& c) {
  PairingFunction p;
  p.name = "frank";
  p.f = [c](const Vec3& h, const Mat3& S) { return energy_density(c, h, S); };
  return p;
}

PairingFunction make_frank_term(const FrankConstants& c, int term) {
  if (term < 1 || term > 5)
    throw std::invalid_argument("frank term index must be 1..5");
  PairingFunction p;
  p.name = "frank_k" + std::to_string(term);
  p.f = [c, term](const Vec3& h, const Mat3& S) {
    const FrankTerms t = energy_terms(c, h, S);
    const double v[5] = {t.t1, t.t2, t.t3, t.t4, t.t5};
    return v[term - 1];
  };
  return p;
}

SampleSet samples_from_director(const SpecVec& d) {
  const PhysVec d_p = to_phys(d);
  const PhysMat gd_p = to_phys(grad(d));
  const std::size_t n = d.g.phys_size();
  SampleSet s;
  s.h.resize(n);
  s.S.resize(n);
  s.w.assign(n, d.g.volume() / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    s.h[i] = d_p.vec_at(i);
    s.S[i] = gd_p.mat_at(i);
  }
  return s;
}

double pairing_value(const SampleSet& s, const PairingFunction& f) {
  double acc = 0;
  for (std::size_t i = 0; i < s.h.size(); ++i)
    acc += s.w[i] * f.f(s.h[i], s.S[i]);
  return acc;
}

std::vector<double> empirical_pairing(const std::vector<SampleSet>& family,
                                      const PairingFunction& f) {
  std::vector<double> out;
  out.reserve(family.size());
  for (const SampleSet& s : family) out.push_back(pairing_value(s, f));
  return out;
}

EmpiricalYoungMeasure empirical_measure(const SampleSet& s, int bins) {
  EmpiricalYoungMeasure m;
  m.bins = bins;
  m.radial_mass.assign(static_cast<std::size_t>(bins) * bins, 0.0);
  for (std::size_t i = 0; i < s.h.size(); ++i) {
    const double h2 = norm2(s.h[i]);
    const double s2 = norm2(s.S[i]);
    const double wfac = (1.0 + h2) * (1.0 + s2);
    const double mass = s.w[i] * wfac;
    const Vec3 ht = (1.0 / std::sqrt(1.0 + h2)) * s.h[i];
    const Mat3 St = (1.0 / std::sqrt(1.0 + s2)) * s.S[i];
    const double hr = norm(ht);   // < 1 by construction
    const double sr = std::sqrt(norm2(St));
    int ih = static_cast<int>(hr * bins);
    int is = static_cast<int>(sr * bins);
    ih = std::min(ih, bins - 1);
    is = std::min(is, bins - 1);
    m.radial_mass[static_cast<std::size_t>(ih) * bins + is] += mass;
    m.total_mass += mass;
    m.h_mean = m.h_mean + mass * ht;
    m.S_mean = m.S_mean + mass * St;
  }
  if (m.total_mass > 0) {
    m.h_mean = (1.0 / m.total_mass) * m.h_mean;
    m.S_mean = (1.0 / m.total_mass) * m.S_mean;
  }
  return m;
}

}  // namespace elsim
