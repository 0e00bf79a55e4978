#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "elsim/diagnostics.hpp"
#include "elsim/initial.hpp"
#include "elsim/integrator.hpp"

using namespace elsim;
using cd = std::complex<double>;

namespace {

LeslieCoefficients parodi_set() {
  return LeslieCoefficients{0.5, -0.25, 0.75, 1.0, 0.5, 0.5, 0.5};
}

SimState make_state(const TorusGrid& g, std::uint64_t seed, double vamp,
                    double damp) {
  InitialConfig ic;
  ic.kind = InitialKind::random_smooth;
  ic.seed = seed;
  ic.velocity_amplitude = vamp;
  ic.director_amplitude = damp;
  ic.smoothness = 1.6;
  const InitialData init = make_initial(ic, g);
  SimState s;
  s.v = init.v;
  s.d = init.d;
  s.galerkin_n = g.cutoff;
  s.phys.frank = FrankConstants(1.1, 0.9, 1.3);
  s.phys.leslie = parodi_set();
  s.phys.reg = RegularizationParams::make(0.05, EpsSchedule::linear);
  return s;
}

SimState equilibrium_state(const TorusGrid& g) {
  SimState s;
  s.v = SpecVec(g);
  s.d = SpecVec(g);
  s.d.at(2, g.spec_index(0, 0, 0)) = 1.0;
  s.galerkin_n = g.cutoff;
  s.phys.frank = FrankConstants(1.1, 0.9, 1.3);
  s.phys.leslie = parodi_set();
  s.phys.reg = RegularizationParams::make(0.05, EpsSchedule::linear);
  return s;
}

double state_distance(const SimState& a, const SimState& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.v.a.size(); ++i)
    m = std::max(m, std::abs(a.v.a[i] - b.v.a[i]));
  for (std::size_t i = 0; i < a.d.a.size(); ++i)
    m = std::max(m, std::abs(a.d.a[i] - b.d.a[i]));
  return m;
}

}  // namespace

TEST_CASE("uniform unit director at rest is a fixed point") {
  const TorusGrid g(16);
  for (Scheme sch : {Scheme::imex1, Scheme::rk4_explicit}) {
    SimState s = equilibrium_state(g);
    const SimState ref = s;
    StepperConfig cfg;
    cfg.dt = 1e-2;
    cfg.scheme = sch;
    for (int i = 0; i < 5; ++i) step(s, cfg);
    CHECK(state_distance(s, ref) < 1e-14);
  }
}

TEST_CASE("equilibrium right-hand side vanishes") {
  const TorusGrid g(16);
  const SimState s = equilibrium_state(g);
  const Rhs r = assemble_rhs(s);
  double worst = 0;
  for (const cd& v : r.dv.a) worst = std::max(worst, std::abs(v));
  for (const cd& v : r.dd.a) worst = std::max(worst, std::abs(v));
  CHECK(worst < 1e-15);
}

TEST_CASE("forcing a resting state accelerates it by the projected force") {
  const TorusGrid g(16);
  SimState s = equilibrium_state(g);
  SpecVec gforce = random_smooth_vector(g, 70, 0.5, 2.0, g.cutoff);
  s.forcing = gforce;  // deliberately not solenoidal
  s.has_forcing = true;
  const Rhs r = assemble_rhs(s);
  SpecVec want = truncated(gforce, g.cutoff);
  leray_project(want);
  double worst = 0;
  for (std::size_t i = 0; i < want.a.size(); ++i)
    worst = std::max(worst, std::abs(r.dv.a[i] - want.a[i]));
  CHECK(worst < 1e-14);
}

TEST_CASE("director equation linearizes to the stiff relaxation operator") {
  const TorusGrid g(16);
  SimState s = equilibrium_state(g);
  s.phys.model = EnergyModel::one_constant;
  s.phys.K = 0.7;
  const double a = 1e-6;
  // background e3 plus a tiny transverse cosine mode
  s.d.at(0, g.spec_index(1, 0, 0)) = cd(0.5 * a, 0);
  s.d.at(0, g.spec_index(g.N - 1, 0, 0)) = cd(0.5 * a, 0);
  const Rhs r = assemble_rhs(s);
  const double rate = s.phys.K * 1.0 + s.phys.reg.delta * 1.0;  // |k|^2 = 1
  const cd got = r.dd.at(0, g.spec_index(1, 0, 0));
  const cd want = -rate * s.d.at(0, g.spec_index(1, 0, 0));
  CHECK(std::abs(got - want) < 1e-9 * a + 1e-12 * a);
}

TEST_CASE("pure heat-flow reduction decays at the analytic rate") {
  const TorusGrid g(16);
  SimState s = equilibrium_state(g);
  s.phys.model = EnergyModel::one_constant;
  s.phys.K = 0.7;
  s.phys.reg = RegularizationParams::with_epsilon(0.05, 1e6);  // penalty off
  const double a = 1e-4;
  s.d.at(0, g.spec_index(1, 0, 0)) = cd(0.5 * a, 0);
  s.d.at(0, g.spec_index(g.N - 1, 0, 0)) = cd(0.5 * a, 0);

  StepperConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 0.1;
  cfg.freeze_velocity = true;
  cfg.scheme = Scheme::imex1;
  const int nsteps = 100;
  const double rate = s.phys.K + s.phys.reg.delta;  // |k|^2 = 1, |k|^4 = 1
  for (int i = 0; i < nsteps; ++i) step(s, cfg);
  const double amp = std::abs(s.d.at(0, g.spec_index(1, 0, 0)));
  const double exact = 0.5 * a * std::exp(-rate * cfg.dt * nsteps);
  // first-order scheme: relative defect O(dt * rate^2 * T)
  CHECK(std::abs(amp / exact - 1.0) < 5e-4);
  // velocity stayed frozen
  double vmax = 0;
  for (const cd& v : s.v.a) vmax = std::max(vmax, std::abs(v));
  CHECK(vmax == 0.0);
}

TEST_CASE("divergence-free velocity is preserved along a run") {
  const TorusGrid g(16);
  SimState s = make_state(g, 7, 0.4, 0.3);
  StepperConfig cfg;
  cfg.dt = 2e-3;
  cfg.t_end = 0.04;
  double worst = 0;
  run(s, cfg, 1, [&](const SimState& st, int) {
    worst = std::max(worst, divergence_max(st.v) /
                                (std::sqrt(l2_norm2(st.v)) + 1e-300));
  });
  CHECK(worst < 1e-12);
}

TEST_CASE("temporal self-convergence orders") {
  const TorusGrid g(8);
  auto advance = [&](Scheme sch, double dt, int steps) {
    SimState s = make_state(g, 8, 0.5, 0.4);
    StepperConfig cfg;
    cfg.dt = dt;
    cfg.scheme = sch;
    for (int i = 0; i < steps; ++i) step(s, cfg);
    return s;
  };
  SUBCASE("imex1 is first order") {
    const double T = 0.08;
    const SimState a = advance(Scheme::imex1, T / 10, 10);
    const SimState b = advance(Scheme::imex1, T / 20, 20);
    const SimState c = advance(Scheme::imex1, T / 40, 40);
    const double e1 = state_distance(a, b);
    const double e2 = state_distance(b, c);
    const double order = std::log2(e1 / e2);
    CHECK(order > 0.8);
    CHECK(order < 1.4);
  }
  SUBCASE("rk4 is fourth order") {
    const double T = 0.32;
    const SimState a = advance(Scheme::rk4_explicit, T / 10, 10);
    const SimState b = advance(Scheme::rk4_explicit, T / 20, 20);
    const SimState c = advance(Scheme::rk4_explicit, T / 40, 40);
    const double e1 = state_distance(a, b);
    const double e2 = state_distance(b, c);
    REQUIRE(e2 > 1e-14);  // above round-off
    const double order = std::log2(e1 / e2);
    CHECK(order >= 3.9);
    CHECK(order < 5.5);
  }
  SUBCASE("imex1 converges to the rk4 reference at first order") {
    const double T = 0.08;
    const SimState ref = advance(Scheme::rk4_explicit, T / 64, 64);
    const double e1 = state_distance(advance(Scheme::imex1, T / 8, 8), ref);
    const double e2 = state_distance(advance(Scheme::imex1, T / 16, 16), ref);
    CHECK(e1 / e2 > 1.6);
    CHECK(e1 / e2 < 2.6);
  }
}

TEST_CASE("run samples the initial state when t_end = 0") {
  const TorusGrid g(16);
  SimState s = make_state(g, 9, 0.3, 0.2);
  const SimState ref = s;
  StepperConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 0.0;
  int samples = 0;
  run(s, cfg, 10, [&](const SimState&, int) { ++samples; });
  CHECK(samples == 1);
  CHECK(state_distance(s, ref) == 0.0);
}

TEST_CASE("identical configuration reproduces identical trajectories") {
  const TorusGrid g(16);
  auto one = [&]() {
    SimState s = make_state(g, 10, 0.4, 0.3);
    StepperConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.02;
    run(s, cfg, 5, nullptr);
    return s;
  };
  const SimState a = one();
  const SimState b = one();
  CHECK(state_distance(a, b) == 0.0);
}

TEST_CASE("non-finite coefficients raise a blow-up error with the time") {
  const TorusGrid g(16);
  SimState s = make_state(g, 11, 0.5, 0.4);
  s.phys.reg.delta = 0.9;
  StepperConfig cfg;
  cfg.dt = 50.0;  // far beyond the explicit stability limit
  cfg.scheme = Scheme::rk4_explicit;
  bool blew_up = false;
  try {
    for (int i = 0; i < 50; ++i) step(s, cfg);
  } catch (const BlowUpError& e) {
    blew_up = true;
    CHECK(e.time > 0.0);
  }
  CHECK(blew_up);
}
