#include <doctest.h>

#include <cmath>

#include "lowreg/analysis/initial_data.hpp"
#include "lowreg/analysis/norms.hpp"
#include "lowreg/error.hpp"
#include "lowreg/integrators/stepper.hpp"
#include "support.hpp"

using namespace lowreg;
using namespace lowreg::integrators;
using lowreg::testing::constant_field;
using lowreg::testing::max_deviation;
using lowreg::testing::random_field;
using lowreg::testing::scaled;
using spectral::cplx;
using spectral::free_flow;

namespace {

constexpr SchemeKind kAllKinds[] = {
    SchemeKind::LowRegExp, SchemeKind::ClassicalExp, SchemeKind::LieSplit,
    SchemeKind::StrangSplit, SchemeKind::QuadU2, SchemeKind::QuadAbsU2,
    SchemeKind::LieQuad, SchemeKind::StrangQuad,
};

cplx constant_value(const Field& f) { return f.to_fourier().coefficient(0); }

Field one_step(SchemeKind kind, const Field& u, double tau, double mu = 1.0, double p = 1.0) {
  return step(u, 0.0, SchemeSpec::make(kind, mu, tau, p));
}

}  // namespace

TEST_CASE("scheme names round trip") {
  for (auto kind : kAllKinds) CHECK(parse_scheme_kind(to_string(kind)) == kind);
  CHECK_FALSE(parse_scheme_kind("Euler").has_value());
  for (auto eq : {Equation::PowerNls, Equation::QuadU2, Equation::QuadAbs2}) {
    CHECK(parse_equation(to_string(eq)) == eq);
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(SchemeSpec::make(SchemeKind::LowRegExp, 1.0, 0.0).validate(1), ConfigError);
  CHECK_THROWS_AS(SchemeSpec::make(SchemeKind::LowRegExp, 1.0, -0.1).validate(1), ConfigError);
  CHECK_NOTHROW(SchemeSpec::make(SchemeKind::LowRegExp, 1.0, -0.1).validate_structure(1));
  CHECK_THROWS_AS(SchemeSpec::make(SchemeKind::QuadU2, 1.0, 0.1).validate(2), ConfigError);
  CHECK_THROWS_AS(SchemeSpec::make(SchemeKind::LowRegExp, 1.0, 0.1, 0.5).validate(1), ConfigError);
  auto noninteger = SchemeSpec::make(SchemeKind::LowRegExp, 1.0, 0.1, 0.5);
  noninteger.allow_noninteger_p = true;
  CHECK_NOTHROW(noninteger.validate(1));
  CHECK_NOTHROW(SchemeSpec::make(SchemeKind::LieSplit, 1.0, 0.1, 0.5).validate(1));
  auto mismatch = SchemeSpec::make(SchemeKind::LieQuad, 1.0, 0.1);
  mismatch.equation = Equation::PowerNls;
  CHECK_THROWS_AS(mismatch.validate(1), ConfigError);
  auto classical_quad = SchemeSpec::make(SchemeKind::ClassicalExp, 1.0, 0.1);
  classical_quad.equation = Equation::QuadAbs2;
  CHECK_NOTHROW(classical_quad.validate(1));
}

TEST_CASE("named step functions check the scheme kind") {
  const auto grid = spectral::make_grid(1, 8);
  const auto u = random_field(grid, 1);
  CHECK_THROWS_AS(step_lie(u, 0.0, SchemeSpec::make(SchemeKind::StrangSplit, 1.0, 0.1)), ConfigError);
  CHECK_NOTHROW(step_lie(u, 0.0, SchemeSpec::make(SchemeKind::LieSplit, 1.0, 0.1)));
}

TEST_CASE("constant data") {
  const auto grid = spectral::make_grid(1, 8);
  const cplx A(0.6, -0.3);
  const double mu = 1.3, tau = 0.07;
  const auto u = constant_field(grid, A);
  const double a2 = std::norm(A);

  CHECK(std::abs(constant_value(one_step(SchemeKind::LowRegExp, u, tau, mu)) -
                 A * (1.0 - cplx(0.0, mu * tau * a2))) < 1e-15);
  CHECK(std::abs(constant_value(one_step(SchemeKind::ClassicalExp, u, tau, mu)) -
                 (A - cplx(0.0, mu * tau * a2) * A)) < 1e-15);
  for (auto kind : {SchemeKind::LieSplit, SchemeKind::StrangSplit}) {
    CHECK(std::abs(constant_value(one_step(kind, u, tau, mu)) - A * std::polar(1.0, -tau * mu * a2)) <
          1e-15);
  }
  // p = 2 for the power schemes.
  CHECK(std::abs(constant_value(one_step(SchemeKind::LowRegExp, u, tau, mu, 2.0)) -
                 A * (1.0 - cplx(0.0, mu * tau * a2 * a2))) < 1e-15);

  SUBCASE("QuadU2 is first-order consistent with the exact subflow") {
    CHECK(std::abs(constant_value(one_step(SchemeKind::QuadU2, u, tau, mu)) -
                   (A - cplx(0.0, mu * tau) * A * A)) < 1e-15);
    auto local_error = [&](double h) {
      const cplx exact = A / (1.0 + cplx(0.0, mu * h) * A);
      return std::abs(constant_value(one_step(SchemeKind::QuadU2, u, h, mu)) - exact);
    };
    const double ratio = local_error(0.01) / local_error(0.005);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
  }
  SUBCASE("QuadAbsU2 zero-mode variants") {
    auto spec = SchemeSpec::make(SchemeKind::QuadAbsU2, mu, tau);
    CHECK(std::abs(constant_value(step_quad_abs2(u, 0.0, spec)) - (A - cplx(0.0, mu * tau * a2))) <
          1e-15);
    spec.quad_zero_mode_fix = false;
    CHECK(std::abs(constant_value(step_quad_abs2(u, 0.0, spec)) -
                   (A - cplx(0.0, 2.0 * mu * tau * a2))) < 1e-15);
  }
  SUBCASE("LieQuad with u = 1, mu = 1, tau = 0.1") {
    const auto one = constant_field(grid, 1.0);
    const auto out = one_step(SchemeKind::LieQuad, one, 0.1);
    for (auto z : out.samples()) CHECK(std::abs(z - 1.0 / cplx(1.0, 0.1)) < 1e-15);
  }
}

TEST_CASE("QuadU2 on a single mode") {
  const auto grid = spectral::make_grid(1, 8);
  Field c(grid, spectral::View::Fourier);
  c.data()[grid->index_of(1)] = 1.0;
  const double tau = 0.21, mu = 0.8;
  const auto out = one_step(SchemeKind::QuadU2, c.to_physical(), tau, mu).to_fourier();
  CHECK(std::abs(out.coefficient(1) - std::polar(1.0, -tau)) < 1e-15);
  const cplx expected = -(mu / 2.0) * (std::polar(1.0, -2.0 * tau) - std::polar(1.0, -4.0 * tau));
  CHECK(std::abs(out.coefficient(2) - expected) < 1e-15);
}

TEST_CASE("mu = 0 reduces every scheme to the free flow") {
  const auto grid = spectral::make_grid(1, 16);
  const auto u = random_field(grid, 21);
  const double tau = 0.037;
  for (auto kind : kAllKinds) {
    CAPTURE(to_string(kind));
    const auto expected = apply(free_flow(grid, tau), u);
    CHECK(max_deviation(one_step(kind, u, tau, 0.0), expected) < 1e-12);
    const auto state = evolve(u, SchemeSpec::make(kind, 0.0, tau), 13);
    CHECK(max_deviation(state.u, apply(free_flow(grid, 13 * tau), u)) < 1e-11);
  }
}

TEST_CASE("zero data is a fixed point") {
  const auto grid = spectral::make_grid(1, 8);
  const auto zero = constant_field(grid, 0.0);
  for (auto kind : kAllKinds) {
    CAPTURE(to_string(kind));
    CHECK(max_deviation(one_step(kind, zero, 0.1), zero) == 0.0);
  }
}

TEST_CASE("mu -> 0 continuity is linear in mu") {
  const auto grid = spectral::make_grid(1, 16);
  const auto u = random_field(grid, 22);
  const double tau = 0.05;
  const auto flow = apply(free_flow(grid, tau), u);
  for (auto kind : kAllKinds) {
    CAPTURE(to_string(kind));
    const double d1 = max_deviation(one_step(kind, u, tau, 1e-3), flow);
    const double d2 = max_deviation(one_step(kind, u, tau, 1e-4), flow);
    CHECK(d1 / d2 == doctest::Approx(10.0).epsilon(0.01));
  }
}

TEST_CASE("splittings conserve mass") {
  const auto grid = spectral::make_grid(1, 32);
  const auto u = scaled(random_field(grid, 23), 3.0);
  const double m0 = analysis::mass(u);
  for (auto kind : {SchemeKind::LieSplit, SchemeKind::StrangSplit}) {
    for (double mu : {-2.0, 0.5, 4.0}) {
      for (double p : {0.25, 1.0, 2.0}) {
        for (double tau : {1e-3, 0.1, 0.9}) {
          const double m1 = analysis::mass(one_step(kind, u, tau, mu, p));
          CHECK(std::abs(m1 - m0) <= 1e-12 * m0);
        }
      }
    }
  }
}

TEST_CASE("Strang splitting is reversible") {
  const auto grid = spectral::make_grid(1, 16);
  const auto u = random_field(grid, 24);
  for (auto kind : {SchemeKind::StrangSplit, SchemeKind::StrangQuad}) {
    const double tau = 0.03;
    const auto forward = one_step(kind, u, tau, 0.7);
    const auto back = one_step(kind, forward, -tau, 0.7);
    CHECK(max_deviation(back, u) < 1e-10);
  }
}

TEST_CASE("LowRegExp gauge equivariance") {
  const auto grid = spectral::make_grid(1, 16);
  const auto u = random_field(grid, 25);
  const auto spec = SchemeSpec::make(SchemeKind::LowRegExp, 1.0, 0.05);
  for (double alpha : {0.3, 2.0, -1.1}) {
    const cplx phase = std::polar(1.0, alpha);
    const auto lhs = step_lowreg(scaled(u, phase), 0.2, spec);
    const auto rhs = scaled(step_lowreg(u, 0.2, spec), phase);
    CHECK(max_deviation(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("twisted and untwisted LowRegExp agree") {
  const auto grid = spectral::make_grid(1, 16);
  const auto v = random_field(grid, 26);
  const double tau = 0.04;
  for (double p : {1.0, 2.0}) {
    const auto spec = SchemeSpec::make(SchemeKind::LowRegExp, 1.0, tau, p);
    for (double t : {0.0, 0.37, 1.5}) {
      const auto via_v = apply(free_flow(grid, t + tau), step_lowreg_twisted(v, t, spec));
      const auto via_u = step_lowreg(apply(free_flow(grid, t), v), t, spec);
      CHECK(max_deviation(via_v, via_u) < 1e-12);
    }
  }
  SUBCASE("t = 0") {
    const auto spec = SchemeSpec::make(SchemeKind::LowRegExp, 1.0, tau);
    const auto expected = apply(free_flow(grid, -tau), step_lowreg(v, 0.0, spec));
    CHECK(max_deviation(step_lowreg_twisted(v, 0.0, spec), expected) < 1e-12);
  }
  SUBCASE("mu = 0 is the identity on v") {
    const auto spec = SchemeSpec::make(SchemeKind::LowRegExp, 0.0, tau);
    CHECK(max_deviation(step_lowreg_twisted(v, 0.7, spec), v) < 1e-15);
  }
}

TEST_CASE("non-integer powers") {
  const auto grid = spectral::make_grid(1, 16);
  const cplx A(0.8, 0.1);
  const auto u = constant_field(grid, A);
  auto spec = SchemeSpec::make(SchemeKind::LowRegExp, 1.0, 0.05, 0.25);
  spec.allow_noninteger_p = true;
  const double amp = std::pow(std::norm(A), 0.25);
  CHECK(std::abs(constant_value(step_lowreg(u, 0.0, spec)) - A * (1.0 - cplx(0.0, 0.05 * amp))) < 1e-14);
  CHECK(std::abs(constant_value(one_step(SchemeKind::LieSplit, u, 0.05, 1.0, 0.25)) -
                 A * std::polar(1.0, -0.05 * amp)) < 1e-14);
  // Zeros of u stay finite for p < 1/2.
  const auto s = analysis::smooth_data(analysis::SmoothKind::Sin, grid);
  CHECK_NOTHROW(step_lowreg(s, 0.0, spec));
}

TEST_CASE("first-order schemes have O(tau^2) local error on smooth data") {
  const auto grid = spectral::make_grid(1, 16);
  const auto u = analysis::smooth_data(analysis::SmoothKind::SinCos, grid);
  auto local_error = [&](SchemeKind kind, double tau) {
    auto reference = SchemeSpec::make(SchemeKind::StrangSplit, 1.0, tau / 256);
    if (native_equation(kind) == Equation::QuadU2) reference.kind = SchemeKind::StrangQuad;
    reference.equation = native_equation(kind);
    const auto ref = evolve(u, reference, 256).u;
    auto spec = SchemeSpec::make(kind, 1.0, tau);
    spec.equation = reference.equation;
    return analysis::h_r_distance(step(u, 0.0, spec), ref, 1.0);
  };
  for (auto kind : {SchemeKind::LowRegExp, SchemeKind::ClassicalExp, SchemeKind::LieSplit,
                    SchemeKind::QuadU2, SchemeKind::LieQuad}) {
    CAPTURE(to_string(kind));
    const double ratio = local_error(kind, 0.01) / local_error(kind, 0.005);
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
  }
}

TEST_CASE("ClassicalExp plane-wave local error is O(tau^2)") {
  const auto grid = spectral::make_grid(1, 8);
  const auto u = analysis::plane_wave(grid, 1, 1.0);
  auto error = [&](double tau) {
    const auto exact = analysis::plane_wave_solution(grid, 1, 1.0, 1.0, 1.0, tau);
    return analysis::h_r_distance(one_step(SchemeKind::ClassicalExp, u, tau), exact, 1.0);
  };
  CHECK(error(0.01) / error(0.005) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("evolve") {
  const auto grid = spectral::make_grid(1, 16);
  const auto u = random_field(grid, 27);
  SUBCASE("zero steps return the input") {
    const auto state = evolve(u, SchemeSpec::make(SchemeKind::LowRegExp, 1.0, 0.1), 0);
    CHECK(max_deviation(state.u, u) == 0.0);
    CHECK(state.step_index == 0);
  }
  SUBCASE("time is step_index * tau and the observer sees every step") {
    long seen = 0;
    const auto state = evolve(u, SchemeSpec::make(SchemeKind::StrangSplit, 1.0, 0.1), 7,
                              [&](long n, const Field&) { CHECK(n == ++seen); });
    CHECK(seen == 7);
    CHECK(state.t == 7 * 0.1);
    CHECK(state.max_amplitude.size() == 8);
  }
  SUBCASE("plane-wave LowRegExp error is first order") {
    const auto w = analysis::plane_wave(grid, 1, 1.0);
    const auto exact = analysis::plane_wave_solution(grid, 1, 1.0, 1.0, 1.0, 1.0);
    double previous = 0.0;
    for (int e = 4; e <= 8; ++e) {
      const double tau = std::ldexp(1.0, -e);
      const auto state = evolve(w, SchemeSpec::make(SchemeKind::LowRegExp, 1.0, tau), 1L << e);
      const double err = analysis::h_r_distance(state.u, exact, 1.0);
      if (previous > 0.0) CHECK(previous / err == doctest::Approx(2.0).epsilon(0.05));
      previous = err;
    }
  }
}

TEST_CASE("blow-up and singular substeps are reported") {
  const auto grid = spectral::make_grid(1, 8);
  SUBCASE("amplitude threshold") {
    const auto big = constant_field(grid, 1e5);
    CHECK_THROWS_AS(one_step(SchemeKind::LowRegExp, big, 0.1), BlowUpError);
    try {
      evolve(big, SchemeSpec::make(SchemeKind::ClassicalExp, 1.0, 0.1), 5);
      FAIL("expected blow-up");
    } catch (const BlowUpError& e) {
      CHECK(e.step() == 1);
    }
  }
  SUBCASE("pole of the quadratic subflow") {
    const auto pole = constant_field(grid, cplx(0.0, 2.0));  // 1 + i * 1 * 0.5 * 2i = 0
    CHECK_THROWS_AS(one_step(SchemeKind::LieQuad, pole, 0.5), SingularSubstepError);
    CHECK_THROWS_AS(one_step(SchemeKind::LieQuad, pole, 0.5), BlowUpError);
  }
  SUBCASE("grid mismatch") {
    const Stepper stepper(spectral::make_grid(1, 16), SchemeSpec::make(SchemeKind::LieSplit, 1.0, 0.1));
    CHECK_THROWS_AS(stepper.step(random_field(grid, 1), 0.0), GridMismatchError);
  }
}
