#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "slowspin/errors.hpp"
#include "slowspin/geophase.hpp"
#include "slowspin/resonance.hpp"

using namespace slowspin;
using oracle::circular_distance;

TEST_CASE("make_gp folds into (-2pi, 0]") {
  for (double raw : {0.0, -1.0, -2.0 * kPi, -7.0, 1.5, 13.0, -40.0, 2.0 * kPi}) {
    const GpValue g = make_gp(raw);
    CHECK(g.principal <= 0.0);
    CHECK(g.principal > -2.0 * kPi);
    CHECK(circular_distance(g.principal, raw) < 1e-12);
  }
  CHECK(make_gp(-1.0).note == BranchNote::Unchanged);
  CHECK(make_gp(1.0).note == BranchNote::Shifted);
  CHECK(make_gp(1.0).turns == -1);
  CHECK(make_gp(1.0).principal == doctest::Approx(1.0 - 2.0 * kPi));
  const GpValue snapped = make_gp(-2.0 * kPi + 1e-13);
  CHECK(snapped.principal == 0.0);
  CHECK(snapped.note == BranchNote::SnappedToZero);
  CHECK(make_gp(-2.0 * kPi).principal == 0.0);
}

TEST_CASE("circular_difference stays in (-pi, pi]") {
  CHECK(circular_difference(0.1, -0.1) == doctest::Approx(0.2));
  CHECK(circular_difference(-6.2, 0.05) == doctest::Approx(2.0 * kPi - 6.25));
  CHECK(circular_difference(3.0, -3.0) == doctest::Approx(6.0 - 2.0 * kPi));
}

TEST_CASE("open_path_gp vanishes for a free spin and for a pure channel") {
  const ScatterParams p = make_params(0.7, 5.0);
  const SpinState spin = spin_from_angle(1.2, 0.6);
  CHECK(circular_distance(open_path_gp(amplitude_field(p, spin, Region::III), 0.0, 7.0).raw, 0.0) < 1e-12);
  for (Region r : {Region::I, Region::II}) {
    const auto [a, b] = natural_interval(r);
    CHECK(circular_distance(open_path_gp(amplitude_field(p, SpinState(1.0, 0.0), r), a, b).raw, 0.0) < 1e-10);
    CHECK(circular_distance(open_path_gp(amplitude_field(p, SpinState(0.0, 1.0), r), a, b).raw, 0.0) < 1e-10);
  }
}

TEST_CASE("resonant_gp reproduces the open-path integral across the slab") {
  for (int nm = 2; nm <= 12; ++nm) {
    for (int np = nm - 2; np >= 1; np -= 2) {
      const ResonanceSpec spec = spec_from_pair(np, nm);
      const ScatterParams p = make_params(spec.epsilon, spec.kl);
      for (double theta : {0.1, 0.8, 1.5, 2.3, 3.0}) {
        const SpinState spin = spin_from_angle(theta, 0.3);
        const ResonantGp closed = resonant_gp(np, nm, spin);
        const GpValue open = open_path_gp(amplitude_field(p, spin, Region::II), 0.0, kPi, 1e-11);
        CHECK(circular_distance(closed.gp.raw, open.raw) < 1e-6);
        CHECK(closed.xi == (nm - np) / 2);
        CHECK(closed.per_turn == doctest::Approx(closed.gp.raw / closed.xi));
      }
    }
  }
}

TEST_CASE("resonant_gp matches an independent Simpson evaluation") {
  for (auto [np, nm] : {std::pair{1, 3}, {2, 4}, {3, 9}, {5, 11}}) {
    for (double theta : {0.4, kPi / 2, 2.7}) {
      const double ref = oracle::resonant_gp_simpson(np, nm, theta, 20000);
      CHECK(resonant_gp(np, nm, spin_from_angle(theta)).gp.raw == doctest::Approx(ref).epsilon(1e-9));
    }
  }
  CHECK(resonant_gp(2, 4, spin_from_angle(kPi / 2)).gp.raw ==
        doctest::Approx(-1.810174191821).epsilon(1e-11));
}

TEST_CASE("resonant_gp: theta = pi gives -2 pi xi, theta = 0 gives nothing") {
  for (auto [np, nm] : {std::pair{1, 3}, {2, 6}, {1, 7}, {4, 10}}) {
    const int xi = (nm - np) / 2;
    CHECK(resonant_gp(np, nm, SpinState(0.0, 1.0)).gp.raw == doctest::Approx(-2.0 * kPi * xi).epsilon(1e-9));
    CHECK(std::abs(resonant_gp(np, nm, SpinState(1.0, 0.0)).gp.raw) < 1e-9);
  }
}

TEST_CASE("resonant_gp: argument checks") {
  const SpinState s = spin_from_angle(1.0);
  CHECK_THROWS_AS(resonant_gp(1, 2, s), ParityMismatch);
  CHECK_THROWS_AS(resonant_gp(2, 2, s), InvalidArgument);
  CHECK_THROWS_AS(resonant_gp(0, 2, s), InvalidArgument);
  CHECK_THROWS_AS(resonant_gp(4, 2, s), InvalidArgument);
}

TEST_CASE("resonant_gp at large quantum numbers") {
  // Frozen from a 30-digit evaluation of the same integral.
  const ResonantGp a = resonant_gp(999, 1001, spin_from_angle(kPi / 2));
  CHECK(a.per_turn == doctest::Approx(-3.13766566321459).epsilon(1e-11));
  const ResonantGp b = resonant_gp(1000, 1002, spin_from_angle(kPi / 2));
  CHECK(b.per_turn == doctest::Approx(-3.137669586281020).epsilon(1e-11));
  // The deviation from the pure-precession value shrinks like 1/n.
  const ResonantGp c = resonant_gp(4000, 4002, spin_from_angle(kPi / 2));
  const double dev_b = std::abs(b.per_turn + kPi);
  const double dev_c = std::abs(c.per_turn + kPi);
  CHECK(dev_b / dev_c == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("highspeed_gp closed form") {
  CHECK(highspeed_gp(1, kPi / 2).raw == doctest::Approx(-kPi));
  CHECK(highspeed_gp(3, kPi).raw == doctest::Approx(-6.0 * kPi));
  CHECK(highspeed_gp(2, 0.0).raw == 0.0);
  CHECK(highspeed_gp(1, kPi).principal == 0.0);
}

TEST_CASE("resonant per-turn value depends only on the ratio") {
  for (double theta : {0.5, 1.5, 2.5}) {
    const SpinState s = spin_from_angle(theta);
    CHECK(resonant_gp(1, 3, s).per_turn == doctest::Approx(resonant_gp(2, 6, s).per_turn).epsilon(1e-9));
    CHECK(resonant_gp(1, 5, s).per_turn == doctest::Approx(resonant_gp(3, 15, s).per_turn).epsilon(1e-9));
  }
}

TEST_CASE("prebarrier_gp vanishes without reflection") {
  const SpinState s = spin_from_angle(kPi / 2);
  CHECK(std::abs(prebarrier_gp(make_params(0.0, 3.0), s).raw) < 1e-12);
  CHECK(circular_distance(prebarrier_gp(make_params(0.6, std::sqrt(10.0) * kPi), s).raw, 0.0) < 1e-12);
}

TEST_CASE("prebarrier-type field with equal reflection in both channels has no GP") {
  const cplx rho = std::polar(0.6, 0.9);
  const SpinState spin = spin_from_angle(1.1, 0.4);
  const AmplitudeField f(
      Region::I,
      [&](double s) {
        const cplx I{0.0, 1.0};
        const cplx w = (std::exp(I * s) + rho * std::exp(-I * s)) / (1.0 + rho);
        const cplx dw = I * (std::exp(I * s) - rho * std::exp(-I * s)) / (1.0 + rho);
        FieldPoint pt;
        for (int l = 0; l < 2; ++l) {
          pt.f[l] = w * spin[l];
          pt.df[l] = dw * spin[l];
        }
        return pt;
      },
      -1e9, 0.0);
  CHECK(std::abs(open_path_gp(f, -kPi, 0.0).raw) < 1e-10);
}

TEST_CASE("prebarrier_gp agrees with the generic open-path integral and is window-independent") {
  const SpinState s = spin_from_angle(kPi / 2);
  for (double kl : {std::sqrt(10.0) * kPi, 4.0 * kPi}) {
    for (double e : {0.05, 0.3, 0.7, 1.5, 10.0}) {
      const ScatterParams p = make_params(e, kl);
      const GpValue g = prebarrier_gp(p, s);
      const GpValue open = open_path_gp(amplitude_field(p, s, Region::I), -kPi, 0.0, 1e-11);
      CHECK(circular_distance(g.raw, open.raw) < 1e-8);
      for (double x0 : {-2.2, -0.7, 1.3}) {
        CHECK(circular_distance(prebarrier_gp(p, s, kDefaultQuadTol, x0).raw, g.raw) < 1e-8);
      }
      const GpValue three = prebarrier_gp_cycles(p, s, 3);
      CHECK(circular_distance(three.raw, 3.0 * g.raw) < 1e-8);
    }
  }
}

TEST_CASE("prebarrier_gp: small-field value and sign") {
  // 30-digit reference of the same integral.
  const GpValue g = prebarrier_gp(make_params(0.05, 4.0 * kPi), spin_from_angle(kPi / 2));
  CHECK(circular_distance(g.raw, 3.64298263457741e-05) < 1e-12);
  const GpValue h = prebarrier_gp(make_params(0.1, std::sqrt(10.0) * kPi), spin_from_angle(kPi / 2));
  CHECK(circular_distance(h.raw, 0.0025048534) < 1e-9);
}

TEST_CASE("open-path GP is gauge invariant") {
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  const SpinState spin = spin_from_angle(1.9, 0.7);
  const ScatterParams p = make_params(0.45, 6.0);
  for (Region r : {Region::I, Region::II, Region::III}) {
    const AmplitudeField base = amplitude_field(p, spin, r);
    const auto [s0, s1] = natural_interval(r);
    const double ref = open_path_gp(base, s0, s1, 1e-11).raw;
    for (int trial = 0; trial < 20; ++trial) {
      const double a = coef(rng), b = coef(rng), c = coef(rng);
      const AmplitudeField g = base.with_phase([=](double s) { return a * s + b * s * s + c * s * s * s; },
                                               [=](double s) { return a + 2.0 * b * s + 3.0 * c * s * s; });
      CHECK(circular_distance(open_path_gp(g, s0, s1, 1e-11).raw, ref) < 1e-7);
    }
  }
}

TEST_CASE("Pancharatnam chain converges to the open-path value at second order") {
  const SpinState spin = spin_from_angle(1.3, 0.2);
  const ScatterParams p = make_params(0.8, 4.5);
  const AmplitudeField f = amplitude_field(p, spin, Region::II);
  const double exact = open_path_gp(f, 0.0, kPi, 1e-12).raw;
  const double e1 = circular_distance(pancharatnam_oracle(f, 0.0, kPi, 500), exact);
  const double e2 = circular_distance(pancharatnam_oracle(f, 0.0, kPi, 1000), exact);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
  CHECK(circular_distance(pancharatnam_oracle(f, 0.0, kPi, 10000), exact) < 1e-5);
  CHECK_THROWS_AS(pancharatnam_oracle(f, 0.0, kPi, 1), InvalidArgument);
}

TEST_CASE("GP does not depend on the azimuth of the incident spin") {
  const ScatterParams p = make_params(0.6, std::sqrt(10.0) * kPi);
  const ScatterParams t = params_from_kminus(2.0, kPi);
  for (double theta : {0.5, 2.0}) {
    const double pre = prebarrier_gp(make_params(0.3, 4.0 * kPi), spin_from_angle(theta)).raw;
    const double slab = open_path_gp(amplitude_field(p, spin_from_angle(theta), Region::II), 0.0, kPi).raw;
    const double tun = tunnel_gp(t, spin_from_angle(theta)).raw;
    for (double phi : {0.7, 2.5, -1.9}) {
      const SpinState s = spin_from_angle(theta, phi);
      CHECK(circular_distance(prebarrier_gp(make_params(0.3, 4.0 * kPi), s).raw, pre) < 1e-10);
      CHECK(circular_distance(open_path_gp(amplitude_field(p, s, Region::II), 0.0, kPi).raw, slab) < 1e-10);
      CHECK(circular_distance(tunnel_gp(t, s).raw, tun) < 1e-10);
    }
  }
}

TEST_CASE("tunnel_gp values and limits") {
  const ScatterParams p = params_from_kminus(1.01, kPi);
  CHECK(circular_distance(tunnel_gp(p, SpinState(0.0, 1.0)).raw, 0.0) < 1e-10);
  CHECK(circular_distance(tunnel_gp(p, SpinState(1.0, 0.0)).raw, 0.0) < 1e-10);
  CHECK(circular_distance(tunnel_gp(p, spin_from_angle(0.1)).raw, -0.00238180621865) < 1e-11);
  // 30-digit references at theta = pi/2.
  const double expect[] = {0.399804751781, 0.566372651850, 0.690538275733};
  const double eps[] = {1.01, 2.0, 5.0};
  for (int i = 0; i < 3; ++i) {
    const GpValue g = tunnel_gp(params_from_kminus(eps[i], kPi), spin_from_angle(kPi / 2));
    CHECK(circular_distance(g.raw, expect[i]) < 1e-10);
  }
  CHECK_THROWS_AS(tunnel_gp(make_params(0.5, 3.0), spin_from_angle(1.0)), InvalidArgument);
}

TEST_CASE("open_path_gp error paths") {
  const ScatterParams p = make_params(0.5, 3.0);
  const SpinState s = spin_from_angle(1.0);
  const AmplitudeField f = amplitude_field(p, s, Region::II);
  CHECK_THROWS_AS(open_path_gp(f, 1.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(open_path_gp(f, 0.0, 4.0), InvalidArgument);

  const AmplitudeField flip(
      Region::II,
      [](double s) {
        FieldPoint pt;
        pt.f = {cplx{std::cos(s / 2), 0.0}, cplx{std::sin(s / 2), 0.0}};
        pt.df = {cplx{-0.5 * std::sin(s / 2), 0.0}, cplx{0.5 * std::cos(s / 2), 0.0}};
        return pt;
      },
      0.0, kPi);
  CHECK_THROWS_AS(open_path_gp(flip, 0.0, kPi), OrthogonalEndpoints);

  const AmplitudeField node(
      Region::II,
      [](double s) {
        FieldPoint pt;
        pt.f = {cplx{s - 1.0, 0.0}, cplx{0.0, 0.0}};
        pt.df = {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
        return pt;
      },
      0.0, kPi);
  CHECK_THROWS_AS(open_path_gp(node, 0.0, 1.0), VanishingNorm);
}
