#include "slowspin/geophase.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slowspin/errors.hpp"
#include "slowspin/quadrature.hpp"

namespace slowspin {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kSnap = 1e-12;
constexpr double kMinNorm = 1e-14;
constexpr double kMinOverlap = 1e-12;

cplx overlap(const FieldPoint& a, const FieldPoint& b) {
  return std::conj(a.f[0]) * b.f[0] + std::conj(a.f[1]) * b.f[1];
}

void check_norm(double norm, double s) {
  if (!(norm >= kMinNorm)) {
    throw VanishingNorm("spin amplitudes vanish at s = " + std::to_string(s));
  }
}

cplx endpoint_overlap(const AmplitudeField& field, double s0, double s1) {
  const FieldPoint a = field(s0);
  const FieldPoint b = field(s1);
  check_norm(a.norm(), s0);
  check_norm(b.norm(), s1);
  const cplx ov = overlap(a, b);
  if (std::abs(ov) < kMinOverlap * std::sqrt(a.norm() * b.norm())) {
    throw OrthogonalEndpoints("endpoint states are orthogonal; the open-path GP is undefined");
  }
  return ov;
}

void check_window(const AmplitudeField& field, double s0, double s1) {
  if (!(std::isfinite(s0) && std::isfinite(s1) && s0 < s1)) {
    throw InvalidArgument("GP window needs finite s0 < s1");
  }
  const double slack = 1e-12 * std::max(1.0, std::abs(s1 - s0));
  if (s0 < field.s_min() - slack || s1 > field.s_max() + slack) {
    throw InvalidArgument(std::string("GP window leaves region ") + region_name(field.region()));
  }
}

}  // namespace

const char* branch_note_name(BranchNote note) {
  switch (note) {
    case BranchNote::Unchanged:
      return "unchanged";
    case BranchNote::Shifted:
      return "shifted";
    case BranchNote::SnappedToZero:
      return "snapped-to-zero";
  }
  return "?";
}

GpValue make_gp(double raw) {
  GpValue g;
  g.raw = raw;
  if (!std::isfinite(raw)) {
    g.principal = raw;
    return g;
  }
  const double turns = std::ceil(raw / kTwoPi);
  double principal = raw - kTwoPi * turns;
  if (principal > 0.0) principal -= kTwoPi;  // rounding in ceil near multiples
  if (principal <= -kTwoPi) principal += kTwoPi;
  g.turns = static_cast<int>(std::lround((principal - raw) / kTwoPi));
  g.principal = principal;
  g.note = g.turns == 0 ? BranchNote::Unchanged : BranchNote::Shifted;
  if (principal <= -kTwoPi + kSnap) {
    g.principal = 0.0;
    g.turns = static_cast<int>(std::lround(-raw / kTwoPi));
    g.note = BranchNote::SnappedToZero;
  }
  return g;
}

double circular_difference(double a, double b) {
  double d = std::remainder(a - b, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  return d;
}

GpValue open_path_gp(const AmplitudeField& field, double s0, double s1, double quad_tol,
                     int pieces) {
  check_window(field, s0, s1);
  const cplx ov = endpoint_overlap(field, s0, s1);
  auto connection = [&field](double s) {
    const FieldPoint p = field(s);
    const double n = p.norm();
    check_norm(n, s);
    const cplx a = std::conj(p.f[0]) * p.df[0] + std::conj(p.f[1]) * p.df[1];
    return a.imag() / n;
  };
  const quad::Integral in = quad::integrate(connection, s0, s1, quad_tol, pieces);
  return make_gp(std::arg(ov) - in.value);
}

double pancharatnam_oracle(const AmplitudeField& field, double s0, double s1, int mesh) {
  if (mesh < 2) throw InvalidArgument("Pancharatnam mesh needs at least 2 intervals");
  check_window(field, s0, s1);
  const cplx ov = endpoint_overlap(field, s0, s1);
  const double h = (s1 - s0) / mesh;
  double chain = 0.0;
  FieldPoint prev = field(s0);
  for (int j = 1; j <= mesh; ++j) {
    const double s = j == mesh ? s1 : s0 + h * j;
    const FieldPoint next = field(s);
    check_norm(next.norm(), s);
    chain += std::arg(overlap(prev, next));
    prev = next;
  }
  return std::arg(ov) - chain;
}

ResonantGp resonant_gp(int n_plus, int n_minus, const SpinState& spin, double quad_tol) {
  if (n_plus < 1 || n_minus <= n_plus) {
    throw InvalidArgument("resonant GP needs n- > n+ >= 1");
  }
  if ((n_minus - n_plus) % 2 != 0) {
    throw ParityMismatch("n+ = " + std::to_string(n_plus) + " and n- = " +
                         std::to_string(n_minus) + " differ in parity; evolution is not cyclic");
  }
  const double np = n_plus;
  const double nm = n_minus;
  const double ksq = (nm * nm + np * np) / 2.0;  // (kL / pi)^2
  const double w_plus = spin.weight(0);
  const double w_minus = spin.weight(1);
  const double beta_plus = ksq / (np * np);
  const double beta_minus = ksq / (nm * nm);

  auto integrand = [=](double s) {
    const double cp = std::cos(np * s), sp = std::sin(np * s);
    const double cm = std::cos(nm * s), sm = std::sin(nm * s);
    const double d = (cp * cp + beta_plus * sp * sp) * w_plus +
                     (cm * cm + beta_minus * sm * sm) * w_minus;
    return 1.0 / d;
  };
  // Two panels per period of the fastest channel.
  const int pieces = std::min(2 * n_minus, 1 << 14);
  const quad::Integral in = quad::integrate(integrand, 0.0, kPi, quad_tol, pieces);

  ResonantGp out;
  out.xi = (n_minus - n_plus) / 2;
  out.gp = make_gp(kPi * np - std::sqrt(ksq) * in.value);
  out.per_turn = out.gp.raw / out.xi;
  return out;
}

GpValue highspeed_gp(int xi, double theta) {
  if (xi < 1) throw InvalidArgument("winding number must be >= 1");
  if (!(theta >= 0.0 && theta <= kPi)) throw InvalidArgument("theta must lie in [0, pi]");
  return make_gp(-xi * kPi * (1.0 - std::cos(theta)));
}

GpValue prebarrier_gp(const ScatterParams& params, const SpinState& spin, double quad_tol,
                      double window_offset) {
  if (!std::isfinite(window_offset)) throw InvalidArgument("window offset must be finite");
  double root_r[2], r[2], delta[2], entrance[2], w[2];
  double connection = 0.0;
  for (int l = 0; l < 2; ++l) {
    const ChannelScattering sc =
        channel_scattering(params, l == 0 ? Channel::Plus : Channel::Minus);
    r[l] = sc.r;
    root_r[l] = std::sqrt(sc.r);
    delta[l] = sc.delta;
    // |1 + sqrt(r) e^{i delta}|^2, the squared region-i normalization.
    entrance[l] = 1.0 + r[l] + 2.0 * root_r[l] * std::cos(delta[l]);
    w[l] = spin.weight(l);
    if (w[l] > 0.0 && entrance[l] < 1e-24) {
      throw DegenerateNormalization("reflected wave has a node at the slab entrance");
    }
    if (w[l] > 0.0) connection += (1.0 - r[l]) / entrance[l] * w[l];
  }
  auto integrand = [&](double s) {
    double d = 0.0;
    for (int l = 0; l < 2; ++l) {
      if (w[l] == 0.0) continue;
      d += (1.0 + r[l] + 2.0 * root_r[l] * std::cos(delta[l] - 2.0 * s)) / entrance[l] * w[l];
    }
    check_norm(d, s);
    return 1.0 / d;
  };
  const quad::Integral in =
      quad::integrate(integrand, window_offset, window_offset + kPi, quad_tol, 4);
  return make_gp(kPi - connection * in.value);
}

GpValue prebarrier_gp_cycles(const ScatterParams& params, const SpinState& spin, int cycles,
                             double quad_tol) {
  if (cycles < 1) throw InvalidArgument("cycle count must be >= 1");
  return make_gp(cycles * prebarrier_gp(params, spin, quad_tol).raw);
}

GpValue tunnel_gp(const ScatterParams& params, const SpinState& spin, double quad_tol) {
  if (!(params.epsilon > 1.0)) {
    throw InvalidArgument("tunneling GP needs epsilon = V0/E > 1");
  }
  return open_path_gp(amplitude_field(params, spin, Region::II), 0.0, kPi, quad_tol);
}

}  // namespace slowspin
