#include "slowspin/core.hpp"

#include <cmath>
#include <string>

#include "slowspin/errors.hpp"

namespace slowspin {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace

double kappa_sq_l2(const ScatterParams& p, Channel c) {
  return c == Channel::Plus ? p.kplus_sq_l2 : p.kminus_sq_l2;
}

ScatterParams make_params(double epsilon, double kl) {
  require(std::isfinite(epsilon) && epsilon >= 0.0, "epsilon must be finite and >= 0");
  require(std::isfinite(kl) && kl > 0.0, "kL must be finite and > 0");
  ScatterParams p;
  p.epsilon = epsilon;
  p.kl = kl;
  p.kappa0_l = kl * std::sqrt(epsilon);
  p.kplus_sq_l2 = kl * kl * (1.0 - epsilon);
  p.kminus_sq_l2 = kl * kl * (1.0 + epsilon);
  p.kminus_l = kl * std::sqrt(1.0 + epsilon);
  return p;
}

ScatterParams params_from_kminus(double epsilon, double kminus_l) {
  require(std::isfinite(epsilon) && epsilon >= 0.0, "epsilon must be finite and >= 0");
  require(std::isfinite(kminus_l) && kminus_l > 0.0, "kappa_- L must be finite and > 0");
  return make_params(epsilon, kminus_l / std::sqrt(1.0 + epsilon));
}

SpinState::SpinState(cplx c_plus, cplx c_minus) {
  const double n = std::sqrt(std::norm(c_plus) + std::norm(c_minus));
  require(std::isfinite(n) && n > 0.0, "spin state must be a finite non-zero vector");
  c_[0] = c_plus / n;
  c_[1] = c_minus / n;
}

SpinState spin_from_angle(double theta, double phi) {
  require(std::isfinite(theta) && theta >= 0.0 && theta <= kPi, "theta must lie in [0, pi]");
  require(std::isfinite(phi), "phi must be finite");
  return SpinState(cplx{std::cos(theta / 2.0), 0.0}, std::polar(std::sin(theta / 2.0), phi));
}

double field_for_speed(double q, double v, const UnitsBridge& units) {
  require(std::isfinite(q) && q > 1.0, "q must exceed 1 (no Zeeman split otherwise)");
  require(std::isfinite(v) && v > 0.0, "speed must be > 0");
  const double q2 = q * q;
  return ((q2 - 1.0) / (q2 + 1.0)) * units.mass_over_moment() * v * v;
}

double epsilon_for_physical(double b0, double v, const UnitsBridge& units) {
  require(std::isfinite(b0) && b0 >= 0.0, "field must be finite and >= 0");
  require(std::isfinite(v) && v > 0.0, "speed must be > 0");
  return units.moment * b0 / (units.mass * v * v);
}

double q_for_epsilon(double epsilon) {
  require(std::isfinite(epsilon) && epsilon >= 0.0 && epsilon < 1.0,
          "resonant ratio requires 0 <= epsilon < 1");
  return std::sqrt((1.0 + epsilon) / (1.0 - epsilon));
}

double speed_scale_factor(double new_moment, const UnitsBridge& units) {
  require(std::isfinite(new_moment) && new_moment > 0.0, "moment must be > 0");
  return std::sqrt(new_moment / units.moment);
}

}  // namespace slowspin
