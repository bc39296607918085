#pragma once

#include <complex>

namespace slowspin {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Dimensionless definition of the slab problem.
///
/// Everything downstream is expressed through the energy ratio
/// epsilon = V0/E and the product kL. Channel wavenumbers are stored
/// pre-multiplied by L. The "+" channel sees the barrier, so its squared
/// wavenumber is kept as a signed real: it goes negative when epsilon > 1
/// and the channel tunnels.
struct ScatterParams {
  double epsilon = 0.0;
  double kl = 1.0;
  double kappa0_l = 0.0;      // kl * sqrt(epsilon)
  double kplus_sq_l2 = 1.0;   // kl^2 * (1 - epsilon), signed
  double kminus_sq_l2 = 1.0;  // kl^2 * (1 + epsilon)
  double kminus_l = 1.0;      // kl * sqrt(1 + epsilon)

  bool tunneling() const { return kplus_sq_l2 < 0.0; }
};

enum class Channel { Plus, Minus };

inline int channel_index(Channel c) { return c == Channel::Plus ? 0 : 1; }

/// Signed (kappa_l L)^2 for one spin channel.
double kappa_sq_l2(const ScatterParams& p, Channel c);

ScatterParams make_params(double epsilon, double kl);

/// Builds parameters from kappa_- L instead of kL.
ScatterParams params_from_kminus(double epsilon, double kminus_l);

/// Normalized spin amplitude pair along the field axis.
class SpinState {
 public:
  SpinState() = default;
  /// Normalizes (c_plus, c_minus); throws InvalidArgument on a zero vector.
  SpinState(cplx c_plus, cplx c_minus);

  cplx c_plus() const { return c_[0]; }
  cplx c_minus() const { return c_[1]; }
  cplx operator[](int l) const { return c_[l]; }
  cplx component(Channel c) const { return c_[channel_index(c)]; }

  double weight(int l) const { return std::norm(c_[l]); }

 private:
  cplx c_[2] = {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
};

/// c+ = cos(theta/2), c- = e^{i phi} sin(theta/2).
SpinState spin_from_angle(double theta, double phi = 0.0);

/// SI constants for converting dimensionless results to lab quantities.
struct UnitsBridge {
  double mass = 1.675e-27;            // kg
  double moment = 9.662e-27;          // J/T
  double hbar = 1.054571817e-34;      // J s

  double mass_over_moment() const { return mass / moment; }
};

inline constexpr double kBohrMagneton = 9.27e-24;  // J/T, as quoted for hydrogen

/// Field b0 [T] making both channels resonant for ratio q = n-/n+ at speed v [m/s].
double field_for_speed(double q, double v, const UnitsBridge& units = {});

/// V0/E = moment * b0 / (mass * v^2).
double epsilon_for_physical(double b0, double v, const UnitsBridge& units = {});

/// Inverse of epsilon = (q^2 - 1)/(q^2 + 1) for 0 <= epsilon < 1.
double q_for_epsilon(double epsilon);

/// Factor by which the usable speed range grows when the moment is replaced.
double speed_scale_factor(double new_moment, const UnitsBridge& units = {});

}  // namespace slowspin
