#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "slowspin/core.hpp"

namespace slowspin {

/// cos(kappa*u) and sin(kappa*u)/kappa as entire functions of kappa^2.
///
/// Lengths are in units of the slab width L: `u` is x/L, `kappa_sq_l2` is
/// (kappa L)^2, and `s` comes back in units of L. Negative kappa^2 gives the
/// hyperbolic continuation, zero gives the limits (1, u).
struct SlabKernels {
  double c = 1.0;
  double s = 0.0;
};

SlabKernels slab_kernels(double kappa_sq_l2, double u);

/// Scattering of one spin channel off its +-V0 step, unit incident amplitude.
struct ChannelScattering {
  double r = 0.0;          // reflection probability
  double delta = 0.0;      // reflection phase in (-pi, pi], 0 when r == 0
  cplx reflection{};       // sqrt(r) e^{i delta}
  cplx t_amp{};            // coefficient of e^{ik(x-L)} behind the slab
  cplx passage{};          // amplitude map x=0 -> x=L for a wave normalized to 1 at x=0
  // Interior plane-wave coefficients A e^{i kappa x} + B e^{-i kappa x};
  // undefined at kappa = 0 where the interior solution is linear.
  std::optional<cplx> a_coef;
  std::optional<cplx> b_coef;
};

ChannelScattering channel_scattering(const ScatterParams& params, Channel channel);

enum class Region { I, II, III };

const char* region_name(Region r);

/// Values and s-derivatives of (f+, f-) at one position.
struct FieldPoint {
  std::array<cplx, 2> f{};
  std::array<cplx, 2> df{};

  double norm() const { return std::norm(f[0]) + std::norm(f[1]); }
};

/// Spatial spin amplitudes in one region, as consumed by the GP evaluators.
///
/// Position parameterization: s = kx in region i, s = (pi/L) x in region ii,
/// s = k(x - L) in region iii. Derivatives are exact.
class AmplitudeField {
 public:
  using Evaluator = std::function<FieldPoint(double)>;

  AmplitudeField(Region region, Evaluator eval, double s_min, double s_max);

  FieldPoint operator()(double s) const { return eval_(s); }

  Region region() const { return region_; }
  double s_min() const { return s_min_; }
  double s_max() const { return s_max_; }

  /// The same field with both amplitudes multiplied by e^{i alpha(s)}.
  AmplitudeField with_phase(std::function<double(double)> alpha,
                            std::function<double(double)> dalpha) const;

 private:
  Region region_;
  Evaluator eval_;
  double s_min_;
  double s_max_;
};

/// Regional field with the normalization f_l(0) = c_l (region i and ii) and
/// the transmitted spin in region iii.
///
/// Region i throws DegenerateNormalization if 1 + sqrt(r) e^{i delta}
/// vanishes for a channel the spin populates.
AmplitudeField amplitude_field(const ScatterParams& params, const SpinState& spin, Region region);

/// Default window used for sampling a region: one spatial cycle before the
/// slab for region i, the slab itself for region ii, one cycle after for iii.
std::pair<double, double> natural_interval(Region region);

/// Unit-incident wave of one channel at x/L, with d/d(x/L).
struct WaveSample {
  cplx value{};
  cplx slope{};
};

/// Evaluates the closed form belonging to `region` at x/L, also outside the
/// region, so neighbouring forms can be compared at a junction. Region i is
/// e^{ikx} + sqrt(r) e^{i delta} e^{-ikx}.
WaveSample unit_incident_wave(const ScatterParams& params, Channel channel, Region region,
                              double x_over_l);

/// Largest |value jump| + |slope jump| across x = 0 and x = L.
///
/// Checks both the unit-incident channel waves and the spin-normalized
/// amplitude fields built by amplitude_field().
double continuity_check(const ScatterParams& params, const SpinState& spin);

struct BlochSample {
  double s = 0.0;
  std::array<double, 3> n{};
  double norm = 0.0;
  bool degenerate = false;  // both amplitudes vanish, n is meaningless
};

std::array<double, 3> bloch_vector(const std::array<cplx, 2>& f);

std::vector<BlochSample> bloch_trajectory(const ScatterParams& params, const SpinState& spin,
                                          Region region, int samples);

}  // namespace slowspin
