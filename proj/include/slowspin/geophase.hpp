#pragma once

#include "slowspin/core.hpp"
#include "slowspin/scattering.hpp"

namespace slowspin {

inline constexpr double kDefaultQuadTol = 1e-9;

enum class BranchNote {
  Unchanged,      // raw already in (-2pi, 0]
  Shifted,        // principal = raw + 2pi * turns
  SnappedToZero,  // raw sat within 1e-12 below a multiple of 2pi; reported as 0
};

const char* branch_note_name(BranchNote note);

/// A geometric phase in radians, kept both as produced and folded to (-2pi, 0].
struct GpValue {
  double raw = 0.0;
  double principal = 0.0;
  int turns = 0;  // principal - raw in units of 2pi (up to the snap)
  BranchNote note = BranchNote::Unchanged;
};

GpValue make_gp(double raw);

/// Signed distance a - b on the circle, in (-pi, pi].
double circular_difference(double a, double b);

/// Open-path geometric phase of `field` between s0 and s1.
///
/// gamma = arg <phi(s0)|phi(s1)> - int Im[sum_l f_l^* f_l'] / sum_l |f_l|^2 ds.
/// The connection is integrated with adaptive Gauss-Kronrod to `quad_tol`.
/// `pieces` pre-splits the interval for rapidly oscillating fields.
GpValue open_path_gp(const AmplitudeField& field, double s0, double s1,
                     double quad_tol = kDefaultQuadTol, int pieces = 8);

/// Discrete Pancharatnam chain on a uniform mesh of `mesh` intervals.
/// Independent of open_path_gp (no derivatives, no quadrature); converges
/// to it as O(mesh^-2).
double pancharatnam_oracle(const AmplitudeField& field, double s0, double s1, int mesh);

struct ResonantGp {
  GpValue gp;
  int xi = 0;              // (n- - n+) / 2
  double per_turn = 0.0;   // gp.raw / xi
};

/// Closed-form cyclic GP across the slab when both channels are resonant,
/// kappa_l L = n_l pi with n- > n+ >= 1 of equal parity.
ResonantGp resonant_gp(int n_plus, int n_minus, const SpinState& spin,
                       double quad_tol = kDefaultQuadTol);

/// Pure-precession value -xi * pi * (1 - cos theta).
GpValue highspeed_gp(int xi, double theta);

/// Per-cycle GP picked up in the standing wave in front of the slab,
/// integrated over the window s = kx in [offset, offset + pi].
GpValue prebarrier_gp(const ScatterParams& params, const SpinState& spin,
                      double quad_tol = kDefaultQuadTol, double window_offset = 0.0);

/// GP over `cycles` full spatial cycles in front of the slab.
GpValue prebarrier_gp_cycles(const ScatterParams& params, const SpinState& spin, int cycles,
                             double quad_tol = kDefaultQuadTol);

/// Open-path GP across the slab when the "+" channel tunnels (epsilon > 1).
GpValue tunnel_gp(const ScatterParams& params, const SpinState& spin,
                  double quad_tol = kDefaultQuadTol);

}  // namespace slowspin
