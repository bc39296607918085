#pragma once

#include <vector>

#include "slowspin/core.hpp"

namespace slowspin {

/// A point where both channels are transparent: kappa_l L = n_l pi.
struct ResonanceSpec {
  int n_plus = 0;
  int n_minus = 0;
  int xi = 0;             // (n- - n+) / 2
  double q = 1.0;         // n- / n+
  double epsilon = 0.0;   // (n-^2 - n+^2) / (n-^2 + n+^2)
  double kl = 0.0;        // pi sqrt((n-^2 + n+^2) / 2)
  double kappa0_l = 0.0;  // pi sqrt((n-^2 - n+^2) / 2)

  bool trivial() const { return n_plus == n_minus; }
};

/// Builds the spec for a pair; throws ParityMismatch for mixed parity.
/// `allow_trivial` admits n- == n+ (zero field).
ResonanceSpec spec_from_pair(int n_plus, int n_minus, bool allow_trivial = false);

/// All lattice pairs with n+^2 + n-^2 = 2 (kL/pi)^2, n- >= n+, same parity.
std::vector<ResonanceSpec> resonances_for_kl(double kl, bool include_trivial = false);

/// All resonant pairs whose kL falls in [kl_min, kl_max], ordered by kL then n+.
std::vector<ResonanceSpec> resonances_in_range(double kl_min, double kl_max,
                                               bool include_trivial = false);

struct PhysicalPoint {
  double v = 0.0;   // m/s
  double b0 = 0.0;  // T
};

/// Speed and field realizing `spec` for a slab of width `length` metres.
PhysicalPoint physical_point(const ResonanceSpec& spec, double length, const UnitsBridge& units = {});

/// Same-parity pair (n+, n-) for a ratio q = n-/n+.
///
/// Takes the smallest n+ whose rounded partner matches q to 1e-6 with equal
/// parity; for q = a/b in lowest terms that is (b, a) or (2b, 2a). If no pair
/// up to `cap` matches, the closest same-parity pair seen is returned and
/// `exact` is false.
struct PairResolution {
  int n_plus = 0;
  int n_minus = 0;
  bool exact = false;
  double ratio_error = 0.0;
};

PairResolution pair_for_ratio(double q, int cap = 100000);

}  // namespace slowspin
