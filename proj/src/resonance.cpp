#include "slowspin/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slowspin/errors.hpp"

namespace slowspin {

namespace {

constexpr double kLatticeTol = 1e-9;

}  // namespace

ResonanceSpec spec_from_pair(int n_plus, int n_minus, bool allow_trivial) {
  if (n_plus < 1) throw InvalidArgument("n+ must be >= 1");
  if (n_minus < n_plus || (n_minus == n_plus && !allow_trivial)) {
    throw InvalidArgument("resonance needs n- > n+ (the well channel has the larger wavenumber)");
  }
  if ((n_minus - n_plus) % 2 != 0) {
    throw ParityMismatch("n+ = " + std::to_string(n_plus) + " and n- = " +
                         std::to_string(n_minus) + " must both be even or both odd");
  }
  const double np2 = static_cast<double>(n_plus) * n_plus;
  const double nm2 = static_cast<double>(n_minus) * n_minus;
  ResonanceSpec s;
  s.n_plus = n_plus;
  s.n_minus = n_minus;
  s.xi = (n_minus - n_plus) / 2;
  s.q = static_cast<double>(n_minus) / n_plus;
  s.epsilon = (nm2 - np2) / (nm2 + np2);
  s.kl = kPi * std::sqrt((nm2 + np2) / 2.0);
  s.kappa0_l = kPi * std::sqrt((nm2 - np2) / 2.0);
  return s;
}

std::vector<ResonanceSpec> resonances_for_kl(double kl, bool include_trivial) {
  if (!(std::isfinite(kl) && kl > 0.0)) throw InvalidArgument("kL must be finite and > 0");
  const double target = 2.0 * (kl / kPi) * (kl / kPi);
  std::vector<ResonanceSpec> out;
  const int top = static_cast<int>(std::floor(std::sqrt(target / 2.0) + 1e-6));
  for (int np = 1; np <= top; ++np) {
    const double rest = target - static_cast<double>(np) * np;
    const long nm = std::lround(std::sqrt(std::max(rest, 0.0)));
    if (nm < np) continue;
    const double sum = static_cast<double>(np) * np + static_cast<double>(nm) * nm;
    if (std::abs(sum - target) > kLatticeTol * std::max(1.0, target)) continue;
    if ((nm - np) % 2 != 0) continue;
    if (nm == np && !include_trivial) continue;
    out.push_back(spec_from_pair(np, static_cast<int>(nm), true));
  }
  return out;
}

std::vector<ResonanceSpec> resonances_in_range(double kl_min, double kl_max, bool include_trivial) {
  if (!(std::isfinite(kl_min) && std::isfinite(kl_max) && kl_min > 0.0 && kl_min <= kl_max)) {
    throw InvalidArgument("kL range must satisfy 0 < min <= max");
  }
  // kL = pi sqrt(m/2) with m = n+^2 + n-^2.
  const double m_lo = 2.0 * (kl_min / kPi) * (kl_min / kPi);
  const double m_hi = 2.0 * (kl_max / kPi) * (kl_max / kPi);
  std::vector<ResonanceSpec> out;
  const int top = static_cast<int>(std::floor(std::sqrt(m_hi))) + 1;
  for (int np = 1; np <= top; ++np) {
    for (int nm = np; nm <= top; nm += 2) {
      if (nm == np && !include_trivial) continue;
      const double m = static_cast<double>(np) * np + static_cast<double>(nm) * nm;
      if (m > m_hi * (1.0 + kLatticeTol)) break;
      if (m < m_lo * (1.0 - kLatticeTol)) continue;
      out.push_back(spec_from_pair(np, nm, true));
    }
  }
  std::sort(out.begin(), out.end(), [](const ResonanceSpec& a, const ResonanceSpec& b) {
    const long ma = static_cast<long>(a.n_plus) * a.n_plus + static_cast<long>(a.n_minus) * a.n_minus;
    const long mb = static_cast<long>(b.n_plus) * b.n_plus + static_cast<long>(b.n_minus) * b.n_minus;
    return ma != mb ? ma < mb : a.n_plus < b.n_plus;
  });
  return out;
}

PhysicalPoint physical_point(const ResonanceSpec& spec, double length, const UnitsBridge& units) {
  if (!(std::isfinite(length) && length > 0.0)) throw InvalidArgument("slab width must be > 0");
  if (spec.n_plus < 1 || spec.n_minus <= spec.n_plus) {
    throw InvalidArgument("physical point needs a non-trivial resonance");
  }
  PhysicalPoint p;
  const double k = spec.kl / length;
  p.v = units.hbar * k / units.mass;
  p.b0 = field_for_speed(spec.q, p.v, units);
  return p;
}

PairResolution pair_for_ratio(double q, int cap) {
  if (!(std::isfinite(q) && q > 1.0)) throw InvalidArgument("q must be finite and > 1");
  if (cap < 1) throw InvalidArgument("search cap must be >= 1");
  PairResolution best;
  best.ratio_error = INFINITY;
  for (int np = 1; np <= cap; ++np) {
    const double target = q * np;
    if (target > 2e9) break;
    long nm = std::lround(target);
    if ((nm - np) % 2 != 0) {
      // Nearest same-parity partner.
      nm = (target >= static_cast<double>(nm)) ? nm + 1 : nm - 1;
    }
    if (nm <= np) continue;
    const double err = std::abs(static_cast<double>(nm) / np - q);
    if (err < best.ratio_error) {
      best.n_plus = np;
      best.n_minus = static_cast<int>(nm);
      best.ratio_error = err;
    }
    if (err < 1e-6) {
      best.exact = true;
      return best;
    }
  }
  return best;
}

}  // namespace slowspin
