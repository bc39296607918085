#pragma once

// Independent reference computations used only by the tests. None of these
// go through the library's kernels or quadrature.

#include <array>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;

using Mat2 = std::array<cplx, 4>;  // row-major

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 inv(const Mat2& a) {
  const cplx det = a[0] * a[3] - a[1] * a[2];
  return {a[3] / det, -a[1] / det, -a[2] / det, a[0] / det};
}

// [psi, psi'] from plane-wave coefficients (forward, backward) at x.
inline Mat2 wave_matrix(cplx q, double x) {
  const cplx I{0.0, 1.0};
  const cplx ep = std::exp(I * q * x), em = std::exp(-I * q * x);
  return {ep, em, I * q * ep, -I * q * em};
}

struct TransferResult {
  cplx reflection;
  cplx transmission;  // coefficient of e^{ik(x-L)}
};

// Lengths in units of L. Requires kappa^2 != 0.
inline TransferResult transfer_matrix(double kl, double kappa_sq_l2) {
  const cplx k{kl, 0.0};
  const cplx kappa = std::sqrt(cplx{kappa_sq_l2, 0.0});
  const Mat2 p = mul(mul(inv(wave_matrix(k, 1.0)), wave_matrix(kappa, 1.0)),
                     mul(inv(wave_matrix(kappa, 0.0)), wave_matrix(k, 0.0)));
  const cplx r = -p[2] / p[3];
  const cplx t_fwd = p[0] + p[1] * r;  // coefficient of e^{ikx}
  return {r, t_fwd * std::exp(cplx{0.0, kl})};
}

struct Pair {
  int n_plus;
  int n_minus;
};

// Every same-parity pair n- > n+ >= 1 with n± <= cap whose 2 (kL/pi)^2 matches.
inline std::vector<Pair> brute_force_lattice(long m_target, int cap) {
  std::vector<Pair> out;
  for (int a = 1; a <= cap; ++a) {
    for (int b = a + 1; b <= cap; ++b) {
      if ((b - a) % 2 == 0 && static_cast<long>(a) * a + static_cast<long>(b) * b == m_target) {
        out.push_back({a, b});
      }
    }
  }
  return out;
}

// Composite Simpson on [a, b] with n (even) panels.
template <typename F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Cyclic resonant GP from the closed-form integrand, summed with Simpson.
inline double resonant_gp_simpson(int np, int nm, double theta, int panels) {
  const double wp = std::cos(theta / 2) * std::cos(theta / 2);
  const double wm = std::sin(theta / 2) * std::sin(theta / 2);
  const double ksq = (static_cast<double>(nm) * nm + static_cast<double>(np) * np) / 2.0;
  auto f = [&](double s) {
    const double cp = std::cos(np * s), sp = std::sin(np * s);
    const double cm = std::cos(nm * s), sm = std::sin(nm * s);
    return 1.0 / ((cp * cp + ksq / (np * np) * sp * sp) * wp + (cm * cm + ksq / (nm * nm) * sm * sm) * wm);
  };
  return kPi * np - std::sqrt(ksq) * simpson(f, 0.0, kPi, panels);
}

inline double circular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * kPi));
}

}  // namespace oracle
