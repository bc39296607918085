#pragma once

#include <functional>

namespace slowspin::quad {

struct Integral {
  double value = 0.0;
  double error = 0.0;  // summed Gauss-Kronrod error estimate
  double l1 = 0.0;     // integral of |f|
};

/// Adaptive 21-point Gauss-Kronrod over [a, b], pre-split into `pieces`
/// equal panels so integrands with many narrow peaks start from a fine
/// partition. Throws QuadratureFailure when the reported error exceeds
/// rel_tol * L1 (with a tiny absolute floor).
Integral integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                   int pieces = 1);

}  // namespace slowspin::quad
