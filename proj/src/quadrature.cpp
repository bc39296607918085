#include "slowspin/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <string>

#include "slowspin/errors.hpp"

namespace slowspin::quad {

namespace {

constexpr unsigned kMaxDepth = 18;
constexpr double kAbsFloor = 1e-15;

}  // namespace

Integral integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                   int pieces) {
  if (!(std::isfinite(a) && std::isfinite(b) && a <= b)) {
    throw InvalidArgument("integration bounds must be finite with a <= b");
  }
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw InvalidArgument("quadrature tolerance must be positive");
  }
  if (pieces < 1) pieces = 1;

  using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
  Integral total;
  if (a == b) return total;
  const double width = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + width * i;
    const double hi = i == pieces - 1 ? b : a + width * (i + 1);
    double err = 0.0;
    double l1 = 0.0;
    total.value += GK::integrate(f, lo, hi, kMaxDepth, rel_tol, &err, &l1);
    total.error += err;
    total.l1 += l1;
  }
  if (!std::isfinite(total.value) || total.error > rel_tol * total.l1 + kAbsFloor * (b - a)) {
    throw QuadratureFailure("adaptive quadrature did not converge: error estimate " +
                            std::to_string(total.error) + " on [" + std::to_string(a) + ", " +
                            std::to_string(b) + "]");
  }
  return total;
}

}  // namespace slowspin::quad
