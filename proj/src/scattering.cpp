#include "slowspin/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "slowspin/errors.hpp"

namespace slowspin {

namespace {

constexpr cplx kI{0.0, 1.0};

// Below this |kappa^2 u^2| the Taylor form is used; the truncation error is
// below 1e-21 relative.
constexpr double kSeriesThreshold = 1e-6;

constexpr double kDegenerateNorm = 1e-12;

struct ChannelForm {
  double ksq = 0.0;  // (kappa L)^2
  ChannelScattering sc;
};

ChannelForm channel_form(const ScatterParams& p, Channel c) {
  return ChannelForm{kappa_sq_l2(p, c), channel_scattering(p, c)};
}

// Numerator of the slab wave normalized to 1 at x = 0, as a function of x/L,
// together with its x/L derivative.
std::pair<cplx, cplx> slab_numerator(double ksq, double kl, double u) {
  const SlabKernels kr = slab_kernels(ksq, u - 1.0);
  return {cplx{kr.c, kl * kr.s}, cplx{-ksq * kr.s, kl * kr.c}};
}

}  // namespace

SlabKernels slab_kernels(double kappa_sq_l2, double u) {
  const double z = kappa_sq_l2 * u * u;
  if (std::abs(z) < kSeriesThreshold) {
    return {1.0 - z / 2.0 + z * z / 24.0, u * (1.0 - z / 6.0 + z * z / 120.0)};
  }
  if (kappa_sq_l2 > 0.0) {
    const double kappa = std::sqrt(kappa_sq_l2);
    return {std::cos(kappa * u), std::sin(kappa * u) / kappa};
  }
  const double a = std::sqrt(-kappa_sq_l2);
  return {std::cosh(a * u), std::sinh(a * u) / a};
}

ChannelScattering channel_scattering(const ScatterParams& params, Channel channel) {
  const double k = params.kl;
  const double ksq = kappa_sq_l2(params, channel);
  const SlabKernels full = slab_kernels(ksq, 1.0);

  // Matching at x = 0 and x = L with kappa factored out of sin(kappa L).
  const cplx denom = cplx{(k * k + ksq) * full.s, 2.0 * k * full.c};
  ChannelScattering out;
  out.reflection = (k * k - ksq) * full.s / denom;
  out.t_amp = 2.0 * kI * k / denom;
  out.passage = 1.0 / cplx{full.c, -k * full.s};
  out.r = std::norm(out.reflection);
  out.delta = out.r == 0.0 ? 0.0 : std::arg(out.reflection);

  if (ksq != 0.0) {
    const cplx kappa = std::sqrt(cplx{ksq, 0.0});
    const cplx sum = 1.0 + out.reflection;
    const cplx diff = k * (1.0 - out.reflection) / kappa;
    out.a_coef = 0.5 * (sum + diff);
    out.b_coef = 0.5 * (sum - diff);
  }
  return out;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::I:
      return "i";
    case Region::II:
      return "ii";
    case Region::III:
      return "iii";
  }
  return "?";
}

AmplitudeField::AmplitudeField(Region region, Evaluator eval, double s_min, double s_max)
    : region_(region), eval_(std::move(eval)), s_min_(s_min), s_max_(s_max) {
  if (!eval_) throw InvalidArgument("amplitude field needs an evaluator");
  if (!(s_min_ < s_max_)) throw InvalidArgument("amplitude field needs s_min < s_max");
}

AmplitudeField AmplitudeField::with_phase(std::function<double(double)> alpha,
                                          std::function<double(double)> dalpha) const {
  Evaluator base = eval_;
  return AmplitudeField(
      region_,
      [base, alpha = std::move(alpha), dalpha = std::move(dalpha)](double s) {
        FieldPoint p = base(s);
        const cplx twist = std::polar(1.0, alpha(s));
        const double da = dalpha(s);
        for (int l = 0; l < 2; ++l) {
          p.df[l] = twist * (p.df[l] + kI * da * p.f[l]);
          p.f[l] = twist * p.f[l];
        }
        return p;
      },
      s_min_, s_max_);
}

std::pair<double, double> natural_interval(Region region) {
  switch (region) {
    case Region::I:
      return {-kPi, 0.0};
    case Region::II:
    case Region::III:
      return {0.0, kPi};
  }
  return {0.0, kPi};
}

AmplitudeField amplitude_field(const ScatterParams& params, const SpinState& spin, Region region) {
  const ChannelForm forms[2] = {channel_form(params, Channel::Plus),
                                channel_form(params, Channel::Minus)};
  const double kl = params.kl;
  const double inf = std::numeric_limits<double>::infinity();

  switch (region) {
    case Region::I: {
      std::array<cplx, 2> rho{};
      std::array<cplx, 2> scale{};
      for (int l = 0; l < 2; ++l) {
        rho[l] = forms[l].sc.reflection;
        const cplx at_origin = 1.0 + rho[l];
        if (std::abs(at_origin) < kDegenerateNorm && spin.weight(l) > 0.0) {
          throw DegenerateNormalization("reflected wave has a node at the slab entrance");
        }
        scale[l] = spin.weight(l) > 0.0 ? spin[l] / at_origin : cplx{};
      }
      return AmplitudeField(
          Region::I,
          [rho, scale](double s) {
            FieldPoint p;
            const cplx in = std::polar(1.0, s);
            const cplx back = std::conj(in);
            for (int l = 0; l < 2; ++l) {
              p.f[l] = (in + rho[l] * back) * scale[l];
              p.df[l] = kI * (in - rho[l] * back) * scale[l];
            }
            return p;
          },
          -inf, 0.0);
    }
    case Region::II: {
      std::array<double, 2> ksq{forms[0].ksq, forms[1].ksq};
      std::array<cplx, 2> scale{forms[0].sc.passage * spin[0], forms[1].sc.passage * spin[1]};
      return AmplitudeField(
          Region::II,
          [ksq, scale, kl](double s) {
            FieldPoint p;
            const double u = s / kPi;
            for (int l = 0; l < 2; ++l) {
              const auto [num, dnum] = slab_numerator(ksq[l], kl, u);
              p.f[l] = num * scale[l];
              p.df[l] = dnum * scale[l] / kPi;
            }
            return p;
          },
          0.0, kPi);
    }
    case Region::III: {
      std::array<cplx, 2> out{forms[0].sc.passage * spin[0], forms[1].sc.passage * spin[1]};
      return AmplitudeField(
          Region::III,
          [out](double s) {
            FieldPoint p;
            const cplx ph = std::polar(1.0, s);
            for (int l = 0; l < 2; ++l) {
              p.f[l] = ph * out[l];
              p.df[l] = kI * p.f[l];
            }
            return p;
          },
          0.0, inf);
    }
  }
  throw InvalidArgument("unknown region");
}

WaveSample unit_incident_wave(const ScatterParams& params, Channel channel, Region region,
                              double x_over_l) {
  const double k = params.kl;
  const ChannelForm form = channel_form(params, channel);
  const ChannelScattering& sc = form.sc;
  switch (region) {
    case Region::I: {
      const cplx in = std::polar(1.0, k * x_over_l);
      const cplx back = std::conj(in);
      return {in + sc.reflection * back, kI * k * (in - sc.reflection * back)};
    }
    case Region::II: {
      const auto [num, dnum] = slab_numerator(form.ksq, k, x_over_l);
      const cplx scale = (1.0 + sc.reflection) * sc.passage;
      return {num * scale, dnum * scale};
    }
    case Region::III: {
      const cplx v = sc.t_amp * std::polar(1.0, k * (x_over_l - 1.0));
      return {v, kI * k * v};
    }
  }
  throw InvalidArgument("unknown region");
}

double continuity_check(const ScatterParams& params, const SpinState& spin) {
  double worst = 0.0;
  auto jump = [](const WaveSample& a, const WaveSample& b) {
    return std::abs(a.value - b.value) + std::abs(a.slope - b.slope);
  };
  for (Channel c : {Channel::Plus, Channel::Minus}) {
    worst = std::max(worst, jump(unit_incident_wave(params, c, Region::I, 0.0),
                                 unit_incident_wave(params, c, Region::II, 0.0)));
    worst = std::max(worst, jump(unit_incident_wave(params, c, Region::II, 1.0),
                                 unit_incident_wave(params, c, Region::III, 1.0)));
  }

  // Normalized fields, slopes converted to d/d(x/L) for each parameterization.
  const double kl = params.kl;
  const FieldPoint in_end = amplitude_field(params, spin, Region::I)(0.0);
  const AmplitudeField slab = amplitude_field(params, spin, Region::II);
  const FieldPoint slab_start = slab(0.0);
  const FieldPoint slab_end = slab(kPi);
  const FieldPoint out_start = amplitude_field(params, spin, Region::III)(0.0);
  for (int l = 0; l < 2; ++l) {
    worst = std::max(worst, std::abs(in_end.f[l] - slab_start.f[l]) +
                                std::abs(kl * in_end.df[l] - kPi * slab_start.df[l]));
    worst = std::max(worst, std::abs(slab_end.f[l] - out_start.f[l]) +
                                std::abs(kPi * slab_end.df[l] - kl * out_start.df[l]));
  }
  return worst;
}

std::array<double, 3> bloch_vector(const std::array<cplx, 2>& f) {
  const cplx cross = std::conj(f[0]) * f[1];
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(f[0]) - std::norm(f[1])};
}

std::vector<BlochSample> bloch_trajectory(const ScatterParams& params, const SpinState& spin,
                                          Region region, int samples) {
  if (samples < 2) throw InvalidArgument("trajectory needs at least 2 samples");
  const AmplitudeField field = amplitude_field(params, spin, region);
  const auto [lo, hi] = natural_interval(region);
  std::vector<BlochSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int j = 0; j < samples; ++j) {
    BlochSample b;
    b.s = j == samples - 1 ? hi : lo + (hi - lo) * j / (samples - 1);
    const FieldPoint p = field(b.s);
    b.norm = p.norm();
    b.degenerate = !(b.norm > 0.0) || !std::isfinite(b.norm);
    if (!b.degenerate) {
      b.n = bloch_vector(p.f);
      for (double& x : b.n) x /= b.norm;
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace slowspin
