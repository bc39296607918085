#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>

#include "parallel.hpp"
#include "slowspin/cli.hpp"
#include "slowspin/errors.hpp"
#include "slowspin/geophase.hpp"
#include "slowspin/resonance.hpp"
#include "slowspin/scattering.hpp"

namespace slowspin::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kThetaPoints = 361;

struct RowOutcome {
  std::vector<Cell> cells;
  int severity = kOk;
};

// Runs `compute` for one row. On failure the numeric cells it did not reach
// stay NaN and the status column records the reason.
RowOutcome guarded_row(std::vector<Cell> keys, std::size_t n_values,
                       const std::function<std::vector<double>()>& compute,
                       std::vector<Cell> tail = {}) {
  RowOutcome row;
  row.cells = std::move(keys);
  std::string status = "ok";
  std::vector<double> values(n_values, kNaN);
  try {
    values = compute();
  } catch (const DomainError& e) {
    status = std::string("domain-error: ") + e.what();
    row.severity = kDomainError;
  } catch (const NumericalError& e) {
    status = std::string("numerical-failure: ") + e.what();
    row.severity = kNumericalFailure;
  } catch (const InvalidArgument& e) {
    status = std::string("invalid-argument: ") + e.what();
    row.severity = kInvalidArguments;
  }
  values.resize(n_values, kNaN);
  for (double v : values) row.cells.emplace_back(v);
  for (auto& c : tail) row.cells.push_back(std::move(c));
  row.cells.emplace_back(status);
  return row;
}

int worst(int a, int b) {
  auto rank = [](int c) { return c == kNumericalFailure ? 3 : c == kDomainError ? 2 : c == kInvalidArguments ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

CommandResult collect(Table t, std::vector<RowOutcome> rows) {
  CommandResult r;
  for (auto& row : rows) {
    r.exit_code = worst(r.exit_code, row.severity);
    t.rows.push_back(std::move(row.cells));
  }
  r.table = std::move(t);
  return r;
}

std::vector<double> theta_values(const Settings& s) {
  if (const auto t = s.number("theta")) return {*t};
  if (const auto g = s.text("grid")) return parse_grid(*g);
  return parse_grid("0:pi:" + std::to_string(kThetaPoints));
}

void check_preset(const Settings& s, const std::string& allowed) {
  if (const auto p = s.text("preset"); p && *p != allowed) {
    throw InvalidArgument("preset '" + *p + "' does not apply here (expected " + allowed + ")");
  }
}

double tolerance(const Settings& s) {
  const double tol = s.number_or("tol", kDefaultQuadTol);
  if (!(tol > 0.0 && tol < 1.0)) throw InvalidArgument("--tol must lie in (0, 1)");
  return tol;
}

void note_common(Table& t, const Settings& s) {
  t.note("quad_tol", format_number(tolerance(s)));
}

std::string pair_label(int np, int nm) {
  return "n+=" + std::to_string(np) + ";n-=" + std::to_string(nm);
}

// Slab parameters from either --kl or --kminus-l (the latter wins when both
// are missing and a default is supplied).
ScatterParams slab_params(const Settings& s, double epsilon, std::optional<double> default_kminus,
                          std::optional<double> default_kl) {
  if (const auto kl = s.number("kl")) return make_params(epsilon, *kl);
  if (const auto km = s.number("kminus-l")) return params_from_kminus(epsilon, *km);
  if (default_kminus) return params_from_kminus(epsilon, *default_kminus);
  if (default_kl) return make_params(epsilon, *default_kl);
  throw InvalidArgument("need --kl or --kminus-l");
}

}  // namespace

CommandResult cmd_resonant_gp(const Settings& s) {
  check_preset(s, "fig2");
  const double tol = tolerance(s);
  const double phi = s.number_or("phi", 0.0);

  struct Family {
    double q;
    int n_plus;
    int n_minus;
  };
  std::vector<Family> families;
  Table t;
  t.command = "resonant-gp";

  const auto np = s.integer("n-plus");
  const auto nm = s.integer("n-minus");
  if (np || nm) {
    if (!(np && nm)) throw InvalidArgument("--n-plus and --n-minus go together");
    spec_from_pair(*np, *nm);  // parity and ordering
    families.push_back({static_cast<double>(*nm) / *np, *np, *nm});
  } else {
    std::vector<double> qs;
    if (const auto q = s.number("q")) {
      qs.push_back(*q);
    } else {
      qs = {1.2, 3.0, 10.0};
    }
    for (double q : qs) {
      const PairResolution pr = pair_for_ratio(q);
      families.push_back({q, pr.n_plus, pr.n_minus});
      t.note("pair for q=" + format_number(q),
             pair_label(pr.n_plus, pr.n_minus) + (pr.exact ? "" : " (nearest achievable, ratio error " +
                                                                   format_number(pr.ratio_error) + ")"));
    }
  }
  const std::vector<double> thetas = theta_values(s);
  note_common(t, s);
  t.note("phi", format_number(phi));
  t.columns = {"q",  "n_plus", "n_minus", "xi", "theta", "gp_raw", "gp_principal",
               "gp_per_turn", "gp_ideal", "difference", "status"};
  t.plot_x = "theta";
  t.plot_y = "gp_per_turn";
  t.plot_series = "q";

  const std::size_t per = thetas.size();
  auto rows = parallel_map(families.size() * per, [&](std::size_t i) {
    const Family& f = families[i / per];
    const double theta = thetas[i % per];
    return guarded_row(
        {f.q, std::int64_t{f.n_plus}, std::int64_t{f.n_minus}, std::int64_t{(f.n_minus - f.n_plus) / 2}, theta},
        5, [&] {
          const ResonantGp g = resonant_gp(f.n_plus, f.n_minus, spin_from_angle(theta, phi), tol);
          const double ideal = -kPi * (1.0 - std::cos(theta));
          return std::vector<double>{g.gp.raw, g.gp.principal, g.per_turn, ideal, g.per_turn - ideal};
        });
  });
  return collect(std::move(t), std::move(rows));
}

CommandResult cmd_prebarrier_gp(const Settings& s) {
  check_preset(s, "fig3");
  const double tol = tolerance(s);
  std::vector<double> kls;
  if (const auto kl = s.number("kl")) {
    kls.push_back(*kl);
  } else {
    kls = {std::sqrt(10.0) * kPi, 4.0 * kPi};
  }
  std::vector<double> eps;
  if (const auto e = s.number("epsilon")) {
    eps.push_back(*e);
  } else {
    eps = parse_grid(s.text("grid").value_or("0.01:1:100"));
  }
  const double theta = s.number_or("theta", kPi / 2.0);
  const double phi = s.number_or("phi", 0.0);
  const SpinState spin = spin_from_angle(theta, phi);

  Table t;
  t.command = "prebarrier-gp";
  note_common(t, s);
  t.note("theta", format_number(theta));
  t.note("phi", format_number(phi));
  std::vector<std::vector<ResonanceSpec>> res;
  for (double kl : kls) res.push_back(resonances_for_kl(kl));
  t.columns = {"kl",      "epsilon",    "gamma_raw", "gamma_principal", "r_plus", "delta_plus",
               "r_minus", "delta_minus", "resonance", "status"};
  t.plot_x = "epsilon";
  t.plot_y = "gamma_raw";
  t.plot_series = "kl";

  const std::size_t per = eps.size();
  auto rows = parallel_map(kls.size() * per, [&](std::size_t i) {
    const std::size_t ki = i / per;
    const double kl = kls[ki];
    const double e = eps[i % per];
    std::string marker;
    for (const auto& r : res[ki]) {
      if (std::abs(r.epsilon - e) < 1e-9) marker = pair_label(r.n_plus, r.n_minus);
    }
    return guarded_row(
        {kl, e}, 6,
        [&] {
          const ScatterParams p = make_params(e, kl);
          const ChannelScattering plus = channel_scattering(p, Channel::Plus);
          const ChannelScattering minus = channel_scattering(p, Channel::Minus);
          const GpValue g = prebarrier_gp(p, spin, tol);
          return std::vector<double>{g.raw, g.principal, plus.r, plus.delta, minus.r, minus.delta};
        },
        {marker});
  });
  return collect(std::move(t), std::move(rows));
}

CommandResult cmd_tunnel_gp(const Settings& s) {
  check_preset(s, "fig5");
  const double tol = tolerance(s);
  std::vector<double> eps;
  if (const auto e = s.number("epsilon")) {
    eps.push_back(*e);
  } else {
    eps = {1.01, 2.0, 5.0};
  }
  for (double e : eps) {
    if (!(e > 1.0)) throw InvalidArgument("tunnel-gp needs epsilon > 1");
  }
  const std::vector<double> thetas = theta_values(s);
  const double phi = s.number_or("phi", 0.0);
  const int mesh = s.integer_or("mesh", 10000);
  if (mesh < 2) throw InvalidArgument("--mesh must be >= 2");

  Table t;
  t.command = "tunnel-gp";
  note_common(t, s);
  t.note("phi", format_number(phi));
  t.note("oracle_mesh", std::to_string(mesh));
  t.columns = {"epsilon", "kminus_l", "kl", "theta", "gamma_raw", "gamma_principal", "oracle",
               "oracle_diff", "status"};
  t.plot_x = "theta";
  t.plot_y = "gamma_principal";
  t.plot_series = "epsilon";

  std::vector<ScatterParams> params;
  for (double e : eps) params.push_back(slab_params(s, e, kPi, std::nullopt));
  const std::size_t per = thetas.size();
  auto rows = parallel_map(params.size() * per, [&](std::size_t i) {
    const ScatterParams& p = params[i / per];
    const double theta = thetas[i % per];
    return guarded_row({p.epsilon, p.kminus_l, p.kl, theta}, 4, [&] {
      const SpinState spin = spin_from_angle(theta, phi);
      const GpValue g = tunnel_gp(p, spin, tol);
      const double oracle =
          pancharatnam_oracle(amplitude_field(p, spin, Region::II), 0.0, kPi, mesh);
      return std::vector<double>{g.raw, g.principal, oracle,
                                 std::abs(circular_difference(g.raw, oracle))};
    });
  });
  return collect(std::move(t), std::move(rows));
}

namespace {

Region parse_region(const std::string& name) {
  if (name == "i" || name == "1") return Region::I;
  if (name == "ii" || name == "2") return Region::II;
  if (name == "iii" || name == "3") return Region::III;
  throw InvalidArgument("unknown region '" + name + "' (i|ii|iii)");
}

}  // namespace

CommandResult cmd_trajectory(const Settings& s) {
  check_preset(s, "fig4");
  std::vector<double> eps;
  if (const auto e = s.number("epsilon")) {
    eps.push_back(*e);
  } else {
    eps = {1.01, 2.0};
  }
  const double theta = s.number_or("theta", kPi / 3.0);
  const double phi = s.number_or("phi", 0.0);
  const int samples = s.integer_or("samples", 401);
  const Region region = parse_region(s.text("region").value_or("ii"));
  if (region == Region::III) throw InvalidArgument("trajectory supports regions i and ii");
  const SpinState spin = spin_from_angle(theta, phi);

  Table t;
  t.command = "trajectory";
  t.note("theta", format_number(theta));
  t.note("phi", format_number(phi));
  t.note("region", region_name(region));
  t.columns = {"epsilon", "kminus_l", "s", "n_x", "n_y", "n_z", "norm", "status"};
  t.plot_x = "n_x";
  t.plot_y = "n_z";
  t.plot_series = "epsilon";

  CommandResult out;
  for (double e : eps) {
    const ScatterParams p = slab_params(s, e, 5.0 * kPi, std::nullopt);
    for (const BlochSample& b : bloch_trajectory(p, spin, region, samples)) {
      std::vector<Cell> row{p.epsilon, p.kminus_l, b.s};
      if (b.degenerate) {
        for (int i = 0; i < 3; ++i) row.emplace_back(kNaN);
        row.emplace_back(b.norm);
        row.emplace_back(std::string("numerical-failure: both amplitudes vanish"));
        out.exit_code = worst(out.exit_code, kNumericalFailure);
      } else {
        row.insert(row.end(), {b.n[0], b.n[1], b.n[2], b.norm});
        row.emplace_back(std::string("ok"));
      }
      t.rows.push_back(std::move(row));
    }
  }
  out.table = std::move(t);
  return out;
}

CommandResult cmd_units(const Settings& s) {
  UnitsBridge units;
  const double base_moment = units.moment;
  if (const auto m = s.number("moment")) {
    if (!(*m > 0.0)) throw InvalidArgument("--moment must be > 0");
    units.moment = *m;
  }
  const double v = s.number_or("v", 1.0);
  const double scale = speed_scale_factor(units.moment, UnitsBridge{});

  Table t;
  t.command = "units";
  t.note("mass_kg", format_number(units.mass));
  t.note("moment_J_per_T", format_number(units.moment));
  t.note("reference_moment_J_per_T", format_number(base_moment));
  t.note("hbar_J_s", format_number(units.hbar));
  t.columns = {"q", "v", "b0", "epsilon", "moment", "speed_scale", "status"};
  t.plot_x = "q";
  t.plot_y = "b0";

  std::vector<RowOutcome> rows;
  if (const auto b0 = s.number("b0")) {
    rows.push_back(guarded_row({}, 6, [&] {
      const double e = epsilon_for_physical(*b0, v, units);
      return std::vector<double>{q_for_epsilon(e), v, *b0, e, units.moment, scale};
    }));
  } else {
    std::vector<double> qs;
    if (const auto q = s.number("q")) {
      qs.push_back(*q);
    } else if (const auto g = s.text("grid")) {
      qs = parse_grid(*g);
    } else {
      qs = {10.0, 3.0, 1.2};
    }
    for (double q : qs) {
      rows.push_back(guarded_row({}, 6, [&] {
        const double b = field_for_speed(q, v, units);
        return std::vector<double>{q, v, b, epsilon_for_physical(b, v, units), units.moment, scale};
      }));
    }
  }
  return collect(std::move(t), std::move(rows));
}

CommandResult cmd_resonances(const Settings& s) {
  std::vector<ResonanceSpec> specs;
  Table t;
  t.command = "resonances";
  if (const auto kl = s.number("kl")) {
    specs = resonances_for_kl(*kl, s.include_trivial);
    t.note("kl", format_number(*kl));
  } else if (const auto r = s.text("kl-range")) {
    const auto [lo, hi] = parse_range(*r);
    specs = resonances_in_range(lo, hi, s.include_trivial);
    t.note("kl_range", format_number(lo) + ":" + format_number(hi));
  } else {
    throw InvalidArgument("resonances needs --kl or --kl-range");
  }
  t.note("include_trivial", s.include_trivial ? "true" : "false");
  const auto length = s.number("length");
  t.columns = {"n_plus", "n_minus", "xi", "q", "epsilon", "kl", "kappa0_l"};
  if (length) {
    t.note("length_m", format_number(*length));
    t.columns.insert(t.columns.end(), {"v", "b0"});
  }
  t.plot_x = "kl";
  t.plot_y = "epsilon";
  CommandResult out;
  for (const auto& r : specs) {
    std::vector<Cell> row{std::int64_t{r.n_plus}, std::int64_t{r.n_minus}, std::int64_t{r.xi}, r.q,
                          r.epsilon, r.kl, r.kappa0_l};
    if (length) {
      if (r.trivial()) {
        row.insert(row.end(), {kNaN, kNaN});
      } else {
        const PhysicalPoint pp = physical_point(r, *length);
        row.insert(row.end(), {pp.v, pp.b0});
      }
    }
    t.rows.push_back(std::move(row));
  }
  out.table = std::move(t);
  return out;
}

CommandResult cmd_sweep(const Settings& s) {
  const auto evaluator = s.text("evaluator");
  const auto over = s.text("over");
  const auto grid = s.text("grid");
  if (!evaluator || !over || !grid) throw InvalidArgument("sweep needs --evaluator, --over and --grid");
  static const std::vector<std::string> kOver = {"epsilon", "kl", "kminus-l", "theta", "phi"};
  if (std::find(kOver.begin(), kOver.end(), *over) == kOver.end()) {
    throw InvalidArgument("--over must be one of epsilon, kl, kminus-l, theta, phi");
  }
  const std::vector<double> xs = parse_grid(*grid);
  const double tol = tolerance(s);

  // Base point; the swept variable replaces one entry per row.
  struct Point {
    double epsilon, kl, kminus_l, theta, phi;
    bool use_kminus;
  };
  Point base{s.number_or("epsilon", 0.5), s.number_or("kl", kPi), s.number_or("kminus-l", kPi),
             s.number_or("theta", kPi / 2.0), s.number_or("phi", 0.0), s.has("kminus-l") && !s.has("kl")};
  const int n_plus = s.integer_or("n-plus", 2);
  const int n_minus = s.integer_or("n-minus", 4);
  const int mesh = s.integer_or("mesh", 10000);
  const Region region = parse_region(s.text("region").value_or("ii"));

  Table t;
  t.command = "sweep";
  t.note("evaluator", *evaluator);
  t.note("over", *over);
  note_common(t, s);
  std::string col = *over;
  std::replace(col.begin(), col.end(), '-', '_');
  t.columns = {col};
  t.plot_x = col;

  std::function<std::vector<double>(const Point&)> eval;
  std::vector<std::string> outputs;
  auto params_of = [](const Point& p) {
    return p.use_kminus ? params_from_kminus(p.epsilon, p.kminus_l) : make_params(p.epsilon, p.kl);
  };
  if (*evaluator == "scattering") {
    outputs = {"r_plus", "delta_plus", "r_minus", "delta_minus", "flux_defect_plus", "flux_defect_minus"};
    eval = [&](const Point& p) {
      const ScatterParams sp = params_of(p);
      const ChannelScattering a = channel_scattering(sp, Channel::Plus);
      const ChannelScattering b = channel_scattering(sp, Channel::Minus);
      return std::vector<double>{a.r, a.delta, b.r, b.delta, a.r + std::norm(a.t_amp) - 1.0,
                                 b.r + std::norm(b.t_amp) - 1.0};
    };
  } else if (*evaluator == "continuity") {
    outputs = {"mismatch"};
    eval = [&](const Point& p) {
      return std::vector<double>{continuity_check(params_of(p), spin_from_angle(p.theta, p.phi))};
    };
  } else if (*evaluator == "prebarrier") {
    outputs = {"gamma_raw", "gamma_principal"};
    eval = [&](const Point& p) {
      const GpValue g = prebarrier_gp(params_of(p), spin_from_angle(p.theta, p.phi), tol);
      return std::vector<double>{g.raw, g.principal};
    };
  } else if (*evaluator == "tunnel") {
    outputs = {"gamma_raw", "gamma_principal"};
    eval = [&](const Point& p) {
      const GpValue g = tunnel_gp(params_of(p), spin_from_angle(p.theta, p.phi), tol);
      return std::vector<double>{g.raw, g.principal};
    };
  } else if (*evaluator == "open-path") {
    outputs = {"gamma_raw", "gamma_principal", "oracle", "oracle_diff"};
    eval = [&](const Point& p) {
      const AmplitudeField f = amplitude_field(params_of(p), spin_from_angle(p.theta, p.phi), region);
      const auto [lo, hi] = natural_interval(region);
      const GpValue g = open_path_gp(f, lo, hi, tol);
      const double o = pancharatnam_oracle(f, lo, hi, mesh);
      return std::vector<double>{g.raw, g.principal, o, std::abs(circular_difference(g.raw, o))};
    };
  } else if (*evaluator == "resonant") {
    if (*over != "theta" && *over != "phi") throw InvalidArgument("resonant sweeps run over theta or phi");
    spec_from_pair(n_plus, n_minus);
    t.note("pair", pair_label(n_plus, n_minus));
    outputs = {"gamma_raw", "gamma_principal", "per_turn"};
    eval = [&](const Point& p) {
      const ResonantGp g = resonant_gp(n_plus, n_minus, spin_from_angle(p.theta, p.phi), tol);
      return std::vector<double>{g.gp.raw, g.gp.principal, g.per_turn};
    };
  } else if (*evaluator == "highspeed") {
    if (*over != "theta") throw InvalidArgument("highspeed sweeps run over theta");
    const int xi = s.integer_or("xi", 1);
    t.note("xi", std::to_string(xi));
    outputs = {"gamma_raw", "gamma_principal"};
    eval = [xi](const Point& p) {
      const GpValue g = highspeed_gp(xi, p.theta);
      return std::vector<double>{g.raw, g.principal};
    };
  } else {
    throw InvalidArgument("unknown evaluator '" + *evaluator +
                          "' (scattering|continuity|prebarrier|tunnel|open-path|resonant|highspeed)");
  }
  t.columns.insert(t.columns.end(), outputs.begin(), outputs.end());
  t.columns.push_back("status");
  t.plot_y = outputs.front();

  auto rows = parallel_map(xs.size(), [&](std::size_t i) {
    Point p = base;
    const double x = xs[i];
    if (*over == "epsilon") p.epsilon = x;
    if (*over == "kl") p.kl = x, p.use_kminus = false;
    if (*over == "kminus-l") p.kminus_l = x, p.use_kminus = true;
    if (*over == "theta") p.theta = x;
    if (*over == "phi") p.phi = x;
    return guarded_row({x}, outputs.size(), [&] { return eval(p); });
  });
  return collect(std::move(t), std::move(rows));
}

}  // namespace slowspin::cli
