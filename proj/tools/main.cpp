// slabtrans command-line front end: X/H/gamma tabulation, the thick-slab
// transmission solver, the Monte Carlo oracle, and the identity verification
// suite.  Exit codes: 0 success, 1 numerical failure, 2 usage error,
// 3 verification/comparison failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "output.hpp"
#include "slabtrans/eigenfunctions.hpp"
#include "slabtrans/monte_carlo.hpp"
#include "slabtrans/quadrature.hpp"
#include "slabtrans/slab_solver.hpp"
#include "slabtrans/special_functions.hpp"
#include "slabtrans/version.hpp"

namespace st = slabtrans;
using st::cli::Cell;
using st::cli::Meta;
using st::cli::Table;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "a:b:n" (inclusive linspace) or a comma-separated list of values.
std::vector<double> parse_grid(const std::string& expr) {
  std::vector<double> out;
  auto parse_num = [&expr](const std::string& tok) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad number '" + tok + "' in grid '" + expr + "'");
    }
    if (pos != tok.size())
      throw UsageError("bad number '" + tok + "' in grid '" + expr + "'");
    return v;
  };

  if (expr.find(':') != std::string::npos) {
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= expr.size(); ++i) {
      if (i == expr.size() || expr[i] == ':') {
        f.push_back(expr.substr(start, i - start));
        start = i + 1;
      }
    }
    if (f.size() != 3) throw UsageError("grid '" + expr + "' must be a:b:n");
    const double a = parse_num(f[0]);
    const double b = parse_num(f[1]);
    const long n = std::lround(parse_num(f[2]));
    if (n < 1) throw UsageError("grid '" + expr + "' needs n >= 1");
    if (n == 1) {
      out.push_back(a);
    } else {
      for (long i = 0; i < n; ++i)
        out.push_back(a + (b - a) * static_cast<double>(i) / (n - 1));
    }
    return out;
  }

  std::size_t start = 0;
  for (std::size_t i = 0; i <= expr.size(); ++i) {
    if (i == expr.size() || expr[i] == ',') {
      const std::string tok = expr.substr(start, i - start);
      if (!tok.empty()) out.push_back(parse_num(tok));
      start = i + 1;
    }
  }
  if (out.empty()) throw UsageError("grid '" + expr + "' is empty");
  return out;
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return std::max(1, std::min<int>(hw ? static_cast<int>(hw) : 1, 8));
}

struct IoOpts {
  std::string output = "-";
  std::string format = "csv";
};

void add_io_opts(CLI::App* sub, IoOpts& io) {
  sub->add_option("-o,--output", io.output, "Output path, '-' for stdout")
      ->capture_default_str();
  sub->add_option("-f,--format", io.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_quad_meta(Meta& meta, const st::XFunction& x) {
  meta.add("quad_abs_tol", x.quadrature().abs_tol);
  meta.add("quad_rel_tol", x.quadrature().rel_tol);
  meta.add("quad_rule_points", static_cast<std::int64_t>(x.quadrature().base_rule_points));
}

// ---------------------------------------------------------------- xtable --

struct XtableArgs {
  std::string grid = "0:1:101";
  double albedo = 1.0;
  IoOpts io;
};

int cmd_xtable(const XtableArgs& a) {
  const std::vector<double> grid = parse_grid(a.grid);
  for (double mu : grid)
    if (!(mu >= 0.0 && mu <= 1.0))
      throw UsageError("xtable: mu values must lie in [0, 1]");

  const st::XFunction x{st::Albedo(a.albedo)};
  const bool conservative = x.albedo().conservative();

  Meta meta;
  meta.command = "xtable";
  meta.add("albedo", a.albedo);
  add_quad_meta(meta, x);

  Table t;
  t.name = "xtable";
  t.columns = conservative
                  ? std::vector<std::string>{"mu", "x_minus_mu", "h_mu", "gamma_mu"}
                  : std::vector<std::string>{"mu", "x_minus_mu"};
  for (double mu : grid) {
    const double xv = x.at(mu);
    if (conservative)
      t.rows.push_back({mu, xv, st::h_fn(x, mu), st::gamma_fn(x, mu)});
    else
      t.rows.push_back({mu, xv});
  }
  st::cli::write_tables(a.io.output, a.io.format, meta, {t});
  return 0;
}

// -------------------------------------------------------------- transmit --

struct TransmitArgs {
  std::string d_grid = "10";
  double g1 = 0.0;
  std::string mu0_grid = "1";
  IoOpts io;
};

int cmd_transmit(const TransmitArgs& a) {
  const std::vector<double> ds = parse_grid(a.d_grid);
  const std::vector<double> mu0s = parse_grid(a.mu0_grid);
  for (double d : ds)
    if (!(d > 0.0)) throw UsageError("transmit: D must be positive");
  if (!(a.g1 > -1.0 && a.g1 < 1.0))
    throw UsageError("transmit: g1 must lie in (-1, 1)");
  for (double mu0 : mu0s)
    if (!(mu0 > 0.0 && mu0 <= 1.0))
      throw UsageError("transmit: mu0 must lie in (0, 1] (open at 0)");

  if (std::abs(a.g1) > 1.0 / 3.0)
    std::cerr << "warning: |g1| > 1/3 has no positive-kernel Monte Carlo "
                 "validation; the analytic formula is extrapolated\n";
  if (std::any_of(ds.begin(), ds.end(), [](double d) { return d < st::kThickSlabThreshold; }))
    std::cerr << "warning: D < " << st::kThickSlabThreshold
              << " lies outside the thick-slab accuracy contract\n";

  const st::XFunction x{st::Albedo(1.0)};
  const st::ThickSlabSolver solver(x);

  Meta meta;
  meta.command = "transmit";
  meta.add("g1", a.g1);
  add_quad_meta(meta, x);

  Table t;
  t.name = "transmit";
  t.columns = {"D", "g1", "mu0", "T", "a_s", "j", "z0", "thick_slab_valid"};
  for (double d : ds) {
    for (double mu0 : mu0s) {
      const st::SlabProblem p{d, a.g1, mu0};
      const st::AsymptoticSolution s = solver.solve(p);
      t.rows.push_back({d, a.g1, mu0, s.transmission(), s.iso_amplitude,
                        s.current_amplitude, s.extrapolation_length,
                        p.thick_slab_valid()});
    }
  }
  st::cli::write_tables(a.io.output, a.io.format, meta, {t});
  return 0;
}

// --------------------------------------------------------------- profile --

struct ProfileArgs {
  double d = 10.0;
  double g1 = 0.0;
  double mu0 = 1.0;
  std::string z_grid;   // defaults to 0:D:41
  std::string mu_grid = "-1:1:21";
  std::string table = "both";
  IoOpts io;
};

int cmd_profile(const ProfileArgs& a) {
  if (!(a.d > 0.0)) throw UsageError("profile: D must be positive");
  if (!(a.g1 > -1.0 && a.g1 < 1.0)) throw UsageError("profile: g1 must lie in (-1, 1)");
  if (!(a.mu0 > 0.0 && a.mu0 <= 1.0)) throw UsageError("profile: mu0 must lie in (0, 1]");

  if (std::abs(a.g1) > 1.0 / 3.0)
    std::cerr << "warning: |g1| > 1/3 has no positive-kernel Monte Carlo "
                 "validation; the analytic formula is extrapolated\n";

  const std::vector<double> zs =
      parse_grid(a.z_grid.empty() ? "0:" + st::cli::format_double(a.d) + ":41"
                                  : a.z_grid);
  const std::vector<double> mus = parse_grid(a.mu_grid);
  for (double z : zs)
    if (!(z >= 0.0 && z <= a.d)) throw UsageError("profile: z values must lie in [0, D]");
  for (double mu : mus)
    if (!(mu >= -1.0 && mu <= 1.0)) throw UsageError("profile: mu values must lie in [-1, 1]");

  const st::XFunction x{st::Albedo(1.0)};
  const st::ThickSlabSolver solver(x);
  const st::AsymptoticSolution s = solver.solve({a.d, a.g1, a.mu0});

  Meta meta;
  meta.command = "profile";
  meta.add("D", a.d);
  meta.add("g1", a.g1);
  meta.add("mu0", a.mu0);
  meta.add("a_s", s.iso_amplitude);
  meta.add("j", s.current_amplitude);
  meta.add("z0", s.extrapolation_length);
  add_quad_meta(meta, x);

  std::vector<Table> tables;
  if (a.table == "both" || a.table == "angular") {
    Table t;
    t.name = "angular";
    t.columns = {"z", "mu", "f_asymptotic", "in_boundary_layer"};
    for (double z : zs) {
      for (double mu : mus) {
        const st::DensitySample d = st::interior_density(s, z, mu);
        t.rows.push_back({z, mu, d.value, d.in_boundary_layer});
      }
    }
    tables.push_back(std::move(t));
  }
  if (a.table == "both" || a.table == "scalar") {
    Table t;
    t.name = "scalar";
    t.columns = {"z", "density", "net_current", "in_boundary_layer"};
    for (double z : zs) {
      const st::ScalarSample sc = st::scalar_profile(s, z);
      t.rows.push_back({z, sc.density, sc.net_current, sc.in_boundary_layer});
    }
    tables.push_back(std::move(t));
  }
  st::cli::write_tables(a.io.output, a.io.format, meta, tables);
  return 0;
}

// -------------------------------------------------------------------- mc --

struct McArgs {
  double d = 10.0;
  double g1 = 0.0;
  double mu0 = 1.0;
  std::uint64_t particles = 1'000'000;
  std::uint64_t seed = 1;
  int workers = 0;  // 0: SLABTRANS_WORKERS env or hardware count
  int z_bins = 40;
  int mu_bins = 40;
  bool compare = false;
  double compare_tol = 0.005;
  bool strict = false;
  IoOpts io;
};

int cmd_mc(const McArgs& a) {
  st::mc::Config cfg;
  cfg.thickness = a.d;
  cfg.anisotropy = a.g1;
  cfg.mu0 = a.mu0;
  cfg.n_particles = a.particles;
  cfg.seed = a.seed;
  cfg.n_workers = resolve_workers(a.workers);
  cfg.z_bins = a.z_bins;
  cfg.mu_bins = a.mu_bins;
  cfg.validate();  // domain_error -> usage exit

  const st::mc::Result res = st::mc::run(cfg);

  Meta meta;
  meta.command = "mc";
  meta.add("D", cfg.thickness);
  meta.add("g1", cfg.anisotropy);
  meta.add("mu0", cfg.mu0);
  meta.add("particles", cfg.n_particles);
  meta.add("seed", cfg.seed);
  meta.add("workers", static_cast<std::int64_t>(cfg.n_workers));
  meta.add("z_bins", static_cast<std::int64_t>(cfg.z_bins));
  meta.add("mu_bins", static_cast<std::int64_t>(cfg.mu_bins));
  if (a.compare) meta.add("compare_tol", a.compare_tol);

  std::vector<Table> tables;
  {
    Table t;
    t.name = "summary";
    t.columns = {"quantity", "value", "stderr"};
    t.rows.push_back({std::string("transmitted_fraction"),
                      res.transmitted_fraction(), res.transmitted_stderr()});
    t.rows.push_back({std::string("reflected_fraction"), res.reflected_fraction(),
                      res.transmitted_stderr()});
    t.rows.push_back({std::string("transmitted_count"), res.transmitted_count, 0.0});
    t.rows.push_back({std::string("reflected_count"), res.reflected_count, 0.0});
    t.rows.push_back({std::string("n_collisions_total"), res.n_collisions_total, 0.0});
    tables.push_back(std::move(t));
  }
  {
    Table t;
    t.name = "exit_histograms";
    t.columns = {"mu_lo", "mu_hi", "transmit_count", "reflect_count"};
    const double dm = 1.0 / cfg.mu_bins;
    for (int i = 0; i < cfg.mu_bins; ++i)
      t.rows.push_back({i * dm, (i + 1) * dm, res.exit_hist_transmit[i],
                        res.exit_hist_reflect[i]});
    tables.push_back(std::move(t));
  }
  {
    Table t;
    t.name = "interior";
    t.columns = {"z_lo", "z_hi", "mu_lo", "mu_hi", "f_estimate"};
    const double dz = cfg.thickness / cfg.z_bins;
    const double dm = 2.0 / cfg.mu_bins;
    for (int iz = 0; iz < cfg.z_bins; ++iz)
      for (int im = 0; im < cfg.mu_bins; ++im)
        t.rows.push_back({iz * dz, (iz + 1) * dz, -1.0 + im * dm,
                          -1.0 + (im + 1) * dm, res.interior(iz, im)});
    tables.push_back(std::move(t));
  }
  {
    Table t;
    t.name = "current";
    t.columns = {"z_lo", "z_hi", "net_current", "sigma"};
    const double dz = cfg.thickness / cfg.z_bins;
    for (int iz = 0; iz < cfg.z_bins; ++iz)
      t.rows.push_back({iz * dz, (iz + 1) * dz, res.net_current[iz],
                        res.net_current_sigma[iz]});
    tables.push_back(std::move(t));
  }

  int rc = 0;
  if (a.compare) {
    const st::XFunction x{st::Albedo(1.0)};
    const st::ThickSlabSolver solver(x);
    const st::AsymptoticSolution sol =
        solver.solve({cfg.thickness, cfg.anisotropy, cfg.mu0});
    st::mc::CompareOptions opt;
    opt.transmission_abs_tol = a.compare_tol;
    opt.gate_profile = a.strict;
    const st::mc::CompareReport rep = st::mc::compare(res, sol, opt);

    Table t;
    t.name = "compare";
    t.columns = {"metric", "value", "threshold", "status"};
    t.rows.push_back({std::string("transmission_abs_diff"), rep.transmission_diff,
                      rep.transmission_tol,
                      std::string(rep.transmission_pass ? "PASS" : "FAIL")});
    if (rep.profile_evaluated) {
      t.rows.push_back({std::string("density_slope_ratio"), rep.density_slope_ratio,
                        opt.density_slope_rtol,
                        std::string(rep.density_slope_pass ? "PASS" : "FAIL")});
      t.rows.push_back({std::string("mu_slope_ratio"), rep.mu_slope_ratio, 0.0,
                        std::string("INFO")});
      t.rows.push_back({std::string("current_max_dev_sigma"),
                        rep.max_current_dev_sigma, opt.current_nsigma,
                        std::string(rep.current_pass ? "PASS" : "FAIL")});
    } else {
      t.rows.push_back({std::string("profile"), 0.0, 0.0,
                        std::string("SKIPPED: " + rep.profile_notice)});
    }
    t.rows.push_back({std::string("overall"), 0.0, 0.0,
                      std::string(rep.pass() ? "PASS" : "FAIL")});
    tables.push_back(std::move(t));

    std::cerr << rep.to_text();
    rc = rep.pass() ? 0 : 3;
  }

  st::cli::write_tables(a.io.output, a.io.format, meta, tables);
  return rc;
}

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
  double tol_moment0 = 1e-6;
  double tol_moment1 = 5e-4;
  double tol_orthogonality = 1e-6;
  double tol_identity = 1e-6;
  double tol_residual = 1e-12;
  std::string nu_grid = "0.05:0.95:19";
  IoOpts io;
};

struct VerifyRow {
  std::string name;
  double measured;
  double expected;
  double tol;
  bool pass;
};

int cmd_verify(const VerifyArgs& a) {
  const std::vector<double> nus = parse_grid(a.nu_grid);
  for (double nu : nus)
    if (!(nu > 0.0 && nu < 1.0))
      throw UsageError("verify: nu grid must lie strictly inside (0, 1)");

  const st::XFunction x{st::Albedo(1.0)};
  auto gamma_w = [&x](double mu) { return st::gamma_fn(x, mu); };
  const st::Quadrature q{1e-9, 1e-9, 256, 31};

  std::vector<VerifyRow> rows;

  const st::GammaMoments m = st::gamma_moments(x);
  rows.push_back({"gamma0", m.gamma0, 1.0, a.tol_moment0,
                  std::abs(m.gamma0 - 1.0) <= a.tol_moment0});
  rows.push_back({"gamma1_z0", m.gamma1, 0.7104, a.tol_moment1,
                  std::abs(m.gamma1 - 0.7104) <= a.tol_moment1});

  double worst_orth = 0.0, worst_norm = 0.0, worst_ident = 0.0;
  for (double nu : nus) {
    worst_orth = std::max(worst_orth, std::abs(st::pair_phi(nu, gamma_w, q)));
    worst_norm = std::max(
        worst_norm,
        std::abs(st::pair_phi_neg(nu, gamma_w, q) - 0.5 * nu * x.at(nu)));
    const st::IntegralResult ident = st::integrate(
        [&gamma_w, nu](double mu) { return gamma_w(mu) / (nu + mu); }, 0.0, 1.0, q);
    worst_ident = std::max(worst_ident, std::abs(ident.value - x.at(nu)));
  }
  rows.push_back({"orthogonality_max", worst_orth, 0.0, a.tol_orthogonality,
                  worst_orth <= a.tol_orthogonality});
  rows.push_back({"normalization_max", worst_norm, 0.0, a.tol_identity,
                  worst_norm <= a.tol_identity});
  rows.push_back({"h_identity_max", worst_ident, 0.0, a.tol_identity,
                  worst_ident <= a.tol_identity});

  // Thick-slab system residuals and the D(1-g1) scaling collapse.
  const st::ThickSlabSolver solver(x);
  double worst_res = 0.0, worst_scale = 0.0;
  for (double d : {5.0, 10.0, 20.0}) {
    for (double g1 : {-0.3, 0.0, 0.3}) {
      for (double mu0 : {0.25, 0.6, 1.0}) {
        const st::AsymptoticSolution s = solver.solve({d, g1, mu0});
        const double ratio = 1.5 * mu0 / x.at(mu0);
        const double dg = d * (1.0 - g1);
        const double r1 = s.iso_amplitude - 1.5 * s.current_amplitude * dg - ratio;
        const double r2 = 3.0 * s.current_amplitude * s.extrapolation_length +
                          1.5 * s.current_amplitude * dg - ratio;
        worst_res = std::max({worst_res, std::abs(r1), std::abs(r2)});
        const double collapsed = solver.transmission({dg, 0.0, mu0});
        worst_scale = std::max(worst_scale,
                               std::abs(s.transmission() - collapsed));
      }
    }
  }
  rows.push_back({"solver_residual_max", worst_res, 0.0, a.tol_residual,
                  worst_res <= a.tol_residual});
  rows.push_back({"scaling_invariance_max", worst_scale, 0.0, a.tol_residual,
                  worst_scale <= a.tol_residual});

  // Eigenfunction reflection symmetry, exact in arithmetic.
  double worst_sym = 0.0;
  for (double nu : nus)
    for (double mu : {-0.93, -0.41, 0.13, 0.68})
      worst_sym = std::max(worst_sym, std::abs(st::phi_regular(-nu, mu) -
                                               st::phi_regular(nu, -mu)));
  rows.push_back({"phi_symmetry_max", worst_sym, 0.0, 0.0, worst_sym == 0.0});

  bool all_pass = true;
  std::printf("%-24s %14s %12s %10s  %s\n", "check", "measured", "expected",
              "tolerance", "status");
  for (const VerifyRow& r : rows) {
    all_pass = all_pass && r.pass;
    std::printf("%-24s %14.6e %12g %10g  %s\n", r.name.c_str(), r.measured,
                r.expected, r.tol, r.pass ? "PASS" : "FAIL");
  }
  std::printf("verify: %s\n", all_pass ? "PASS" : "FAIL");

  if (a.io.output != "-") {
    Meta meta;
    meta.command = "verify";
    meta.add("nu_grid", a.nu_grid);
    add_quad_meta(meta, x);
    Table t;
    t.name = "verify";
    t.columns = {"check", "measured", "expected", "tolerance", "status"};
    for (const VerifyRow& r : rows)
      t.rows.push_back({r.name, r.measured, r.expected, r.tol,
                        std::string(r.pass ? "PASS" : "FAIL")});
    st::cli::write_tables(a.io.output, a.io.format, meta, {t});
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analytic thick-slab transport (X/H functions, transmission, "
               "interior profiles) with a Monte Carlo oracle"};
  app.set_version_flag("--version", st::kVersion);
  app.set_config("--config", "", "Read options from a flat key=value file");
  app.require_subcommand(1);

  XtableArgs xa;
  CLI::App* xtable = app.add_subcommand(
      "xtable", "Tabulate X(-mu), H(mu) and gamma(mu) on a mu grid");
  xtable->add_option("--mu", xa.grid, "mu grid: a:b:n or comma list")
      ->capture_default_str();
  xtable->add_option("--albedo", xa.albedo, "single-scattering albedo in (0,1]")
      ->capture_default_str();
  add_io_opts(xtable, xa.io);

  TransmitArgs ta;
  CLI::App* transmit = app.add_subcommand(
      "transmit", "Transmission coefficient T over (D, mu0) grids");
  transmit->add_option("--D", ta.d_grid, "optical thickness grid")->capture_default_str();
  transmit->add_option("--g1", ta.g1, "anisotropy coefficient in (-1,1)")
      ->capture_default_str();
  transmit->add_option("--mu0", ta.mu0_grid, "incidence cosine grid, each in (0,1]")
      ->capture_default_str();
  add_io_opts(transmit, ta.io);

  ProfileArgs pa;
  CLI::App* profile = app.add_subcommand(
      "profile", "Asymptotic interior density f(z, mu) and scalar profile");
  profile->add_option("--D", pa.d, "optical thickness")->capture_default_str();
  profile->add_option("--g1", pa.g1, "anisotropy coefficient")->capture_default_str();
  profile->add_option("--mu0", pa.mu0, "incidence cosine")->capture_default_str();
  profile->add_option("--z", pa.z_grid, "depth grid (default 0:D:41)");
  profile->add_option("--mu", pa.mu_grid, "direction grid")->capture_default_str();
  profile->add_option("--table", pa.table, "angular, scalar or both")
      ->check(CLI::IsMember({"angular", "scalar", "both"}))
      ->capture_default_str();
  add_io_opts(profile, pa.io);

  McArgs ma;
  CLI::App* mc = app.add_subcommand(
      "mc", "Monte Carlo transport run, optionally compared to the solver");
  mc->add_option("--D", ma.d, "optical thickness")->capture_default_str();
  mc->add_option("--g1", ma.g1, "anisotropy, |g1| <= 1/3")->capture_default_str();
  mc->add_option("--mu0", ma.mu0, "incidence cosine")->capture_default_str();
  mc->add_option("-n,--particles", ma.particles, "number of histories")
      ->capture_default_str();
  mc->add_option("--seed", ma.seed, "RNG seed")->capture_default_str();
  mc->add_option("--workers", ma.workers,
                 "worker threads (0 = auto); results do not depend on this")
      ->envname("SLABTRANS_WORKERS")
      ->capture_default_str();
  mc->add_option("--z-bins", ma.z_bins, "interior tally bins in z")
      ->capture_default_str();
  mc->add_option("--mu-bins", ma.mu_bins, "tally bins in mu")->capture_default_str();
  mc->add_flag("--compare", ma.compare, "compare against the analytic solution");
  mc->add_option("--compare-tol", ma.compare_tol,
                 "absolute floor of the transmission tolerance")
      ->capture_default_str();
  mc->add_flag("--strict", ma.strict,
               "fold interior-profile checks into the pass/fail verdict");
  add_io_opts(mc, ma.io);

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the identity suite (moments, orthogonality, residuals)");
  verify->add_option("--tol-moment0", va.tol_moment0, "tolerance on gamma0 = 1")
      ->capture_default_str();
  verify->add_option("--tol-moment1", va.tol_moment1, "tolerance on gamma1 = 0.7104")
      ->capture_default_str();
  verify->add_option("--tol-orthogonality", va.tol_orthogonality,
                     "tolerance on <phi_nu, gamma> = 0")
      ->capture_default_str();
  verify->add_option("--tol-identity", va.tol_identity,
                     "tolerance on the normalization/H identities")
      ->capture_default_str();
  verify->add_option("--tol-residual", va.tol_residual,
                     "tolerance on the solver residuals")
      ->capture_default_str();
  verify->add_option("--nu", va.nu_grid, "nu grid for the identity checks")
      ->capture_default_str();
  add_io_opts(verify, va.io);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*xtable) return cmd_xtable(xa);
    if (*transmit) return cmd_transmit(ta);
    if (*profile) return cmd_profile(pa);
    if (*mc) return cmd_mc(ma);
    if (*verify) return cmd_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
