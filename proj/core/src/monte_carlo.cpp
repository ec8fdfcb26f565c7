#include "slabtrans/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace slabtrans::mc {

namespace {

// Track lengths are accumulated in 2^-26 fixed-point units so that merged
// tallies are plain integer sums: associative, hence bit-identical for any
// worker partition.  A single flight is at most -ln(2^-53) ~ 36.8 mean free
// paths, so per-segment contributions fit comfortably in 64 bits.
constexpr double kTallyScale = 67108864.0;  // 2^26
constexpr int kBatches = 32;
constexpr std::uint64_t kCollisionCap = 1'000'000'000;
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Counter-based stream keyed on (seed, particle index): draw i of particle p
// is a pure function of (seed, p, i), independent of the thread layout.
class ParticleRng {
 public:
  ParticleRng(std::uint64_t seed, std::uint64_t particle)
      : state_(mix64(seed ^ mix64(particle + kGolden))) {}

  double next() {  // uniform on [0, 1)
    state_ += kGolden;
    return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

struct WorkerTally {
  std::vector<std::uint64_t> track;    // z_bins * mu_bins
  std::vector<std::int64_t> current;   // kBatches * z_bins, signed overlap
  std::vector<std::uint64_t> hist_transmit;
  std::vector<std::uint64_t> hist_reflect;
  std::uint64_t transmitted = 0;
  std::uint64_t reflected = 0;
  std::uint64_t collisions = 0;

  explicit WorkerTally(const Config& cfg)
      : track(static_cast<std::size_t>(cfg.z_bins) * cfg.mu_bins, 0),
        current(static_cast<std::size_t>(kBatches) * cfg.z_bins, 0),
        hist_transmit(cfg.mu_bins, 0),
        hist_reflect(cfg.mu_bins, 0) {}
};

class Simulator {
 public:
  explicit Simulator(const Config& cfg)
      : cfg_(cfg), dz_(cfg.thickness / cfg.z_bins) {}

  void run_range(std::uint64_t lo, std::uint64_t hi, WorkerTally& t) const {
    for (std::uint64_t p = lo; p < hi; ++p) simulate(p, t);
  }

 private:
  int z_bin(double z) const {
    return std::clamp(static_cast<int>(z / dz_), 0, cfg_.z_bins - 1);
  }
  int mu_bin_full(double mu) const {  // mu in [-1, 1]
    return std::clamp(static_cast<int>((mu + 1.0) * 0.5 * cfg_.mu_bins), 0,
                      cfg_.mu_bins - 1);
  }
  int mu_bin_half(double v) const {  // v in (0, 1]
    return std::clamp(static_cast<int>(v * cfg_.mu_bins), 0, cfg_.mu_bins - 1);
  }

  // Track-length tally of a flight from z0 to z1 with direction cosine mu.
  void tally_flight(double z0, double z1, double mu, int batch,
                    WorkerTally& t) const {
    const double zlo = std::min(z0, z1);
    const double zhi = std::max(z0, z1);
    const int imu = mu_bin_full(mu);
    const double inv = 1.0 / std::abs(mu);
    const std::int64_t sign = (mu > 0.0) ? 1 : -1;
    const int i0 = z_bin(zlo);
    const int i1 = z_bin(zhi);
    for (int i = i0; i <= i1; ++i) {
      const double lo = i * dz_;
      const double hi = lo + dz_;
      const double o = std::min(zhi, hi) - std::max(zlo, lo);
      if (o <= 0.0) continue;
      t.track[static_cast<std::size_t>(i) * cfg_.mu_bins + imu] +=
          static_cast<std::uint64_t>(std::llround(o * inv * kTallyScale));
      t.current[static_cast<std::size_t>(batch) * cfg_.z_bins + i] +=
          sign * std::llround(o * kTallyScale);
    }
  }

  void simulate(std::uint64_t p, WorkerTally& t) const {
    ParticleRng rng(cfg_.seed, p);
    const int batch = static_cast<int>(p % kBatches);
    double z = 0.0;
    double mu = cfg_.mu0;
    std::uint64_t collisions = 0;

    for (;;) {
      const double s = -std::log1p(-rng.next());
      if (mu > 0.0) {
        const double zn = z + mu * s;
        if (zn > cfg_.thickness) {
          tally_flight(z, cfg_.thickness, mu, batch, t);
          ++t.hist_transmit[mu_bin_half(mu)];
          ++t.transmitted;
          break;
        }
        tally_flight(z, zn, mu, batch, t);
        z = zn;
      } else if (mu < 0.0) {
        const double zn = z + mu * s;
        if (zn < 0.0) {
          tally_flight(z, 0.0, mu, batch, t);
          ++t.hist_reflect[mu_bin_half(-mu)];
          ++t.reflected;
          break;
        }
        tally_flight(z, zn, mu, batch, t);
        z = zn;
      } else {
        // mu == 0: no z movement, the whole flight sits in one cell
        t.track[static_cast<std::size_t>(z_bin(z)) * cfg_.mu_bins +
                mu_bin_full(0.0)] +=
            static_cast<std::uint64_t>(std::llround(s * kTallyScale));
      }
      mu = sample_scatter(mu, cfg_.anisotropy, rng.next());
      ++t.collisions;
      if (++collisions > kCollisionCap)
        throw std::runtime_error("mc::run: per-particle collision cap hit; "
                                 "this indicates a defect, not physics");
    }
  }

  const Config& cfg_;
  double dz_;
};

}  // namespace

void Config::validate() const {
  if (!(thickness > 0.0) || !std::isfinite(thickness))
    throw std::domain_error("mc::Config: thickness must be positive");
  if (!(std::abs(anisotropy) <= 1.0 / 3.0))
    throw std::domain_error(
        "mc::Config: |anisotropy| must be <= 1/3 so the scattering density "
        "(1 + 3 g1 mu mu')/2 stays non-negative");
  if (!(mu0 > 0.0 && mu0 <= 1.0))
    throw std::domain_error("mc::Config: mu0 must lie in (0, 1]");
  if (n_particles < 1)
    throw std::domain_error("mc::Config: need at least one particle");
  if (n_workers < 1)
    throw std::domain_error("mc::Config: need at least one worker");
  if (z_bins < 1 || mu_bins < 1)
    throw std::domain_error("mc::Config: bin counts must be >= 1");
}

double Result::transmitted_fraction() const {
  return static_cast<double>(transmitted_count) / static_cast<double>(config.n_particles);
}

double Result::reflected_fraction() const {
  return static_cast<double>(reflected_count) / static_cast<double>(config.n_particles);
}

double Result::transmitted_stderr() const {
  const double n = static_cast<double>(config.n_particles);
  const double p = transmitted_fraction();
  return std::sqrt(std::max(p * (1.0 - p), 0.0) / n);
}

double Result::interior(int iz, int imu) const {
  return interior_tally[static_cast<std::size_t>(iz) * config.mu_bins + imu];
}

double sample_scatter(double mu_prev, double g1, double u) {
  if (!(u >= 0.0 && u <= 1.0))
    throw std::domain_error("sample_scatter: u must lie in [0, 1]");
  if (!(std::abs(mu_prev) <= 1.0))
    throw std::domain_error("sample_scatter: mu_prev must lie in [-1, 1]");
  const double beta = 0.75 * g1 * mu_prev;
  if (!(std::abs(beta) <= 0.25))
    throw std::domain_error("sample_scatter: |g1 * mu_prev| must be <= 1/3");

  if (beta == 0.0) return 2.0 * u - 1.0;

  // beta mu^2 + mu/2 + (1/2 - beta - u) = 0; take the root continuous in
  // beta -> 0 in its cancellation-free form.
  const double c = 0.5 - beta - u;
  const double disc = std::max(0.25 - 4.0 * beta * c, 0.0);
  const double mu = -2.0 * c / (0.5 + std::sqrt(disc));
  return std::clamp(mu, -1.0, 1.0);
}

Result run(const Config& cfg) {
  cfg.validate();
  const std::uint64_t n = cfg.n_particles;
  const int workers = cfg.n_workers;

  Simulator sim(cfg);
  std::vector<WorkerTally> tallies(workers, WorkerTally(cfg));

  if (workers == 1) {
    sim.run_range(0, n, tallies[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = n * static_cast<std::uint64_t>(w) / workers;
      const std::uint64_t hi = n * static_cast<std::uint64_t>(w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        try {
          sim.run_range(lo, hi, tallies[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Merge in worker order; all merged quantities are integers.
  WorkerTally total(cfg);
  for (const WorkerTally& t : tallies) {
    for (std::size_t i = 0; i < total.track.size(); ++i) total.track[i] += t.track[i];
    for (std::size_t i = 0; i < total.current.size(); ++i) total.current[i] += t.current[i];
    for (std::size_t i = 0; i < total.hist_transmit.size(); ++i) {
      total.hist_transmit[i] += t.hist_transmit[i];
      total.hist_reflect[i] += t.hist_reflect[i];
    }
    total.transmitted += t.transmitted;
    total.reflected += t.reflected;
    total.collisions += t.collisions;
  }

  Result res;
  res.config = cfg;
  res.transmitted_count = total.transmitted;
  res.reflected_count = total.reflected;
  res.n_collisions_total = total.collisions;
  res.exit_hist_transmit = std::move(total.hist_transmit);
  res.exit_hist_reflect = std::move(total.hist_reflect);

  const double dz = cfg.thickness / cfg.z_bins;
  const double dmu = 2.0 / cfg.mu_bins;
  const double nn = static_cast<double>(n);

  res.interior_tally.resize(total.track.size());
  for (std::size_t i = 0; i < total.track.size(); ++i)
    res.interior_tally[i] =
        static_cast<double>(total.track[i]) / kTallyScale / (nn * dz * dmu);

  res.net_current.assign(cfg.z_bins, 0.0);
  res.net_current_sigma.assign(cfg.z_bins, 0.0);
  for (int iz = 0; iz < cfg.z_bins; ++iz) {
    std::int64_t sum = 0;
    for (int b = 0; b < kBatches; ++b)
      sum += total.current[static_cast<std::size_t>(b) * cfg.z_bins + iz];
    res.net_current[iz] = static_cast<double>(sum) / kTallyScale / (nn * dz);

    // Standard error from batch means (batches are particle-index classes,
    // so they too are worker-independent).
    int used = 0;
    double mean = 0.0, m2 = 0.0;
    for (int b = 0; b < kBatches; ++b) {
      const std::uint64_t nb = n / kBatches + (static_cast<std::uint64_t>(b) < n % kBatches ? 1 : 0);
      if (nb == 0) continue;
      const double jb =
          static_cast<double>(total.current[static_cast<std::size_t>(b) * cfg.z_bins + iz]) /
          kTallyScale / (static_cast<double>(nb) * dz);
      ++used;
      const double d = jb - mean;
      mean += d / used;
      m2 += d * (jb - mean);
    }
    if (used > 1)
      res.net_current_sigma[iz] = std::sqrt(m2 / (used - 1.0) / used);
  }

  return res;
}

bool CompareReport::pass() const {
  if (!transmission_pass) return false;
  if (gate_profile && profile_evaluated)
    return density_slope_pass && current_pass;
  return true;
}

std::string CompareReport::to_text() const {
  std::ostringstream os;
  os.precision(10);
  os << "transmission: mc " << f_mc << " +- " << f_mc_stderr << ", analytic "
     << f_analytic << ", |diff| " << transmission_diff << " (tol "
     << transmission_tol << ") " << (transmission_pass ? "PASS" : "FAIL")
     << '\n';
  if (profile_evaluated) {
    os << "density slope ratio (mc/analytic): " << density_slope_ratio << " "
       << (density_slope_pass ? "PASS" : "FAIL") << '\n';
    os << "mid-slab mu slope ratio: " << mu_slope_ratio << " (informational)\n";
    os << "net current: mean " << current_mean << ", max deviation "
       << max_current_dev_sigma << " sigma "
       << (current_pass ? "PASS" : "FAIL") << '\n';
  } else {
    os << "interior profile: " << profile_notice << '\n';
  }
  os << "overall: " << (pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

CompareReport compare(const Result& result, const AsymptoticSolution& solution,
                      const CompareOptions& opt) {
  const Config& cfg = result.config;
  const SlabProblem& p = solution.problem;
  if (cfg.thickness != p.thickness || cfg.anisotropy != p.anisotropy ||
      cfg.mu0 != p.mu0)
    throw std::invalid_argument("mc::compare: run and solution describe different slabs");

  CompareReport rep;
  rep.gate_profile = opt.gate_profile;

  rep.f_mc = result.transmitted_fraction();
  rep.f_mc_stderr = result.transmitted_stderr();
  rep.f_analytic = solution.transmitted_fraction();
  rep.transmission_diff = std::abs(rep.f_mc - rep.f_analytic);
  rep.transmission_tol =
      std::max(3.0 * rep.f_mc_stderr, opt.transmission_abs_tol);
  rep.transmission_pass = rep.transmission_diff <= rep.transmission_tol;

  const double j = solution.current_amplitude;
  const double a_s = solution.iso_amplitude;
  const double one_minus_g = 1.0 - p.anisotropy;
  const double dz = cfg.thickness / cfg.z_bins;
  const double dmu = 2.0 / cfg.mu_bins;

  // Interior checks need a few bins clear of both boundary layers.
  std::vector<int> window;
  for (int i = 0; i < cfg.z_bins; ++i) {
    const double zc = (i + 0.5) * dz;
    if (zc >= kBoundaryLayerWidth && zc <= cfg.thickness - kBoundaryLayerWidth)
      window.push_back(i);
  }
  if (cfg.thickness < 7.0 || window.size() < 3) {
    rep.profile_evaluated = false;
    rep.profile_notice =
        "slab too thin for an interior window (need D >= 7 and >= 3 bins "
        "outside the boundary layers); profile comparison skipped";
  } else {
    rep.profile_evaluated = true;

    // (b) scalar density slope.  Comparing slope/mean on both sides removes
    // the overall normalization (the plateau level).
    double sz = 0.0, srho = 0.0, szz = 0.0, szrho = 0.0;
    for (int i : window) {
      const double zc = (i + 0.5) * dz;
      double rho = 0.0;
      for (int jmu = 0; jmu < cfg.mu_bins; ++jmu)
        rho += result.interior(i, jmu) * dmu;
      sz += zc;
      srho += rho;
      szz += zc * zc;
      szrho += zc * rho;
    }
    const double nw = static_cast<double>(window.size());
    const double zbar = sz / nw;
    const double rhobar = srho / nw;
    const double slope = (szrho - sz * srho / nw) / (szz - sz * sz / nw);
    const double measured_rel = slope / rhobar;
    const double analytic_rel = -6.0 * j * one_minus_g /
                                (2.0 * a_s - 6.0 * j * zbar * one_minus_g);
    rep.density_slope_ratio = measured_rel / analytic_rel;
    rep.density_slope_pass =
        std::abs(rep.density_slope_ratio - 1.0) <= opt.density_slope_rtol;

    // (c) mid-slab linearity in mu, slope 3j against the local mean level.
    const int imid = cfg.z_bins / 2;
    const double zmid = (imid + 0.5) * dz;
    double smu = 0.0, sf = 0.0, smumu = 0.0, smuf = 0.0;
    for (int jmu = 0; jmu < cfg.mu_bins; ++jmu) {
      const double muc = -1.0 + (jmu + 0.5) * dmu;
      const double f = result.interior(imid, jmu);
      smu += muc;
      sf += f;
      smumu += muc * muc;
      smuf += muc * f;
    }
    const double nm = static_cast<double>(cfg.mu_bins);
    const double mu_slope = (smuf - smu * sf / nm) / (smumu - smu * smu / nm);
    const double mu_mean = sf / nm;
    const double mu_rel_analytic =
        3.0 * j / (a_s - 3.0 * j * zmid * one_minus_g);
    rep.mu_slope_ratio = (mu_slope / mu_mean) / mu_rel_analytic;

    // Net current should be flat across bins (exact conservation law).
    double jsum = 0.0;
    for (int i = 0; i < cfg.z_bins; ++i) jsum += result.net_current[i];
    rep.current_mean = jsum / cfg.z_bins;
    double worst = 0.0;
    for (int i = 0; i < cfg.z_bins; ++i) {
      if (result.net_current_sigma[i] <= 0.0) continue;
      worst = std::max(worst, std::abs(result.net_current[i] - rep.current_mean) /
                                  result.net_current_sigma[i]);
    }
    rep.max_current_dev_sigma = worst;
    rep.current_pass = worst <= opt.current_nsigma;
  }

  return rep;
}

}  // namespace slabtrans::mc
