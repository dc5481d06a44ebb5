// Copyright 2026 The ldechain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldechain/scan.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "ldechain/aklt.hpp"
#include "ldechain/observables.hpp"
#include "ldechain/parallel.hpp"

#ifndef LDECHAIN_VERSION
#define LDECHAIN_VERSION "dev"
#endif

namespace lde {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int pick_k(const SolveSettings& s, int model_default) { return s.k > 0 ? s.k : model_default; }

SectorBasisPtr ensure_basis(SectorBasisPtr basis, SiteKind kind, int length, int two_sz) {
  if (basis && basis->site_kind() == kind && basis->length() == length && basis->two_sz_total() == two_sz) {
    return basis;
  }
  return make_sector(kind, length, two_sz);
}

// Index of the first S_tot = 0 eigenvector, or 0 when none is present.
std::size_t singlet_index(const GroundMultiplet& m, bool& found) {
  for (std::size_t i = 0; i < m.s_tot_squared.size(); ++i) {
    if (total_spin_from_s_squared(m.s_tot_squared[i]) == 0.0) {
      found = true;
      return i;
    }
  }
  found = false;
  return 0;
}

std::string failure_status(const std::exception& e) {
  if (dynamic_cast<const SolverError*>(&e)) return std::string("solver-error: ") + e.what();
  return std::string("error: ") + e.what();
}

template <class Key>
std::map<Key, SectorBasisPtr> bases_for(const std::vector<Key>& keys, SiteKind kind, int extra_sites, int two_sz) {
  std::map<Key, SectorBasisPtr> out;
  for (const auto& L : keys) {
    if (!out.count(L)) out[L] = make_sector(kind, L + extra_sites, two_sz);
  }
  return out;
}

SolveSettings split_budget(SolveSettings s, int workers) {
  s.lanczos.memory_budget_bytes /= static_cast<std::size_t>(std::max(1, workers));
  return s;
}

}  // namespace

std::string tool_version() { return LDECHAIN_VERSION; }

void check_size(ModelFamily family, int length, bool high_memory) {
  const SizeCaps& caps = high_memory ? kHighMemoryCaps : kDeskCaps;
  int cap = 0;
  const char* what = "";
  switch (family) {
    case ModelFamily::Dimer: cap = caps.spin_half_length; what = "spin-1/2 chain"; break;
    case ModelFamily::Spin1: cap = caps.spin_one_length; what = "spin-1 chain"; break;
    case ModelFamily::Probes: cap = caps.probe_ring_length; what = "probe ring"; break;
  }
  if (length > cap) {
    throw ConfigError(std::string(what) + " length " + std::to_string(length) + " exceeds the cap " +
                      std::to_string(cap) + (high_memory ? "" : " (pass --high-memory to lift it)"));
  }
  if (length < 2) throw ConfigError(std::string(what) + " length must be >= 2");
}

SolveSettings settings_from(const RunConfig& config) {
  SolveSettings s;
  s.seed = config.seed;
  s.k = config.k;
  s.two_sz = config.two_sz;
  s.high_memory = config.high_memory;
  s.lanczos.memory_budget_bytes = config.memory_budget_mb << 20;
  return s;
}

DimerPoint solve_dimer_point(int length, double delta, double alpha, const SolveSettings& settings,
                             SectorBasisPtr basis) {
  DimerPoint p{length, delta, alpha, kNaN, 0, kNaN, kNaN, kNaN, "ok"};
  try {
    const BondList bonds = build_dimer_frustrated({length, delta, alpha});
    basis = ensure_basis(std::move(basis), SiteKind::SpinHalf, length, settings.two_sz);
    LanczosOptions opts = settings.lanczos;
    if (settings.two_sz == 0) opts.spin_flip_parity = singlet_flip_parity(SiteKind::SpinHalf, length);
    const auto gm = lowest_eigenpairs(bonds, basis, pick_k(settings, 1), settings.seed, opts);
    bool found = false;
    const auto i = singlet_index(gm, found);
    if (!found) p.status = "no-singlet-in-lowest-k";
    const auto& psi = gm.eigenvectors[i];
    p.energy = gm.eigenvalues[i];
    p.degeneracy = gm.degeneracy;
    p.s_tot = total_spin_from_s_squared(gm.s_tot_squared[i]);
    if (settings.count_multiplet && opts.spin_flip_parity != 0) {
      // lowest odd-S level; joins the multiplet when within the window
      opts.spin_flip_parity = -opts.spin_flip_parity;
      const auto odd = lowest_eigenpairs(bonds, basis, 1, derive_seed(settings.seed, 31), opts);
      const double e_odd = odd.eigenvalues.front();
      const double window = 1e-8 * std::max(1.0, std::abs(p.energy));
      const int odd_size = static_cast<int>(2.0 * total_spin_from_s_squared(odd.s_tot_squared.front()) + 1.0);
      if (e_odd < p.energy - window) {
        p.status = "singlet-not-ground";
        p.degeneracy = odd_size;
      } else if (e_odd - p.energy <= window) {
        p.degeneracy += odd_size;
      }
    }
    p.gamma_zz = correlators(psi, 0, length - 1).quarter_zz();
    p.concurrence = concurrence_su2(std::clamp(p.gamma_zz, -0.25, 0.25));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    p.status = failure_status(e);
  }
  return p;
}

Spin1Point solve_spin1_point(int length, double beta, const SolveSettings& settings, SectorBasisPtr basis) {
  Spin1Point p;
  p.length = length;
  p.beta = beta;
  p.energy = p.s_tot = p.zz = p.charge = p.partial_concurrence = p.negativity_rdm = p.negativity_su2 = kNaN;
  try {
    const BondList bonds = build_blbq({length, beta});
    basis = ensure_basis(std::move(basis), SiteKind::SpinOne, length, settings.two_sz);
    LanczosOptions opts = settings.lanczos;
    if (settings.two_sz == 0 && length % 2 == 0) opts.spin_flip_parity = singlet_flip_parity(SiteKind::SpinOne, length);
    const auto gm = lowest_eigenpairs(bonds, basis, pick_k(settings, 1), settings.seed, opts);
    bool found = false;
    const auto i = singlet_index(gm, found);
    if (!found) p.status = "no-singlet-in-lowest-k";
    const auto& psi = gm.eigenvectors[i];
    p.energy = gm.eigenvalues[i];
    p.s_tot = total_spin_from_s_squared(gm.s_tot_squared[i]);
    const auto c = correlators(psi, 0, length - 1);
    p.zz = c.zz;
    p.charge = c.charge;
    p.partial_concurrence = partial_concurrence(std::clamp(c.quarter_zz(), -0.25, 0.25));
    p.negativity_rdm = std::max(0.0, negativity(pair_density_matrix(psi, 0, length - 1)));
    const auto report = classify_su2_pair(c.zz, c.charge);
    p.negativity_su2 = report.negativity;
    p.verdict = report.verdict;
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    p.status = failure_status(e);
  }
  return p;
}

ProbePoint solve_probe_point(int length, int offset, double coupling, const SolveSettings& settings,
                             SectorBasisPtr basis) {
  ProbePoint p;
  p.length = length;
  p.offset = offset;
  p.coupling = coupling;
  p.energy = p.s_tot = p.gamma_zz = p.concurrence = kNaN;
  try {
    const BondList bonds = build_probed_heisenberg({length, offset, coupling});
    basis = ensure_basis(std::move(basis), SiteKind::SpinHalf, length + 2, 0);
    const auto gm = lowest_eigenpairs(bonds, basis, pick_k(settings, 2), settings.seed, settings.lanczos);
    const auto& psi = gm.eigenvectors.front();
    p.energy = gm.eigenvalues.front();
    p.s_tot = total_spin_from_s_squared(gm.s_tot_squared.front());

    // full multiplet: sector-0 levels plus the lowest level of 2S^z = +-2
    LanczosOptions quiet = settings.lanczos;
    quiet.resolve_total_spin = false;
    std::vector<double> levels = gm.eigenvalues;
    for (int two_sz : {2, -2}) {
      auto b = make_sector(SiteKind::SpinHalf, length + 2, two_sz);
      levels.push_back(lowest_eigenpairs(bonds, b, 1, derive_seed(settings.seed, 7 + static_cast<std::uint64_t>(two_sz + 2)), quiet)
                           .eigenvalues.front());
    }
    const double e0 = *std::min_element(levels.begin(), levels.end());
    const double window = 1e-8 * std::max(1.0, std::abs(e0));
    p.degeneracy = static_cast<int>(std::count_if(levels.begin(), levels.end(),
                                                  [&](double e) { return e - e0 <= window; }));

    const int probe_a = length;
    const int probe_b = length + 1;
    p.gamma_zz = correlators(psi, probe_a, probe_b).quarter_zz();
    p.concurrence = concurrence_wootters(pair_density_matrix(psi, probe_a, probe_b));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    p.status = failure_status(e);
  }
  return p;
}

std::string_view to_string(ThresholdResult::Status status) {
  switch (status) {
    case ThresholdResult::Status::Found: return "ok";
    case ThresholdResult::Status::NoThreshold: return "no-threshold";
    case ThresholdResult::Status::BelowRange: return "below-range";
  }
  return "?";
}

ThresholdResult find_threshold(double alpha, int length, double tol, const SolveSettings& settings,
                               const BracketObserver& observer) {
  if (!(tol >= 1e-4)) throw std::invalid_argument("threshold: tol must be >= 1e-4");
  ThresholdResult r;
  r.alpha = alpha;
  r.length = length;
  auto basis = make_sector(SiteKind::SpinHalf, length, settings.two_sz);
  SolveSettings quick = settings;
  quick.count_multiplet = false;
  const auto entangled = [&](double delta) {
    ++r.evaluations;
    const auto point = solve_dimer_point(length, delta, alpha, quick, basis);
    if (point.status.rfind("solver-error", 0) == 0 || point.status.rfind("error", 0) == 0) {
      throw SolverError("threshold: " + point.status, {});
    }
    return point.concurrence > kConcurrenceEpsilon;
  };
  double lo = 0.0;
  double hi = kThresholdUpperDelta;
  if (!entangled(hi)) {
    r.status = ThresholdResult::Status::NoThreshold;
    r.delta_t = kNaN;
    r.bracket_width = kNaN;
    return r;
  }
  if (entangled(lo)) {
    r.status = ThresholdResult::Status::BelowRange;
    r.delta_t = 0.0;
    r.bracket_width = 0.0;
    return r;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (entangled(mid) ? hi : lo) = mid;
    if (observer) observer(lo, hi);
  }
  r.delta_t = 0.5 * (lo + hi);
  r.bracket_width = hi - lo;
  return r;
}

std::vector<DimerPoint> scan_dimer(const RunConfig& config) {
  if (config.lengths.empty()) throw ConfigError("scan-dimer: no lengths given");
  for (int L : config.lengths) check_size(ModelFamily::Dimer, L, config.high_memory);
  const auto settings = split_budget(settings_from(config), config.workers);
  const auto bases = bases_for(config.lengths, SiteKind::SpinHalf, 0, settings.two_sz);
  struct Job {
    int L;
    double delta, alpha;
  };
  std::vector<Job> jobs;
  for (int L : config.lengths)
    for (double a : config.alphas)
      for (double d : config.deltas) jobs.push_back({L, d, a});
  std::vector<DimerPoint> out(jobs.size());
  parallel_for(jobs.size(), config.workers, [&](std::size_t i) {
    const auto& j = jobs[i];
    out[i] = solve_dimer_point(j.L, j.delta, j.alpha, settings, bases.at(j.L));
  });
  return out;
}

std::vector<Spin1Point> scan_spin1(const RunConfig& config) {
  if (config.lengths.empty()) throw ConfigError("scan-spin1: no lengths given");
  for (int L : config.lengths) check_size(ModelFamily::Spin1, L, config.high_memory);
  const auto settings = split_budget(settings_from(config), config.workers);
  const auto bases = bases_for(config.lengths, SiteKind::SpinOne, 0, settings.two_sz);
  std::vector<std::pair<int, double>> jobs;
  for (int L : config.lengths)
    for (double b : config.betas) jobs.emplace_back(L, b);
  std::vector<Spin1Point> out(jobs.size());
  parallel_for(jobs.size(), config.workers, [&](std::size_t i) {
    out[i] = solve_spin1_point(jobs[i].first, jobs[i].second, settings, bases.at(jobs[i].first));
  });
  return out;
}

std::vector<ProbePoint> scan_probes(const RunConfig& config) {
  if (config.lengths.empty()) throw ConfigError("scan-probes: no lengths given");
  for (int L : config.lengths) check_size(ModelFamily::Probes, L, config.high_memory);
  const auto settings = split_budget(settings_from(config), config.workers);
  const auto bases = bases_for(config.lengths, SiteKind::SpinHalf, 2, 0);
  struct Job {
    int L, d;
    double jp;
  };
  std::vector<Job> jobs;
  for (int L : config.lengths) {
    std::vector<int> offsets = config.offsets;
    if (offsets.empty())
      for (int d = 1; d <= L / 2; ++d) offsets.push_back(d);
    for (double jp : config.couplings)
      for (int d : offsets) {
        if (d < 1 || d > L / 2) throw ConfigError("scan-probes: d = " + std::to_string(d) + " outside [1, L/2]");
        jobs.push_back({L, d, jp});
      }
  }
  std::vector<ProbePoint> out(jobs.size());
  parallel_for(jobs.size(), config.workers, [&](std::size_t i) {
    out[i] = solve_probe_point(jobs[i].L, jobs[i].d, jobs[i].jp, settings, bases.at(jobs[i].L));
  });
  return out;
}

std::vector<ThresholdResult> scan_threshold(const RunConfig& config) {
  if (config.lengths.empty()) throw ConfigError("threshold: no lengths given");
  for (int L : config.lengths) check_size(ModelFamily::Dimer, L, config.high_memory);
  if (!(config.tolerance >= 1e-4)) throw ConfigError("threshold: tol must be >= 1e-4");
  const auto settings = split_budget(settings_from(config), config.workers);
  std::vector<std::pair<int, double>> jobs;
  for (int L : config.lengths)
    for (double a : config.alphas) jobs.emplace_back(L, a);
  std::vector<ThresholdResult> out(jobs.size());
  parallel_for(jobs.size(), config.workers, [&](std::size_t i) {
    out[i] = find_threshold(jobs[i].second, jobs[i].first, config.tolerance, settings);
  });
  return out;
}

Table dimer_table(const std::vector<DimerPoint>& points) {
  Table t{{"L", "delta", "alpha", "E0", "degeneracy", "S_tot", "gamma_zz", "C_AB", "status"}, {}};
  for (const auto& p : points) {
    t.add_row({std::int64_t{p.length}, p.delta, p.alpha, p.energy, std::int64_t{p.degeneracy}, p.s_tot, p.gamma_zz,
               p.concurrence, p.status});
  }
  return t;
}

Table spin1_table(const std::vector<Spin1Point>& points) {
  Table t{{"L", "beta", "E0", "S_tot", "zz", "charge", "PC", "N_rdm", "N_su2", "verdict", "status"}, {}};
  for (const auto& p : points) {
    t.add_row({std::int64_t{p.length}, p.beta, p.energy, p.s_tot, p.zz, p.charge, p.partial_concurrence,
               p.negativity_rdm, p.negativity_su2, std::string(to_string(p.verdict)), p.status});
  }
  return t;
}

Table probe_table(const std::vector<ProbePoint>& points) {
  Table t{{"L", "d", "Jp", "E0", "S_tot", "degeneracy", "gamma_zz", "C_AB", "status"}, {}};
  for (const auto& p : points) {
    t.add_row({std::int64_t{p.length}, std::int64_t{p.offset}, p.coupling, p.energy, p.s_tot,
               std::int64_t{p.degeneracy}, p.gamma_zz, p.concurrence, p.status});
  }
  return t;
}

Table threshold_table(const std::vector<ThresholdResult>& results) {
  Table t{{"alpha", "L", "delta_T", "bracket_width", "evaluations", "status"}, {}};
  for (const auto& r : results) {
    t.add_row({r.alpha, std::int64_t{r.length}, r.delta_t, r.bracket_width, std::int64_t{r.evaluations},
               std::string(to_string(r.status))});
  }
  return t;
}

Table aklt_check(const RunConfig& config) {
  if (config.lengths.empty()) throw ConfigError("aklt-check: no lengths given");
  for (int L : config.lengths) check_size(ModelFamily::Spin1, L, config.high_memory);
  const auto settings = split_budget(settings_from(config), config.workers);
  std::vector<Spin1Point> points(config.lengths.size());
  parallel_for(points.size(), config.workers, [&](std::size_t i) {
    points[i] = solve_spin1_point(config.lengths[i], 1.0 / 3.0, settings);
  });
  Table t{{"L", "zz_ed", "zz_oracle", "charge_ed", "charge_oracle", "deviation", "band", "within_band", "PC",
           "N_rdm", "status"},
          {}};
  for (const auto& p : points) {
    const auto oracle = aklt::end_correlator(p.length);
    const double deviation = std::abs(p.zz - oracle.zz);
    const double band = aklt::finite_size_band(p.length);
    t.add_row({std::int64_t{p.length}, p.zz, oracle.zz, p.charge, oracle.charge, deviation, band,
               std::int64_t{deviation <= band ? 1 : 0}, p.partial_concurrence, p.negativity_rdm, p.status});
  }
  return t;
}

Table classify_table(const Table& input) {
  const auto zz_col = input.column_index("zz");
  const auto charge_col = input.column_index("charge");
  Table t{{"zz", "charge", "p0", "p1", "p2", "PC", "N", "verdict"}, {}};
  for (const auto& row : input.rows) {
    const double zz = cell_as_double(row[zz_col]);
    const double charge = cell_as_double(row[charge_col]);
    const auto r = classify_su2_pair(zz, charge);
    const bool ok = r.verdict != Verdict::InvalidState;
    t.add_row({zz, charge, r.state.weights[0], r.state.weights[1], r.state.weights[2],
               ok ? r.partial_concurrence : kNaN, ok ? r.negativity : kNaN, std::string(to_string(r.verdict))});
  }
  return t;
}

Table fit_table(const Table& input, bool alternating) {
  const auto l_col = input.column_index("L");
  const auto v_col = input.column_index("value");
  std::vector<FitPoint> points;
  for (const auto& row : input.rows) {
    const double L = cell_as_double(row[l_col]);
    if (L != std::round(L)) throw std::invalid_argument("fit: L must be an integer");
    points.push_back({static_cast<int>(L), cell_as_double(row[v_col])});
  }
  const auto f = fit_exponential(points, alternating);
  Table t{{"E_inf", "b", "xi", "rms", "alternating", "points"}, {}};
  t.add_row({f.asymptote, f.amplitude, f.decay_length, f.rms_residual, std::int64_t{alternating ? 1 : 0},
             static_cast<std::int64_t>(points.size())});
  return t;
}

nlohmann::json run_metadata(const std::string& command, const RunConfig& config) {
  return {{"command", command},
          {"model", config.model},
          {"seed", config.seed},
          {"grid", config_to_json(config)},
          {"tool_version", tool_version()}};
}

}  // namespace lde
