#include <algorithm>
#include <cmath>
#include <string>

#include "strichartz/errors.hpp"
#include "strichartz/hartree/hartree.hpp"

namespace strichartz {

void validate(const HartreeConfig& c) {
  require(c.d >= 1, "hartree: d must be >= 1");
  require(c.N >= 1, "hartree: N must be >= 1");
  require(c.a > 0.0 && c.a < c.d, "hartree: a must lie in (0, d)");
  require(std::isfinite(c.dt) && c.dt != 0.0, "hartree: dt must be finite and nonzero");
  require(std::isfinite(c.T), "hartree: T must be finite");
  require(c.T == 0.0 || (c.T > 0.0) == (c.dt > 0.0), "hartree: T and dt must have the same sign");
  require(c.monitor_every >= 1, "hartree: monitor_every must be >= 1");
  require(std::isfinite(c.coupling), "hartree: coupling must be finite");
  require(c.picard_iters >= 1, "hartree: picard_iters must be >= 1");
  const double steps = c.T / c.dt;
  require(std::abs(steps - std::round(steps)) <= 1e-9 * std::max(1.0, std::abs(steps)),
          "hartree: T must be an integer multiple of dt");
}

MonitorRecord monitor(const HartreeModel& model, const HartreeState& state) {
  MonitorRecord r;
  r.time = state.time;
  for (const auto& f : state.gamma.orbitals()) {
    const double n = l2_norm(f);
    if (!(n <= 10.0)) throw NumericalGuard("blow-up guard: orbital norm " + std::to_string(n) + " exceeds 10");
    r.masses.push_back(n * n);
  }
  r.gram_deviation = gram_deviation(state.gamma.orbitals());
  r.energy = model.energy(state.gamma);
  r.trace = state.gamma.trace();
  return r;
}

namespace {

ConservationReport summarize(const std::vector<MonitorRecord>& recs, double dt) {
  ConservationReport rep;
  rep.dt = dt;
  const MonitorRecord& r0 = recs.front();
  rep.mass_drift.assign(r0.masses.size(), 0.0);
  for (const auto& r : recs) {
    rep.max_gram_deviation = std::max(rep.max_gram_deviation, r.gram_deviation);
    for (std::size_t j = 0; j < r.masses.size() && j < r0.masses.size(); ++j) {
      rep.mass_drift[j] = std::max(rep.mass_drift[j], std::abs(r.masses[j] - r0.masses[j]));
    }
    rep.energy_drift = std::max(rep.energy_drift, std::abs(r.energy - r0.energy));
    rep.trace_drift = std::max(rep.trace_drift, std::abs(r.trace - r0.trace));
  }
  return rep;
}

}  // namespace

Trajectory evolve(const HartreeConfig& config, const DensityMatrix& gamma0) {
  validate(config);
  require(gamma0.lattice() == build_lattice(config.d, config.N), "initial state lattice does not match the config");
  require(gamma0.orthonormal(), "initial state must have orthonormal orbitals");
  const HartreeModel model(config.d, config.N, config.a, config.coupling);
  const long long steps = std::llround(config.T / config.dt);

  Trajectory tr;
  HartreeState state{0.0, gamma0};
  tr.states.push_back(state);
  tr.records.push_back(monitor(model, state));

  if (config.scheme == HartreeScheme::picard) {
    require(config.T >= 0.0 && config.T <= 1.0, "picard scheme needs 0 <= T <= 1");
    if (steps > 0) {
      const PicardResult pr = picard_iterate(gamma0, config.T, config.a, config.picard_iters, config.dt, config.coupling);
      state = {config.T, pr.gamma};
      tr.states.push_back(state);
      tr.records.push_back(monitor(model, state));
    }
    tr.report = summarize(tr.records, config.dt);
    return tr;
  }

  for (long long s = 1; s <= steps; ++s) {
    state = model.step_strang(state, config.dt);
    state.time = static_cast<double>(s) * config.dt;  // no accumulated drift in the clock
    if (s % config.monitor_every == 0 || s == steps) {
      tr.states.push_back(state);
      tr.records.push_back(monitor(model, state));
    } else {
      for (const auto& f : state.gamma.orbitals()) {
        if (!(l2_norm(f) <= 10.0)) throw NumericalGuard("blow-up guard: orbital norm exceeds 10");
      }
    }
  }
  tr.report = summarize(tr.records, config.dt);
  return tr;
}

}  // namespace strichartz
