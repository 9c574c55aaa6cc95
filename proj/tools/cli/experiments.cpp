#include "experiments.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <thread>

#include "strichartz/errors.hpp"
#include "strichartz/extension/extension.hpp"
#include "strichartz/hartree/hartree.hpp"
#include "strichartz/lab/duality.hpp"
#include "strichartz/lab/dyadic.hpp"
#include "strichartz/lab/endpoint.hpp"
#include "strichartz/lab/instances.hpp"
#include "strichartz/lab/lhs.hpp"
#include "strichartz/lab/sweep.hpp"

namespace strichartz::cli {
namespace {

using Row = std::vector<std::string>;
using Rows = std::vector<Row>;

struct Cell {
  std::string key;
  std::function<Rows()> work;
};

// Outcome slots are indexed by cell, so workers never share a slot.
struct Outcome {
  std::optional<Rows> rows;
  std::string guard;
  std::string invalid;
};

std::vector<Outcome> run_cells(const std::vector<Cell>& cells, int threads) {
  std::vector<Outcome> out(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        out[i].rows = cells[i].work();
      } catch (const InvalidArgument& e) {
        out[i].invalid = e.what();
      } catch (const std::exception& e) {
        out[i].guard = e.what();
      }
    }
  };
  const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), cells.size());
  if (n <= 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  pool.clear();
  return out;
}

double real(const Json& v) { return v.is_string() ? std::numeric_limits<double>::infinity() : v.get<double>(); }

std::vector<int> ints(const Json& v) { return v.get<std::vector<int>>(); }

std::string f(double v) { return format_double(v); }
std::string i(long long v) { return format_int(v); }

Json fit_json(double slope, double intercept, double max_residual) {
  Json j;
  j["slope"] = slope;
  j["intercept"] = intercept;
  j["max_residual"] = max_residual;
  return j;
}

TorusGrid product_grid(int d, int N, int refine) {
  const TorusGrid g = TorusGrid::for_products(d, N);
  return TorusGrid(d, g.gx() * refine, g.gt() * refine);
}

// Collects rows in cell order and sorts out failures. Invalid parameters turn
// into a schema error for the whole run.
void collect(const std::vector<Cell>& cells, const std::vector<Outcome>& out, RunResult& res) {
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (!out[c].invalid.empty()) throw SchemaError(cells[c].key + ": " + out[c].invalid);
  }
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (out[c].rows) {
      for (const auto& row : *out[c].rows) res.table.rows.push_back(row);
    } else {
      res.failures.push_back({cells[c].key, out[c].guard});
    }
  }
}

// --- sweep -----------------------------------------------------------------

RunResult sweep(const Json& r, int threads) {
  const int d = r["d"];
  const std::vector<int> Ns = ints(r["Ns"]);
  const MixedNormSpec spec{real(r["p"]), real(r["q"]), {}};
  validate(spec);
  const double alpha = real(r["alpha"]);
  const bool extremal = r["instance"] == "extremal";
  const auto rank = r["rank"].get<std::size_t>();
  const auto seed = r["seed"].get<std::uint64_t>();
  const int refine = r["refine"];

  std::vector<SweepPoint> points(Ns.size());
  std::vector<Cell> cells;
  for (std::size_t c = 0; c < Ns.size(); ++c) {
    const int N = Ns[c];
    cells.push_back({"N=" + i(N), [=, &points] {
                       const ExtensionOperator op(build_lattice(d, N), product_grid(d, N, refine));
                       const WeightedFamily inst =
                           extremal ? extremal_instance(d, N) : random_instance(op.lattice(), rank, seed + N);
                       SweepPoint& pt = points[c];
                       pt.N = N;
                       pt.lhs = lhs_functional(inst.weights, inst.family, spec, op);
                       pt.l_alpha = lp_norm(inst.weights, alpha);
                       pt.ratio = pt.lhs / pt.l_alpha;
                       return Rows{{i(N), f(pt.lhs), f(pt.l_alpha), f(pt.ratio)}};
                     }});
  }
  RunResult res;
  res.table.units =
      "N: lattice cutoff; lhs: L^p_t L^q_x norm of sum_j lambda_j |E_N a_j|^2 over the unit torus; "
      "l_alpha: l^alpha norm of the weights; ratio: lhs / l_alpha; final row 'fit': slope; intercept; "
      "max_residual of log ratio against log N";
  res.table.header = {"N", "lhs", "l_alpha", "ratio"};
  const auto out = run_cells(cells, threads);
  collect(cells, out, res);
  std::vector<int> okN;
  std::vector<double> ratios;
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (!out[c].rows) continue;
    okN.push_back(points[c].N);
    ratios.push_back(points[c].ratio);
  }
  if (okN.size() >= 2) {
    const ExponentFit fit = fit_loglog(okN, ratios);
    res.table.rows.push_back({"fit", f(fit.slope), f(fit.intercept), f(fit.max_residual)});
    res.summary["fit"] = fit_json(fit.slope, fit.intercept, fit.max_residual);
  }
  return res;
}

// --- endpoint --------------------------------------------------------------

RunResult endpoint(const Json& r, int threads) {
  const std::vector<int> Ns = ints(r["N"]);
  const auto seed = r["seed"].get<std::uint64_t>();
  const int trials = r["trials"];
  const int refine = r["refine"];
  std::vector<Cell> cells;
  for (int N : Ns) {
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
      cells.push_back({"N=" + i(N) + " seed=" + i(static_cast<long long>(s)), [=] {
                         const ExtensionOperator op(build_lattice(1, N), product_grid(1, N, refine));
                         const auto W1 = random_band_limited(op.grid(), 2 * s);
                         const auto W2 = random_band_limited(op.grid(), 2 * s + 1);
                         const EndpointReport e = endpoint_decomposition(W1, W2, op);
                         return Rows{{i(N), i(static_cast<long long>(s)), f(e.total), f(e.term_I), f(e.term_II),
                                      f(e.bound), f(e.residual)}};
                       }});
    }
  }
  RunResult res;
  res.table.units =
      "N: lattice cutoff; seed: weight seed; total: |W1 E E* W2|^2 in the Hilbert-Schmidt class; "
      "I: diagonal term; II: off-diagonal term; bound: 6N |W1|^2 |W2|^2 in L^4_t L^2_x; residual: |total - (I + II)|";
  res.table.header = {"N", "seed", "total", "I", "II", "bound", "residual"};
  collect(cells, run_cells(cells, threads), res);
  return res;
}

// --- dispersive ------------------------------------------------------------

RunResult dispersive(const Json& r, int threads) {
  const int d = r["d"];
  const int refine = r["refine"];
  std::vector<Cell> cells;
  for (int N : ints(r["Ns"])) {
    cells.push_back({"N=" + i(N), [=] {
                       const TorusGrid g(d, 8 * N * refine, 16 * N * N * refine);
                       return Rows{{i(N), i(g.gx()), i(g.gt()), f(dispersive_ratio(d, N, g))}};
                     }});
  }
  RunResult res;
  res.table.units =
      "N: lattice cutoff; gx; gt: grid sizes; sup_ratio: max over grid points with 0 < |t| <= 1/N of "
      "|t|^{d/2} |K_N(x, t)|";
  res.table.header = {"N", "gx", "gt", "sup_ratio"};
  collect(cells, run_cells(cells, threads), res);
  return res;
}

// --- duality ---------------------------------------------------------------

RunResult duality(const Json& r, int threads) {
  const int d = r["d"];
  const int N = r["N"];
  const MixedNormSpec spec{real(r["p"]), real(r["q"]), {}};
  validate(spec);
  const double alpha = real(r["alpha"]);
  const auto rank = r["rank"].get<std::size_t>();
  const bool holder = r["weight"] == "holder";
  const auto seed = r["seed"].get<std::uint64_t>();
  const TorusGrid def = TorusGrid::for_products(d, N);
  const int gx = r["gx"].get<int>() > 0 ? r["gx"].get<int>() : def.gx();
  const int gt = r["gt"].get<int>() > 0 ? r["gt"].get<int>() : def.gt();
  std::vector<Cell> cells;
  for (int t = 0; t < r["trials"].get<int>(); ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    cells.push_back({"trial=" + i(t), [=] {
                       const ExtensionOperator op(build_lattice(d, N), TorusGrid(d, gx, gt));
                       const WeightedFamily inst = random_instance(op.lattice(), rank, s);
                       const GridFunction W = holder ? holder_dual_weight(inst.weights, inst.family, spec, op)
                                                     : random_band_limited(op.grid(), s + 1000003);
                       const DualityReport rep = duality_check(inst.weights, inst.family, W, spec, alpha, op);
                       return Rows{{i(t), i(static_cast<long long>(s)), f(rep.r1), f(rep.r2), f(rep.lhs),
                                    f(rep.l_alpha), f(rep.schatten), f(rep.weight_norm_sq),
                                    f(rep.pairing_density.real()), f(rep.pairing_density.imag()),
                                    f(rep.pairing_trace.real()), f(rep.pairing_trace.imag()),
                                    f(rep.pairing_residual)}};
                     }});
  }
  RunResult res;
  res.table.units =
      "trial; seed; r1: lhs / l_alpha; r2: Schatten-alpha' norm of W E E* W over |W|^2 in L^{2p'}_t L^{2q'}_x; "
      "lhs; l_alpha; schatten; weight_norm_sq; pairing_density: <rho; |W|^2> (re; im); "
      "pairing_trace: Tr(Gamma E* |W|^2 E) (re; im); pairing_residual: relative difference of the two pairings";
  res.table.header = {"trial",           "seed",           "r1",
                      "r2",              "lhs",            "l_alpha",
                      "schatten",        "weight_norm_sq", "pairing_density_re",
                      "pairing_density_im", "pairing_trace_re", "pairing_trace_im",
                      "pairing_residual"};
  collect(cells, run_cells(cells, threads), res);
  return res;
}

// --- dyadic ----------------------------------------------------------------

RunResult dyadic(const Json& r, int threads) {
  const int d = r["d"];
  const int N = r["N"];
  const double alpha = real(r["alpha"]);
  const bool one = r["weight"] == "one";
  const auto seed = r["seed"].get<std::uint64_t>();
  const int refine = r["refine"];
  RunResult res;
  std::vector<Cell> cells;
  cells.push_back({"N=" + i(N), [=, &res] {
                     const TorusGrid g0 = TorusGrid::for_products(d, N);
                     const ExtensionOperator op(build_lattice(d, N), TorusGrid(d, g0.gx(), g0.gt() * refine));
                     const GridFunction W = one ? GridFunction::constant(op.grid(), 1.0)
                                                : random_band_limited(op.grid(), seed);
                     const DyadicProfile prof = dyadic_schatten_profile(W, W, alpha, op);
                     Rows rows;
                     for (const auto& row : prof.rows) {
                       rows.push_back({i(row.j), f(row.t_lo), f(row.t_hi), f(row.norm),
                                       i(static_cast<long long>(row.count)), row.resolved ? "1" : "0"});
                     }
                     rows.push_back({"fit", f(prof.slope), f(prof.intercept), f(prof.max_residual), "", ""});
                     res.summary["fit"] = fit_json(prof.slope, prof.intercept, prof.max_residual);
                     return rows;
                   }});
  res.table.units =
      "j: shell exponent; t_lo; t_hi: shell t_lo <= |t| < t_hi; norm: Schatten-alpha norm of the shell operator "
      "on the window |t| <= 1/(2N); count: ordered time-sample pairs in the shell; resolved: 1 if the shell "
      "enters the fit; final row 'fit': slope; intercept; max_residual of log norm against log 2^j";
  res.table.header = {"j", "t_lo", "t_hi", "norm", "count", "resolved"};
  collect(cells, run_cells(cells, threads), res);
  return res;
}

// --- hartree ---------------------------------------------------------------

RunResult hartree(const Json& r, int threads) {
  HartreeConfig cfg;
  cfg.d = r["d"];
  cfg.N = r["N"];
  cfg.a = r["a"];
  cfg.dt = r["dt"];
  cfg.T = r["T"];
  cfg.scheme = r["scheme"] == "picard" ? HartreeScheme::picard : HartreeScheme::strang;
  cfg.monitor_every = r["monitor_every"];
  cfg.coupling = r["coupling"];
  cfg.picard_iters = r["picard_iters"];
  try {
    validate(cfg);
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
  const bool random = r["state"] == "random";
  const auto rank = r["rank"].get<std::size_t>();
  const auto seed = r["seed"].get<std::uint64_t>();
  RunResult res;
  std::size_t orbitals = random ? rank : 2;
  std::vector<Cell> cells;
  cells.push_back({"trajectory", [=, &res] {
                     const DensityMatrix gamma0 =
                         random ? random_state(cfg.d, cfg.N, rank, seed) : low_mode_state(cfg.d, cfg.N);
                     const Trajectory tr = evolve(cfg, gamma0);
                     Rows rows;
                     for (const auto& rec : tr.records) {
                       Row row{f(rec.time)};
                       for (double m : rec.masses) row.push_back(f(m));
                       row.push_back(f(rec.gram_deviation));
                       row.push_back(f(rec.energy));
                       row.push_back(f(rec.trace));
                       rows.push_back(std::move(row));
                     }
                     Json rep;
                     rep["max_gram_deviation"] = tr.report.max_gram_deviation;
                     rep["mass_drift"] = tr.report.mass_drift;
                     rep["energy_drift"] = tr.report.energy_drift;
                     rep["trace_drift"] = tr.report.trace_drift;
                     res.summary["conservation"] = rep;
                     return rows;
                   }});
  res.table.header = {"time"};
  for (std::size_t j = 1; j <= orbitals; ++j) res.table.header.push_back("mass_" + i(static_cast<long long>(j)));
  for (const char* c : {"gram_deviation", "energy", "trace"}) res.table.header.push_back(c);
  res.table.units =
      "time: flow time; mass_j: squared l^2 norm of orbital j; gram_deviation: max entry of G - I for the "
      "orbital Gram matrix G; energy: Hartree energy with kinetic symbol -2 pi |n|^2; trace: Tr gamma";
  collect(cells, run_cells(cells, threads), res);
  return res;
}

}  // namespace

RunResult run_experiment(const std::string& experiment, const Json& resolved, int threads) {
  static const std::map<std::string, RunResult (*)(const Json&, int)> table = {
      {"sweep", sweep},     {"endpoint", endpoint}, {"dispersive", dispersive},
      {"duality", duality}, {"dyadic", dyadic},     {"hartree", hartree},
  };
  const auto it = table.find(experiment);
  if (it == table.end()) throw SchemaError("unknown experiment '" + experiment + "'");
  RunResult res;
  try {
    res = it->second(resolved, threads);
  } catch (const InvalidArgument& e) {
    throw SchemaError(e.what());
  }
  res.status = res.failures.empty() ? kOk : kGuardTrip;
  return res;
}

}  // namespace strichartz::cli
