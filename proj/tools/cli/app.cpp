#include "app.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "config.hpp"
#include "experiments.hpp"
#include "output.hpp"
#include "strichartz/version.hpp"

namespace strichartz::cli {
namespace {

constexpr const char* kOutDirEnv = "STRICHARTZ_OUT_DIR";

struct Options {
  std::string config;
  std::string out;
  std::optional<long long> seed;
  int threads = 1;
  std::vector<std::string> sets;
};

std::filesystem::path output_dir(const Options& o) {
  if (!o.out.empty()) return o.out;
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
  return ".";
}

int run(const std::string& experiment, const Options& o, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  Json resolved;
  try {
    config = o.config.empty() ? parse_config("", experiment) : load_config(o.config, experiment);
    for (const std::string& kv : o.sets) {
      const ExperimentConfig extra = parse_config(kv, experiment);
      for (const auto& [k, v] : extra.params.items()) config.params[k] = v;
    }
    if (o.seed) config.params["seed"] = *o.seed;
    resolved = resolve(config);
  } catch (const SchemaError& e) {
    err << "config error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  }

  int threads = o.threads;
  if (threads == 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  RunResult res;
  try {
    res = run_experiment(experiment, resolved, threads);
  } catch (const SchemaError& e) {
    err << "config error: " << e.what() << "\n";
    return kSchemaError;
  }

  Json sidecar;
  sidecar["experiment"] = experiment;
  sidecar["version"] = kVersion;
  sidecar["config"] = resolved;
  sidecar["csv"] = experiment + ".csv";
  sidecar["rows"] = res.table.rows.size();
  sidecar["status"] = res.status;
  sidecar["failures"] = Json::array();
  for (const auto& fl : res.failures) sidecar["failures"].push_back({{"cell", fl.cell}, {"error", fl.message}});
  sidecar["summary"] = res.summary;

  const std::filesystem::path dir = output_dir(o);
  try {
    write_outputs(dir, experiment, res.table, sidecar);
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  }
  for (const auto& fl : res.failures) err << "guard tripped in " << fl.cell << ": " << fl.message << "\n";
  out << "wrote " << (dir / (experiment + ".csv")).string() << " (" << res.table.rows.size() << " rows)\n";
  return res.status;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthonormal Strichartz experiments on the torus"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--config", o.config, "Config file: key=value lines or a flat JSON object");
  app.add_option("--out", o.out, std::string("Output directory (default: $") + kOutDirEnv + " or .)");
  app.add_option("--seed", o.seed, "Override the config seed")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", o.threads, "Worker threads for independent cells; 0 uses all cores")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--set", o.sets, "Extra key=value pairs, applied after the config file");

  const std::map<std::string, std::string> help = {
      {"sweep", "Exponent sweep of lhs / |lambda|_alpha over N"},
      {"endpoint", "Diagonal and off-diagonal split of the d = 1 endpoint norm"},
      {"dispersive", "sup |t|^{d/2} |K_N| over 0 < |t| <= 1/N"},
      {"duality", "Duality and trace pairing check on random families"},
      {"dyadic", "Per-shell Schatten profile of the time-truncated kernel"},
      {"hartree", "Finite-rank Hartree trajectory with conservation monitors"},
  };
  std::string chosen;
  for (const std::string& name : experiment_names()) {
    app.add_subcommand(name, help.at(name))->callback([&chosen, name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kSchemaError;
  }
  return run(chosen, o, out, err);
}

}  // namespace strichartz::cli
