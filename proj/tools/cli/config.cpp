#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace strichartz::cli {
namespace {

enum class Kind { integer, real, text, int_list, int_or_list };

struct Field {
  std::string key;
  Kind kind;
  Json fallback;  // null when required
};

using Schema = std::vector<Field>;

const std::map<std::string, Schema>& schemas() {
  static const std::map<std::string, Schema> s = {
      {"sweep",
       {{"d", Kind::integer, nullptr},
        {"alpha", Kind::real, nullptr},
        {"Ns", Kind::int_list, nullptr},
        {"p", Kind::real, 4.0},
        {"q", Kind::real, "admissible"},
        {"instance", Kind::text, "extremal"},
        {"rank", Kind::integer, 1},
        {"seed", Kind::integer, 0},
        {"refine", Kind::integer, 1}}},
      {"endpoint",
       {{"d", Kind::integer, nullptr},
        {"N", Kind::int_or_list, nullptr},
        {"seed", Kind::integer, 0},
        {"trials", Kind::integer, 1},
        {"refine", Kind::integer, 1}}},
      {"dispersive", {{"d", Kind::integer, nullptr}, {"Ns", Kind::int_list, nullptr}, {"refine", Kind::integer, 1}}},
      {"duality",
       {{"d", Kind::integer, nullptr},
        {"N", Kind::integer, nullptr},
        {"alpha", Kind::real, 2.0},
        {"p", Kind::real, 4.0},
        {"q", Kind::real, "admissible"},
        {"rank", Kind::integer, 3},
        {"weight", Kind::text, "random"},
        {"trials", Kind::integer, 1},
        {"seed", Kind::integer, 0},
        {"gx", Kind::integer, 0},
        {"gt", Kind::integer, 0}}},
      {"dyadic",
       {{"d", Kind::integer, nullptr},
        {"N", Kind::integer, nullptr},
        {"alpha", Kind::real, 2.0},
        {"weight", Kind::text, "random"},
        {"seed", Kind::integer, 0},
        {"refine", Kind::integer, 1}}},
      {"hartree",
       {{"d", Kind::integer, nullptr},
        {"N", Kind::integer, nullptr},
        {"a", Kind::real, 0.5},
        {"dt", Kind::real, 1e-3},
        {"T", Kind::real, 0.1},
        {"scheme", Kind::text, "strang"},
        {"monitor_every", Kind::integer, 1},
        {"coupling", Kind::real, 1.0},
        {"picard_iters", Kind::integer, 8},
        {"state", Kind::text, "low_mode"},
        {"rank", Kind::integer, 2},
        {"seed", Kind::integer, 0}}},
  };
  return s;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

Json parse_value(const std::string& raw) {
  if (raw.empty()) return "";
  try {
    return Json::parse(raw);
  } catch (const Json::parse_error&) {
  }
  if (raw.find(',') != std::string::npos) {
    Json arr = Json::array();
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) arr.push_back(parse_value(trim(item)));
    return arr;
  }
  return raw;
}

bool is_integer(const Json& v) {
  if (v.is_number_integer()) return true;
  return v.is_number_float() && std::isfinite(v.get<double>()) && v.get<double>() == std::floor(v.get<double>()) &&
         std::abs(v.get<double>()) < 1e15;
}

long long as_integer(const Json& v, const std::string& key) {
  if (!is_integer(v)) throw SchemaError("key '" + key + "' must be an integer");
  return v.is_number_integer() ? v.get<long long>() : static_cast<long long>(v.get<double>());
}

double as_real(const Json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  }
  throw SchemaError("key '" + key + "' must be a number or 'inf'");
}

Json coerce(const Field& f, const Json& v) {
  switch (f.kind) {
    case Kind::integer:
      return as_integer(v, f.key);
    case Kind::real: {
      const double x = as_real(v, f.key);
      if (std::isinf(x)) return "inf";
      return x;
    }
    case Kind::text:
      if (!v.is_string()) throw SchemaError("key '" + f.key + "' must be a string");
      return v;
    case Kind::int_list:
    case Kind::int_or_list: {
      Json out = Json::array();
      if (v.is_array()) {
        if (v.empty()) throw SchemaError("key '" + f.key + "' must not be empty");
        for (const auto& x : v) out.push_back(as_integer(x, f.key));
      } else if (f.kind == Kind::int_or_list) {
        out.push_back(as_integer(v, f.key));
      } else {
        throw SchemaError("key '" + f.key + "' must be a list of integers");
      }
      return out;
    }
  }
  return v;
}

void check(bool ok, const std::string& msg) {
  if (!ok) throw SchemaError(msg);
}

double real_of(const Json& v) { return v.is_string() ? std::numeric_limits<double>::infinity() : v.get<double>(); }

// Ranges that can be checked without running anything.
void check_ranges(const std::string& e, Json& r) {
  const int d = r["d"].get<int>();
  check(d == 1 || d == 2, "d must be 1 or 2");
  if (r.contains("N") && r["N"].is_number()) check(r["N"].get<int>() >= 1, "N must be >= 1");
  for (const char* key : {"Ns", "N"}) {
    if (r.contains(key) && r[key].is_array()) {
      for (const auto& n : r[key]) check(n.get<int>() >= 1 && n.get<int>() <= 64, std::string(key) + " entries must lie in [1, 64]");
    }
  }
  for (const char* key : {"refine", "trials", "rank", "monitor_every", "picard_iters"}) {
    if (r.contains(key)) check(r[key].get<long long>() >= 1, std::string(key) + " must be >= 1");
  }
  if (r.contains("seed")) check(r["seed"].get<long long>() >= 0, "seed must be >= 0");
  if (r.contains("alpha")) check(real_of(r["alpha"]) >= 1.0, "alpha must be >= 1");
  if (r.contains("p")) {
    const double p = real_of(r["p"]);
    check(p >= 1.0, "p must be >= 1");
    if (r["q"] == "admissible") {
      // 2/p + d/q = d
      const double denom = d - 2.0 / p;
      check(denom > 0.0, "no admissible q for this p; give q explicitly");
      r["q"] = d / denom;
    }
    check(real_of(r["q"]) >= 1.0, "q must be >= 1");
  }
  if (e == "sweep") {
    const auto& inst = r["instance"];
    check(inst == "extremal" || inst == "random", "instance must be 'extremal' or 'random'");
    check(r["Ns"].size() >= 2, "sweep needs at least two N values");
  }
  if (e == "endpoint") check(d == 1, "the endpoint decomposition is one-dimensional; d must be 1");
  if (e == "duality") {
    check(r["weight"] == "random" || r["weight"] == "holder", "weight must be 'random' or 'holder'");
    check(r["gx"].get<int>() >= 0 && r["gt"].get<int>() >= 0, "gx and gt must be >= 0 (0 selects the default)");
  }
  if (e == "dyadic") check(r["weight"] == "random" || r["weight"] == "one", "weight must be 'random' or 'one'");
  if (e == "hartree") {
    check(r["scheme"] == "strang" || r["scheme"] == "picard", "scheme must be 'strang' or 'picard'");
    check(r["state"] == "low_mode" || r["state"] == "random", "state must be 'low_mode' or 'random'");
  }
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"sweep", "endpoint", "dispersive", "duality", "dyadic", "hartree"};
  return names;
}

ExperimentConfig parse_config(std::string_view text, const std::string& experiment) {
  ExperimentConfig c;
  c.experiment = experiment;
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    try {
      c.params = Json::parse(body);
    } catch (const Json::parse_error& e) {
      throw SchemaError(std::string("malformed JSON config: ") + e.what());
    }
    if (!c.params.is_object()) throw SchemaError("JSON config must be an object");
    for (const auto& [k, v] : c.params.items()) {
      if (v.is_object()) throw SchemaError("config must be flat; key '" + k + "' holds an object");
    }
  } else {
    std::stringstream ss{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw SchemaError("line " + std::to_string(lineno) + ": expected key=value");
      const std::string key = trim(std::string_view(line).substr(0, eq));
      if (key.empty()) throw SchemaError("line " + std::to_string(lineno) + ": empty key");
      if (c.params.contains(key)) throw SchemaError("duplicate key '" + key + "'");
      c.params[key] = parse_value(trim(std::string_view(line).substr(eq + 1)));
    }
  }
  if (c.params.contains("experiment")) {
    if (c.params["experiment"] != experiment) {
      throw SchemaError("config is for experiment " + c.params["experiment"].dump() + ", not '" + experiment + "'");
    }
    c.params.erase("experiment");
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path, const std::string& experiment) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), experiment);
}

Json resolve(const ExperimentConfig& config) {
  const auto it = schemas().find(config.experiment);
  if (it == schemas().end()) throw SchemaError("unknown experiment '" + config.experiment + "'");
  const Schema& schema = it->second;
  for (const auto& [k, v] : config.params.items()) {
    const bool known = std::any_of(schema.begin(), schema.end(), [&](const Field& f) { return f.key == k; });
    if (!known) throw SchemaError("unknown key '" + k + "' for experiment '" + config.experiment + "'");
  }
  Json r = Json::object();
  for (const Field& f : schema) {
    if (config.params.contains(f.key)) {
      r[f.key] = coerce(f, config.params[f.key]);
    } else if (f.fallback.is_null()) {
      throw SchemaError("missing required key '" + f.key + "' for experiment '" + config.experiment + "'");
    } else {
      r[f.key] = f.fallback;
    }
  }
  check_ranges(config.experiment, r);
  return r;
}

}  // namespace strichartz::cli
