#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "output.hpp"

namespace strichartz::cli {

struct CellFailure {
  std::string cell;
  std::string message;
};

struct RunResult {
  Table table;
  std::vector<CellFailure> failures;  // guard trips, in cell order
  Json summary = Json::object();      // fits and reports that are not per-row
  int status = kOk;
};

// Runs every cell of a resolved config on `threads` workers. Rows come out in
// cell order whatever the thread count. An invalid parameter found while
// running throws SchemaError; a numerical guard only fails its own cell.
RunResult run_experiment(const std::string& experiment, const Json& resolved, int threads);

}  // namespace strichartz::cli
