#pragma once

#include <string>
#include <vector>

#include "satroute/instance.hpp"

namespace satroute {

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Replays a solution against the instance independently of any solver:
/// path connectivity, per-arc joint capacity, delivered amounts, arrival
/// snapshots, deadlines and the objective value.
ValidationReport validate_solution(const RoutingInstance& instance, const RoutingSolution& solution);

}  // namespace satroute
