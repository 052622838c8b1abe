#include "satroute/limits.hpp"

#include <cstdlib>

#include "satroute/errors.hpp"

namespace satroute {

SearchLimits SearchLimits::parse(std::string_view spec) {
  SearchLimits out;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("budget entry '" + std::string(item) + "' lacks '='");
    }
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    char* end = nullptr;
    const double number = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0' || number <= 0) {
      throw InvalidArgument("budget value for '" + key + "' must be a positive number");
    }
    if (key == "steps") out.max_steps = static_cast<std::int64_t>(number);
    else if (key == "nodes") out.max_graph_nodes = static_cast<int>(number);
    else if (key == "units") out.max_units = static_cast<int>(number);
    else if (key == "contested") out.max_contested_arcs = static_cast<int>(number);
    else if (key == "vectors") out.max_vectors = static_cast<std::int64_t>(number);
    else if (key == "paths") out.max_paths = static_cast<std::int64_t>(number);
    else if (key == "seconds") out.time_limit_seconds = number;
    else throw InvalidArgument("unknown budget key '" + key + "'");
  }
  return out;
}

SearchLimits SearchLimits::from_env() {
  const char* env = std::getenv("SATROUTE_BUDGET");
  return env ? parse(env) : SearchLimits{};
}

Budget::Budget(const SearchLimits& limits)
    : limits_(limits),
      deadline_(std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(limits.time_limit_seconds))) {}

void Budget::step(std::int64_t n) {
  steps_ += n;
  if (steps_ > limits_.max_steps) {
    throw BudgetExceeded("search exceeded " + std::to_string(limits_.max_steps) + " steps");
  }
  if ((steps_ & 0x3ff) < n && std::chrono::steady_clock::now() > deadline_) {
    throw BudgetExceeded("search exceeded the time limit");
  }
}

void Budget::require(bool within, const std::string& what) const {
  if (!within) throw BudgetExceeded(what);
}

}  // namespace satroute
