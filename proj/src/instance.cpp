#include "satroute/instance.hpp"

#include <algorithm>
#include <set>

#include "satroute/errors.hpp"

namespace satroute {

namespace {

std::vector<std::string> split_dash(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find('-', start);
    parts.emplace_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

CachePolicy cache_policy_for(const CacheSetting& cache, const std::vector<Model>& models) {
  return CachePolicy{cache.capacity.value_or(total_demand(models)), cache.per_satellite};
}

}  // namespace

std::string RoutingInstance::label(int satellite) const {
  const auto it = labels.find(satellite);
  return it == labels.end() ? std::to_string(satellite) : it->second;
}

Rational total_demand(const std::vector<Model>& models) {
  Rational total = 0;
  for (const auto& m : models) total += m.size * static_cast<long>(m.clients.size());
  return total;
}

RoutingInstance make_instance(Phase phase, int satellites, int snapshots,
                              std::vector<IntraArc> arcs, std::vector<Model> models,
                              Variant variant, CacheSetting cache,
                              std::map<int, std::string> labels) {
  RoutingInstance inst;
  inst.phase = phase;
  inst.tvg = TimeVaryingGraph(satellites, snapshots, std::move(arcs),
                              cache_policy_for(cache, models));
  inst.models = std::move(models);
  inst.variant = variant;
  inst.cache = std::move(cache);
  inst.labels = std::move(labels);
  validate_instance(inst);
  return inst;
}

RoutingInstance with_models(const RoutingInstance& base, std::vector<Model> models) {
  return make_instance(base.phase, base.tvg.satellite_count(), base.tvg.snapshot_count(),
                       base.tvg.intra_arc_list(), std::move(models), base.variant, base.cache,
                       base.labels);
}

void validate_instance(const RoutingInstance& inst) {
  const int sats = inst.tvg.satellite_count();
  const int snaps = inst.tvg.snapshot_count();
  if (sats < 1 || snaps < 1) throw InvariantViolation("graph: empty time-varying graph");
  if (inst.models.empty() || inst.models.size() > 2) {
    throw InvariantViolation("models: expected 1 or 2 models, got " +
                             std::to_string(inst.models.size()));
  }
  std::map<int, Rational> weight_of;
  for (std::size_t m = 0; m < inst.models.size(); ++m) {
    const auto& model = inst.models[m];
    const std::string where = "models[" + std::to_string(m) + "]";
    if (sgn(model.size) <= 0) throw InvariantViolation(where + ".size: must be positive");
    if (model.server < 1 || model.server > sats) {
      throw InvariantViolation(where + ".server: satellite " + std::to_string(model.server) +
                               " out of range");
    }
    std::set<int> seen;
    for (const auto& c : model.clients) {
      const std::string cw = where + ".clients[" + std::to_string(c.id) + "]";
      if (c.id < 1 || c.id > sats) throw InvariantViolation(cw + ".id: out of range");
      if (!seen.insert(c.id).second) throw InvariantViolation(cw + ": duplicate client");
      if (sgn(c.weight) < 0) throw InvariantViolation(cw + ".weight: negative");
      if (sgn(c.utility) < 0) throw InvariantViolation(cw + ".utility: negative");
      if (c.start < 1 || c.start > snaps) {
        throw InvariantViolation(cw + ".start: " + std::to_string(c.start) +
                                 " outside 1.." + std::to_string(snaps));
      }
      const auto [it, fresh] = weight_of.emplace(c.id, c.weight);
      if (!fresh && it->second != c.weight) {
        throw InvariantViolation(cw + ".weight: differs between models");
      }
    }
  }
  const auto& v = inst.variant;
  if (v.multicast && v.flow != FlowKind::kUnsplittable) {
    throw InvariantViolation("variant: multicast requires unsplittable flow");
  }
  if (v.multicast && inst.phase != Phase::kDownload) {
    throw InvariantViolation("variant: multicast is a download-only variant");
  }
  if (v.client_selection && inst.phase != Phase::kUpload) {
    throw InvariantViolation("variant: client selection is an upload-only variant");
  }
  if (!(inst.tvg.cache_policy() == cache_policy_for(inst.cache, inst.models))) {
    throw InvariantViolation("cache_capacity: graph cache arcs disagree with the instance");
  }
}

std::string variant_name(Phase phase, const Variant& v, int model_count) {
  const std::string n = std::to_string(model_count);
  if (phase == Phase::kDownload) {
    const std::string obj = v.objective == Objective::kWeightedSum ? "WS" : "MM";
    if (v.multicast) return "mul-" + n + "-" + obj;
    return n + (v.flow == FlowKind::kUnsplittable ? "-UF-" : "-SF-") + obj;
  }
  return n + (v.flow == FlowKind::kUnsplittable ? "-UF-" : "-SF-") +
         (v.client_selection ? "CS" : "NCS");
}

std::string variant_name(const RoutingInstance& inst) {
  return variant_name(inst.phase, inst.variant, inst.model_count());
}

ParsedVariant parse_variant_name(std::string_view name) {
  const auto parts = split_dash(name);
  auto bad = [&]() { return InvalidArgument("unknown variant '" + std::string(name) + "'"); };
  auto count = [&](const std::string& s) {
    if (s == "1") return 1;
    if (s == "2") return 2;
    throw bad();
  };
  if (parts.size() != 3) throw bad();
  ParsedVariant out{Phase::kDownload, Variant{}, 0};
  if (parts[0] == "mul") {
    out.model_count = count(parts[1]);
    out.variant.multicast = true;
    if (parts[2] == "WS") out.variant.objective = Objective::kWeightedSum;
    else if (parts[2] == "MM") out.variant.objective = Objective::kMinMax;
    else throw bad();
    return out;
  }
  out.model_count = count(parts[0]);
  if (parts[1] == "UF") out.variant.flow = FlowKind::kUnsplittable;
  else if (parts[1] == "SF") out.variant.flow = FlowKind::kSplittable;
  else throw bad();
  if (parts[2] == "WS" || parts[2] == "MM") {
    out.variant.objective = parts[2] == "WS" ? Objective::kWeightedSum : Objective::kMinMax;
  } else if (parts[2] == "CS" || parts[2] == "NCS") {
    out.phase = Phase::kUpload;
    out.variant.client_selection = parts[2] == "CS";
  } else {
    throw bad();
  }
  return out;
}

bool is_polynomial_variant(Phase phase, const Variant& v, int model_count) {
  const bool uf = v.flow == FlowKind::kUnsplittable;
  const bool ws = v.objective == Objective::kWeightedSum;
  if (phase == Phase::kDownload) {
    if (v.multicast) return model_count == 1;
    if (model_count == 1) return uf || !ws;
    return !uf && !ws;
  }
  if (v.client_selection) return model_count == 1 && uf;
  return model_count == 1 || !uf;
}

std::map<int, int> completion_snapshots(const RoutingSolution& solution) {
  std::map<int, int> out;
  for (const auto& a : solution.arrivals) {
    auto [it, fresh] = out.emplace(a.client, a.snapshot);
    if (!fresh) it->second = std::max(it->second, a.snapshot);
  }
  return out;
}

Rational download_objective(const RoutingInstance& inst, Objective objective,
                            const std::vector<ClientArrival>& arrivals) {
  std::map<int, int> k;
  for (const auto& a : arrivals) {
    auto [it, fresh] = k.emplace(a.client, a.snapshot);
    if (!fresh) it->second = std::max(it->second, a.snapshot);
  }
  std::map<int, Rational> weight;
  for (const auto& m : inst.models) {
    for (const auto& c : m.clients) weight.emplace(c.id, c.weight);
  }
  Rational value = 0;
  for (const auto& [client, snap] : k) {
    if (objective == Objective::kWeightedSum) {
      value += weight.at(client) * snap;
    } else if (value < snap) {
      value = snap;
    }
  }
  return value;
}

const char* to_string(Phase phase) { return phase == Phase::kDownload ? "download" : "upload"; }

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kFeasible: return "feasible";
    case SolveStatus::kInfeasible: return "infeasible";
  }
  return "?";
}

const char* to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::kPolynomial: return "polynomial";
    case SolverKind::kExactSearch: return "exact-search";
    case SolverKind::kOracle: return "oracle";
  }
  return "?";
}

}  // namespace satroute
