#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satroute/rational.hpp"
#include "satroute/tvg.hpp"

namespace satroute {

enum class Phase { kDownload, kUpload };
enum class FlowKind { kUnsplittable, kSplittable };
enum class Objective { kWeightedSum, kMinMax };

/// Problem flags. For downloads `objective` applies and `client_selection` is
/// false; for uploads `objective` is ignored.
struct Variant {
  FlowKind flow = FlowKind::kUnsplittable;
  Objective objective = Objective::kWeightedSum;
  bool multicast = false;
  bool client_selection = false;

  friend bool operator==(const Variant&, const Variant&) = default;
};

struct Client {
  int id = 0;
  Rational weight = 1;
  Rational utility = 1;
  int start = 1;  // kappa_c, first snapshot the upload may use

  friend bool operator==(const Client&, const Client&) = default;
};

struct Model {
  Rational size;
  int server = 0;
  std::vector<Client> clients;

  friend bool operator==(const Model&, const Model&) = default;
};

/// Cache capacity in the instance file: nullopt means "auto" (total demand).
struct CacheSetting {
  std::optional<Rational> capacity;
  std::map<int, Rational> per_satellite;

  friend bool operator==(const CacheSetting&, const CacheSetting&) = default;
};

struct RoutingInstance {
  Phase phase = Phase::kDownload;
  TimeVaryingGraph tvg;
  std::vector<Model> models;
  Variant variant;
  CacheSetting cache;
  std::map<int, std::string> labels;  // optional satellite names

  int model_count() const { return static_cast<int>(models.size()); }
  bool separate_servers() const { return models.size() == 2 && models[0].server != models[1].server; }
  std::string label(int satellite) const;

  friend bool operator==(const RoutingInstance&, const RoutingInstance&) = default;
};

/// q|C| for one model, q1|C1| + q2|C2| for two.
Rational total_demand(const std::vector<Model>& models);

/// Builds the TVG (cache arcs from `cache`, auto = total demand) and validates.
RoutingInstance make_instance(Phase phase, int satellites, int snapshots,
                              std::vector<IntraArc> arcs, std::vector<Model> models,
                              Variant variant, CacheSetting cache = {},
                              std::map<int, std::string> labels = {});

/// Rebuilds the TVG with a different variant/models while keeping the arcs.
RoutingInstance with_models(const RoutingInstance& base, std::vector<Model> models);

/// Throws InvariantViolation naming the offending field.
void validate_instance(const RoutingInstance& instance);

/// Canonical variant names: "1-UF-WS", "mul-2-MM", "2-SF-CS", "1-UF-NCS", ...
std::string variant_name(Phase phase, const Variant& variant, int model_count);
std::string variant_name(const RoutingInstance& instance);

struct ParsedVariant {
  Phase phase;
  Variant variant;
  int model_count;
};
/// Inverse of variant_name; throws InvalidArgument for unknown names.
ParsedVariant parse_variant_name(std::string_view name);

/// Whether the variant admits one of the polynomial constructions.
bool is_polynomial_variant(Phase phase, const Variant& variant, int model_count);

// ---------------------------------------------------------------- solutions

enum class SolveStatus { kOptimal, kFeasible, kInfeasible };
enum class SolverKind { kPolynomial, kExactSearch, kOracle };

struct PathAssignment {
  int model = 0;
  int client = 0;
  Rational amount;
  std::vector<SatNode> nodes;

  friend bool operator==(const PathAssignment&, const PathAssignment&) = default;
};

struct ClientArrival {
  int model = 0;
  int client = 0;
  int snapshot = 0;

  friend bool operator==(const ClientArrival&, const ClientArrival&) = default;
};

struct TreeAssignment {
  int model = 0;
  std::vector<std::pair<SatNode, SatNode>> arcs;

  friend bool operator==(const TreeAssignment&, const TreeAssignment&) = default;
};

struct Selection {
  int model = 0;
  int client = 0;

  friend auto operator<=>(const Selection&, const Selection&) = default;
};

struct RoutingSolution {
  Phase phase = Phase::kDownload;
  std::string variant;
  SolveStatus status = SolveStatus::kInfeasible;
  SolverKind solver = SolverKind::kPolynomial;
  /// WS or MM value for downloads, total utility for CS uploads, 0 otherwise.
  Rational objective = 0;
  std::vector<ClientArrival> arrivals;
  std::vector<PathAssignment> paths;
  std::vector<TreeAssignment> trees;
  std::vector<Selection> selected;

  bool solved() const { return status != SolveStatus::kInfeasible; }

  friend bool operator==(const RoutingSolution&, const RoutingSolution&) = default;
};

/// k_c per client id: the latest arrival over the models the client is in.
std::map<int, int> completion_snapshots(const RoutingSolution& solution);

/// WS or MM value of per-(model, client) arrivals under `instance`.
Rational download_objective(const RoutingInstance& instance, Objective objective,
                            const std::vector<ClientArrival>& arrivals);

const char* to_string(Phase phase);
const char* to_string(SolveStatus status);
const char* to_string(SolverKind kind);

}  // namespace satroute
