#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "satroute/flow_network.hpp"
#include "satroute/rational.hpp"

namespace satroute {

/// Satellite `satellite` in snapshot `snapshot` (both 1-based), or the
/// auxiliary sink a_c of client `satellite` (snapshot 0).
struct SatNode {
  enum class Kind { kSatellite, kAuxSink };

  Kind kind = Kind::kSatellite;
  int satellite = 0;
  int snapshot = 0;

  static SatNode at(int satellite, int snapshot) { return {Kind::kSatellite, satellite, snapshot}; }
  static SatNode aux_sink(int client) { return {Kind::kAuxSink, client, 0}; }

  bool is_aux_sink() const { return kind == Kind::kAuxSink; }

  friend auto operator<=>(const SatNode&, const SatNode&) = default;
};

std::string to_string(const SatNode& node);

struct IntraArc {
  SatNode from;
  SatNode to;
  Rational capacity;
};

struct TvgArc {
  SatNode from;
  SatNode to;
  Rational capacity;
  bool cache = false;
};

/// Capacity of the inter-snapshot arcs i§k -> i§(k+1). `capacity` applies to
/// every satellite unless overridden.
struct CachePolicy {
  Rational capacity;
  std::map<int, Rational> per_satellite;

  const Rational& for_satellite(int satellite) const;
  friend bool operator==(const CachePolicy&, const CachePolicy&) = default;
};

/// Snapshot-indexed directed graph. Immutable after construction. Intra arcs
/// keep their ingestion order; cache arcs follow, ordered by (satellite,
/// snapshot). Parallel intra arcs are merged by summing capacities.
class TimeVaryingGraph {
 public:
  TimeVaryingGraph() = default;
  TimeVaryingGraph(int satellites, int snapshots, std::vector<IntraArc> intra_arcs,
                   CachePolicy cache);

  int satellite_count() const { return satellites_; }
  int snapshot_count() const { return snapshots_; }
  int node_count() const { return satellites_ * snapshots_; }

  bool contains(const SatNode& node) const;
  /// Dense index (snapshot-major). Throws InvalidArgument for foreign nodes.
  int index(const SatNode& node) const;
  SatNode node(int index) const;

  const std::vector<TvgArc>& arcs() const { return arcs_; }
  std::size_t intra_arc_count() const { return intra_count_; }
  std::size_t cache_arc_count() const { return arcs_.size() - intra_count_; }
  std::span<const TvgArc> intra_arcs() const { return {arcs_.data(), intra_count_}; }
  std::span<const TvgArc> cache_arcs() const {
    return {arcs_.data() + intra_count_, arcs_.size() - intra_count_};
  }
  /// Indices into arcs() of arcs leaving `node_index`, in arc order.
  const std::vector<std::size_t>& out_arcs(int node_index) const { return out_[node_index]; }
  const std::vector<std::size_t>& in_arcs(int node_index) const { return in_[node_index]; }
  std::optional<std::size_t> find_arc(const SatNode& from, const SatNode& to) const;

  const CachePolicy& cache_policy() const { return cache_; }
  std::vector<IntraArc> intra_arc_list() const;

  friend bool operator==(const TimeVaryingGraph& a, const TimeVaryingGraph& b);

 private:
  int satellites_ = 0;
  int snapshots_ = 0;
  CachePolicy cache_;
  std::vector<TvgArc> arcs_;
  std::size_t intra_count_ = 0;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::map<std::pair<int, int>, std::size_t> arc_lookup_;
};

/// Bidirectional link (i, j) in snapshot k with capacities i->j and j->i.
struct LinkSpec {
  int i = 0;
  int j = 0;
  int snapshot = 0;
  Rational capacity_ij;
  Rational capacity_ji;
};

/// Builds a TVG from undirected link declarations. Cache arcs get
/// `model_demand_total`. Rejects duplicate directed arcs.
TimeVaryingGraph build_tvg(int satellites, int snapshots, std::span<const LinkSpec> links,
                           const Rational& model_demand_total);

/// Prefix graph of snapshots 1..k.
TimeVaryingGraph truncate(const TimeVaryingGraph& tvg, int k);

/// Nodes forward-reachable from `source` through intra arcs with capacity >=
/// min_capacity; cache arcs are always usable.
std::set<SatNode> reachable_set(const TimeVaryingGraph& tvg, const SatNode& source,
                                const Rational& min_capacity);
/// Same as reachable_set, as a membership mask over dense node indices.
std::vector<bool> reachable_mask(const TimeVaryingGraph& tvg, const SatNode& source,
                                 const Rational& min_capacity);

/// FlowNetwork view with capacities floor(p_uv / q); node i is tvg.node(i),
/// arc i is tvg.arcs()[i]; all costs zero.
FlowNetwork normalize_capacities(const TimeVaryingGraph& tvg, const Rational& q);

/// FlowNetwork view with the exact capacities; same numbering as
/// normalize_capacities.
FlowNetwork as_flow_network(const TimeVaryingGraph& tvg);

struct ClientWeight {
  int client = 0;
  Rational weight;
};

struct EntryArc {
  int client_position = 0;  // index into ExpandedGraph::clients()
  int snapshot = 0;
  Rational cost;
};

/// TVG plus one auxiliary sink a_c per client and entry arcs c§k -> a_c of
/// cost k * w_c for k = 1..K.
class ExpandedGraph {
 public:
  ExpandedGraph(TimeVaryingGraph base, std::vector<ClientWeight> clients, Rational entry_capacity);

  const TimeVaryingGraph& base() const { return base_; }
  const std::vector<ClientWeight>& clients() const { return clients_; }
  const std::vector<EntryArc>& entry_arcs() const { return entry_arcs_; }
  const Rational& entry_capacity() const { return entry_capacity_; }

  int node_count() const { return base_.node_count() + static_cast<int>(clients_.size()); }
  std::size_t arc_count() const { return base_.arcs().size() + entry_arcs_.size(); }
  /// Dense index of a_c for the client at `position`.
  int aux_index(int position) const { return base_.node_count() + position; }

  /// Flow network: base arcs (capacities from `base_view`, cost 0) followed by
  /// the entry arcs. `base_view` must number nodes/arcs like the TVG.
  FlowNetwork flow_network(const FlowNetwork& base_view) const;

 private:
  TimeVaryingGraph base_;
  std::vector<ClientWeight> clients_;
  Rational entry_capacity_;
  std::vector<EntryArc> entry_arcs_;
};

ExpandedGraph expand_with_client_sinks(const TimeVaryingGraph& tvg,
                                       std::span<const ClientWeight> clients,
                                       const Rational& entry_capacity);

}  // namespace satroute
