#include "satroute/tvg.hpp"

#include <deque>
#include <tuple>
#include <utility>

#include "satroute/errors.hpp"

namespace satroute {

std::string to_string(const SatNode& node) {
  if (node.is_aux_sink()) return "a" + std::to_string(node.satellite);
  return std::to_string(node.satellite) + "§" + std::to_string(node.snapshot);
}

const Rational& CachePolicy::for_satellite(int satellite) const {
  const auto it = per_satellite.find(satellite);
  return it == per_satellite.end() ? capacity : it->second;
}

TimeVaryingGraph::TimeVaryingGraph(int satellites, int snapshots,
                                   std::vector<IntraArc> intra_arcs, CachePolicy cache)
    : satellites_(satellites), snapshots_(snapshots), cache_(std::move(cache)) {
  if (satellites < 1) throw InvalidArgument("a TVG needs at least one satellite");
  if (snapshots < 1) throw InvalidArgument("a TVG needs at least one snapshot");
  if (sgn(cache_.capacity) < 0) throw InvalidArgument("negative cache capacity");
  for (const auto& [sat, cap] : cache_.per_satellite) {
    if (sat < 1 || sat > satellites) throw InvalidArgument("cache override for unknown satellite");
    if (sgn(cap) < 0) throw InvalidArgument("negative cache capacity");
  }

  out_.resize(static_cast<std::size_t>(node_count()));
  in_.resize(static_cast<std::size_t>(node_count()));

  auto push = [this](TvgArc arc) {
    const int u = index(arc.from);
    const int v = index(arc.to);
    const std::size_t id = arcs_.size();
    arc_lookup_.emplace(std::make_pair(u, v), id);
    out_[u].push_back(id);
    in_[v].push_back(id);
    arcs_.push_back(std::move(arc));
  };

  for (auto& arc : intra_arcs) {
    if (!contains(arc.from) || !contains(arc.to)) {
      throw InvalidArgument("arc " + to_string(arc.from) + "->" + to_string(arc.to) +
                            " references a node outside the graph");
    }
    if (arc.from.snapshot != arc.to.snapshot) {
      throw InvalidArgument("intra arc " + to_string(arc.from) + "->" + to_string(arc.to) +
                            " spans two snapshots");
    }
    if (arc.from == arc.to) throw InvalidArgument("self-loop at " + to_string(arc.from));
    if (sgn(arc.capacity) < 0) throw InvalidArgument("negative capacity on " + to_string(arc.from));
    const auto key = std::make_pair(index(arc.from), index(arc.to));
    if (const auto it = arc_lookup_.find(key); it != arc_lookup_.end()) {
      arcs_[it->second].capacity += arc.capacity;
      continue;
    }
    push(TvgArc{arc.from, arc.to, std::move(arc.capacity), false});
  }
  intra_count_ = arcs_.size();

  for (int i = 1; i <= satellites_; ++i) {
    for (int k = 1; k < snapshots_; ++k) {
      push(TvgArc{SatNode::at(i, k), SatNode::at(i, k + 1), cache_.for_satellite(i), true});
    }
  }
}

bool TimeVaryingGraph::contains(const SatNode& node) const {
  return !node.is_aux_sink() && node.satellite >= 1 && node.satellite <= satellites_ &&
         node.snapshot >= 1 && node.snapshot <= snapshots_;
}

int TimeVaryingGraph::index(const SatNode& node) const {
  if (!contains(node)) throw InvalidArgument("node " + to_string(node) + " is not in the graph");
  return (node.snapshot - 1) * satellites_ + (node.satellite - 1);
}

SatNode TimeVaryingGraph::node(int index) const {
  if (index < 0 || index >= node_count()) throw InvalidArgument("node index out of range");
  return SatNode::at(index % satellites_ + 1, index / satellites_ + 1);
}

std::optional<std::size_t> TimeVaryingGraph::find_arc(const SatNode& from,
                                                      const SatNode& to) const {
  if (!contains(from) || !contains(to)) return std::nullopt;
  const auto it = arc_lookup_.find({index(from), index(to)});
  if (it == arc_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<IntraArc> TimeVaryingGraph::intra_arc_list() const {
  std::vector<IntraArc> out;
  out.reserve(intra_count_);
  for (const auto& arc : intra_arcs()) out.push_back(IntraArc{arc.from, arc.to, arc.capacity});
  return out;
}

bool operator==(const TimeVaryingGraph& a, const TimeVaryingGraph& b) {
  if (a.satellites_ != b.satellites_ || a.snapshots_ != b.snapshots_ || !(a.cache_ == b.cache_) ||
      a.arcs_.size() != b.arcs_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arcs_.size(); ++i) {
    const auto& x = a.arcs_[i];
    const auto& y = b.arcs_[i];
    if (x.from != y.from || x.to != y.to || x.capacity != y.capacity || x.cache != y.cache) {
      return false;
    }
  }
  return true;
}

TimeVaryingGraph build_tvg(int satellites, int snapshots, std::span<const LinkSpec> links,
                           const Rational& model_demand_total) {
  if (satellites < 1 || snapshots < 1) throw InvalidArgument("counts must be positive");
  std::vector<IntraArc> arcs;
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& link : links) {
    if (link.i < 1 || link.i > satellites || link.j < 1 || link.j > satellites ||
        link.snapshot < 1 || link.snapshot > snapshots) {
      throw InvalidArgument("link (" + std::to_string(link.i) + "," + std::to_string(link.j) +
                            "," + std::to_string(link.snapshot) + ") out of bounds");
    }
    if (link.i == link.j) throw InvalidArgument("self-loop link");
    if (sgn(link.capacity_ij) < 0 || sgn(link.capacity_ji) < 0) {
      throw InvalidArgument("negative link capacity");
    }
    if (!seen.insert({link.i, link.j, link.snapshot}).second ||
        !seen.insert({link.j, link.i, link.snapshot}).second) {
      throw InvalidArgument("duplicate arc between satellites " + std::to_string(link.i) +
                            " and " + std::to_string(link.j) + " in snapshot " +
                            std::to_string(link.snapshot));
    }
    arcs.push_back({SatNode::at(link.i, link.snapshot), SatNode::at(link.j, link.snapshot),
                    link.capacity_ij});
    arcs.push_back({SatNode::at(link.j, link.snapshot), SatNode::at(link.i, link.snapshot),
                    link.capacity_ji});
  }
  return TimeVaryingGraph(satellites, snapshots, std::move(arcs), CachePolicy{model_demand_total, {}});
}

TimeVaryingGraph truncate(const TimeVaryingGraph& tvg, int k) {
  if (k < 1 || k > tvg.snapshot_count()) {
    throw InvalidArgument("truncation snapshot " + std::to_string(k) + " out of range");
  }
  std::vector<IntraArc> arcs;
  for (const auto& arc : tvg.intra_arcs()) {
    if (arc.from.snapshot <= k) arcs.push_back({arc.from, arc.to, arc.capacity});
  }
  return TimeVaryingGraph(tvg.satellite_count(), k, std::move(arcs), tvg.cache_policy());
}

std::vector<bool> reachable_mask(const TimeVaryingGraph& tvg, const SatNode& source,
                                 const Rational& min_capacity) {
  std::vector<bool> seen(static_cast<std::size_t>(tvg.node_count()), false);
  const int start = tvg.index(source);
  std::deque<int> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (std::size_t a : tvg.out_arcs(u)) {
      const auto& arc = tvg.arcs()[a];
      if (!arc.cache && arc.capacity < min_capacity) continue;
      const int v = tvg.index(arc.to);
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

std::set<SatNode> reachable_set(const TimeVaryingGraph& tvg, const SatNode& source,
                                const Rational& min_capacity) {
  const auto mask = reachable_mask(tvg, source, min_capacity);
  std::set<SatNode> out;
  for (int i = 0; i < tvg.node_count(); ++i) {
    if (mask[i]) out.insert(tvg.node(i));
  }
  return out;
}

FlowNetwork normalize_capacities(const TimeVaryingGraph& tvg, const Rational& q) {
  if (sgn(q) <= 0) throw InvalidArgument("model size must be positive to normalize capacities");
  FlowNetwork net(tvg.node_count());
  for (const auto& arc : tvg.arcs()) {
    net.add_arc(tvg.index(arc.from), tvg.index(arc.to), Rational(floor_div(arc.capacity, q)));
  }
  return net;
}

FlowNetwork as_flow_network(const TimeVaryingGraph& tvg) {
  FlowNetwork net(tvg.node_count());
  for (const auto& arc : tvg.arcs()) net.add_arc(tvg.index(arc.from), tvg.index(arc.to), arc.capacity);
  return net;
}

ExpandedGraph::ExpandedGraph(TimeVaryingGraph base, std::vector<ClientWeight> clients,
                             Rational entry_capacity)
    : base_(std::move(base)), clients_(std::move(clients)), entry_capacity_(std::move(entry_capacity)) {
  if (sgn(entry_capacity_) < 0) throw InvalidArgument("negative entry capacity");
  std::set<int> ids;
  for (std::size_t p = 0; p < clients_.size(); ++p) {
    const auto& c = clients_[p];
    if (c.client < 1 || c.client > base_.satellite_count()) {
      throw InvalidArgument("client " + std::to_string(c.client) + " is not a satellite");
    }
    if (!ids.insert(c.client).second) {
      throw InvalidArgument("client " + std::to_string(c.client) + " listed twice");
    }
    for (int k = 1; k <= base_.snapshot_count(); ++k) {
      entry_arcs_.push_back(EntryArc{static_cast<int>(p), k, Rational(k) * c.weight});
    }
  }
}

FlowNetwork ExpandedGraph::flow_network(const FlowNetwork& base_view) const {
  if (base_view.node_count() != base_.node_count() || base_view.arc_count() != base_.arcs().size()) {
    throw InvalidArgument("base view does not match the expanded graph's TVG");
  }
  FlowNetwork net(node_count());
  for (const auto& arc : base_view.arcs()) net.add_arc(arc.from, arc.to, arc.capacity, 0);
  for (const auto& entry : entry_arcs_) {
    const int c = clients_[entry.client_position].client;
    net.add_arc(base_.index(SatNode::at(c, entry.snapshot)), aux_index(entry.client_position),
                entry_capacity_, entry.cost);
  }
  return net;
}

ExpandedGraph expand_with_client_sinks(const TimeVaryingGraph& tvg,
                                       std::span<const ClientWeight> clients,
                                       const Rational& entry_capacity) {
  return ExpandedGraph(tvg, {clients.begin(), clients.end()}, entry_capacity);
}

}  // namespace satroute
