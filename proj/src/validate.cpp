#include "satroute/validate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace satroute {

namespace {

class Checker {
 public:
  Checker(const RoutingInstance& inst, const RoutingSolution& sol)
      : inst_(inst), sol_(sol), load_(inst.tvg.arcs().size()) {}

  ValidationReport run() {
    if (sol_.phase != inst_.phase) fail("solution phase does not match the instance");
    if (sol_.status == SolveStatus::kInfeasible) {
      if (!sol_.paths.empty() || !sol_.trees.empty()) fail("infeasible verdict carries a witness");
      return std::move(report_);
    }
    if (inst_.phase == Phase::kDownload) {
      if (inst_.variant.multicast) check_trees();
      else check_download_paths();
    } else {
      check_upload();
    }
    check_loads();
    return std::move(report_);
  }

 private:
  void fail(std::string msg) {
    report_.ok = false;
    report_.problems.push_back(std::move(msg));
  }

  std::string unit_name(int m, int c) const {
    return "model " + std::to_string(m) + " client " + std::to_string(c);
  }

  // Adds `amount` to every arc of the node sequence. Returns false if some
  // hop is not an arc.
  bool charge(const std::vector<SatNode>& nodes, const Rational& amount, const std::string& who) {
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      if (!inst_.tvg.contains(nodes[i]) || !inst_.tvg.contains(nodes[i + 1])) {
        fail(who + ": path leaves the graph");
        return false;
      }
      const auto arc = inst_.tvg.find_arc(nodes[i], nodes[i + 1]);
      if (!arc) {
        fail(who + ": no arc " + to_string(nodes[i]) + "->" + to_string(nodes[i + 1]));
        return false;
      }
      load_[*arc] += amount;
    }
    return true;
  }

  void check_loads() {
    const auto& arcs = inst_.tvg.arcs();
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      if (load_[a] > arcs[a].capacity) {
        fail("arc " + to_string(arcs[a].from) + "->" + to_string(arcs[a].to) + " carries " +
             to_string(load_[a]) + " > capacity " + to_string(arcs[a].capacity));
      }
    }
  }

  const std::vector<PathAssignment> paths_of(int m, int c) const {
    std::vector<PathAssignment> out;
    for (const auto& p : sol_.paths) {
      if (p.model == m && p.client == c) out.push_back(p);
    }
    return out;
  }

  bool known_unit(int m, int c) const {
    if (m < 0 || m >= inst_.model_count()) return false;
    const auto& cl = inst_.models[m].clients;
    return std::any_of(cl.begin(), cl.end(), [c](const Client& x) { return x.id == c; });
  }

  void check_amounts(int m, int c, const std::vector<PathAssignment>& paths) {
    const auto& model = inst_.models[m];
    Rational total = 0;
    for (const auto& p : paths) {
      if (sgn(p.amount) <= 0) fail(unit_name(m, c) + ": non-positive path amount");
      total += p.amount;
    }
    if (total != model.size) {
      fail(unit_name(m, c) + ": receives " + to_string(total) + " instead of " +
           to_string(model.size));
    }
    if (inst_.variant.flow == FlowKind::kUnsplittable && paths.size() != 1) {
      fail(unit_name(m, c) + ": unsplittable flow uses " + std::to_string(paths.size()) + " paths");
    }
  }

  void check_download_paths() {
    for (const auto& p : sol_.paths) {
      if (!known_unit(p.model, p.client)) fail("path for unknown " + unit_name(p.model, p.client));
    }
    std::vector<ClientArrival> recomputed;
    for (int m = 0; m < inst_.model_count(); ++m) {
      const auto& model = inst_.models[m];
      for (const auto& c : model.clients) {
        const auto paths = paths_of(m, c.id);
        check_amounts(m, c.id, paths);
        int arrival = 0;
        for (const auto& p : paths) {
          const std::string who = unit_name(m, c.id);
          if (p.nodes.empty() || p.nodes.front() != SatNode::at(model.server, 1)) {
            fail(who + ": path does not start at the server in snapshot 1");
            continue;
          }
          if (p.nodes.back().satellite != c.id) {
            fail(who + ": path does not end at the client");
            continue;
          }
          if (!charge(p.nodes, p.amount, who)) continue;
          arrival = std::max(arrival, p.nodes.back().snapshot);
        }
        recomputed.push_back({m, c.id, arrival});
      }
    }
    check_arrivals(recomputed);
  }

  void check_trees() {
    std::vector<ClientArrival> recomputed;
    std::map<std::size_t, std::set<int>> users;
    for (int m = 0; m < inst_.model_count(); ++m) {
      const auto& model = inst_.models[m];
      const SatNode root = SatNode::at(model.server, 1);
      std::map<SatNode, SatNode> parent;
      bool ok = true;
      for (const auto& t : sol_.trees) {
        if (t.model != m) continue;
        for (const auto& [u, v] : t.arcs) {
          const auto arc = (inst_.tvg.contains(u) && inst_.tvg.contains(v))
                               ? inst_.tvg.find_arc(u, v)
                               : std::nullopt;
          if (!arc) {
            fail("model " + std::to_string(m) + ": tree arc " + to_string(u) + "->" +
                 to_string(v) + " is not in the graph");
            ok = false;
            continue;
          }
          if (v == root || !parent.emplace(v, u).second) {
            fail("model " + std::to_string(m) + ": node " + to_string(v) + " has two parents");
            ok = false;
          }
          users[*arc].insert(m);
        }
      }
      // every tree node must trace back to the root without cycling
      std::set<SatNode> members{root};
      for (const auto& [v, u] : parent) {
        SatNode cur = v;
        std::size_t steps = 0;
        while (cur != root && steps <= parent.size()) {
          const auto it = parent.find(cur);
          if (it == parent.end()) break;
          cur = it->second;
          ++steps;
        }
        if (cur != root) {
          fail("model " + std::to_string(m) + ": node " + to_string(v) + " is cut off from the root");
          ok = false;
        }
        members.insert(v);
      }
      if (!ok) continue;
      for (const auto& c : model.clients) {
        int arrival = 0;
        for (const auto& n : members) {
          if (n.satellite == c.id && (arrival == 0 || n.snapshot < arrival)) arrival = n.snapshot;
        }
        if (arrival == 0) fail(unit_name(m, c.id) + ": not covered by the tree");
        recomputed.push_back({m, c.id, arrival});
      }
    }
    for (const auto& [arc, models] : users) {
      if (inst_.tvg.arcs()[arc].cache) continue;  // caching is never the bottleneck for one copy
      for (int m : models) load_[arc] += inst_.models[m].size;
    }
    check_arrivals(recomputed);
  }

  void check_arrivals(std::vector<ClientArrival> recomputed) {
    auto key = [](const ClientArrival& a) { return std::make_pair(a.model, a.client); };
    auto less = [&](const ClientArrival& a, const ClientArrival& b) { return key(a) < key(b); };
    std::vector<ClientArrival> declared = sol_.arrivals;
    std::sort(declared.begin(), declared.end(), less);
    std::sort(recomputed.begin(), recomputed.end(), less);
    if (declared != recomputed) fail("declared arrival snapshots do not match the witness");
    const Rational value = download_objective(inst_, inst_.variant.objective, recomputed);
    if (value != sol_.objective) {
      fail("objective " + to_string(sol_.objective) + " but witness gives " + to_string(value));
    }
  }

  void check_upload() {
    std::set<std::pair<int, int>> routed;
    if (inst_.variant.client_selection) {
      Rational utility = 0;
      for (const auto& s : sol_.selected) {
        if (!known_unit(s.model, s.client)) {
          fail("selected unknown " + unit_name(s.model, s.client));
          continue;
        }
        if (!routed.insert({s.model, s.client}).second) fail("client selected twice");
        for (const auto& c : inst_.models[s.model].clients) {
          if (c.id == s.client) utility += c.utility;
        }
      }
      if (utility != sol_.objective) {
        fail("objective " + to_string(sol_.objective) + " but selection is worth " +
             to_string(utility));
      }
    } else {
      for (int m = 0; m < inst_.model_count(); ++m) {
        for (const auto& c : inst_.models[m].clients) routed.insert({m, c.id});
      }
      if (sgn(sol_.objective) != 0) fail("feasibility verdict carries a nonzero objective");
    }
    for (const auto& p : sol_.paths) {
      if (!routed.count({p.model, p.client})) {
        fail("path for unselected " + unit_name(p.model, p.client));
      }
    }
    const int deadline = inst_.tvg.snapshot_count();
    for (const auto& [m, cid] : routed) {
      const auto& model = inst_.models[m];
      const Client* client = nullptr;
      for (const auto& c : model.clients) {
        if (c.id == cid) client = &c;
      }
      const auto paths = paths_of(m, cid);
      check_amounts(m, cid, paths);
      for (const auto& p : paths) {
        const std::string who = unit_name(m, cid);
        if (p.nodes.empty() || p.nodes.front().satellite != cid) {
          fail(who + ": path does not start at the client");
          continue;
        }
        if (p.nodes.front().snapshot < client->start) {
          fail(who + ": departs before its start snapshot");
          continue;
        }
        if (p.nodes.back().satellite != model.server || p.nodes.back().snapshot > deadline) {
          fail(who + ": path does not reach the server by the deadline");
          continue;
        }
        charge(p.nodes, p.amount, who);
      }
    }
  }

  const RoutingInstance& inst_;
  const RoutingSolution& sol_;
  std::vector<Rational> load_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_solution(const RoutingInstance& instance, const RoutingSolution& solution) {
  return Checker(instance, solution).run();
}

}  // namespace satroute
