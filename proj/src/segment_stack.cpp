#include "satroute/segment_stack.hpp"

#include <map>
#include <optional>
#include <set>

#include "satroute/errors.hpp"

namespace satroute {
namespace {

std::string name_of(int satellite, const std::map<int, std::string>& labels) {
  const auto it = labels.find(satellite);
  return it == labels.end() ? std::to_string(satellite) : it->second;
}

void append(std::string& out, const SegmentStack& stack) {
  out += "[";
  for (std::size_t i = 0; i < stack.size(); ++i) {
    if (i) out += ", ";
    if (stack[i].kind == SegmentItem::Kind::kBranch) {
      append(out, stack[i].branch);
    } else {
      out += stack[i].label;
    }
  }
  out += "]";
}

class TreeRenderer {
 public:
  TreeRenderer(const TreeAssignment& tree, const std::map<int, std::string>& labels)
      : labels_(labels) {
    std::set<SatNode> has_parent;
    for (const auto& [u, v] : tree.arcs) {
      children_[u].push_back(v);
      if (!has_parent.insert(v).second) {
        throw InvalidArgument("tree node " + to_string(v) + " has two parents");
      }
      order_.push_back(u);
    }
    for (const auto& u : order_) {
      if (!has_parent.count(u)) {
        if (root_ && *root_ != u) throw InvalidArgument("tree has more than one root");
        root_ = u;
      }
    }
    if (!tree.arcs.empty() && !root_) throw InvalidArgument("tree has no root");
  }

  SegmentStack render() const {
    SegmentStack out;
    if (root_) walk(*root_, out, 0);
    return out;
  }

 private:
  // Children reached through intra arcs, looking through cache copies.
  void forward_children(const SatNode& u, std::vector<SatNode>& out, int depth) const {
    if (depth > 100000) throw InvalidArgument("tree contains a cycle");
    const auto it = children_.find(u);
    if (it == children_.end()) return;
    for (const auto& v : it->second) {
      if (v.satellite == u.satellite) {
        forward_children(v, out, depth + 1);
      } else {
        out.push_back(v);
      }
    }
  }

  void walk(const SatNode& u, SegmentStack& out, int depth) const {
    if (depth > 100000) throw InvalidArgument("tree contains a cycle");
    out.push_back(SegmentItem::node(name_of(u.satellite, labels_)));
    std::vector<SatNode> kids;
    forward_children(u, kids, 0);
    if (kids.size() == 1) {
      walk(kids[0], out, depth + 1);
    } else if (kids.size() > 1) {
      out.push_back(SegmentItem::replication());
      for (const auto& v : kids) {
        SegmentStack branch;
        walk(v, branch, depth + 1);
        out.push_back(SegmentItem::nested(std::move(branch)));
      }
    }
  }

  const std::map<int, std::string>& labels_;
  std::map<SatNode, std::vector<SatNode>> children_;
  std::vector<SatNode> order_;
  std::optional<SatNode> root_;
};

}  // namespace

void validate_stack(const SegmentStack& stack) {
  for (std::size_t i = 0; i < stack.size(); ++i) {
    const auto& item = stack[i];
    if (item.kind == SegmentItem::Kind::kReplication) {
      std::size_t branches = 0;
      for (std::size_t j = i + 1; j < stack.size(); ++j) {
        if (stack[j].kind != SegmentItem::Kind::kBranch) {
          throw InvalidArgument("Replication must be followed by branches only");
        }
        ++branches;
      }
      if (branches < 2) throw InvalidArgument("Replication needs at least 2 branches");
      for (std::size_t j = i + 1; j < stack.size(); ++j) validate_stack(stack[j].branch);
      return;
    }
    if (item.kind == SegmentItem::Kind::kBranch) throw InvalidArgument("branch without Replication");
  }
}

std::string to_string(const SegmentStack& stack) {
  std::string out;
  append(out, stack);
  return out;
}

std::vector<SegmentStack> render_segment_stacks(const RoutingSolution& sol,
                                                const std::map<int, std::string>& labels) {
  std::vector<SegmentStack> out;
  for (const auto& p : sol.paths) {
    if (p.nodes.empty()) throw InvalidArgument("path without nodes");
    SegmentStack stack;
    int last = p.nodes.front().satellite;
    for (std::size_t i = 1; i < p.nodes.size(); ++i) {
      const int sat = p.nodes[i].satellite;
      if (sat == last) continue;
      stack.push_back(SegmentItem::node(name_of(sat, labels)));
      last = sat;
    }
    out.push_back(std::move(stack));
  }
  for (const auto& t : sol.trees) {
    auto stack = TreeRenderer(t, labels).render();
    validate_stack(stack);
    out.push_back(std::move(stack));
  }
  return out;
}

}  // namespace satroute
