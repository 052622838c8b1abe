#pragma once

#include <cstddef>
#include <vector>

#include "satroute/rational.hpp"

namespace satroute {

struct FlowArc {
  int from = 0;
  int to = 0;
  Rational capacity;
  Rational cost;
};

/// Capacitated digraph with per-arc unit costs and node supplies (positive =
/// supply, negative = demand). Arc indices follow insertion order.
class FlowNetwork {
 public:
  FlowNetwork() = default;
  explicit FlowNetwork(int node_count);

  int add_node();
  std::size_t add_arc(int from, int to, Rational capacity, Rational cost = 0);
  void set_supply(int node, Rational supply);
  void add_supply(int node, const Rational& delta);

  int node_count() const { return static_cast<int>(supplies_.size()); }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<FlowArc>& arcs() const { return arcs_; }
  const FlowArc& arc(std::size_t index) const { return arcs_[index]; }
  FlowArc& mutable_arc(std::size_t index) { return arcs_[index]; }
  const std::vector<Rational>& supplies() const { return supplies_; }
  const Rational& supply(int node) const { return supplies_[node]; }

  /// Sum of positive supplies.
  Rational total_supply() const;
  bool balanced() const;

 private:
  void check_node(int node) const;

  std::vector<FlowArc> arcs_;
  std::vector<Rational> supplies_;
};

}  // namespace satroute
