#include "satroute/flow_network.hpp"

#include <string>

#include "satroute/errors.hpp"

namespace satroute {

FlowNetwork::FlowNetwork(int node_count) {
  if (node_count < 0) throw InvalidArgument("negative node count");
  supplies_.assign(static_cast<std::size_t>(node_count), Rational(0));
}

int FlowNetwork::add_node() {
  supplies_.emplace_back(0);
  return node_count() - 1;
}

std::size_t FlowNetwork::add_arc(int from, int to, Rational capacity, Rational cost) {
  check_node(from);
  check_node(to);
  if (sgn(capacity) < 0) throw InvalidArgument("negative arc capacity");
  arcs_.push_back(FlowArc{from, to, std::move(capacity), std::move(cost)});
  return arcs_.size() - 1;
}

void FlowNetwork::set_supply(int node, Rational supply) {
  check_node(node);
  supplies_[node] = std::move(supply);
}

void FlowNetwork::add_supply(int node, const Rational& delta) {
  check_node(node);
  supplies_[node] += delta;
}

Rational FlowNetwork::total_supply() const {
  Rational total = 0;
  for (const auto& s : supplies_) {
    if (sgn(s) > 0) total += s;
  }
  return total;
}

bool FlowNetwork::balanced() const {
  Rational sum = 0;
  for (const auto& s : supplies_) sum += s;
  return sgn(sum) == 0;
}

void FlowNetwork::check_node(int node) const {
  if (node < 0 || node >= node_count()) {
    throw InvalidArgument("node index " + std::to_string(node) + " out of range");
  }
}

}  // namespace satroute
