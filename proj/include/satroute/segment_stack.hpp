#pragma once

#include <map>
#include <string>
#include <vector>

#include "satroute/instance.hpp"

namespace satroute {

/// One entry of a segment stack: a node label, a Replication marker, or a
/// nested branch stack following a Replication marker.
struct SegmentItem {
  enum class Kind { kNode, kReplication, kBranch };

  Kind kind = Kind::kNode;
  std::string label;
  std::vector<SegmentItem> branch;

  static SegmentItem node(std::string label) { return {Kind::kNode, std::move(label), {}}; }
  static SegmentItem replication() { return {Kind::kReplication, "Replication", {}}; }
  static SegmentItem nested(std::vector<SegmentItem> items) {
    return {Kind::kBranch, {}, std::move(items)};
  }

  friend bool operator==(const SegmentItem&, const SegmentItem&) = default;
};

using SegmentStack = std::vector<SegmentItem>;

/// Throws InvalidArgument if a Replication marker has fewer than 2 branches
/// or a branch appears outside a Replication.
void validate_stack(const SegmentStack& stack);

/// "[B, C, D]", "[A, B, Replication, [C], [D, Replication, [E], [F]]]".
std::string to_string(const SegmentStack& stack);

/// One stack per path (packet) and one per multicast tree. Unicast stacks
/// omit the source; tree stacks start at the root. Consecutive copies of the
/// same satellite (caching) collapse to one entry. `labels` names satellites,
/// otherwise their ids are used.
std::vector<SegmentStack> render_segment_stacks(const RoutingSolution& solution,
                                                const std::map<int, std::string>& labels = {});

}  // namespace satroute
