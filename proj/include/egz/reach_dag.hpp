// Reachable-sum sets as reduced ordered decision DAGs over the d coordinate
// bits. Lets the engine answer exact-length queries in dimensions where a
// 2^d-bit row no longer fits, as long as the reachable sets stay structured.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace egz {

class ReachDag {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kEmpty = 0;  // empty set
  static constexpr NodeId kAll = 1;    // full set

  ReachDag(int d, std::size_t node_cap);

  // The set {0}.
  NodeId zero_singleton();

  NodeId set_union(NodeId a, NodeId b);

  // {g ^ x : g in a}.
  NodeId xor_shift(NodeId a, std::uint64_t x);

  bool contains(NodeId a, std::uint64_t g) const;

  std::size_t node_count() const noexcept { return nodes_.size(); }

 private:
  struct Node {
    std::uint8_t var;
    NodeId lo, hi;
  };

  int d_;
  std::size_t cap_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, NodeId> unique_;
  std::unordered_map<std::uint64_t, NodeId> union_memo_;
  std::unordered_map<NodeId, NodeId> shift_memo_;
  std::uint64_t shift_memo_x_ = ~std::uint64_t{0};

  int var_of(NodeId n) const {
    return n <= 1 ? d_ : nodes_[n].var;
  }
  NodeId make(int var, NodeId lo, NodeId hi);
};

}  // namespace egz
