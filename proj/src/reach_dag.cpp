#include "egz/reach_dag.hpp"

namespace egz {

namespace {
constexpr std::uint64_t pack(int var, ReachDag::NodeId lo, ReachDag::NodeId hi) {
  return (std::uint64_t{static_cast<std::uint32_t>(var)} << 56) |
         (std::uint64_t{lo} << 28) | std::uint64_t{hi};
}
}  // namespace

ReachDag::ReachDag(int d, std::size_t node_cap) : d_(d), cap_(node_cap) {
  nodes_.push_back({0, 0, 0});  // kEmpty sentinel
  nodes_.push_back({0, 0, 0});  // kAll sentinel
}

ReachDag::NodeId ReachDag::make(int var, NodeId lo, NodeId hi) {
  if (lo == hi) return lo;
  const std::uint64_t key = pack(var, lo, hi);
  auto it = unique_.find(key);
  if (it != unique_.end()) return it->second;
  if (nodes_.size() >= cap_ || nodes_.size() >= (std::size_t{1} << 28))
    throw std::runtime_error("ReachDag: node cap exceeded (reach sets too irregular)");
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({static_cast<std::uint8_t>(var), lo, hi});
  unique_.emplace(key, id);
  return id;
}

ReachDag::NodeId ReachDag::zero_singleton() {
  NodeId id = kAll;
  for (int v = d_ - 1; v >= 0; --v) id = make(v, id, kEmpty);
  return id;
}

ReachDag::NodeId ReachDag::set_union(NodeId a, NodeId b) {
  if (a == b || b == kEmpty) return a;
  if (a == kEmpty) return b;
  if (a == kAll || b == kAll) return kAll;
  if (a > b) std::swap(a, b);

  const std::uint64_t key = (std::uint64_t{a} << 32) | b;
  auto it = union_memo_.find(key);
  if (it != union_memo_.end()) return it->second;

  const int va = var_of(a), vb = var_of(b);
  const int v = va < vb ? va : vb;
  const NodeId a_lo = va == v ? nodes_[a].lo : a;
  const NodeId a_hi = va == v ? nodes_[a].hi : a;
  const NodeId b_lo = vb == v ? nodes_[b].lo : b;
  const NodeId b_hi = vb == v ? nodes_[b].hi : b;

  const NodeId res = make(v, set_union(a_lo, b_lo), set_union(a_hi, b_hi));
  union_memo_.emplace(key, res);
  return res;
}

ReachDag::NodeId ReachDag::xor_shift(NodeId a, std::uint64_t x) {
  if (x == 0 || a <= 1) return a;
  if (x != shift_memo_x_) {
    shift_memo_.clear();
    shift_memo_x_ = x;
  }
  auto it = shift_memo_.find(a);
  if (it != shift_memo_.end()) return it->second;

  const int v = nodes_[a].var;
  const NodeId lo = xor_shift(nodes_[a].lo, x);
  const NodeId hi = xor_shift(nodes_[a].hi, x);
  const bool flip = (x >> v) & 1;
  const NodeId res = flip ? make(v, hi, lo) : make(v, lo, hi);
  shift_memo_.emplace(a, res);
  return res;
}

bool ReachDag::contains(NodeId a, std::uint64_t g) const {
  while (a > 1) {
    const Node& n = nodes_[a];
    a = ((g >> n.var) & 1) ? n.hi : n.lo;
  }
  return a == kAll;
}

}  // namespace egz
