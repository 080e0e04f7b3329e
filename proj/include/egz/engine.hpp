// Decide and certify existence of a zero-sum subsequence of exact
// prescribed length within a given sequence.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "egz/algebra.hpp"

namespace egz {

// A set of distinct positions selecting a zero-sum subsequence of
// prescribed length.
struct Witness {
  std::vector<std::size_t> positions;  // strictly increasing
  std::size_t target_len = 0;
};

// Independent checker: length, strict order, bounds, and XOR of the
// selected items all verified from scratch.
bool validate_witness(const ZSequence& s, const Witness& w) noexcept;

// Dense reachability table. Row len holds one bit per group element g, set
// iff some len-item subsequence of the processed prefix sums to g. Row 0
// starts with only the zero element; rows grow monotonically as items are
// appended. Processing item x folds row len-1, permuted by XOR with x, into
// row len for len = max_len down to 1; the permutation runs word-level as a
// butterfly on the low bits of x and a word swap on the high bits.
class ReachTable {
 public:
  ReachTable(Dimension dim, int max_len);

  void append(std::uint64_t item_bits);
  bool contains(int len, std::uint64_t g) const;

  int max_len() const noexcept { return max_len_; }
  int processed() const noexcept { return processed_; }
  Dimension dim() const noexcept { return dim_; }

 private:
  Dimension dim_;
  int max_len_;
  int processed_ = 0;
  std::size_t words_per_row_;
  std::vector<std::uint64_t> rows_;
};

struct EngineOptions {
  // Above this dimension reach sets switch from bit-packed rows to a
  // shared-node set DAG; 2^d-bit rows stop being affordable.
  int dense_dim_cap = 24;
  // Per-item table snapshots for witness reconstruction are kept while the
  // total stays under this many bits; beyond it the walk recomputes.
  std::uint64_t snapshot_cap_bits = std::uint64_t{1} << 31;
  // Hard stop for the DAG representation.
  std::size_t dag_node_cap = std::size_t{1} << 26;
  // Solve min(r, |S|-r) on zero-sum inputs (complement duality).
  bool complement_shortcut = true;
};

// True iff some subsequence of s with exactly r positions XORs to zero.
// r > |s| is an error, distinct from a false answer.
bool exists_exact(const ZSequence& s, std::size_t r,
                  const EngineOptions& opts = {});

// Witness extraction; returns a validated witness iff exists_exact holds.
std::optional<Witness> find_exact(const ZSequence& s, std::size_t r,
                                  const EngineOptions& opts = {});

// Independent oracle: literal enumeration of all r-subsets of positions.
// Guarded to |s| <= 24.
bool naive_exists(const ZSequence& s, std::size_t r);

}  // namespace egz
