#include "egz/engine.hpp"

#include <algorithm>
#include <bit>

#include "egz/reach_dag.hpp"

namespace egz {

namespace {

// y[j] = w[j ^ xl] for the low six bits of the shift, as a butterfly.
constexpr std::uint64_t kSwapMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

inline std::uint64_t xor_permute_word(std::uint64_t w, unsigned xl) {
  for (int p = 0; p < 6; ++p) {
    if ((xl >> p) & 1) {
      const unsigned s = 1u << p;
      w = ((w >> s) & kSwapMask[p]) | ((w & kSwapMask[p]) << s);
    }
  }
  return w;
}

}  // namespace

bool validate_witness(const ZSequence& s, const Witness& w) noexcept {
  if (w.positions.size() != w.target_len) return false;
  std::uint64_t acc = 0;
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t p : w.positions) {
    if (!first && p <= prev) return false;
    if (p >= s.size()) return false;
    acc ^= s.raw()[p];
    prev = p;
    first = false;
  }
  return acc == 0;
}

ReachTable::ReachTable(Dimension dim, int max_len)
    : dim_(dim), max_len_(max_len) {
  if (max_len < 0) throw std::invalid_argument("ReachTable: negative length");
  if (dim.value() > 24)
    throw std::invalid_argument(
        "ReachTable: dense rows are capped at d <= 24; use the engine entry "
        "points, which switch representation above that");
  const std::uint64_t cells = dim.order();
  words_per_row_ = cells <= 64 ? 1 : static_cast<std::size_t>(cells / 64);
  rows_.assign((static_cast<std::size_t>(max_len) + 1) * words_per_row_, 0);
  rows_[0] = 1;  // only the zero element is reachable with zero items
}

void ReachTable::append(std::uint64_t item_bits) {
  if (item_bits >= dim_.order())
    throw std::invalid_argument("ReachTable: item out of range");
  const unsigned xl = static_cast<unsigned>(item_bits & 63);
  const std::size_t xh = static_cast<std::size_t>(item_bits >> 6);
  const int top = std::min(max_len_, processed_ + 1);
  for (int len = top; len >= 1; --len) {
    std::uint64_t* dst = &rows_[static_cast<std::size_t>(len) * words_per_row_];
    const std::uint64_t* src =
        &rows_[static_cast<std::size_t>(len - 1) * words_per_row_];
    for (std::size_t wi = 0; wi < words_per_row_; ++wi)
      dst[wi] |= xor_permute_word(src[wi ^ xh], xl);
  }
  ++processed_;
}

bool ReachTable::contains(int len, std::uint64_t g) const {
  if (len < 0 || len > max_len_ || g >= dim_.order()) return false;
  const std::uint64_t word =
      rows_[static_cast<std::size_t>(len) * words_per_row_ +
            static_cast<std::size_t>(g >> 6)];
  return (word >> (g & 63)) & 1;
}

namespace {

// ---- dense path ---------------------------------------------------------

bool exists_dense(const ZSequence& s, std::size_t r) {
  ReachTable table(s.dim(), static_cast<int>(r));
  for (std::uint64_t x : s.raw()) {
    table.append(x);
    if (table.contains(static_cast<int>(r), 0)) return true;
  }
  return table.contains(static_cast<int>(r), 0);
}

// Backward walk preferring "not taken" at each item; yields the
// lexicographically smallest position set discoverable that way.
std::optional<Witness> find_dense_snapshots(const ZSequence& s, std::size_t r) {
  const std::size_t n = s.size();
  std::vector<ReachTable> snap;
  snap.reserve(n + 1);
  snap.emplace_back(s.dim(), static_cast<int>(r));
  for (std::uint64_t x : s.raw()) {
    snap.push_back(snap.back());
    snap.back().append(x);
  }
  if (!snap[n].contains(static_cast<int>(r), 0)) return std::nullopt;

  Witness w;
  w.target_len = r;
  int len = static_cast<int>(r);
  std::uint64_t g = 0;
  for (std::size_t i = n; i-- > 0;) {
    if (snap[i].contains(len, g)) continue;
    w.positions.push_back(i);
    g ^= s.raw()[i];
    --len;
  }
  std::reverse(w.positions.begin(), w.positions.end());
  return w;
}

// Fallback when snapshots would not fit: peel items from the end,
// recomputing the prefix table for each decision.
std::optional<Witness> find_dense_recompute(const ZSequence& s, std::size_t r) {
  if (!exists_dense(s, r)) return std::nullopt;

  Witness w;
  w.target_len = r;
  int len = static_cast<int>(r);
  std::uint64_t g = 0;
  for (std::size_t i = s.size(); i-- > 0;) {
    ReachTable prefix(s.dim(), len);
    for (std::size_t j = 0; j < i; ++j) prefix.append(s.raw()[j]);
    if (prefix.contains(len, g)) continue;
    w.positions.push_back(i);
    g ^= s.raw()[i];
    --len;
  }
  std::reverse(w.positions.begin(), w.positions.end());
  return w;
}

// ---- DAG path -----------------------------------------------------------

struct DagRows {
  ReachDag dag;
  std::vector<ReachDag::NodeId> rows;

  DagRows(Dimension dim, std::size_t r, std::size_t node_cap)
      : dag(dim.value(), node_cap),
        rows(r + 1, ReachDag::kEmpty) {
    rows[0] = dag.zero_singleton();
  }

  void append(std::uint64_t x) {
    for (std::size_t len = rows.size() - 1; len >= 1; --len) {
      if (rows[len - 1] == ReachDag::kEmpty) continue;
      rows[len] = dag.set_union(rows[len], dag.xor_shift(rows[len - 1], x));
    }
  }
};

bool exists_dag(const ZSequence& s, std::size_t r, const EngineOptions& opts) {
  DagRows t(s.dim(), r, opts.dag_node_cap);
  for (std::uint64_t x : s.raw()) {
    t.append(x);
    if (t.dag.contains(t.rows[r], 0)) return true;
  }
  return t.dag.contains(t.rows[r], 0);
}

std::optional<Witness> find_dag(const ZSequence& s, std::size_t r,
                                const EngineOptions& opts) {
  const std::size_t n = s.size();
  DagRows t(s.dim(), r, opts.dag_node_cap);
  // Roots per processed prefix; the nodes are shared, so snapshots are
  // just (r+1) ids per item.
  std::vector<std::vector<ReachDag::NodeId>> snap;
  snap.reserve(n + 1);
  snap.push_back(t.rows);
  for (std::uint64_t x : s.raw()) {
    t.append(x);
    snap.push_back(t.rows);
  }
  if (!t.dag.contains(snap[n][r], 0)) return std::nullopt;

  Witness w;
  w.target_len = r;
  std::size_t len = r;
  std::uint64_t g = 0;
  for (std::size_t i = n; i-- > 0;) {
    if (t.dag.contains(snap[i][len], g)) continue;
    w.positions.push_back(i);
    g ^= s.raw()[i];
    --len;
  }
  std::reverse(w.positions.begin(), w.positions.end());
  return w;
}

// ---- dispatch -----------------------------------------------------------

bool use_dense(const ZSequence& s, const EngineOptions& opts) {
  return s.dim().value() <= opts.dense_dim_cap;
}

bool exists_impl(const ZSequence& s, std::size_t r, const EngineOptions& opts) {
  return use_dense(s, opts) ? exists_dense(s, r) : exists_dag(s, r, opts);
}

std::optional<Witness> find_impl(const ZSequence& s, std::size_t r,
                                 const EngineOptions& opts) {
  if (!use_dense(s, opts)) return find_dag(s, r, opts);
  const std::uint64_t snapshot_bits = (s.size() + 1) * (r + 1) * s.dim().order();
  if (snapshot_bits <= opts.snapshot_cap_bits)
    return find_dense_snapshots(s, r);
  return find_dense_recompute(s, r);
}

void check_r(const ZSequence& s, std::size_t r) {
  if (r > s.size())
    throw std::invalid_argument("subsequence length exceeds sequence length");
}

bool complement_applies(const ZSequence& s, std::size_t r,
                        const EngineOptions& opts) {
  return opts.complement_shortcut && s.size() - r < r && is_zero_sum(s);
}

}  // namespace

bool exists_exact(const ZSequence& s, std::size_t r, const EngineOptions& opts) {
  check_r(s, r);
  if (complement_applies(s, r, opts)) return exists_impl(s, s.size() - r, opts);
  return exists_impl(s, r, opts);
}

std::optional<Witness> find_exact(const ZSequence& s, std::size_t r,
                                  const EngineOptions& opts) {
  check_r(s, r);
  if (complement_applies(s, r, opts)) {
    auto inner = find_impl(s, s.size() - r, opts);
    if (!inner) return std::nullopt;
    Witness w;
    w.target_len = r;
    std::size_t next = 0;
    for (std::size_t p = 0; p < s.size(); ++p) {
      if (next < inner->positions.size() && inner->positions[next] == p)
        ++next;
      else
        w.positions.push_back(p);
    }
    return w;
  }
  return find_impl(s, r, opts);
}

bool naive_exists(const ZSequence& s, std::size_t r) {
  check_r(s, r);
  const std::size_t n = s.size();
  if (n > 24)
    throw std::invalid_argument("naive_exists: instance too large (|S| > 24)");
  if (r == 0) return true;

  const std::uint32_t last = ((std::uint32_t{1} << r) - 1) << (n - r);
  std::uint32_t mask = (std::uint32_t{1} << r) - 1;
  while (true) {
    std::uint64_t acc = 0;
    for (std::uint32_t m = mask; m; m &= m - 1)
      acc ^= s.raw()[static_cast<std::size_t>(std::countr_zero(m))];
    if (acc == 0) return true;
    if (mask == last) break;
    // Gosper: next mask with the same popcount.
    const std::uint32_t u = mask & (0u - mask);
    const std::uint32_t v = mask + u;
    mask = v + (((v ^ mask) / u) >> 2);
  }
  return false;
}

}  // namespace egz
