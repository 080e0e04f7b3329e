// Exhaustive search for extremal sequences, one orbit representative per
// isomorphism class. Levels are built breadth-first: level i holds one
// representative of every GL(d,2)-orbit of length-i sequences with no
// zero-sum r-subsequence. Extending a representative by every group element
// covers every orbit of the next level, so deduplicating children by
// canonical key loses nothing; a level that comes up empty proves that no
// extremal sequence of that length (or longer) exists.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "egz/constants.hpp"

namespace egz {

namespace {

using Clock = std::chrono::steady_clock;

struct Rep {
  std::vector<std::uint64_t> seq;  // sorted item bits
  ReachTable table;                // rows 0..r over the prefix
  std::uint64_t sum;
};

struct ScanControl {
  std::uint64_t max_nodes;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted_budget{false};

  bool charge() {
    const std::uint64_t v = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (v > max_nodes ||
        ((v & 0x3ff) == 0 && Clock::now() > deadline)) {
      exhausted_budget.store(true, std::memory_order_relaxed);
      return false;
    }
    return !exhausted_budget.load(std::memory_order_relaxed);
  }
};

unsigned resolve_threads(const SearchBudget& budget) {
  if (budget.threads > 0) return budget.threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void check_budget_fields(const SearchBudget& b) {
  if (b.max_nodes == 0 || b.max_wall_seconds <= 0)
    throw std::invalid_argument("SearchBudget: limits must be positive");
}

std::string dedup_key(Dimension dim, const std::vector<std::uint64_t>& sorted_seq,
                      bool isomorph_rejection) {
  if (isomorph_rejection)
    return canonical_key(ZSequence::from_bits(dim, sorted_seq)).bytes;
  std::string out;
  out.reserve(sorted_seq.size() * 8);
  for (std::uint64_t v : sorted_seq)
    for (int i = 0; i < 8; ++i)
      out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  return out;
}

std::vector<std::uint64_t> insert_sorted(const std::vector<std::uint64_t>& seq,
                                         std::uint64_t w) {
  std::vector<std::uint64_t> out;
  out.reserve(seq.size() + 1);
  auto it = std::upper_bound(seq.begin(), seq.end(), w);
  out.insert(out.end(), seq.begin(), it);
  out.push_back(w);
  out.insert(out.end(), it, seq.end());
  return out;
}

// Builds the next level. Returns false on budget exhaustion.
bool expand_level(Dimension dim, int r, const std::vector<Rep>& reps,
                  bool isomorph_rejection, unsigned threads, ScanControl& ctl,
                  std::vector<Rep>& next_out) {
  const std::uint64_t order = dim.order();
  std::unordered_map<std::string, Rep> merged;
  std::mutex merge_mutex;

  const unsigned t_count =
      static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(reps.size(), 1)));
  std::atomic<std::size_t> cursor{0};

  auto worker = [&]() {
    std::unordered_map<std::string, Rep> local;
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= reps.size()) break;
      const Rep& rep = reps[i];
      for (std::uint64_t w = 0; w < order; ++w) {
        if (!ctl.charge()) return;
        ReachTable table = rep.table;
        table.append(w);
        if (table.contains(r, 0)) continue;  // zero-sum r-subsequence inside
        std::vector<std::uint64_t> seq = insert_sorted(rep.seq, w);
        std::string key = dedup_key(dim, seq, isomorph_rejection);
        local.try_emplace(std::move(key),
                          Rep{std::move(seq), std::move(table), rep.sum ^ w});
      }
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (auto& [key, rep] : local) merged.try_emplace(key, std::move(rep));
  };

  std::vector<std::thread> pool;
  pool.reserve(t_count);
  for (unsigned t = 0; t < t_count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  if (ctl.exhausted_budget.load()) return false;
  next_out.clear();
  next_out.reserve(merged.size());
  for (auto& [key, rep] : merged) next_out.push_back(std::move(rep));
  return true;
}

Rep empty_rep(Dimension dim, int r) {
  return Rep{{}, ReachTable(dim, r), 0};
}

struct ThresholdScan {
  bool undecided = false;
  int first_empty_level = -1;
  std::optional<ZSequence> cert_plain;      // representative one below
  int deepest_zero_level = -1;
  std::optional<ZSequence> cert_zero_sum;   // deepest zero-sum representative
  SearchStats stats;
};

// Runs levels upward until one is empty, tracking the deepest level that
// still holds a zero-sum representative.
ThresholdScan threshold_scan(Dimension dim, int r, const SearchBudget& budget,
                             const SearchOptions& opts) {
  check_budget_fields(budget);
  ScanControl ctl;
  ctl.max_nodes = budget.max_nodes;
  const auto start = Clock::now();
  ctl.deadline = start + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(budget.max_wall_seconds));
  const unsigned threads = resolve_threads(budget);

  // No value can occur r times in an extremal sequence (r copies of one
  // element already sum to zero for even r), so levels provably empty out
  // by (r-1) * 2^d + 1 at the latest.
  const std::uint64_t level_cap =
      static_cast<std::uint64_t>(r - 1) * dim.order() + 2;

  ThresholdScan out;
  std::vector<Rep> reps;
  reps.push_back(empty_rep(dim, r));
  out.deepest_zero_level = 0;
  out.cert_zero_sum = ZSequence::from_bits(dim, {});

  for (std::uint64_t depth = 0;; ++depth) {
    if (depth > level_cap)
      throw std::logic_error("threshold_scan: level cap overrun");

    std::vector<Rep> next;
    if (!expand_level(dim, r, reps, opts.isomorph_rejection, threads, ctl,
                      next)) {
      out.undecided = true;
      break;
    }
    if (next.empty()) {
      out.first_empty_level = static_cast<int>(depth) + 1;
      out.cert_plain = ZSequence::from_bits(dim, reps.front().seq);
      break;
    }
    for (const Rep& rep : next) {
      if (rep.sum == 0) {
        out.deepest_zero_level = static_cast<int>(depth) + 1;
        out.cert_zero_sum = ZSequence::from_bits(dim, rep.seq);
        break;
      }
    }
    reps = std::move(next);
  }

  out.stats.nodes = ctl.nodes.load();
  out.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

void check_search_args(int r, int n) {
  if (r < 2 || r % 2 != 0)
    throw std::invalid_argument("search: r must be a positive even integer");
  if (n < r) throw std::invalid_argument("search: n must be at least r");
}

}  // namespace

SearchResult extremal_search(Dimension dim, int r, int n,
                             bool require_zero_sum, const SearchBudget& budget,
                             const SearchOptions& opts) {
  check_search_args(r, n);
  check_budget_fields(budget);

  ScanControl ctl;
  ctl.max_nodes = budget.max_nodes;
  const auto start = Clock::now();
  ctl.deadline = start + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(budget.max_wall_seconds));
  const unsigned threads = resolve_threads(budget);

  SearchResult result;
  auto finish = [&](SearchStatus status) {
    result.status = status;
    result.stats.nodes = ctl.nodes.load();
    result.stats.seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  };

  std::vector<Rep> reps;
  reps.push_back(empty_rep(dim, r));

  for (int depth = 0; depth < n - 1; ++depth) {
    std::vector<Rep> next;
    if (!expand_level(dim, r, reps, opts.isomorph_rejection, threads, ctl, next))
      return finish(SearchStatus::undecided);
    if (next.empty()) return finish(SearchStatus::exhausted);
    reps = std::move(next);
  }

  // Final item: any qualifying child is an extremal sequence of length n.
  const std::uint64_t order = dim.order();
  std::atomic<bool> found{false};
  std::optional<ZSequence> found_seq;
  std::mutex found_mutex;
  std::atomic<std::size_t> cursor{0};

  auto worker = [&]() {
    while (!found.load(std::memory_order_relaxed)) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= reps.size()) break;
      const Rep& rep = reps[i];
      for (std::uint64_t w = 0; w < order; ++w) {
        if (!ctl.charge()) return;
        if (found.load(std::memory_order_relaxed)) return;
        if (require_zero_sum && (rep.sum ^ w) != 0) continue;
        ReachTable table = rep.table;
        table.append(w);
        if (table.contains(r, 0)) continue;
        std::lock_guard<std::mutex> lock(found_mutex);
        if (!found.exchange(true))
          found_seq = ZSequence::from_bits(dim, insert_sorted(rep.seq, w));
        return;
      }
    }
  };

  const unsigned t_count =
      static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(reps.size(), 1)));
  std::vector<std::thread> pool;
  pool.reserve(t_count);
  for (unsigned t = 0; t < t_count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  if (found.load()) {
    result.extremal = std::move(found_seq);
    return finish(SearchStatus::found);
  }
  if (ctl.exhausted_budget.load()) return finish(SearchStatus::undecided);
  return finish(SearchStatus::exhausted);
}

namespace {

void check_brute_args(Dimension d, int r, bool force) {
  if (r < 2 || r % 2 != 0)
    throw std::invalid_argument("brute: r must be a positive even integer");
  if (!force && (d.value() > 5 || r > 8 || d.value() + r > 12))
    throw std::invalid_argument(
        "brute: parameters past the feasibility guard (d <= 5, r <= 8, "
        "d + r <= 12); rerun with force to override");
}

}  // namespace

ConstantResult brute_s(Dimension d, int r, const SearchBudget& budget,
                       const SearchOptions& opts, bool force) {
  check_brute_args(d, r, force);
  ThresholdScan scan = threshold_scan(d, r, budget, opts);
  ConstantResult res;
  res.provenance = Provenance::brute_force;
  res.stats = scan.stats;
  if (scan.undecided) return res;
  res.decided = true;
  res.value = scan.first_empty_level;
  res.extremal = scan.cert_plain;
  return res;
}

ConstantResult brute_s_prime(Dimension d, int r, const SearchBudget& budget,
                             const SearchOptions& opts, bool force) {
  check_brute_args(d, r, force);
  ThresholdScan scan = threshold_scan(d, r, budget, opts);
  ConstantResult res;
  res.provenance = Provenance::brute_force;
  res.stats = scan.stats;
  if (scan.undecided) return res;
  res.decided = true;
  res.value = scan.deepest_zero_level + 1;
  res.extremal = scan.cert_zero_sum;
  return res;
}

}  // namespace egz
