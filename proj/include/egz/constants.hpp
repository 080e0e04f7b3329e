// Closed-form evaluators for the generalized and modified EGZ constants
// s_{2k}(Z_2^d) and s'_{2k}(Z_2^d), and an independent brute-force
// computation of both for small parameters with isomorph rejection.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "egz/algebra.hpp"
#include "egz/engine.hpp"

namespace egz {

// Raised when a closed form is queried outside the proven range d <= 2k+1.
struct TheoremRangeError : std::domain_error {
  using std::domain_error::domain_error;
};

// s_{2k}(Z_2^d): smallest s such that every length-s sequence over Z_2^d
// has a zero-sum subsequence of length 2k. Requires k >= 1, 1 <= d <= 2k+1.
int eval_s(int k, int d);

// s'_{2k}(Z_2^d): smallest s such that every zero-sum length-s sequence
// over Z_2^d has a zero-sum subsequence of length 2k. Same domain.
int eval_s_prime(int k, int d);

// Which case of the closed form fired; stable strings used by the CLI.
std::string_view eval_s_case(int k, int d);
std::string_view eval_s_prime_case(int k, int d);

// Limits governing exhaustive search.
struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000'000;
  double max_wall_seconds = 600.0;
  unsigned threads = 0;  // 0 = machine parallelism
};

struct SearchOptions {
  // When off, search states deduplicate by exact multiset instead of by
  // canonical form; the ablation measures what the symmetry machinery buys.
  bool isomorph_rejection = true;
};

enum class SearchStatus { found, exhausted, undecided };

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct SearchResult {
  SearchStatus status = SearchStatus::undecided;
  std::optional<ZSequence> extremal;
  SearchStats stats;
};

// Searches for a length-n sequence over Z_2^d with no zero-sum subsequence
// of length r, with zero total sum when require_zero_sum. Exhaustion of the
// orbit space proves absence; budget exhaustion reports undecided, never a
// silent absence. Requires r even >= 2 and n >= r.
SearchResult extremal_search(Dimension dim, int r, int n,
                             bool require_zero_sum,
                             const SearchBudget& budget = {},
                             const SearchOptions& opts = {});

enum class Provenance { closed_form, brute_force };

struct ConstantQuery {
  int k;
  Dimension d;
  bool modified;
};

struct ConstantResult {
  bool decided = false;
  int value = 0;  // meaningful iff decided
  Provenance provenance = Provenance::brute_force;
  std::optional<ZSequence> extremal;
  SearchStats stats;
};

// Brute-force computation of s_r(Z_2^d) (and the modified variant), by
// scanning lengths upward until no extremal sequence exists. A certificate
// of length value-1 is attached. Refuses d > 5 or r > 8 unless forced.
ConstantResult brute_s(Dimension d, int r, const SearchBudget& budget = {},
                       const SearchOptions& opts = {}, bool force = false);
ConstantResult brute_s_prime(Dimension d, int r,
                             const SearchBudget& budget = {},
                             const SearchOptions& opts = {},
                             bool force = false);

}  // namespace egz
