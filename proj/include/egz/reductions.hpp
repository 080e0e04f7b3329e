// Constructive reductions: given a zero-sum sequence of threshold length,
// produce a zero-sum subsequence of length 2k by the duplication and
// complement arguments, with an engine fallback for the remaining cases.

#pragma once

#include "egz/algebra.hpp"
#include "egz/engine.hpp"

namespace egz {

enum class DuplicationBranch {
  avoids_duplicate,     // found index set skips the duplicated slot
  swapped_for_twin,     // duplicated slot exchanged for its twin
  patched_complement,   // complement of the index set plus the twin
};

// For zero-sum s over Z_2^{2k-1} with |s| = 4k-2: duplicate the first item
// in front, find a zero-sum 2k-index-set in the extended sequence, and
// repair it back into s by the three-way case analysis.
Witness reduce_duplication(const ZSequence& s, int k,
                           DuplicationBranch* branch = nullptr);

// The case analysis alone, fed an explicit zero-sum index set over the
// extended sequence (position 0 is the duplicate, position j > 0 is
// s[j-1]). Exposed so tests can drive every branch.
Witness resolve_duplication(const ZSequence& s, int k,
                            const std::vector<std::size_t>& extended_set,
                            DuplicationBranch* branch = nullptr);

// For zero-sum s over Z_2^d, d odd, |s| = 2k+d-1, with d <= 2k-3 for even k
// or d <= 2k-5 for odd k: find a zero-sum (d-1)-subsequence and return its
// complement.
Witness reduce_complement(const ZSequence& s, int k);

enum class ReductionStrategy { duplication, complement, engine };

// Dispatcher over a prefix of length s'_{2k}(Z_2^d): the bespoke reduction
// whose preconditions hold there, otherwise the engine on the whole
// sequence. Requires is_zero_sum(s), d <= 2k+1 and |s| >= s'_{2k}(Z_2^d).
Witness find_length_2k_in_zero_sum(const ZSequence& s, int k,
                                   ReductionStrategy* strategy = nullptr);

}  // namespace egz
