// Explicit extremal sequences and the translation taking plain extremal
// sequences of odd length to zero-sum ones.

#pragma once

#include <utility>

#include "egz/algebra.hpp"

namespace egz {

// Over Z_2^{2k}, length 4k: 2k-1 copies of the zero vector, the 2k basis
// vectors, and the all-ones vector. Zero-sum, and contains no zero-sum
// subsequence of length 2k.
ZSequence construct_d_eq_2k(int k);

// Over Z_2^d for odd d >= 3, length 2d+2: zero, e_1..e_{d-1}, their sum,
// then e_d added to each of those. Zero-sum; for odd k with d = 2k+1 or
// d = 2k-3 it contains no zero-sum subsequence of length 2k.
ZSequence construct_two_d_plus_two(int d);

// For odd-length s, returns x = seq_sum(s) and the sequence with x added
// to every item, which is zero-sum and has exactly the same zero-sum
// subsequences of every even length.
std::pair<Element, ZSequence> translate_to_zero_sum(const ZSequence& s);

}  // namespace egz
