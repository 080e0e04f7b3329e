#include "egz/reductions.hpp"

#include <algorithm>

#include "egz/constants.hpp"

namespace egz {

namespace {

ZSequence extended_with_duplicate(const ZSequence& s) {
  ZSequence ext(s.dim());
  ext.push_back_bits(s.raw()[0]);
  for (std::uint64_t b : s.raw()) ext.push_back_bits(b);
  return ext;
}

void check_duplication_input(const ZSequence& s, int k) {
  if (k < 1) throw std::invalid_argument("reduce_duplication: k must be >= 1");
  if (s.dim().value() != 2 * k - 1)
    throw std::invalid_argument("reduce_duplication: dimension must be 2k-1");
  if (s.size() != static_cast<std::size_t>(4 * k - 2))
    throw std::invalid_argument("reduce_duplication: length must be 4k-2");
  if (!is_zero_sum(s))
    throw std::invalid_argument("reduce_duplication: sequence must be zero-sum");
}

}  // namespace

Witness resolve_duplication(const ZSequence& s, int k,
                            const std::vector<std::size_t>& extended_set,
                            DuplicationBranch* branch) {
  check_duplication_input(s, k);
  const std::size_t ext_len = s.size() + 1;  // 4k-1
  const ZSequence ext = extended_with_duplicate(s);

  Witness given{extended_set, static_cast<std::size_t>(2 * k)};
  if (!validate_witness(ext, given))
    throw std::invalid_argument(
        "resolve_duplication: index set is not a zero-sum 2k-set of the "
        "extended sequence");

  const bool has0 =
      std::binary_search(extended_set.begin(), extended_set.end(), std::size_t{0});
  const bool has1 =
      std::binary_search(extended_set.begin(), extended_set.end(), std::size_t{1});

  Witness w;
  w.target_len = static_cast<std::size_t>(2 * k);
  if (!has0) {
    // Entirely inside the original items.
    for (std::size_t p : extended_set) w.positions.push_back(p - 1);
    if (branch) *branch = DuplicationBranch::avoids_duplicate;
  } else if (!has1) {
    // The duplicate stands in for its twin, which carries the same value.
    w.positions.push_back(0);
    for (std::size_t p : extended_set)
      if (p != 0) w.positions.push_back(p - 1);
    if (branch) *branch = DuplicationBranch::swapped_for_twin;
  } else {
    // Both slots of the duplicated value are in the set: the complement
    // plus the twin sums to twice the duplicated value, which is zero.
    for (std::size_t p = 1; p < ext_len; ++p)
      if (!std::binary_search(extended_set.begin(), extended_set.end(), p) ||
          p == 1)
        w.positions.push_back(p - 1);
    if (branch) *branch = DuplicationBranch::patched_complement;
  }
  std::sort(w.positions.begin(), w.positions.end());

  if (!validate_witness(s, w))
    throw std::logic_error("resolve_duplication: produced an invalid witness");
  return w;
}

Witness reduce_duplication(const ZSequence& s, int k,
                           DuplicationBranch* branch) {
  check_duplication_input(s, k);
  const ZSequence ext = extended_with_duplicate(s);
  // |ext| = 4k-1 = s_{2k}(Z_2^{2k-1}), so a zero-sum 2k-subsequence must
  // exist; a miss here would contradict the closed form.
  auto found = find_exact(ext, static_cast<std::size_t>(2 * k));
  if (!found)
    throw std::logic_error(
        "reduce_duplication: extended sequence has no zero-sum 2k-subsequence");
  return resolve_duplication(s, k, found->positions, branch);
}

Witness reduce_complement(const ZSequence& s, int k) {
  if (k < 1) throw std::invalid_argument("reduce_complement: k must be >= 1");
  const int d = s.dim().value();
  if (d % 2 == 0)
    throw std::invalid_argument("reduce_complement: dimension must be odd");
  if (!(k % 2 == 0 ? d <= 2 * k - 3 : d <= 2 * k - 5))
    throw std::invalid_argument(
        "reduce_complement: requires d <= 2k-3 for even k, d <= 2k-5 for odd k");
  if (s.size() != static_cast<std::size_t>(2 * k + d - 1))
    throw std::invalid_argument("reduce_complement: length must be 2k+d-1");
  if (!is_zero_sum(s))
    throw std::invalid_argument("reduce_complement: sequence must be zero-sum");

  if (d >= 3 && eval_s((d - 1) / 2, d) > 2 * k + d - 1)
    throw std::logic_error("reduce_complement: length guarantee violated");

  auto inner = find_exact(s, static_cast<std::size_t>(d - 1));
  if (!inner)
    throw std::logic_error(
        "reduce_complement: no zero-sum (d-1)-subsequence found");

  Witness w;
  w.target_len = static_cast<std::size_t>(2 * k);
  std::size_t next = 0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    if (next < inner->positions.size() && inner->positions[next] == p)
      ++next;
    else
      w.positions.push_back(p);
  }
  if (!validate_witness(s, w))
    throw std::logic_error("reduce_complement: produced an invalid witness");
  return w;
}

Witness find_length_2k_in_zero_sum(const ZSequence& s, int k,
                                   ReductionStrategy* strategy) {
  if (k < 1)
    throw std::invalid_argument("find_length_2k_in_zero_sum: k must be >= 1");
  if (!is_zero_sum(s))
    throw std::invalid_argument(
        "find_length_2k_in_zero_sum: sequence must be zero-sum");
  const int d = s.dim().value();
  const int sp = eval_s_prime(k, d);  // throws outside d <= 2k+1
  if (s.size() < static_cast<std::size_t>(sp))
    throw std::invalid_argument(
        "find_length_2k_in_zero_sum: sequence shorter than the threshold");

  ZSequence prefix(s.dim());
  for (int i = 0; i < sp; ++i) prefix.push_back_bits(s.raw()[static_cast<std::size_t>(i)]);

  if (d == 2 * k - 1 && is_zero_sum(prefix)) {
    if (strategy) *strategy = ReductionStrategy::duplication;
    Witness w = reduce_duplication(prefix, k);
    if (!validate_witness(s, w))
      throw std::logic_error("find_length_2k_in_zero_sum: invalid witness");
    return w;
  }
  if (d % 2 == 1 && (k % 2 == 0 ? d <= 2 * k - 3 : d <= 2 * k - 5) &&
      is_zero_sum(prefix)) {
    if (strategy) *strategy = ReductionStrategy::complement;
    Witness w = reduce_complement(prefix, k);
    if (!validate_witness(s, w))
      throw std::logic_error("find_length_2k_in_zero_sum: invalid witness");
    return w;
  }

  if (strategy) *strategy = ReductionStrategy::engine;
  auto w = find_exact(s, static_cast<std::size_t>(2 * k));
  if (!w)
    throw std::logic_error(
        "find_length_2k_in_zero_sum: engine found no witness at threshold "
        "length");
  return *w;
}

}  // namespace egz
