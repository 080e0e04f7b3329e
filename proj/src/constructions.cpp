#include "egz/constructions.hpp"

namespace egz {

ZSequence construct_d_eq_2k(int k) {
  if (k < 1) throw std::invalid_argument("construct_d_eq_2k: k must be >= 1");
  if (2 * k > Dimension::kMax)
    throw std::invalid_argument("construct_d_eq_2k: 2k exceeds dimension cap");
  const Dimension dim(2 * k);
  ZSequence s(dim);
  for (int i = 0; i < 2 * k - 1; ++i) s.push_back(Element::zero(dim));
  for (int i = 1; i <= 2 * k; ++i) s.push_back(Element::basis(dim, i));
  s.push_back(Element::all_ones(dim));
  return s;
}

ZSequence construct_two_d_plus_two(int d) {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument(
        "construct_two_d_plus_two: d must be odd and >= 3 "
        "(the sequence is not zero-sum for even d)");
  if (d > Dimension::kMax)
    throw std::invalid_argument("construct_two_d_plus_two: d exceeds dimension cap");
  const Dimension dim(d);
  const std::uint64_t head_sum = (std::uint64_t{1} << (d - 1)) - 1;  // e_1+..+e_{d-1}
  const std::uint64_t last = std::uint64_t{1} << (d - 1);            // e_d

  ZSequence s(dim);
  s.push_back_bits(0);
  for (int i = 0; i < d - 1; ++i) s.push_back_bits(std::uint64_t{1} << i);
  s.push_back_bits(head_sum);
  s.push_back_bits(last);
  for (int i = 0; i < d - 1; ++i) s.push_back_bits(last | (std::uint64_t{1} << i));
  s.push_back_bits(last | head_sum);
  return s;
}

std::pair<Element, ZSequence> translate_to_zero_sum(const ZSequence& s) {
  if (s.size() % 2 == 0)
    throw std::invalid_argument(
        "translate_to_zero_sum: sequence length must be odd");
  const Element x = seq_sum(s);
  ZSequence t(s.dim());
  for (std::uint64_t b : s.raw()) t.push_back_bits(b ^ x.bits());
  return {x, t};
}

}  // namespace egz
