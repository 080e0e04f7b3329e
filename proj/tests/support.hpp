// Shared helpers for the test suites: deterministic RNG, random sequences,
// random invertible linear maps (upper-triangular-unit-diagonal times a
// coordinate permutation), full GL(d,2) enumeration for small d, and an
// orbit-minimum oracle built on it.

#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <vector>

#include "egz/algebra.hpp"

namespace egz_test {

// (Lx)_i = parity(rows[i] & x).
struct LinMap {
  int d = 0;
  std::vector<std::uint64_t> rows;

  std::uint64_t apply(std::uint64_t x) const {
    std::uint64_t y = 0;
    for (int i = 0; i < d; ++i)
      y |= static_cast<std::uint64_t>(std::popcount(rows[static_cast<std::size_t>(i)] & x) & 1)
           << i;
    return y;
  }
};

inline bool is_invertible(const LinMap& m) {
  std::vector<std::uint64_t> rows = m.rows;
  for (int col = 0; col < m.d; ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = static_cast<std::size_t>(col); i < rows.size(); ++i)
      if ((rows[i] >> col) & 1) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) return false;
    std::swap(rows[static_cast<std::size_t>(col)], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<std::size_t>(col) && ((rows[i] >> col) & 1))
        rows[i] ^= rows[static_cast<std::size_t>(col)];
  }
  return true;
}

inline LinMap random_invertible(int d, std::mt19937_64& rng) {
  // Upper triangular with unit diagonal, then a coordinate permutation.
  std::vector<std::uint64_t> upper(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::uint64_t row = std::uint64_t{1} << i;
    for (int j = i + 1; j < d; ++j)
      if (rng() & 1) row |= std::uint64_t{1} << j;
    upper[static_cast<std::size_t>(i)] = row;
  }
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);

  // L = U o P with (Px)_j = x_{perm[j]}.
  LinMap m;
  m.d = d;
  m.rows.assign(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < d; ++i) {
    std::uint64_t mask = 0;
    for (int j = 0; j < d; ++j)
      if ((upper[static_cast<std::size_t>(i)] >> j) & 1)
        mask |= std::uint64_t{1} << perm[static_cast<std::size_t>(j)];
    m.rows[static_cast<std::size_t>(i)] = mask;
  }
  return m;
}

// All of GL(d,2); feasible for d <= 4.
inline std::vector<LinMap> enumerate_gl(int d) {
  std::vector<LinMap> out;
  const std::uint64_t per_row = std::uint64_t{1} << d;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(d));
  const std::uint64_t total = std::uint64_t{1} << (d * d);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < d; ++i) {
      rows[static_cast<std::size_t>(i)] = c % per_row;
      c /= per_row;
    }
    LinMap m{d, rows};
    if (is_invertible(m)) out.push_back(std::move(m));
  }
  return out;
}

inline egz::ZSequence apply_map(const LinMap& m, const egz::ZSequence& s) {
  egz::ZSequence out(s.dim());
  for (std::uint64_t b : s.raw()) out.push_back_bits(m.apply(b));
  return out;
}

inline egz::ZSequence shuffle_positions(const egz::ZSequence& s,
                                        std::mt19937_64& rng) {
  std::vector<std::uint64_t> bits = s.raw();
  std::shuffle(bits.begin(), bits.end(), rng);
  return egz::ZSequence::from_bits(s.dim(), bits);
}

inline egz::ZSequence random_sequence(egz::Dimension dim, std::size_t n,
                                      std::mt19937_64& rng) {
  egz::ZSequence s(dim);
  for (std::size_t i = 0; i < n; ++i)
    s.push_back_bits(rng() & (dim.order() - 1));
  return s;
}

inline egz::ZSequence random_zero_sum(egz::Dimension dim, std::size_t n,
                                      std::mt19937_64& rng) {
  egz::ZSequence s(dim);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::uint64_t b = rng() & (dim.order() - 1);
    acc ^= b;
    s.push_back_bits(b);
  }
  if (n > 0) s.push_back_bits(acc);
  return s;
}

// Orbit-minimum oracle: min over all of GL(d,2) of the sorted image.
inline std::vector<std::uint64_t> min_image_oracle(
    const egz::ZSequence& s, const std::vector<LinMap>& gl) {
  std::vector<std::uint64_t> best;
  bool have = false;
  for (const LinMap& m : gl) {
    std::vector<std::uint64_t> img;
    img.reserve(s.size());
    for (std::uint64_t b : s.raw()) img.push_back(m.apply(b));
    std::sort(img.begin(), img.end());
    if (!have || img < best) {
      best = std::move(img);
      have = true;
    }
  }
  return best;
}

}  // namespace egz_test
