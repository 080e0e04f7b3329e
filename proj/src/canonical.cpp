// Exact minimal image of a sequence under the joint action of GL(d,2) on
// items and permutation of positions.
//
// The minimal sorted image is always produced by a linear map determined by
// an ordered independent list of item values b_1,..,b_m sent to the standard
// basis e_1,..,e_m: processing the optimal image in ascending order, every
// item that extends the span of its predecessors must land on the next
// standard basis vector, otherwise a map fixing the prefix and shrinking
// that item would produce a lexicographically smaller image. The search
// below enumerates those ordered lists depth-first. At level m the chosen
// b_m contributes the image segment of all items in the coset b_m + U_{m-1},
// which lies entirely in [2^(m-1), 2^m), so the sorted image is the
// concatenation of per-level segments and branches compare against the
// incumbent best prefix as they grow.

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <stdexcept>

#include "egz/algebra.hpp"

namespace egz {

namespace {

constexpr std::uint64_t kStateCap = 8'000'000;

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

struct MinImageSearch {
  std::vector<std::pair<std::uint64_t, int>> vals;  // distinct value, multiplicity
  std::size_t n = 0;

  std::vector<std::uint64_t> flat;
  std::vector<std::uint64_t> best;
  bool have_best = false;
  std::uint64_t states = 0;

  // GF(2) echelon rows indexed by pivot (highest set bit), with the
  // combination over the chosen basis items tracked alongside.
  std::array<std::uint64_t, 64> row_vec{};
  std::array<std::uint64_t, 64> row_coeff{};
  std::uint64_t pivot_mask = 0;
  int chosen = 0;

  bool in_span(std::uint64_t u, std::uint64_t* coords) const {
    std::uint64_t c = 0;
    while (u) {
      const int p = 63 - std::countl_zero(u);
      if (!((pivot_mask >> p) & 1)) return false;
      u ^= row_vec[static_cast<std::size_t>(p)];
      c ^= row_coeff[static_cast<std::size_t>(p)];
    }
    if (coords) *coords = c;
    return true;
  }

  int push_basis(std::uint64_t b) {
    std::uint64_t u = b;
    std::uint64_t c = std::uint64_t{1} << chosen;
    while (u) {
      const int p = 63 - std::countl_zero(u);
      if (!((pivot_mask >> p) & 1)) {
        row_vec[static_cast<std::size_t>(p)] = u;
        row_coeff[static_cast<std::size_t>(p)] = c;
        pivot_mask |= std::uint64_t{1} << p;
        ++chosen;
        return p;
      }
      u ^= row_vec[static_cast<std::size_t>(p)];
      c ^= row_coeff[static_cast<std::size_t>(p)];
    }
    throw std::logic_error("push_basis: item already in span");
  }

  void pop_basis(int p) {
    pivot_mask &= ~(std::uint64_t{1} << p);
    --chosen;
  }

  // Sorted images of the items in the coset b + span(current basis).
  std::vector<std::uint64_t> segment(std::uint64_t b) const {
    std::vector<std::uint64_t> seg;
    const std::uint64_t lead = std::uint64_t{1} << chosen;
    for (const auto& [v, mult] : vals) {
      if (v == 0) continue;
      std::uint64_t c = 0;
      if (!in_span(v ^ b, &c)) continue;
      for (int t = 0; t < mult; ++t) seg.push_back(lead | c);
    }
    std::sort(seg.begin(), seg.end());
    return seg;
  }

  void dfs(bool strictly_less) {
    if (++states > kStateCap)
      throw std::runtime_error("canonical_key: search cap exceeded (input too symmetric)");

    std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> cands;
    for (const auto& [v, mult] : vals) {
      (void)mult;
      if (v != 0 && !in_span(v, nullptr)) cands.emplace_back(segment(v), v);
    }

    if (cands.empty()) {
      // Compare against the live incumbent: the strictly_less flag may be
      // stale once a deeper branch has already improved on the best that
      // the flag was computed against.
      if (!have_best || flat < best) {
        best = flat;
        have_best = true;
      }
      return;
    }

    std::sort(cands.begin(), cands.end());
    for (const auto& [seg, b] : cands) {
      bool less = strictly_less;
      bool prune = false;
      if (have_best && !less) {
        for (std::size_t i = 0; i < seg.size(); ++i) {
          const std::uint64_t bv = best[flat.size() + i];
          if (seg[i] > bv) { prune = true; break; }
          if (seg[i] < bv) { less = true; break; }
        }
      }
      if (prune) continue;

      const std::size_t save = flat.size();
      flat.insert(flat.end(), seg.begin(), seg.end());
      const int p = push_basis(b);
      dfs(less);
      pop_basis(p);
      flat.resize(save);
    }
  }
};

}  // namespace

std::vector<std::uint64_t> canonical_image(const ZSequence& s) {
  MinImageSearch search;
  search.n = s.size();

  std::vector<std::uint64_t> sorted(s.raw());
  std::sort(sorted.begin(), sorted.end());
  int zero_count = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (sorted[i] == 0)
      zero_count = static_cast<int>(j - i);
    else
      search.vals.emplace_back(sorted[i], static_cast<int>(j - i));
    i = j;
  }

  search.flat.assign(static_cast<std::size_t>(zero_count), 0);
  search.dfs(false);
  return search.best;
}

CanonicalKey canonical_key(const ZSequence& s) {
  // Cheap orbit invariants lead the byte string: length, dimension, rank,
  // zero count, zero-sum flag and the multiplicity profile. The exact
  // minimal image follows and decides equality.
  std::vector<int> profile;
  int zero_count = 0;
  std::uint64_t rank_mask = 0;
  int rank = 0;
  {
    std::vector<std::uint64_t> sorted(s.raw());
    std::sort(sorted.begin(), sorted.end());
    std::array<std::uint64_t, 64> rows{};
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      if (sorted[i] == 0)
        zero_count = static_cast<int>(j - i);
      else
        profile.push_back(static_cast<int>(j - i));
      std::uint64_t u = sorted[i];
      while (u) {
        const int p = 63 - std::countl_zero(u);
        if (!((rank_mask >> p) & 1)) {
          rows[static_cast<std::size_t>(p)] = u;
          rank_mask |= std::uint64_t{1} << p;
          ++rank;
          break;
        }
        u ^= rows[static_cast<std::size_t>(p)];
      }
      i = j;
    }
    std::sort(profile.rbegin(), profile.rend());
  }

  CanonicalKey key;
  std::string& out = key.bytes;
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.push_back(static_cast<char>(s.dim().value()));
  out.push_back(static_cast<char>(rank));
  put_u32(out, static_cast<std::uint32_t>(zero_count));
  out.push_back(is_zero_sum(s) ? 1 : 0);
  put_u32(out, static_cast<std::uint32_t>(profile.size()));
  for (int m : profile) put_u32(out, static_cast<std::uint32_t>(m));

  for (std::uint64_t v : canonical_image(s)) put_u64(out, v);
  return key;
}

}  // namespace egz
