#include <doctest.h>

#include "egz/constants.hpp"
#include "egz/constructions.hpp"
#include "egz/engine.hpp"
#include "support.hpp"

using namespace egz;

TEST_CASE("construct_d_eq_2k: k = 1 instance") {
  const ZSequence s = construct_d_eq_2k(1);
  CHECK(s.dim().value() == 2);
  CHECK(s.raw() == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(is_zero_sum(s));
  CHECK_FALSE(exists_exact(s, 2));
}

TEST_CASE("construct_d_eq_2k: certificate properties for small k") {
  for (int k = 1; k <= 6; ++k) {
    const ZSequence s = construct_d_eq_2k(k);
    CHECK(s.dim().value() == 2 * k);
    CHECK(s.size() == static_cast<std::size_t>(4 * k));
    CHECK(static_cast<int>(s.size()) == eval_s(k, 2 * k) - 1);
    CHECK(is_zero_sum(s));
    CHECK_FALSE(exists_exact(s, static_cast<std::size_t>(2 * k)));
    if (k <= 4)
      CHECK_FALSE(naive_exists(s, static_cast<std::size_t>(2 * k)));
  }
}

TEST_CASE("construct_d_eq_2k: bounds") {
  CHECK_THROWS_AS(construct_d_eq_2k(0), std::invalid_argument);
  CHECK_THROWS_AS(construct_d_eq_2k(21), std::invalid_argument);
}

TEST_CASE("construct_two_d_plus_two: d = 3 lists the whole group") {
  const ZSequence s = construct_two_d_plus_two(3);
  CHECK(s.size() == 8);
  CHECK(s.raw() == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(is_zero_sum(s));
  // d = 2k-3 for k = 3: no zero-sum subsequence of length 6; the
  // complement view shows it (two equal discarded items would be needed).
  CHECK_FALSE(exists_exact(s, 6));
  CHECK_FALSE(naive_exists(s, 6));
}

TEST_CASE("construct_two_d_plus_two: rejects even or small d") {
  CHECK_THROWS_AS(construct_two_d_plus_two(4), std::invalid_argument);
  CHECK_THROWS_AS(construct_two_d_plus_two(1), std::invalid_argument);
  CHECK_THROWS_AS(construct_two_d_plus_two(41), std::invalid_argument);
}

TEST_CASE("construct_two_d_plus_two: the claim holds where asserted") {
  // For odd k and d in {2k+1, 2k-3}: length 2d+2 = eval_s(k, d) - 1 and no
  // zero-sum 2k-subsequence.
  for (int k : {3, 5, 7}) {
    for (int d : {2 * k + 1, 2 * k - 3}) {
      if (d < 3) continue;
      const ZSequence s = construct_two_d_plus_two(d);
      CHECK(s.size() == static_cast<std::size_t>(2 * d + 2));
      CHECK(static_cast<int>(s.size()) == eval_s(k, d) - 1);
      CHECK(is_zero_sum(s));
      CHECK_FALSE(exists_exact(s, static_cast<std::size_t>(2 * k)));
    }
  }
  // The generator itself is defined for every odd d >= 3, whether or not a
  // matching k exists; zero-sum always holds.
  for (int d : {5, 9, 13}) CHECK(is_zero_sum(construct_two_d_plus_two(d)));
}

TEST_CASE("translate_to_zero_sum: stated examples") {
  const Dimension d3(3);
  {
    const ZSequence s = ZSequence::from_bits(d3, {0b001});
    const auto [x, t] = translate_to_zero_sum(s);
    CHECK(x.bits() == 0b001);
    CHECK(t.raw() == std::vector<std::uint64_t>{0});
  }
  {
    const ZSequence s = ZSequence::from_bits(d3, {0b001, 0b010, 0b100});
    const auto [x, t] = translate_to_zero_sum(s);
    CHECK(x.bits() == 0b111);
    CHECK(t.raw() == std::vector<std::uint64_t>{0b110, 0b101, 0b011});
    CHECK(is_zero_sum(t));
  }
  CHECK_THROWS_AS(translate_to_zero_sum(ZSequence::from_bits(d3, {1, 2})),
                  std::invalid_argument);
}

TEST_CASE("translate_to_zero_sum: invariants on random odd-length inputs") {
  std::mt19937_64 rng(0x5eed2001);
  for (int trial = 0; trial < 2000; ++trial) {
    const Dimension dim(1 + static_cast<int>(rng() % 5));
    const std::size_t n = 1 + 2 * (rng() % 7);
    const ZSequence s = egz_test::random_sequence(dim, n, rng);
    const auto [x, t] = translate_to_zero_sum(s);
    CHECK(is_zero_sum(t));
    for (std::size_t i = 0; i < n; ++i)
      CHECK((s.raw()[i] ^ t.raw()[i]) == x.bits());
    // Idempotence: translating again moves by zero.
    const auto [x2, t2] = translate_to_zero_sum(t);
    CHECK(x2.is_zero());
    CHECK(t2 == t);
  }
}

TEST_CASE("translation preserves the witness sets of even lengths") {
  std::mt19937_64 rng(0x5eed2002);
  for (int trial = 0; trial < 400; ++trial) {
    const Dimension dim(1 + static_cast<int>(rng() % 3));
    const std::size_t n = 1 + 2 * (rng() % 5);
    const ZSequence s = egz_test::random_sequence(dim, n, rng);
    const auto [x, t] = translate_to_zero_sum(s);
    for (std::size_t r = 0; r <= n; r += 2) {
      // Literal equality of the witness position sets, not just existence.
      std::vector<std::vector<std::size_t>> ws, wt;
      const std::size_t count = s.size();
      std::vector<std::size_t> idx;
      const auto collect = [&](const ZSequence& seq,
                               std::vector<std::vector<std::size_t>>& out) {
        std::vector<std::size_t> pick;
        const auto rec = [&](auto&& self, std::size_t start) -> void {
          if (pick.size() == r) {
            std::uint64_t acc = 0;
            for (std::size_t p : pick) acc ^= seq.raw()[p];
            if (acc == 0) out.push_back(pick);
            return;
          }
          for (std::size_t i = start; i < count; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
          }
        };
        rec(rec, 0);
      };
      collect(s, ws);
      collect(t, wt);
      CHECK(ws == wt);
    }
  }
}

TEST_CASE("translating a plain certificate realizes the lower bound") {
  // A brute-force extremal certificate for s, trimmed to odd length,
  // translates to a zero-sum sequence of the same length with no zero-sum
  // r-subsequence.
  const auto res = brute_s(Dimension(3), 4);
  REQUIRE(res.decided);
  REQUIRE(res.extremal.has_value());
  ZSequence cert = *res.extremal;
  if (cert.size() % 2 == 0) {
    ZSequence trimmed(cert.dim());
    for (std::size_t i = 0; i + 1 < cert.size(); ++i)
      trimmed.push_back_bits(cert.raw()[i]);
    cert = trimmed;
  }
  REQUIRE(cert.size() % 2 == 1);
  CHECK_FALSE(exists_exact(cert, 4));
  const auto [x, t] = translate_to_zero_sum(cert);
  CHECK(is_zero_sum(t));
  CHECK(t.size() == cert.size());
  CHECK_FALSE(exists_exact(t, 4));
}
