#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "omega/error.hpp"
#include "omega/json_io.hpp"
#include "omega/sft.hpp"

using namespace omega;

namespace {

// all m^n words filtered by the transition matrix
std::vector<Word> brute_language(int m, const std::vector<std::uint8_t>& A, int n) {
  std::vector<Word> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word w = word_from_index(idx, n, m);
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = A[w[i] * m + w[i + 1]];
    if (ok) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("sft_language small cases") {
  auto words = sft_language(SftDescr::full(2), 2);
  REQUIRE(words.size() == 4);
  CHECK(to_string(words[0]) == "00");
  CHECK(to_string(words[3]) == "11");
  auto gm = SftDescr::from_matrix(2, {1, 1, 1, 0});
  auto g3 = sft_language(gm, 3);
  CHECK(g3 == brute_language(2, {1, 1, 1, 0}, 3));
  CHECK(g3.size() == 5);
  for (auto& w : g3) CHECK(to_string(w).find("11") == std::string::npos);
  auto one = sft_language(SftDescr::full(3), 1);
  CHECK(one == std::vector<Word>{{0}, {1}, {2}});
}

TEST_CASE("golden mean word counts follow Fibonacci") {
  auto gm = SftDescr::from_matrix(2, {1, 1, 1, 0});
  BigInt a = sft_word_count(gm, 1), b = sft_word_count(gm, 2);
  CHECK(a == 2);
  CHECK(b == 3);
  for (int n = 3; n <= 40; ++n) {
    BigInt c = sft_word_count(gm, n);
    CHECK(c == a + b);
    a = b, b = c;
  }
  for (int n = 1; n <= 14; ++n) CHECK(sft_language(gm, n).size() == brute_language(2, {1, 1, 1, 0}, n).size());
}

TEST_CASE("random matrices agree with brute force languages") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    int m = 2 + int(rng.below(3));
    std::vector<std::uint8_t> A(m * m);
    for (auto& x : A) x = rng.below(3) != 0;
    for (int a = 0; a < m; ++a) A[a * m + a] = 1;
    auto sft = SftDescr::from_matrix(m, A);
    for (int n = 1; n <= 6; ++n) {
      auto ref = brute_language(m, A, n);
      CHECK(sft_language(sft, n) == ref);
      CHECK(sft_word_count(sft, n) == BigInt(ref.size()));
    }
  }
}

TEST_CASE("shift_distance values") {
  CHECK(shift_distance(parse_word("0110"), parse_word("0110")) == 0);
  CHECK(shift_distance(parse_word("0110"), parse_word("0111")) == Rational(1, 8));
  CHECK(shift_distance(parse_word("10"), parse_word("00")) == 1);
}

TEST_CASE("shift_distance is an ultrametric") {
  Rng rng(11);
  for (int t = 0; t < 10000; ++t) {
    Word x(12), y(12), z(12);
    for (int i = 0; i < 12; ++i) {
      x[i] = Symbol(rng.below(2));
      y[i] = rng.below(4) ? x[i] : Symbol(rng.below(2));
      z[i] = rng.below(4) ? y[i] : Symbol(rng.below(2));
    }
    auto dxz = shift_distance(x, z), dxy = shift_distance(x, y), dyz = shift_distance(y, z);
    REQUIRE(dxz <= std::max(dxy, dyz));
    CHECK(dxy == shift_distance(y, x));
  }
}

TEST_CASE("schedule_prefix examples") {
  auto s = fx::one_phase(fx::periodic(2, "01"), Template{2, 0, 2, 0});
  CHECK(to_string(schedule_prefix(s, 5)) == "01010");

  auto b = fx::one_phase(fx::bernoulli({0.5, 0.5}));
  b.ambient = SftDescr::full(3);
  b.lambda = SftDescr::full_on(3, {0, 1});
  b.phases[0].gen = MixedMeasure::of(MarkovMeasure::bernoulli(3, {{0, 0.5}, {1, 0.5}}));
  b.prefix = parse_word("2");
  b.seed = 7;
  CHECK(to_string(schedule_prefix(b, 1)) == "2");

  auto d = fx::alternating(fx::periodic(2, "0"), fx::periodic(2, "1"));
  CHECK(to_string(schedule_prefix(d, 7)) == "0110000");
  CHECK(to_string(schedule_prefix(d, 15)) == "011000011111111");
}

TEST_CASE("schedule prefixes are consistent") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto s = fx::random_schedule(seed);
    Word big = schedule_prefix(s, 3000);
    REQUIRE(big.size() == 3000);
    for (std::uint64_t N : {1, 17, 256, 1999}) {
      Word small = schedule_prefix(s, N);
      CHECK(std::equal(small.begin(), small.end(), big.begin()));
    }
    for (size_t i = 0; i + 1 < big.size(); ++i) REQUIRE(s.ambient.allows(big[i], big[i + 1]));
  }
}

TEST_CASE("schedule validation rejects bad input") {
  auto s = fx::one_phase(fx::periodic(2, "01"), Template::constant(3));
  CHECK_THROWS_AS(schedule_prefix(s, 4), Error);
  auto big = fx::one_phase(fx::periodic(2, "01"));
  CHECK_THROWS_AS(schedule_prefix(big, kDefaultPrefixCap + 1), Error);
}

TEST_CASE("json round trips") {
  auto s = fx::alternating(fx::periodic(2, "0"), fx::bernoulli({0.25, 0.75}));
  s.seed = 42;
  auto back = schedule_from_json(to_json(s));
  CHECK(to_json(back).dump() == to_json(s).dump());
  CHECK(schedule_prefix(back, 500) == schedule_prefix(s, 500));
  CHECK(to_json(s)["format"] == 1);

  auto gm = SftDescr::from_matrix(2, {1, 1, 1, 0});
  CHECK(sft_from_json(to_json(gm)) == gm);
}

TEST_CASE("word index round trip") {
  for (std::uint64_t i = 0; i < 81; ++i) CHECK(word_index(word_from_index(i, 4, 3), 3) == i);
  CHECK(to_string(parse_word("0a9z")) == "0a9z");
}
