#include <doctest.h>

#include "fixtures.hpp"
#include "omega/entropy.hpp"
#include "omega/error.hpp"
#include "omega/synthesis.hpp"

using namespace omega;

namespace {

// words are separated when some window of length k differs
bool separated(const Word& a, const Word& b, int k) {
  for (size_t i = 0; i + k <= a.size(); ++i)
    if (!std::equal(a.begin() + i, a.begin() + i + k, b.begin() + i)) return true;
  return false;
}

std::vector<Word> all_words(int m, int n) {
  std::vector<Word> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(word_from_index(i, n, m));
  return out;
}

}  // namespace

TEST_CASE("sft entropy examples") {
  CHECK(sft_entropy(SftDescr::full(2)).value == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  auto gm = sft_entropy(SftDescr::from_matrix(2, {1, 1, 1, 0}));
  CHECK(std::abs(gm.value - std::log((1 + std::sqrt(5.0)) / 2)) < 1e-9);
  CHECK(sft_entropy(SftDescr::from_matrix(1, {1})).value == 0);
  CHECK(std::abs(counting_entropy(SftDescr::from_matrix(2, {1, 1, 1, 0}), 20) - 0.481212) < 1e-2);
  CHECK(counting_entropy(SftDescr::full(2), 20) == std::log(2.0));
}

TEST_CASE("separated counts") {
  for (int n = 1; n <= 8; ++n)
    CHECK(separated_count(all_words(2, n), 1) == (std::uint64_t(1) << n));
  CHECK(separated_count({parse_word("0000"), parse_word("0001")}, 1) == 2);
  CHECK(separated_count({parse_word("0000")}, 9) == 1);
  CHECK_THROWS_AS(separated_count({parse_word("00"), parse_word("000")}, 1), Error);
}

TEST_CASE("separated counts agree with greedy brute force and are monotone") {
  Rng rng(41);
  for (int t = 0; t < 60; ++t) {
    const int n = 4 + int(rng.below(5));
    std::vector<Word> ws(10 + rng.below(40));
    for (auto& w : ws) {
      w.resize(n);
      for (auto& c : w) c = Symbol(rng.below(2));
    }
    std::uint64_t prev = ~0ULL;
    for (int k = 1; k <= n; ++k) {
      std::vector<Word> chosen;
      for (auto& w : ws) {
        bool ok = true;
        for (auto& c : chosen) ok = ok && separated(w, c, k);
        if (ok) chosen.push_back(w);
      }
      auto got = separated_count(ws, k);
      CHECK(got == chosen.size());
      CHECK(got <= prev);
      prev = got;
    }
  }
}

TEST_CASE("Bowen count on the full shift") {
  for (int n = 2; n <= 10; ++n)
    CHECK(std::log(double(separated_count(all_words(2, n), 1))) / n == doctest::Approx(std::log(2.0)));
}

TEST_CASE("Katok estimates") {
  auto fair = katok_entropy_estimate(MarkovMeasure::bernoulli({0.5, 0.5}), 0.5, 24);
  REQUIRE_FALSE(fair.series.empty());
  CHECK(fair.series.back().first == 24);
  CHECK(fair.series.back().second == doctest::Approx(23 * std::log(2.0) / 24));
  CHECK(std::abs(fair.value - std::log(2.0)) < 0.05);
  auto dirac = katok_entropy_estimate(MarkovMeasure::bernoulli(2, {{0, 1.0}}), 0.5, 24);
  CHECK(dirac.value == doctest::Approx(0));
  auto skew = katok_entropy_estimate(MarkovMeasure::bernoulli({0.9, 0.1}), 0.5, 24);
  CHECK(std::abs(skew.value - fx::H(0.9)) < 0.05);
}

TEST_CASE("Katok estimates converge for Markov measures") {
  for (auto P : {std::vector<double>{0.5, 0.5, 1, 0}, std::vector<double>{0.7, 0.3, 0.4, 0.6}}) {
    auto mu = MarkovMeasure::from_matrix(2, P);
    CHECK(std::abs(katok_entropy_estimate(mu, 0.5, 24).value - mu.entropy()) <= 0.05);
  }
}

TEST_CASE("family entropy bounds") {
  SynthesisConfig cfg;
  cfg.lambda = SftDescr::full(2);
  cfg.eta = 0.05;
  cfg.target.vertices = {fx::bernoulli({0.5, 0.5})};
  auto a = family_entropy_bound(cfg);
  CHECK(a.value == doctest::Approx(std::log(2.0) - 0.1));
  cfg.target.vertices = {fx::periodic(2, "0"), fx::bernoulli({0.5, 0.5})};
  CHECK(family_entropy_bound(cfg).value == 0);
  cfg.target.vertices = {fx::bernoulli({0.4, 0.6}), fx::bernoulli({0.6, 0.4})};
  CHECK(family_entropy_bound(cfg).value == doctest::Approx(fx::H(0.4) - 0.1));
}
