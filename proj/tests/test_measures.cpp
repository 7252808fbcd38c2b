#include <doctest.h>

#include "fixtures.hpp"
#include "omega/error.hpp"

using namespace omega;

TEST_CASE("empirical cylinder measures") {
  auto a = empirical_measure(parse_word("0101"), 1, 2);
  CHECK(a.weight(parse_word("0")) == doctest::Approx(0.5));
  CHECK(a.weight(parse_word("1")) == doctest::Approx(0.5));
  auto b = empirical_measure(parse_word("0000"), 2, 2);
  CHECK(b.weight(parse_word("00")) == doctest::Approx(1));
  auto c = empirical_measure(parse_word("0110"), 2, 2);
  CHECK(c.weight(parse_word("01")) == doctest::Approx(1.0 / 3));
  CHECK(c.weight(parse_word("11")) == doctest::Approx(1.0 / 3));
  CHECK(c.weight(parse_word("10")) == doctest::Approx(1.0 / 3));
  CHECK(c.weight(parse_word("00")) == doctest::Approx(0));
}

TEST_CASE("weak star distance between fixed points") {
  auto z = fx::periodic(2, "0"), o = fx::periodic(2, "1");
  CHECK(weak_star_distance(z, z, 8).value == 0);
  // cylinders in order 0,1,00,01,10,11,000,001: the two measures differ by 1
  // on 0, 1, 00, 11, 000; the tail term j = 8 is cylinder 001
  double oracle = 0;
  std::vector<int> differ = {1, 1, 1, 0, 0, 1, 1, 0};
  for (int j = 1; j <= 8; ++j) oracle += differ[j - 1] * std::ldexp(1.0, -j);
  auto r = weak_star_distance(z, o, 8);
  CHECK(r.value == doctest::Approx(oracle));
  CHECK(r.value <= 2);
}

TEST_CASE("weak star truncation bound and diameter") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    Word a(60), b(60);
    for (auto& c : a) c = Symbol(rng.below(3));
    for (auto& c : b) c = Symbol(rng.below(rng.below(2) ? 3 : 1));
    const int J = 2 + int(rng.below(8));
    auto ea = empirical_measure(a, rho_depth(3, J + 5), 3), eb = empirical_measure(b, rho_depth(3, J + 5), 3);
    double short_ = weak_star_distance(ea, eb, J).value, long_ = weak_star_distance(ea, eb, J + 5).value;
    CHECK(std::abs(long_ - short_) <= std::ldexp(1.0, 1 - J) + 1e-12);
    CHECK(long_ <= 2);
  }
}

TEST_CASE("empirical measures of subwords stay close") {
  Rng rng(23);
  const int J = 8, d = rho_depth(2, J);
  for (int t = 0; t < 200; ++t) {
    const int n = 50 + int(rng.below(200));
    Word w(n);
    for (auto& c : w) c = Symbol(rng.below(2));
    const int mm = 1 + int(rng.below(n - 1)), k = int(rng.below(mm));
    Word sub(w.begin() + k, w.begin() + mm);
    if (int(sub.size()) < d) continue;
    double r = weak_star_distance(empirical_measure(w, d, 2), empirical_measure(sub, d, 2), J).value;
    CHECK(r <= 2.0 * (n - mm + k) / n + std::ldexp(1.0, 1 - J) + 2.0 * d / double(sub.size()));
  }
}

TEST_CASE("markov invariants") {
  auto a = markov_invariants(2, {0.5, 0.5, 0.5, 0.5});
  CHECK(a.pi[0] == doctest::Approx(0.5));
  CHECK(a.entropy == doctest::Approx(std::log(2.0)));
  auto b = markov_invariants(2, {0, 1, 1, 0});
  CHECK(b.pi[1] == doctest::Approx(0.5));
  CHECK(b.entropy == doctest::Approx(0));
  auto c = markov_invariants(2, {0.5, 0.5, 1, 0});
  CHECK(c.pi[0] == doctest::Approx(2.0 / 3));
  CHECK(c.pi[1] == doctest::Approx(1.0 / 3));
  CHECK(c.entropy == doctest::Approx(2.0 / 3 * std::log(2.0)));
  CHECK(c.support == SftDescr::from_matrix(2, {1, 1, 1, 0}));
  CHECK_THROWS_AS(markov_invariants(2, {0.5, 0.6, 1, 0}), Error);
}

TEST_CASE("mixtures of cylinder tables") {
  auto mu = fx::bernoulli({0.3, 0.7});
  auto single = mix({{1.0, mu}}, 3);
  auto direct = cylinder_table(mu, 3);
  for (size_t i = 0; i < direct.top().size(); ++i) CHECK(single.top()[i] == doctest::Approx(direct.top()[i]));

  auto half = mix({{0.5, fx::periodic(2, "0")}, {0.5, fx::periodic(2, "1")}}, 1);
  CHECK(half.weight(parse_word("0")) == doctest::Approx(0.5));

  auto m2 = mix({{0.5, fx::bernoulli({0.2, 0.8})}, {0.5, fx::bernoulli({0.8, 0.2})}}, 2);
  CHECK(m2.weight(parse_word("0")) == doctest::Approx(0.5));
  CHECK(m2.weight(parse_word("00")) == doctest::Approx(0.34));
  CHECK(m2.weight(parse_word("00")) != doctest::Approx(0.25));
}

TEST_CASE("cylinder weights are consistent") {
  auto gm = fx::golden_mean();
  auto t = cylinder_table(gm, 4);
  for (std::uint64_t i = 0; i < 8; ++i) {
    Word w = word_from_index(i, 3, 2);
    Word w0 = w, w1 = w;
    w0.push_back(0), w1.push_back(1);
    CHECK(t.weight(w) == doctest::Approx(t.weight(w0) + t.weight(w1)));
  }
  CHECK(t.weight(parse_word("11")) == 0);
}

TEST_CASE("entropy of mixtures is linear") {
  auto a = MarkovMeasure::bernoulli({0.5, 0.5}), b = MarkovMeasure::bernoulli({0.9, 0.1});
  MixedMeasure mm{2, {{Rational(1, 4), a}, {Rational(3, 4), b}}};
  CHECK(mm.entropy() == doctest::Approx(0.25 * std::log(2.0) + 0.75 * fx::H(0.9)));
  CHECK(binary_entropy(0.25) == doctest::Approx(fx::H(0.25)));
}
