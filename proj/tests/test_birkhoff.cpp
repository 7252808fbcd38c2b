#include <doctest.h>

#include "fixtures.hpp"
#include "omega/birkhoff.hpp"
#include "omega/error.hpp"
#include "omega/limit_sets.hpp"
#include "omega/synthesis.hpp"

using namespace omega;

namespace {

// max entropy over Bernoulli(p) with p on a 0.001 grid, subject to |p - a| small
double bernoulli_grid(double a) {
  double best = -1;
  for (int i = 0; i <= 1000; ++i) {
    double p = i / 1000.0;
    if (std::abs(p - a) < 5e-4) best = std::max(best, fx::H(p));
  }
  return best;
}

}  // namespace

TEST_CASE("Birkhoff bounds of simple schedules") {
  auto phi = Observable::indicator(2, parse_word("1"));
  auto z = birkhoff_bounds(fx::one_phase(fx::periodic(2, "0")), phi);
  CHECK(z.liminf == 0);
  CHECK(z.limsup == 0);
  CHECK(z.kind == RegularityKind::Regular);

  auto d = fx::alternating(fx::periodic(2, "0"), fx::periodic(2, "1"));
  auto r = birkhoff_bounds(d, phi);
  CHECK(r.liminf == doctest::Approx(1.0 / 3));
  CHECK(r.limsup == doctest::Approx(2.0 / 3));
  CHECK(r.kind == RegularityKind::Irregular);
  // prefix averages along the block ends approach the same values
  Word x = schedule_prefix(d, (1 << 23) - 1);
  double ones = 0, lo = 1, hi = 0;
  std::uint64_t end = 1;
  for (std::uint64_t i = 0; i < x.size(); ++i) {
    ones += x[i];
    if (i + 1 == end) {
      if (end > 1000) lo = std::min(lo, ones / (i + 1)), hi = std::max(hi, ones / (i + 1));
      end = 2 * end + 1;
    }
  }
  CHECK(std::abs(lo - 1.0 / 3) < 1e-3);
  CHECK(std::abs(hi - 2.0 / 3) < 1e-3);

  SynthesisConfig cfg;
  cfg.lambda = SftDescr::full(2);
  cfg.target.vertices = {fx::periodic(2, "0"), fx::periodic(2, "1")};
  auto seg = birkhoff_bounds(build_saturated_schedule(cfg), phi);
  CHECK(seg.liminf == doctest::Approx(0));
  CHECK(seg.limsup == doctest::Approx(1));
}

TEST_CASE("Birkhoff bounds are extrema over the polyline vertices") {
  auto phi = Observable::parse(2, "2:0,0.25,1,0.5");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = fx::random_schedule(seed);
    if (s.alphabet() != 2) continue;
    auto vf = vf_limits(s, 2);
    double lo = 1e9, hi = -1e9;
    for (auto& v : vf.polyline.vertices) lo = std::min(lo, phi.integral(v)), hi = std::max(hi, phi.integral(v));
    auto r = birkhoff_bounds(s, phi, 1 << 12);
    CHECK(r.liminf == doctest::Approx(lo));
    CHECK(r.limsup == doctest::Approx(hi));
    if (r.kind == RegularityKind::Irregular) CHECK(r.liminf < r.limsup);
    else CHECK(r.liminf == doctest::Approx(r.limsup));
  }
}

TEST_CASE("level set entropy") {
  auto phi = Observable::indicator(2, parse_word("1"));
  auto h = level_entropy(phi, 0.5);
  CHECK(std::abs(h.value - std::log(2.0)) < 1e-6);
  CHECK(std::abs(h.value - bernoulli_grid(0.5)) < 1e-6);
  REQUIRE(h.argmax.size() == 4);
  CHECK(h.argmax[1] == doctest::Approx(0.5).epsilon(1e-3));
  auto q = level_entropy(phi, 0.25);
  CHECK(std::abs(q.value - fx::H(0.25)) < 1e-3);
  CHECK(std::abs(q.value - bernoulli_grid(0.25)) < 1e-3);
  auto zero = level_entropy(phi, 0);
  CHECK(zero.boundary);
  CHECK(zero.value == doctest::Approx(0));
  CHECK_THROWS_AS(level_entropy(phi, 1.5), Error);
}

TEST_CASE("level set entropy is concave and symmetric") {
  auto phi = Observable::indicator(2, parse_word("1"));
  std::vector<double> t;
  for (int i = 1; i <= 9; ++i) t.push_back(level_entropy(phi, i / 10.0).value);
  for (int i = 0; i < 9; ++i) CHECK(t[i] == doctest::Approx(t[8 - i]).epsilon(1e-4));
  for (int i = 1; i + 1 < 9; ++i) CHECK(t[i] >= (t[i - 1] + t[i + 1]) / 2 - 1e-6);
}

TEST_CASE("irregular witnesses") {
  auto w = irregular_witness(Observable::indicator(2, parse_word("1")), 0.1);
  CHECK(w.report.limsup - w.report.liminf >= 0.1);
  CHECK(w.report.kind == RegularityKind::Irregular);
  CHECK(w.recurrence.nonrecurrent);
  CHECK(w.entropy.value >= std::log(2.0) - 0.2);

  auto b = irregular_witness(Observable::indicator(2, parse_word("01")), 0.1);
  CHECK(b.report.liminf < b.report.limsup);
  auto bigram = Observable::indicator(2, parse_word("01"));
  double im = bigram.integral(b.mu), in = bigram.integral(b.nu);
  CHECK(b.report.liminf == doctest::Approx(std::min(im, in)));
  CHECK(b.report.limsup == doctest::Approx(std::max(im, in)));

  try {
    irregular_witness(Observable::constant(2, 0.3), 0.1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateObservable);
  }
}

TEST_CASE("observable parsing") {
  auto phi = Observable::parse(2, "1_[01]");
  CHECK(phi.depth == 2);
  CHECK(phi(parse_word("01")) == 1);
  CHECK(phi(parse_word("11")) == 0);
  CHECK(Observable::parse(3, "const:2").integral(fx::bernoulli({0.5, 0.5, 0})) == doctest::Approx(2));
  auto [lo, hi] = observable_range(SftDescr::from_matrix(2, {1, 1, 1, 0}), Observable::indicator(2, parse_word("1")));
  CHECK(lo == 0);
  CHECK(hi == doctest::Approx(0.5));
}
