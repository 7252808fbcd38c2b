#include <doctest.h>

#include "fixtures.hpp"
#include "omega/error.hpp"
#include "omega/shadowing.hpp"

using namespace omega;

namespace {

Rational pow2(int e) { return e >= 0 ? Rational(BigInt(1) << e) : Rational(1) / Rational(BigInt(1) << -e); }

}  // namespace

TEST_CASE("true shift orbit shadows itself") {
  Word z = parse_word("0110100110010110");
  ShiftPseudoOrbit p;
  p.k = 3;
  for (size_t i = 0; i + 4 <= z.size(); ++i) p.points.push_back(Word(z.begin() + i, z.end()));
  auto s = shadow_shift(p);
  CHECK(s.y == z);
  CHECK(s.epsilon == 0);
}

TEST_CASE("spliced shift orbits") {
  // x_0..x_3 follow u = 0101100, then jump to v which agrees on 3 symbols
  Word u = parse_word("01011000"), v = parse_word("1000111");
  ShiftPseudoOrbit p;
  p.k = 3;
  for (int i = 0; i < 4; ++i) p.points.push_back(Word(u.begin() + i, u.end()));
  for (size_t i = 0; i + 4 <= v.size(); ++i) p.points.push_back(Word(v.begin() + i, v.end()));
  check_pseudo_orbit(p);
  auto s = shadow_shift(p);
  CHECK(s.epsilon <= Rational(1, 16));
  for (size_t n = 0; n < p.points.size(); ++n)
    CHECK(shift_distance(Word(s.y.begin() + n, s.y.begin() + n + 4), Word(p.points[n].begin(), p.points[n].begin() + 4)) == 0);

  ShiftPseudoOrbit bad;
  bad.k = 0;
  bad.points = {parse_word("01"), parse_word("01")};
  try {
    shadow_shift(bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPseudoOrbit);
  }
}

TEST_CASE("doubling map shadows") {
  RealPseudoOrbit t;
  t.delta = 0;
  t.x = {Rational(1, 3), Rational(2, 3), Rational(1, 3), Rational(2, 3)};
  auto s = shadow_doubling(t, Rational(1, 32));
  CHECK(s.y == Rational(1, 3));
  CHECK(s.deviation == 0);

  Rng rng(4);
  RealPseudoOrbit p;
  p.delta = pow2(-8);
  Rational x(BigInt(rng.below(1 << 20)), BigInt(1 << 20));
  for (int n = 0; n < 40; ++n) {
    p.x.push_back(x);
    Rational jitter(BigInt(rng.below(257)) - 128, BigInt(1) << 15);
    x = frac(2 * x + jitter + 1);
  }
  auto d = shadow_doubling(p, pow2(-5));
  CHECK(d.deviation <= pow2(-5));
  Rational y = d.y;
  for (auto& xn : p.x) {
    CHECK(circle_distance(y, xn) <= pow2(-5));
    y = frac(2 * y);
  }

  RealPseudoOrbit loose;
  loose.delta = Rational(3, 10);
  loose.x = {0, Rational(1, 2)};
  try {
    shadow_doubling(loose, Rational(1, 10));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PseudoOrbitTooLoose);
  }
}

TEST_CASE("doubling coding") {
  CHECK(to_string(doubling_coding(0, 6)) == "000000");
  CHECK(to_string(doubling_coding(Rational(1, 3), 6)) == "010101");
  CHECK(to_string(doubling_coding(Rational(1, 2), 6)) == "100000");
  Rng rng(8);
  for (int t = 0; t < 500; ++t) {
    Rational x(BigInt(rng.below(1 << 16)), BigInt(1) << (1 + rng.below(16)));
    x = frac(x);
    Word a = doubling_coding(frac(2 * x), 20), b = doubling_coding(x, 21);
    CHECK(a == Word(b.begin() + 1, b.end()));
  }
}
