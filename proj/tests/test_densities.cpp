#include <doctest.h>

#include "fixtures.hpp"
#include "omega/densities.hpp"
#include "omega/error.hpp"

using namespace omega;

namespace {

// liminf / limsup of |S ∩ [0,N)| / N over the checkpoints 4^j and 2·4^j
std::pair<double, double> checkpoint_ratios(const std::vector<char>& in, int levels) {
  double lo = 1, hi = 0;
  std::uint64_t count = 0, next = 0;
  std::vector<std::uint64_t> marks;
  for (int j = levels - 2; j <= levels; ++j) {
    marks.push_back(std::uint64_t(1) << (2 * j));
    if (j < levels) marks.push_back(std::uint64_t(2) << (2 * j));
  }
  for (std::uint64_t N = 0; N < in.size() && next < marks.size(); ++N) {
    count += in[N];
    if (N + 1 == marks[next]) {
      double r = double(count) / double(N + 1);
      lo = std::min(lo, r), hi = std::max(hi, r);
      ++next;
    }
  }
  return {lo, hi};
}

}  // namespace

TEST_CASE("density_profile of basic patterns") {
  auto even = density_profile(IndexSet::periodic(2, {0}));
  CHECK(even.exact);
  CHECK(even.B_lower == Rational(1, 2));
  CHECK(even.d_lower == Rational(1, 2));
  CHECK(even.d_upper == Rational(1, 2));
  CHECK(even.B_upper == Rational(1, 2));

  auto empty = density_profile(IndexSet::periodic(1, {}));
  CHECK(empty.B_upper == 0);
  CHECK(empty.d_lower == 0);
}

TEST_CASE("geometric pattern 4^k to 2 4^k") {
  auto S = IndexSet::geometric(4, 1, 2);
  auto p = density_profile(S);
  CHECK(p.exact);
  CHECK(p.B_lower == 0);
  CHECK(p.d_lower == Rational(1, 3));
  CHECK(p.d_upper == Rational(2, 3));
  CHECK(p.B_upper == 1);

  const std::uint64_t N = std::uint64_t(1) << 20;
  std::vector<char> in(N, 0);
  for (std::uint64_t b = 1; b < N; b *= 4)
    for (std::uint64_t i = b; i < std::min(2 * b, N); ++i) in[i] = 1;
  auto [lo, hi] = checkpoint_ratios(in, 10);
  CHECK(std::abs(lo - 1.0 / 3) < 1e-3);
  CHECK(std::abs(hi - 2.0 / 3) < 1e-3);

  auto est = density_profile(materialize(S, N));
  CHECK_FALSE(est.exact);
  CHECK(std::abs(to_double(est.B_upper) - 1) < 1e-3);
  CHECK(to_double(est.B_lower) < 1e-3);
}

TEST_CASE("is_syndetic examples") {
  auto a = is_syndetic(IndexSet::periodic(3, {0}));
  CHECK(a.syndetic);
  CHECK(a.gap == 3u);
  auto b = is_syndetic(IndexSet::sparse(Template{1, 0, 2, 0}));
  CHECK_FALSE(b.syndetic);
  CHECK_FALSE(b.gap.has_value());
  auto c = is_syndetic(IndexSet::periodic(1, {0}, {}, {5}));
  CHECK(c.syndetic);
  CHECK(c.gap == 2u);
}

TEST_CASE("visit_times examples") {
  auto s = fx::one_phase(fx::periodic(2, "01"), Template{2, 0, 2, 0});
  auto v = visit_times(s, parse_word("0"), 6);
  CHECK(v.indices == std::vector<std::uint64_t>{0, 2, 4});
  CHECK(visit_times(s, parse_word("11"), 10).indices.empty());
  auto d = fx::alternating(fx::periodic(2, "0"), fx::periodic(2, "1"));
  auto w = visit_times(d, parse_word("1"), 15);
  CHECK(w.indices == std::vector<std::uint64_t>{1, 2, 7, 8, 9, 10, 11, 12, 13, 14});
}

TEST_CASE("finite prefixes obey complement and monotonicity") {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::uint64_t N = 200 + rng.below(300);
    std::vector<std::uint64_t> a, b;
    for (std::uint64_t i = 0; i < N; ++i) {
      bool in_a = rng.below(3) == 0;
      if (in_a) a.push_back(i);
      if (in_a || rng.below(4) == 0) b.push_back(i);
    }
    auto A = IndexSet::finite(a, N), B = IndexSet::finite(b, N);
    auto pa = density_profile(A), pb = density_profile(B);
    auto pc = density_profile(complement(A));
    CHECK(pa.d_upper + pc.d_lower == 1);
    CHECK(pa.B_lower <= pb.B_lower);
    CHECK(pa.d_lower <= pb.d_lower);
    CHECK(pa.d_upper <= pb.d_upper);
    CHECK(pa.B_upper <= pb.B_upper);
  }
}

TEST_CASE("pattern profiles match prefix estimates") {
  const std::uint64_t N = std::uint64_t(1) << 20;
  for (auto S : {IndexSet::periodic(5, {0, 3}), IndexSet::periodic(7, {1, 2, 6}, {4}, {1})}) {
    auto exact = density_profile(S), est = density_profile(materialize(S, N));
    CHECK(std::abs(to_double(exact.d_upper) - to_double(est.d_upper)) < 1e-3);
    CHECK(std::abs(to_double(exact.d_lower) - to_double(est.d_lower)) < 1e-3);
    CHECK(std::abs(to_double(exact.B_upper) - to_double(est.B_upper)) < 1e-3);
  }
}

TEST_CASE("zero horizon is rejected") {
  CHECK_THROWS_AS(density_profile(IndexSet::finite({}, 0)), Error);
}
