#include <doctest.h>

#include "fixtures.hpp"
#include "omega/error.hpp"
#include "omega/limit_sets.hpp"

using namespace omega;

namespace {

bool contains_all_words(const Word& x, int m, int len) {
  std::vector<char> seen;
  std::uint64_t total = 1;
  for (int i = 0; i < len; ++i) total *= m;
  seen.assign(total, 0);
  for (size_t i = 0; i + len <= x.size(); ++i) seen[word_index(Word(x.begin() + i, x.begin() + i + len), m)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

TEST_CASE("eventually periodic schedule gives one periodic orbit") {
  auto s = fx::one_phase(fx::periodic(2, "01"));
  auto w = omega_limit(s);
  auto pts = w.finite_points();
  REQUIRE(pts.has_value());
  CHECK(pts->size() == 2);
  auto gens = w.orbit_generators();
  REQUIRE(gens.has_value());
  REQUIRE(gens->size() == 1);
  CHECK((*gens)[0].first.empty());
  CHECK(to_string((*gens)[0].second).size() == 2);
}

TEST_CASE("Bernoulli generic schedule") {
  auto s = fx::one_phase(fx::bernoulli({0.5, 0.5}));
  Word x = schedule_prefix(s, 1000000);
  CHECK(contains_all_words(x, 2, 8));
  auto r = statistical_omegas(s);
  auto full = SubshiftDescr::from_sft(SftDescr::full(2));
  CHECK(subshift_equal(r.omega_f, full));
  CHECK(subshift_equal(r.omega_dlower, full));
  CHECK(subshift_equal(r.omega_dupper, full));
  CHECK(subshift_equal(r.omega_Bupper, full));
  CHECK(r.omega_Blower.is_empty());
  auto c = classify_case(s);
  CHECK(c.label.str() == "1");
}

TEST_CASE("fixed point schedule") {
  auto s = fx::one_phase(fx::periodic(2, "0"));
  auto r = statistical_omegas(s);
  auto pt = SubshiftDescr::from_points({{{}, {0}}});
  for (auto* x : {&r.omega_f, &r.omega_Blower, &r.omega_dlower, &r.omega_dupper, &r.omega_Bupper})
    CHECK(subshift_equal(*x, pt));
  CHECK(r.syndetic_center_nonempty);
  CHECK(is_minimal_finite(r.omega_Blower));
}

TEST_CASE("zero blocks against Bernoulli blocks give Case 4") {
  // block counts (s!)^2 put each phase in control of the running average
  auto s = fx::alternating(fx::periodic(2, "0"), fx::bernoulli({0.5, 0.5}), Template{16, 0, 2, 0});
  for (auto& ph : s.phases) ph.N = Template{1, 0, 1, 2};
  auto r = statistical_omegas(s);
  CHECK(subshift_equal(r.omega_dlower, SubshiftDescr::from_points({{{}, {0}}})));
  CHECK(subshift_equal(r.omega_dupper, SubshiftDescr::from_sft(SftDescr::full(2))));
  CHECK(r.omega_Blower.is_empty());
  CHECK(chain_inclusions_hold(r));
  CHECK(classify_case(s).label.str() == "4");
}

TEST_CASE("syndetic center examples") {
  auto s = fx::one_phase(fx::periodic(2, "01"));
  auto sc = syndetic_center(s);
  CHECK(subshift_equal(sc, SubshiftDescr::from_points({{{}, parse_word("01")}})));
  CHECK(is_minimal_finite(sc));
  auto t = s;
  t.ambient = SftDescr::full(3);
  t.lambda = SftDescr::full_on(3, {0, 1});
  t.phases[0].gen = fx::periodic(3, "01");
  t.prefix = parse_word("2");
  auto sc2 = syndetic_center(t);
  CHECK(subshift_equal(sc2, SubshiftDescr::from_points({{{}, parse_word("01")}})));
  auto u = fx::alternating(fx::periodic(2, "0"), fx::periodic(2, "1"));
  CHECK(syndetic_center(u).is_empty());
}

TEST_CASE("periodic schedule cannot be classified") {
  auto s = fx::one_phase(fx::periodic(2, "01"));
  try {
    classify_case(s);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyndeticCenterNonEmpty);
  }
}

TEST_CASE("single ergodic generator collapses the chain to its support") {
  for (auto g : {fx::bernoulli({0.3, 0.7}), fx::golden_mean(), fx::periodic(2, "011")}) {
    auto s = fx::one_phase(g);
    auto r = statistical_omegas(s);
    auto S = SubshiftDescr::from_graph(g.support());
    CHECK(subshift_equal(r.omega_f, S));
    CHECK(subshift_equal(r.omega_dlower, S));
    CHECK(subshift_equal(r.omega_dupper, S));
    CHECK(subshift_equal(r.omega_Bupper, S));
  }
}

TEST_CASE("chain inclusions on random schedules") {
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto r = statistical_omegas(fx::random_schedule(seed));
    violations += !chain_inclusions_hold(r);
    if (!r.omega_Blower.is_empty() && r.omega_Blower.finite_points()) CHECK(is_minimal_finite(r.omega_Blower));
  }
  CHECK(violations == 0);
}

TEST_CASE("marker tails enlarge the omega set") {
  BlockSchedule s;
  s.ambient = SftDescr::full(3);
  s.lambda = SftDescr::full_on(3, {0, 1});
  s.phases = {Phase{MixedMeasure::of(MarkovMeasure::bernoulli(3, {{0, 0.5}, {1, 0.5}})), {16, 0, 2, 0}, {1, 0, 1, 2}}};
  s.marker = Symbol(2);
  auto w = omega_limit(s);
  auto lam = SubshiftDescr::from_sft(*s.lambda);
  CHECK(subshift_includes(lam, w));
  CHECK_FALSE(subshift_includes(w, lam));
  CHECK(w.accepts(parse_word("0120")));
  CHECK_FALSE(w.accepts(parse_word("22")));
  CHECK(subshift_equal(measure_center(w), lam));
}

TEST_CASE("bounded block ratios keep both measures in every limit") {
  auto s = fx::alternating(fx::periodic(2, "0"), fx::bernoulli({0.5, 0.5}), Template{16, 0, 2, 0});
  auto r = statistical_omegas(s);
  CHECK(subshift_equal(r.omega_dlower, SubshiftDescr::from_sft(SftDescr::full(2))));
  CHECK(classify_case(s).label.str() == "1");
}

TEST_CASE("set algebra") {
  auto full = SubshiftDescr::from_sft(SftDescr::full(2));
  auto gm = SubshiftDescr::from_sft(SftDescr::from_matrix(2, {1, 1, 1, 0}));
  auto zero = SubshiftDescr::from_points({{{}, {0}}});
  CHECK(subshift_includes(gm, full));
  CHECK_FALSE(subshift_includes(full, gm));
  CHECK(subshift_includes(zero, gm));
  CHECK(subshift_equal(subshift_union(gm, full), full));
  CHECK(subshift_equal(subshift_intersection(gm, full), gm));
  CHECK(subshift_includes(SubshiftDescr::empty_set(), zero));
  CHECK(subshift_equal(SubshiftDescr::empty_set(), SubshiftDescr::empty_set()));
  CHECK(chain_transitive(gm, 3));
  CHECK_FALSE(chain_transitive(subshift_union(zero, SubshiftDescr::from_points({{{}, {1}}})), 3));
  CHECK(all_case_labels().size() == 12);
  CHECK(CaseLabel::parse("4'").primed);
}
