#pragma once

#include <cmath>
#include <string>

#include "omega/measures.hpp"
#include "omega/rng.hpp"
#include "omega/schedule.hpp"
#include "omega/word.hpp"

namespace fx {

using namespace omega;

inline MixedMeasure periodic(int m, const std::string& w) { return MixedMeasure::of(PeriodicMeasure{m, parse_word(w)}); }
inline MixedMeasure bernoulli(std::vector<double> p) { return MixedMeasure::of(MarkovMeasure::bernoulli(std::move(p))); }
inline MixedMeasure golden_mean() { return MixedMeasure::of(MarkovMeasure::from_matrix(2, {0.5, 0.5, 1, 0})); }

inline BlockSchedule one_phase(const MixedMeasure& g, Template n = {16, 0, 2, 0}, Template N = {1, 0, 1, 0}) {
  BlockSchedule s;
  s.ambient = SftDescr::full(g.m);
  s.phases = {Phase{g, n, N}};
  return s;
}

// x = g0^{n(0)} g1^{n(1)} g0^{n(2)} ... with n(s) = 2^s
inline BlockSchedule alternating(const MixedMeasure& a, const MixedMeasure& b, Template n = {1, 0, 2, 0}) {
  BlockSchedule s;
  s.ambient = SftDescr::full(a.m);
  s.phases = {Phase{a, n, Template::constant(1)}, Phase{b, n, Template::constant(1)}};
  return s;
}

inline double H(double p) { return p <= 0 || p >= 1 ? 0 : -p * std::log(p) - (1 - p) * std::log(1 - p); }

// Random normal-form schedule: one to three phases over Σ_m with periodic,
// Bernoulli or golden-mean generators and exponential or factorial growth.
inline BlockSchedule random_schedule(std::uint64_t seed) {
  Rng rng(seed);
  const int m = 2 + int(rng.below(2));
  BlockSchedule s;
  s.ambient = SftDescr::full(m);
  s.seed = seed;
  const int P = 1 + int(rng.below(3));
  for (int p = 0; p < P; ++p) {
    MixedMeasure g;
    switch (rng.below(3)) {
      case 0: {
        Word w(1 + rng.below(3));
        for (auto& c : w) c = Symbol(rng.below(m));
        g = MixedMeasure::of(PeriodicMeasure{m, w});
        break;
      }
      case 1: {
        std::vector<std::pair<Symbol, double>> pr;
        for (int a = 0; a < m; ++a)
          if (rng.below(3) != 0) pr.push_back({Symbol(a), 0.2 + rng.uniform()});
        if (pr.empty()) pr.push_back({Symbol(rng.below(m)), 1.0});
        double tot = 0;
        for (auto& [a, w] : pr) tot += w;
        for (auto& [a, w] : pr) w /= tot;
        g = MixedMeasure::of(MarkovMeasure::bernoulli(m, pr));
        break;
      }
      default: {
        std::vector<double> P2(m * m, 0.0);
        P2[0] = 0.5, P2[1] = 0.5, P2[m] = 1;
        for (int a = 2; a < m; ++a) P2[a * m] = 1;
        g = MixedMeasure::of(MarkovMeasure::from_matrix(m, P2));
      }
    }
    Template n = rng.below(2) ? Template{int64_t(8 + rng.below(8)), 0, 2, 0} : Template{4, 1, 2, 0};
    Template N = rng.below(2) ? Template::constant(1) : Template{1, 0, 1, 1};
    s.phases.push_back(Phase{g, n, N});
  }
  if (rng.below(4) == 0) s.prefix = Word{Symbol(m - 1)};
  return s;
}

}  // namespace fx
