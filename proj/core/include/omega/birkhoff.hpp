#pragma once
#include <string>
#include <utility>
#include <vector>

#include "omega/entropy.hpp"
#include "omega/limit_sets.hpp"
#include "omega/measures.hpp"
#include "omega/schedule.hpp"

namespace omega {

// phi(x) = weight of the first d symbols of x; words with symbols >= m weigh 0
struct Observable {
  int m = 2;
  int depth = 1;
  std::vector<double> weights;  // index base m

  static Observable indicator(int m, const Word& w);
  static Observable constant(int m, double c);
  // "1_[w]", "const:c" or "d:w0,w1,..." (weights of all d-words in index order)
  static Observable parse(int m, const std::string& s);
  double operator()(const Word& x) const;  // x has at least depth symbols
  double integral(const MixedMeasure& mu) const;
  std::string str() const;
};

enum class RegularityKind { Regular, QuasiRegular, Historic, Irregular };
std::string kind_name(RegularityKind k);

struct BirkhoffReport {
  double liminf = 0, limsup = 0;
  std::pair<double, double> L_phi{0, 0};
  RegularityKind kind = RegularityKind::Regular;
  std::vector<std::pair<std::uint64_t, double>> series;  // prefix averages
};

// [min, max] of cycle means of phi over the ambient SFT
std::pair<double, double> observable_range(const SftDescr& ambient, const Observable& phi);

BirkhoffReport birkhoff_bounds(const BlockSchedule& s, const Observable& phi, std::uint64_t horizon = 1 << 20);
// running averages (1/n) sum_{i<n} phi(sigma^i x) at n = 2^j and at the end
std::vector<std::pair<std::uint64_t, double>> prefix_averages(const Word& x, const Observable& phi);

struct LevelEntropy {
  double value = 0;
  std::vector<double> argmax;  // row-stochastic matrix
  bool boundary = false;
  int restarts = 20;
};
LevelEntropy level_entropy(const Observable& phi, double a, std::uint64_t seed = 0);

struct IrregularWitness {
  BlockSchedule schedule;
  BirkhoffReport report;
  EntropyEstimate entropy;
  Recurrence recurrence;
  MixedMeasure mu, nu;
};
// Schedule on the alphabet of phi plus one reserved prefix symbol.
IrregularWitness irregular_witness(const Observable& phi, double eta, std::uint64_t seed = 0);

}  // namespace omega
