#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "omega/measures.hpp"
#include "omega/sft.hpp"

namespace omega {

// All values in nats.
struct EntropyEstimate {
  double value = 0;
  std::string method;
  int n = 0;  // word length or horizon
  int k = 0;  // resolution 2^-k, cylinder depth or stage count
  double error_bound = 0;
  bool exact = false;
  std::map<std::string, double> details;
  std::vector<std::pair<int, double>> series;  // (n, log r_n / n) and similar
};

// log Perron root; block-SFTs give log|blocks| / block length
EntropyEstimate sft_entropy(const SftDescr& sft);
// log |L_n| / n
double counting_entropy(const SftDescr& sft, int n);

// Greedy maximal (n, 2^-k)-separated subset in input order: an n-word is an
// orbit segment of n - k + 1 steps read through length-k windows.
std::uint64_t separated_count(const std::vector<Word>& words, int k);

constexpr std::uint64_t kKatokEnumerationCap = 1ULL << 22;

// Slope of log r_n against n over [n_max/2, n_max], r_n the least number of
// n-cylinders of total weight >= gamma.
EntropyEstimate katok_entropy_estimate(const MarkovMeasure& mu, double gamma, int n_max, std::uint64_t seed = 0);

struct SynthesisConfig;
// Certified lower bound max(0, h - 2 eta) with h the least entropy on the target.
EntropyEstimate family_entropy_bound(const SynthesisConfig& cfg);

}  // namespace omega
