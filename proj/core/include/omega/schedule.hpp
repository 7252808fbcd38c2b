#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "omega/growth.hpp"
#include "omega/measures.hpp"
#include "omega/sft.hpp"

namespace omega {

constexpr std::uint64_t kDefaultPrefixCap = 1ULL << 24;

// Stage s = P*k + p of round k emits N_p(s) blocks of length n_p(s) drawn from
// the phase generator.
struct Phase {
  MixedMeasure gen;
  Template n;
  Template N;
};

struct BlockSchedule {
  SftDescr ambient;
  // space for bridges, the enumeration insertion and marker tails
  std::optional<SftDescr> lambda;
  Word prefix;
  std::vector<Phase> phases;
  // after each round k: all lambda-words of length bit_width(k+1)
  bool enumerate = false;
  // after each round k: marker symbol then the first k+1 symbols of u
  std::optional<Symbol> marker;
  // omega-set realizer mode: segments of a dense sequence of this subshift
  std::optional<SftDescr> realizer;
  std::uint64_t seed = 0;
  double kappa = 2.0;   // block tolerance kappa / sqrt(length)
  int check_terms = 8;  // rho_J used for block checks

  const SftDescr& bridge_space() const { return lambda ? *lambda : ambient; }
  int alphabet() const { return ambient.m(); }
  void validate() const;
};

Word schedule_prefix(const BlockSchedule& s, std::uint64_t N, std::uint64_t cap = kDefaultPrefixCap);

// Transitive point of an irreducible SFT: all words in length-lex order, each
// joined to the next by its bridge word.
Word transitive_point_prefix(const SftDescr& lambda, std::uint64_t len);

// Interior of the joining word used between a and b (nullopt: impossible).
std::optional<Word> schedule_join(const BlockSchedule& s, Symbol a, Symbol b, bool ambient_only);

// Connector used in realizer mode: shortest nonempty ambient path interior,
// preferring one that leaves the language of A.
Word realizer_connector(const SftDescr& ambient, const SftDescr& A, Symbol a, Symbol b);
// t-th point (1-based) of the dense sequence in A: word w_t then the least continuation
std::pair<Word, Word> realizer_point(const SftDescr& A, std::uint64_t t);

// component lengths of a mixture block of length n
std::vector<std::uint64_t> split_mixture_lengths(const MixedMeasure& g, std::uint64_t n);

// (n, t) with r = n(n-1)/2 + t, 1 <= t <= n
std::pair<std::uint64_t, std::uint64_t> triangular_index(std::uint64_t r);

}  // namespace omega
