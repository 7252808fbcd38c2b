#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omega/entropy.hpp"
#include "omega/limit_sets.hpp"
#include "omega/measures.hpp"
#include "omega/schedule.hpp"

namespace omega {

struct GenericOptions {
  int J = 8;
  int depth = 0;          // 0: rho_depth(m, J)
  bool periodic = false;  // w w must be legal, so w^inf is a periodic point
  int retries = 10000;
};

// sampled path of mu with rho_J(empirical(w), mu) <= zeta
Word generic_word(const MarkovMeasure& mu, std::uint64_t n, double zeta, std::uint64_t seed,
                  const GenericOptions& opt = {});

// Target K is the polyline; stage s of a phase emits N(s) blocks of length n(s).
struct SynthesisConfig {
  MeasurePolyline target;
  SftDescr lambda;
  std::optional<SftDescr> ambient;  // defaults to lambda
  double zeta = 0.1;                // first ball radius; later blocks use kappa / sqrt(n)
  Template n{16, 0, 2, 0};
  Template N{1, 0, 1, 2};
  double eta = 0.05;
  std::uint64_t seed = 0;
  bool enumerate = false;
  double kappa = 2.0;
  int check_terms = 8;
};

// checks lambda, target supports and the two growth conditions
void validate_config(const SynthesisConfig& cfg);
// phase sequence tracing the polyline (back and forth when open)
std::vector<MixedMeasure> phase_vertices(const MeasurePolyline& K);
BlockSchedule build_saturated_schedule(const SynthesisConfig& cfg);

// block-stretched totals M_j after the first j stages
struct StageTotals {
  std::vector<long double> M;     // emitted length up to the end of stage j
  std::vector<long double> last;  // n N of stage j
  std::vector<long double> block; // n of stage j
};
StageTotals stage_totals(const SynthesisConfig& cfg, int stages);

enum class RecurrenceMode { Nonrecurrent, RecurrentNontransitive };
std::string mode_name(RecurrenceMode m);
RecurrenceMode parse_mode(const std::string& s);

struct RealizeOptions {
  int m = 3;
  RecurrenceMode mode = RecurrenceMode::Nonrecurrent;
  std::uint64_t seed = 0;
  int depth = 3;
  int J = 8;
  double eta = 0.05;
};

struct Certificate {
  CaseLabel claimed;
  RecurrenceMode mode = RecurrenceMode::Nonrecurrent;
  OmegaReport report;
  Recurrence recurrence;
  Word unique_prefix;
  VfReport vf;
  MeasurePolyline target;
  int J = 8;
  double vf_distance = 0;
  EntropyEstimate entropy;
};

struct CaseWitness {
  SynthesisConfig config;
  BlockSchedule schedule;
  Certificate certificate;
};

SynthesisConfig case_config(const CaseLabel& L, const RealizeOptions& opt);
CaseWitness realize_case(const CaseLabel& L, const RealizeOptions& opt = {});

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};
// recomputes every claim of the certificate from the schedule
std::vector<CheckResult> verify_certificate(const BlockSchedule& s, const Certificate& c);

BlockSchedule omega_realizer(const SftDescr& A, const SftDescr& ambient, std::uint64_t seed = 0);

}  // namespace omega
