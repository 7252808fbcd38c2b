#pragma once
#include <optional>
#include <string>
#include <vector>

#include "omega/graph.hpp"
#include "omega/measures.hpp"
#include "omega/schedule.hpp"
#include "omega/sft.hpp"

namespace omega {

// Points v·M·u: v a finite left context (label of a path of `left` ending in
// an exit), M the marker symbol, u the transitive point of tail_space.
struct MarkerTail {
  LabeledGraph left;
  std::vector<int> exits;
  Symbol marker = 0;
  SftDescr tail_space;
};

// Closed invariant set: sofic core plus marker tails.
struct SubshiftDescr {
  LabeledGraph core;
  std::vector<MarkerTail> tails;
  std::string label;

  static SubshiftDescr empty_set();
  static SubshiftDescr from_sft(const SftDescr& sft);
  static SubshiftDescr from_graph(const LabeledGraph& g);
  // orbit closures of eventually periodic points (pre, period)
  static SubshiftDescr from_points(const std::vector<std::pair<Word, Word>>& pts);

  bool is_empty() const { return core.empty() && tails.empty(); }
  std::vector<Word> language(int n, std::uint64_t cap = kDefaultLanguageCap) const;
  bool accepts(const Word& w) const;
  // all points as canonical (pre, primitive period) when the set is finite
  std::optional<std::vector<std::pair<Word, Word>>> finite_points() const;
  // orbit representatives of finite_points()
  std::optional<std::vector<std::pair<Word, Word>>> orbit_generators() const;
};

SubshiftDescr subshift_union(const SubshiftDescr& a, const SubshiftDescr& b);
SubshiftDescr subshift_intersection(const SubshiftDescr& a, const SubshiftDescr& b);
bool subshift_includes(const SubshiftDescr& a, const SubshiftDescr& b);  // a ⊆ b
bool subshift_equal(const SubshiftDescr& a, const SubshiftDescr& b);
// union of supports of invariant measures (nontrivial strongly connected parts)
SubshiftDescr measure_center(const SubshiftDescr& x);
// shift-invariant chain transitivity checked through n-word overlap graphs, n <= depth
bool chain_transitive(const SubshiftDescr& x, int depth);
bool is_minimal_finite(const SubshiftDescr& x);

struct CaseLabel {
  int index = 0;  // 1..6
  bool primed = false;
  std::string str() const;
  static CaseLabel parse(const std::string& s);
  bool operator==(const CaseLabel&) const = default;
};
std::vector<CaseLabel> all_case_labels();

struct VfReport {
  MeasurePolyline polyline;
  bool is_singleton = false;
  // V*_f equals the invariant measures on omega_f (irreducible measure center)
  bool vstar_is_full = false;
  int depth = 2;
  // checkpoint weights: weights[p][q] = limit share of phase q after phase p
  std::vector<std::vector<Rational>> weights;
};

struct OmegaReport {
  SubshiftDescr omega_f, omega_Blower, omega_dlower, omega_dupper, omega_Bupper;
  std::optional<CaseLabel> label;
  bool syndetic_center_nonempty = false;
  bool omega_f_chain_transitive = false;
  int depth = 3;
};

SubshiftDescr omega_limit(const BlockSchedule& s);
VfReport vf_limits(const BlockSchedule& s, int depth = 2);
SubshiftDescr syndetic_center(const BlockSchedule& s);
SubshiftDescr syndetic_center_of(const SubshiftDescr& omega_f);
OmegaReport statistical_omegas(const BlockSchedule& s, int depth = 3);
bool chain_inclusions_hold(const OmegaReport& r);

struct Recurrence {
  bool nonrecurrent = false;
  Word witness;      // prefix of x outside L(omega_f)
  int horizon = 0;   // prefixes checked
};
Recurrence check_recurrence(const BlockSchedule& s, const SubshiftDescr& omega_f, int horizon = 64);

struct Classification {
  CaseLabel label;
  OmegaReport report;
  Recurrence recurrence;
};
// label from the set relations of a report (syndetic center must be empty)
CaseLabel label_from_report(const OmegaReport& r);
Classification classify_case(const BlockSchedule& s, int depth = 3);

}  // namespace omega
