#pragma once
#include <optional>
#include <variant>
#include <vector>

#include "omega/numeric.hpp"
#include "omega/sft.hpp"
#include "omega/word.hpp"

namespace omega {

constexpr int kMaxCylinderDepth = 12;

// Stationary Markov chain; unichain (one closed communicating class).
class MarkovMeasure {
 public:
  MarkovMeasure() = default;
  static MarkovMeasure from_matrix(int m, std::vector<double> P);
  // i.i.d. measure with the given symbol probabilities
  static MarkovMeasure bernoulli(std::vector<double> probs);
  static MarkovMeasure bernoulli(int m, const std::vector<std::pair<Symbol, double>>& probs);

  int m() const { return m_; }
  double p(int i, int j) const { return P_[i * m_ + j]; }
  const std::vector<double>& matrix() const { return P_; }
  const std::vector<double>& pi() const { return pi_; }
  double entropy() const { return h_; }
  // sorted states of the recurrent class
  const std::vector<Symbol>& recurrent() const { return rec_; }
  bool in_recurrent(Symbol s) const;
  // all recurrent rows equal (restricted to the class)
  bool is_bernoulli() const;
  // positivity pattern on the recurrent class
  SftDescr support() const;
  double cylinder(const Word& w) const;
  bool operator==(const MarkovMeasure& o) const { return m_ == o.m_ && P_ == o.P_; }

 private:
  int m_ = 0;
  std::vector<double> P_;
  std::vector<double> pi_;
  std::vector<Symbol> rec_;
  double h_ = 0;
};

// uniform measure on the orbit of w^∞
struct PeriodicMeasure {
  int m = 0;
  Word w;
  double cylinder(const Word& c) const;
  LabeledGraph support_graph() const { return graph_from_point({}, w); }
  bool operator==(const PeriodicMeasure& o) const { return m == o.m && w == o.w; }
};

using Atom = std::variant<MarkovMeasure, PeriodicMeasure>;

int atom_alphabet(const Atom& a);
double atom_cylinder(const Atom& a, const Word& c);
double atom_entropy(const Atom& a);
LabeledGraph atom_support(const Atom& a);
std::string atom_name(const Atom& a);

// finite convex combination of atoms
struct MixedMeasure {
  int m = 0;
  std::vector<std::pair<Rational, Atom>> parts;

  static MixedMeasure of(const Atom& a);
  void validate() const;  // WeightSum / AlphabetMismatch
  double cylinder(const Word& c) const;
  double entropy() const;
  LabeledGraph support() const;  // trimmed union of atom supports
  bool is_atom() const { return parts.size() == 1; }
  // same atoms with same weights (order-insensitive, merged duplicates)
  bool same_as(const MixedMeasure& o) const;
};

MixedMeasure combine(const std::vector<std::pair<Rational, MixedMeasure>>& xs);

// Cylinder table: weights of all words of length 1..depth (index base m).
struct CylinderMeasure {
  int m = 0;
  int depth = 0;
  std::vector<std::vector<double>> level;  // level[l-1][index of l-word]

  double weight(const Word& w) const;
  const std::vector<double>& top() const { return level[depth - 1]; }
};

CylinderMeasure cylinder_table(const MixedMeasure& mu, int depth);
CylinderMeasure cylinder_table(const Atom& mu, int depth);
CylinderMeasure empirical_measure(const Word& w, int d, int m);
// from raw window counts of length d (index base m)
CylinderMeasure table_from_counts(int m, int d, const std::vector<double>& counts);

struct RhoValue {
  double value;
  double tail_bound;  // |rho - rho_J| <= tail_bound
};

// depth needed to evaluate the first J cylinders of an m-letter alphabet
int rho_depth(int m, int J);
RhoValue weak_star_distance(const CylinderMeasure& a, const CylinderMeasure& b, int J);
RhoValue weak_star_distance(const MixedMeasure& a, const MixedMeasure& b, int J);

struct MarkovInvariants {
  std::vector<double> pi;
  double entropy;
  SftDescr support;
};
MarkovInvariants markov_invariants(int m, const std::vector<double>& P);

CylinderMeasure mix(const std::vector<std::pair<double, MixedMeasure>>& entries, int depth);

// polyline of measures; consecutive vertices span segments
struct MeasurePolyline {
  std::vector<MixedMeasure> vertices;
  bool closed = false;
};

// rho_J point-to-polyline and Hausdorff distances, evaluated at depth rho_depth(m,J)
double rho_to_segment(const CylinderMeasure& x, const CylinderMeasure& a, const CylinderMeasure& b, int J);
double hausdorff_polylines(const MeasurePolyline& A, const MeasurePolyline& B, int J, int samples = 64);

double binary_entropy(double p);

}  // namespace omega
