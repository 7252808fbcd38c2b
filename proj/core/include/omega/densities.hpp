#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "omega/growth.hpp"
#include "omega/numeric.hpp"
#include "omega/schedule.hpp"

namespace omega {

struct IndexSet {
  enum class Kind { FinitePrefix, Periodic, Geometric, Sparse };
  Kind kind = Kind::FinitePrefix;

  // FinitePrefix: strictly increasing indices below horizon
  std::vector<std::uint64_t> indices;
  std::uint64_t horizon = 0;

  // Periodic: {n : n mod period in residues} plus `added`, minus `removed`
  std::uint64_t period = 1;
  std::vector<std::uint64_t> residues, added, removed;

  // Geometric: union over k >= 0 of [ceil(alpha b^k), ceil(beta b^k))
  std::int64_t base = 2;
  Rational alpha = 1, beta = 2;

  // Sparse: {t(k) : k >= 0}
  Template points;

  static IndexSet finite(std::vector<std::uint64_t> idx, std::uint64_t horizon);
  static IndexSet periodic(std::uint64_t period, std::vector<std::uint64_t> residues,
                           std::vector<std::uint64_t> added = {}, std::vector<std::uint64_t> removed = {});
  static IndexSet geometric(std::int64_t base, Rational alpha, Rational beta);
  static IndexSet sparse(Template t);

  void validate() const;
  bool is_pattern() const { return kind != Kind::FinitePrefix; }
};

struct DensityProfile {
  Rational B_lower, d_lower, d_upper, B_upper;
  bool exact = false;
};

DensityProfile density_profile(const IndexSet& S);

struct Syndeticity {
  bool syndetic = false;
  std::optional<std::uint64_t> gap;  // nullopt: unbounded
};
Syndeticity is_syndetic(const IndexSet& S);

// the members of S below N, as a FinitePrefix set
IndexSet materialize(const IndexSet& S, std::uint64_t N);
IndexSet complement(const IndexSet& finite);

IndexSet visit_times(const BlockSchedule& s, const Word& cyl, std::uint64_t horizon);

}  // namespace omega
