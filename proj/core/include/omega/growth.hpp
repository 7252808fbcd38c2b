#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "omega/numeric.hpp"

namespace omega {

// t(s) = c * s^a * b^s * (s!)^e, evaluated at the stage index s >= 0 (0^0 = 1).
struct Template {
  std::int64_t c = 1;
  int a = 0;
  std::int64_t b = 1;
  int e = 0;

  static Template constant(std::int64_t c) { return {c, 0, 1, 0}; }
  void validate() const;
  // saturates at kSaturated
  std::uint64_t eval(std::int64_t s) const;
  long double eval_ld(std::int64_t s) const;
  std::string str() const;
  bool operator==(const Template&) const = default;
};

constexpr std::uint64_t kSaturated = 1ULL << 62;

Template operator*(const Template& x, const Template& y);

// growth class of s^a b^s (s!)^e, ordered lexicographically by (e, b, a)
struct GrowthClass {
  int e = 0;
  std::int64_t b = 1;
  int a = 0;
  auto operator<=>(const GrowthClass&) const = default;
};

// coef * s^a b^s (s!)^e + lower order terms
struct Asymptotic {
  GrowthClass cls;
  Rational coef;
};

GrowthClass growth_class(const Template& t);

// Asymptotic of sum_{j >= 0} t(s - d - P j) as s -> infinity (terms with
// negative argument dropped).
Asymptotic progression_sum(const Template& t, int d, int P);

// Leading terms of a family of asymptotics: keeps those of maximal class.
struct Leading {
  GrowthClass cls;
  std::vector<Rational> coef;  // zero for non-maximal entries
};
Leading leading_terms(const std::vector<Asymptotic>& xs);

}  // namespace omega
