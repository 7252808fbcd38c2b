#pragma once
#include <vector>

#include "omega/numeric.hpp"
#include "omega/word.hpp"

namespace omega {

struct ShiftPseudoOrbit {
  std::vector<Word> points;  // each of length >= k + 1
  int k = 1;
};

struct ShiftShadow {
  Word y;
  Rational epsilon;  // max_n d(sigma^n y, x_n) over the compared symbols
};

// checks x_{n+1} agrees with sigma x_n on k symbols (k = 0 is read as k = 1)
void check_pseudo_orbit(const ShiftPseudoOrbit& p);
ShiftShadow shadow_shift(const ShiftPseudoOrbit& p);

struct RealPseudoOrbit {
  std::vector<Rational> x;  // in [0,1)
  Rational delta;
};

struct DoublingShadow {
  Rational y;
  Rational deviation;  // max_n |2^n y - x_n| on the circle
};

Rational circle_distance(const Rational& a, const Rational& b);
Rational frac(const Rational& x);
DoublingShadow shadow_doubling(const RealPseudoOrbit& p, const Rational& epsilon);

// binary itinerary for [0,1/2), [1/2,1); dyadic points use the 0-tail expansion
Word doubling_coding(const Rational& x, int n);

}  // namespace omega
