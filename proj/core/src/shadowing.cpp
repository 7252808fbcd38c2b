#include "omega/shadowing.hpp"

#include <algorithm>

#include "omega/error.hpp"

namespace omega {

void check_pseudo_orbit(const ShiftPseudoOrbit& p) {
  if (p.k < 0) fail(ErrorCode::InvalidArgument, "agreement k must be >= 0");
  const size_t k = size_t(std::max(p.k, 1));
  for (auto& x : p.points)
    if (x.size() < k + 1) fail(ErrorCode::NotAPseudoOrbit, "pseudo-orbit entries need k + 1 symbols");
  for (size_t n = 0; n + 1 < p.points.size(); ++n) {
    const Word& a = p.points[n];
    const Word& b = p.points[n + 1];
    if (!std::equal(a.begin() + 1, a.begin() + 1 + k, b.begin()))
      fail(ErrorCode::NotAPseudoOrbit, "entry " + std::to_string(n + 1) + " does not follow the shift of entry " +
                                           std::to_string(n));
  }
}

ShiftShadow shadow_shift(const ShiftPseudoOrbit& p) {
  check_pseudo_orbit(p);
  ShiftShadow out;
  out.epsilon = 0;
  for (auto& x : p.points) out.y.push_back(x[0]);
  // the shadow's tail past the horizon follows the last entry
  if (!p.points.empty()) out.y.insert(out.y.end(), p.points.back().begin() + 1, p.points.back().end());
  for (size_t n = 0; n < p.points.size(); ++n) {
    const Word& x = p.points[n];
    const size_t len = std::min(x.size(), out.y.size() - n);
    for (size_t i = 0; i < len; ++i)
      if (out.y[n + i] != x[i]) {
        out.epsilon = std::max(out.epsilon, Rational(1) / (BigInt(1) << i));
        break;
      }
  }
  return out;
}

Rational frac(const Rational& x) {
  BigInt fl = numerator(x) / denominator(x);
  if (numerator(x) < 0 && fl * denominator(x) != numerator(x)) fl -= 1;
  return x - Rational(fl);
}

Rational circle_distance(const Rational& a, const Rational& b) {
  Rational d = frac(a - b);
  return std::min(d, Rational(1) - d);
}

DoublingShadow shadow_doubling(const RealPseudoOrbit& p, const Rational& epsilon) {
  if (!(epsilon < Rational(1, 4)) || !(p.delta * 4 <= epsilon) || p.delta < 0)
    fail(ErrorCode::PseudoOrbitTooLoose, "needs delta <= epsilon/4 and epsilon < 1/4");
  if (p.x.empty()) fail(ErrorCode::InvalidArgument, "empty pseudo-orbit");
  for (auto& v : p.x)
    if (v < 0 || v >= 1) fail(ErrorCode::InvalidArgument, "pseudo-orbit points must lie in [0,1)");
  for (size_t n = 0; n + 1 < p.x.size(); ++n)
    if (circle_distance(2 * p.x[n], p.x[n + 1]) > p.delta)
      fail(ErrorCode::NotAPseudoOrbit, "step " + std::to_string(n) + " exceeds delta");
  // backward: y_N = x_N, y_n the preimage of y_{n+1} nearest x_n
  Rational y = p.x.back();
  for (size_t n = p.x.size() - 1; n-- > 0;) {
    Rational a = y / 2, b = (y + 1) / 2;
    y = circle_distance(a, p.x[n]) <= circle_distance(b, p.x[n]) ? a : b;
  }
  DoublingShadow out;
  out.y = y;
  out.deviation = 0;
  Rational z = y;
  for (size_t n = 0; n < p.x.size(); ++n) {
    out.deviation = std::max(out.deviation, circle_distance(z, p.x[n]));
    z = frac(2 * z);
  }
  if (out.deviation > epsilon) fail(ErrorCode::PseudoOrbitTooLoose, "shadow deviation exceeds epsilon");
  return out;
}

Word doubling_coding(const Rational& x, int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "n must be >= 0");
  Rational z = frac(x);
  Word w;
  for (int i = 0; i < n; ++i) {
    z *= 2;
    if (z >= 1) {
      w.push_back(1);
      z -= 1;
    } else {
      w.push_back(0);
    }
  }
  return w;
}

}  // namespace omega
