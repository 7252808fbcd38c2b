#include "omega/growth.hpp"

#include <cmath>

#include "omega/error.hpp"

namespace omega {

void Template::validate() const {
  if (c < 1 || a < 0 || b < 1 || e < 0 || a > 16 || b > 64 || e > 4)
    fail(ErrorCode::UnsupportedSchedule, "template outside the supported family: " + str());
}

namespace {
std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) return 0;
  if (x > kSaturated / y) return kSaturated;
  return std::min(x * y, kSaturated);
}
}  // namespace

std::uint64_t Template::eval(std::int64_t s) const {
  std::uint64_t v = std::uint64_t(c);
  for (int i = 0; i < a; ++i) v = sat_mul(v, std::uint64_t(s));
  for (std::int64_t i = 0; i < s && v < kSaturated; ++i) v = sat_mul(v, std::uint64_t(b));
  for (int k = 0; k < e; ++k)
    for (std::int64_t i = 2; i <= s && v < kSaturated; ++i) v = sat_mul(v, std::uint64_t(i));
  return v;
}

long double Template::eval_ld(std::int64_t s) const {
  long double v = (long double)c;
  v *= std::pow((long double)s, (long double)a);
  v *= std::pow((long double)b, (long double)s);
  for (int k = 0; k < e; ++k)
    for (std::int64_t i = 2; i <= s; ++i) v *= (long double)i;
  return v;
}

std::string Template::str() const {
  return std::to_string(c) + "*s^" + std::to_string(a) + "*" + std::to_string(b) + "^s*(s!)^" +
         std::to_string(e);
}

Template operator*(const Template& x, const Template& y) {
  return {x.c * y.c, x.a + y.a, x.b * y.b, x.e + y.e};
}

GrowthClass growth_class(const Template& t) { return {t.e, t.b, t.a}; }

Asymptotic progression_sum(const Template& t, int d, int P) {
  Asymptotic r;
  if (t.e >= 1) {
    // dominated by the last term t(s-d) ~ c b^{-d} s^{a-de} b^s (s!)^e
    r.cls = {t.e, t.b, t.a - d * t.e};
    r.coef = Rational(BigInt(t.c), pow(BigInt(t.b), d));
  } else if (t.b > 1) {
    BigInt bP = pow(BigInt(t.b), P);
    r.cls = {0, t.b, t.a};
    r.coef = Rational(BigInt(t.c) * pow(BigInt(t.b), P - d), bP - 1);
  } else {
    r.cls = {0, 1, t.a + 1};
    r.coef = Rational(BigInt(t.c), BigInt(P) * (t.a + 1));
  }
  return r;
}

Leading leading_terms(const std::vector<Asymptotic>& xs) {
  Leading L;
  if (xs.empty()) return L;
  L.cls = xs[0].cls;
  for (auto& x : xs) L.cls = std::max(L.cls, x.cls);
  for (auto& x : xs) L.coef.push_back(x.cls == L.cls ? x.coef : Rational(0));
  return L;
}

}  // namespace omega
