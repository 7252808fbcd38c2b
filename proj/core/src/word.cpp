#include "omega/word.hpp"

#include <algorithm>
#include <cmath>

#include "omega/error.hpp"

namespace omega {

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  auto dot = s.find('.');
  try {
    if (slash != std::string::npos)
      return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      BigInt den = 1;
      for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
      bool neg = !digits.empty() && digits[0] == '-';
      if (neg) digits.erase(0, 1);
      // a leading zero would make the string constructor read octal
      digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
      if (digits.empty()) digits = "0";
      if (neg) digits.insert(0, "-");
      return Rational(BigInt(digits), den);
    }
    return Rational(BigInt(s));
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "bad rational '" + s + "'");
  }
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double log_big(const BigInt& v) {
  if (v <= 0) return -INFINITY;
  auto bits = boost::multiprecision::msb(v);
  if (bits < 1000) return std::log(v.convert_to<double>());
  unsigned shift = bits - 60;
  BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

char symbol_char(Symbol s) { return s < 10 ? char('0' + s) : char('a' + (s - 10)); }

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (auto s : w) out.push_back(symbol_char(s));
  return out;
}

Word parse_word(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    if (c >= '0' && c <= '9') w.push_back(Symbol(c - '0'));
    else if (c >= 'a' && c <= 'z') w.push_back(Symbol(10 + c - 'a'));
    else fail(ErrorCode::InvalidArgument, std::string("bad symbol '") + c + "'");
  }
  return w;
}

std::uint64_t word_index(const Word& w, int m) {
  std::uint64_t idx = 0;
  for (auto s : w) idx = idx * m + s;
  return idx;
}

Word word_from_index(std::uint64_t idx, int len, int m) {
  Word w(len);
  for (int i = len - 1; i >= 0; --i) {
    w[i] = Symbol(idx % m);
    idx /= m;
  }
  return w;
}

long first_difference(const Word& x, const Word& y) {
  if (x.size() != y.size()) fail(ErrorCode::LengthMismatch, "shift_distance needs equal lengths");
  auto [a, b] = std::mismatch(x.begin(), x.end(), y.begin());
  if (a == x.end()) return -1;
  return long(a - x.begin());
}

Rational shift_distance(const Word& x, const Word& y) {
  long j = first_difference(x, y);
  if (j < 0) return Rational(0);
  return Rational(BigInt(1), BigInt(1) << j);
}

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace omega
