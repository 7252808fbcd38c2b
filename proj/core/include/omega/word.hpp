#pragma once
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "omega/numeric.hpp"

namespace omega {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

constexpr int kMaxAlphabet = 36;

// digits 0-9 then a-z
std::string to_string(const Word& w);
Word parse_word(std::string_view s);
char symbol_char(Symbol s);

// index of w read as a base-m number (most significant first)
std::uint64_t word_index(const Word& w, int m);
Word word_from_index(std::uint64_t idx, int len, int m);

// d(x,y) = 2^{-j}, j the first index where x and y differ; 0 when equal
Rational shift_distance(const Word& x, const Word& y);
// first differing index, or -1 when equal
long first_difference(const Word& x, const Word& y);

bool length_lex_less(const Word& a, const Word& b);

}  // namespace omega
