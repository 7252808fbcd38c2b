#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "omega/graph.hpp"
#include "omega/numeric.hpp"
#include "omega/rng.hpp"
#include "omega/word.hpp"

namespace omega {

constexpr std::uint64_t kDefaultLanguageCap = 1ULL << 26;

// A finite set of n-blocks; the block-SFT is the set of free concatenations.
class BlockSource {
 public:
  virtual ~BlockSource() = default;
  virtual int alphabet() const = 0;
  virtual int block_length() const = 0;
  virtual BigInt count() const = 0;
  virtual bool contains(const Word& w) const = 0;
  // uniform over the block set
  virtual Word sample(Rng& rng) const = 0;
  // sorted list; OversizeRequest above cap
  virtual std::vector<Word> enumerate(std::uint64_t cap) const = 0;
  virtual std::string kind() const = 0;
};

class ExplicitBlocks : public BlockSource {
 public:
  ExplicitBlocks(int m, std::vector<Word> words);
  int alphabet() const override { return m_; }
  int block_length() const override { return n_; }
  BigInt count() const override { return BigInt(words_.size()); }
  bool contains(const Word& w) const override;
  Word sample(Rng& rng) const override;
  std::vector<Word> enumerate(std::uint64_t cap) const override;
  std::string kind() const override { return "explicit"; }
  const std::vector<Word>& words() const { return words_; }

 private:
  int m_;
  int n_;
  std::vector<Word> words_;
};

class SftDescr {
 public:
  enum class Kind { Matrix, Blocks };

  SftDescr() = default;
  static SftDescr full(int m);
  // full shift on a subset of the symbols of an m-letter alphabet
  static SftDescr full_on(int m, const std::vector<Symbol>& symbols);
  static SftDescr from_matrix(int m, std::vector<std::uint8_t> allowed);
  static SftDescr from_blocks(std::shared_ptr<const BlockSource> blocks);

  Kind kind() const { return kind_; }
  int m() const { return m_; }
  bool allows(Symbol a, Symbol b) const;
  const std::vector<std::uint8_t>& matrix() const { return allowed_; }
  const BlockSource& blocks() const { return *blocks_; }
  std::shared_ptr<const BlockSource> blocks_ptr() const { return blocks_; }
  bool irreducible() const { return irreducible_; }
  // symbols that occur in some point
  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool has_symbol(Symbol s) const;
  // trimmed presentation (memory-1: one state per symbol)
  const LabeledGraph& graph() const { return graph_; }

  bool operator==(const SftDescr& o) const;

 private:
  void finish();
  Kind kind_ = Kind::Matrix;
  int m_ = 0;
  std::vector<std::uint8_t> allowed_;
  std::shared_ptr<const BlockSource> blocks_;
  bool irreducible_ = false;
  std::vector<Symbol> symbols_;
  LabeledGraph graph_;
};

std::vector<Word> sft_language(const SftDescr& sft, int n, std::uint64_t cap = kDefaultLanguageCap);
// |L_n| exactly (matrix powers for memory-1, path counting otherwise)
BigInt sft_word_count(const SftDescr& sft, int n);
bool sft_accepts(const SftDescr& sft, const Word& w);

// Shortest path a -> c_1 .. c_l -> b in the memory-1 graph, lexicographically
// least among shortest; returns the interior c_1..c_l (empty if a->b allowed).
std::optional<Word> bridge_word(const SftDescr& sft, Symbol a, Symbol b);

// lexicographically least / greatest infinite path from state a, as (pre, cycle)
std::pair<Word, Word> greedy_path(const SftDescr& sft, Symbol a, bool greatest);

}  // namespace omega
