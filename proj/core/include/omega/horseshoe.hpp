#pragma once
#include <array>
#include <functional>
#include <memory>

#include "omega/measures.hpp"
#include "omega/sft.hpp"

namespace omega {

// n-words in the support language whose depth-d empirical measure lies within
// radius of mu (rho over the depth-d cylinders only). Depth 1 for i.i.d.
// measures, depth 2 for binary Markov measures.
class TypeClassBlocks : public BlockSource {
 public:
  TypeClassBlocks(const MarkovMeasure& mu, int n, int depth, double radius);
  int alphabet() const override { return m_; }
  int block_length() const override { return n_; }
  BigInt count() const override { return total_; }
  bool contains(const Word& w) const override;
  Word sample(Rng& rng) const override;
  std::vector<Word> enumerate(std::uint64_t cap) const override;
  std::string kind() const override { return "type_class"; }

  const MarkovMeasure& measure() const { return mu_; }
  int depth() const { return depth_; }
  double radius() const { return radius_; }
  // the rho used for membership
  double distance(const Word& w) const;

 private:
  struct Type {
    std::vector<int> p;  // depth 1: symbol counts; depth 2: first, last, r0, r1, zeros
    BigInt count;
  };
  Word build(const Type& t, Rng& rng) const;

  MarkovMeasure mu_;
  int m_, n_, depth_;
  double radius_;
  std::vector<Type> types_;
  std::vector<long double> cum_;
  BigInt total_;
};

// log of the number of words within radius, by the same type enumeration
double type_class_log_count(const MarkovMeasure& mu, int n, int depth, double radius);

// Binary word shape: first and last symbol, run counts of each symbol, number
// of zeros. Symbols 0 and 1 stand for the two recurrent states.
struct BinaryRunType {
  int first, l;
  long r0, r1, z;
  std::array<long, 4> transitions(long n) const;  // n00 n01 n10 n11
  BigInt count(long n) const;
  double log_count(long n) const;
};
void for_each_binary_run_type(long n, const std::function<void(const BinaryRunType&)>& fn);

int horseshoe_depth(const MarkovMeasure& mu);

struct Horseshoe {
  SftDescr sft;
  int n = 0;
  BigInt count;
  double rate = 0;  // log count / n
};

// smallest n <= cap with log|Gamma_n| / n >= h - eta at radius zeta / 4
Horseshoe build_horseshoe(const MarkovMeasure& mu, double eta, double zeta, int cap = 4096);
SftDescr entropy_dense_horseshoe(const MarkovMeasure& mu, double eta, double zeta);

}  // namespace omega
