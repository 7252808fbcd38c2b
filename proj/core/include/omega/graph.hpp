#pragma once
#include <cstdint>
#include <vector>

#include "omega/word.hpp"

namespace omega {

// Vertex-labeled directed graph. The subshift it presents is the set of label
// sequences of infinite forward paths.
struct LabeledGraph {
  std::vector<Symbol> label;
  std::vector<std::vector<int>> succ;

  int size() const { return int(label.size()); }
  bool empty() const { return label.empty(); }
  int add_state(Symbol s);
  void add_edge(int u, int v);
  // copies g into this graph, returns the index offset of the copy
  int append(const LabeledGraph& g);
  LabeledGraph reversed() const;
  int max_label() const;
};

LabeledGraph graph_from_matrix(int m, const std::vector<std::uint8_t>& allowed);
// orbit closure of pre·period^∞
LabeledGraph graph_from_point(const Word& pre, const Word& period);
LabeledGraph graph_union(const LabeledGraph& a, const LabeledGraph& b);

// keep states from which an infinite path starts; map[old] = new index or -1
LabeledGraph trim(const LabeledGraph& g, std::vector<int>* map = nullptr);
LabeledGraph induced(const LabeledGraph& g, const std::vector<char>& keep, std::vector<int>* map = nullptr);
// states that can reach one of the targets (targets included)
std::vector<char> can_reach(const LabeledGraph& g, const std::vector<int>& targets);

std::vector<int> scc_ids(const LabeledGraph& g, int* count);
// strongly connected components containing a cycle
std::vector<std::vector<int>> nontrivial_sccs(const LabeledGraph& g);

LabeledGraph graph_intersection(const LabeledGraph& a, const LabeledGraph& b);
// X_a ⊆ X_b for trimmed graphs
bool graph_includes(const LabeledGraph& a, const LabeledGraph& b);
bool graph_equal(const LabeledGraph& a, const LabeledGraph& b);

// Words labelling finite paths that start in `starts`; inclusion of such
// languages (used for left contexts, read on reversed graphs).
bool finite_language_includes(const LabeledGraph& a, const std::vector<int>& starts_a,
                              const LabeledGraph& b, const std::vector<int>& starts_b);

// n-words of the presented subshift (graph must be trimmed), sorted, unique
std::vector<Word> graph_language(const LabeledGraph& g, int n, std::uint64_t cap);
// number of n-words, saturating at cap+1
std::uint64_t graph_language_count(const LabeledGraph& g, int n, std::uint64_t cap);
// labels of length-n paths starting in `starts` (any continuation allowed)
std::vector<Word> path_words_from(const LabeledGraph& g, const std::vector<int>& starts, int n,
                                  std::uint64_t cap);
bool graph_accepts(const LabeledGraph& g, const Word& w);

}  // namespace omega
