#include "omega/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "omega/error.hpp"

namespace omega {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  size_t operator()(const Bits& b) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : b) h = (h ^ w) * 0x100000001b3ULL;
    return size_t(h);
  }
};

Bits make_bits(int n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, int i) { b[i >> 6] |= 1ULL << (i & 63); }
bool bits_empty(const Bits& b) {
  for (auto w : b)
    if (w) return false;
  return true;
}
template <class F>
void for_bits(const Bits& b, F f) {
  for (size_t k = 0; k < b.size(); ++k) {
    std::uint64_t w = b[k];
    while (w) {
      int t = __builtin_ctzll(w);
      f(int(k * 64 + t));
      w &= w - 1;
    }
  }
}

// precomputed successor and label masks for subset simulation
struct Automaton {
  int n = 0;
  int alphabet = 0;
  std::vector<Bits> succ_mask;
  std::vector<Bits> label_mask;

  explicit Automaton(const LabeledGraph& g) : n(g.size()), alphabet(g.max_label() + 1) {
    succ_mask.assign(n, make_bits(n));
    label_mask.assign(std::max(alphabet, 1), make_bits(n));
    for (int u = 0; u < n; ++u) {
      set_bit(label_mask[g.label[u]], u);
      for (int v : g.succ[u]) set_bit(succ_mask[u], v);
    }
  }
  Bits step(const Bits& s, int c) const {
    Bits out = make_bits(n);
    if (c >= alphabet) return out;
    for_bits(s, [&](int u) {
      for (size_t k = 0; k < out.size(); ++k) out[k] |= succ_mask[u][k];
    });
    for (size_t k = 0; k < out.size(); ++k) out[k] &= label_mask[c][k];
    return out;
  }
  Bits start(int c) const { return c < alphabet ? label_mask[c] : make_bits(n); }
  Bits start_in(const std::vector<int>& states, int c, const LabeledGraph& g) const {
    Bits b = make_bits(n);
    for (int s : states)
      if (g.label[s] == c) set_bit(b, s);
    return b;
  }
};

}  // namespace

int LabeledGraph::add_state(Symbol s) {
  label.push_back(s);
  succ.emplace_back();
  return size() - 1;
}

void LabeledGraph::add_edge(int u, int v) {
  auto& s = succ[u];
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

int LabeledGraph::append(const LabeledGraph& g) {
  int off = size();
  for (int i = 0; i < g.size(); ++i) add_state(g.label[i]);
  for (int i = 0; i < g.size(); ++i)
    for (int j : g.succ[i]) add_edge(off + i, off + j);
  return off;
}

LabeledGraph LabeledGraph::reversed() const {
  LabeledGraph r;
  for (auto l : label) r.add_state(l);
  for (int u = 0; u < size(); ++u)
    for (int v : succ[u]) r.succ[v].push_back(u);
  for (auto& s : r.succ) std::sort(s.begin(), s.end());
  return r;
}

int LabeledGraph::max_label() const {
  int m = -1;
  for (auto l : label) m = std::max(m, int(l));
  return m;
}

LabeledGraph graph_from_matrix(int m, const std::vector<std::uint8_t>& allowed) {
  LabeledGraph g;
  for (int a = 0; a < m; ++a) g.add_state(Symbol(a));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (allowed[a * m + b]) g.add_edge(a, b);
  return g;
}

LabeledGraph graph_from_point(const Word& pre, const Word& period) {
  if (period.empty()) fail(ErrorCode::InvalidArgument, "empty period word");
  LabeledGraph g;
  int prev = -1;
  for (auto s : pre) {
    int v = g.add_state(s);
    if (prev >= 0) g.add_edge(prev, v);
    prev = v;
  }
  int first = -1;
  for (auto s : period) {
    int v = g.add_state(s);
    if (first < 0) first = v;
    if (prev >= 0) g.add_edge(prev, v);
    prev = v;
  }
  g.add_edge(prev, first);
  return g;
}

LabeledGraph graph_union(const LabeledGraph& a, const LabeledGraph& b) {
  LabeledGraph g = a;
  g.append(b);
  return g;
}

LabeledGraph induced(const LabeledGraph& g, const std::vector<char>& keep, std::vector<int>* map) {
  std::vector<int> idx(g.size(), -1);
  LabeledGraph out;
  for (int i = 0; i < g.size(); ++i)
    if (keep[i]) idx[i] = out.add_state(g.label[i]);
  for (int i = 0; i < g.size(); ++i) {
    if (idx[i] < 0) continue;
    for (int j : g.succ[i])
      if (idx[j] >= 0) out.succ[idx[i]].push_back(idx[j]);
  }
  for (auto& s : out.succ) std::sort(s.begin(), s.end());
  if (map) *map = idx;
  return out;
}

LabeledGraph trim(const LabeledGraph& g, std::vector<int>* map) {
  int n = g.size();
  std::vector<int> outdeg(n);
  std::vector<std::vector<int>> pred(n);
  for (int u = 0; u < n; ++u) {
    outdeg[u] = int(g.succ[u].size());
    for (int v : g.succ[u]) pred[v].push_back(u);
  }
  std::vector<char> keep(n, 1);
  std::deque<int> q;
  for (int u = 0; u < n; ++u)
    if (outdeg[u] == 0) q.push_back(u);
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (!keep[u]) continue;
    keep[u] = 0;
    for (int p : pred[u])
      if (keep[p] && --outdeg[p] == 0) q.push_back(p);
  }
  return induced(g, keep, map);
}

std::vector<char> can_reach(const LabeledGraph& g, const std::vector<int>& targets) {
  std::vector<std::vector<int>> pred(g.size());
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.succ[u]) pred[v].push_back(u);
  std::vector<char> seen(g.size(), 0);
  std::vector<int> stack;
  for (int t : targets)
    if (!seen[t]) seen[t] = 1, stack.push_back(t);
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int p : pred[u])
      if (!seen[p]) seen[p] = 1, stack.push_back(p);
  }
  return seen;
}

std::vector<int> scc_ids(const LabeledGraph& g, int* count) {
  int n = g.size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on(n, 0);
  std::vector<int> stack;
  int next = 0, comps = 0;
  struct Frame { int v; size_t i; };
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next++;
    stack.push_back(root);
    on[root] = 1;
    while (!call.empty()) {
      auto& f = call.back();
      if (f.i < g.succ[f.v].size()) {
        int w = g.succ[f.v][f.i++];
        if (index[w] < 0) {
          index[w] = low[w] = next++;
          stack.push_back(w);
          on[w] = 1;
          call.push_back({w, 0});
        } else if (on[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        int v = f.v;
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  if (count) *count = comps;
  return comp;
}

std::vector<std::vector<int>> nontrivial_sccs(const LabeledGraph& g) {
  int k = 0;
  auto comp = scc_ids(g, &k);
  std::vector<std::vector<int>> members(k);
  for (int v = 0; v < g.size(); ++v) members[comp[v]].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& mem : members) {
    bool cyc = mem.size() > 1;
    if (!cyc) {
      int v = mem[0];
      cyc = std::binary_search(g.succ[v].begin(), g.succ[v].end(), v);
    }
    if (cyc) out.push_back(mem);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph graph_intersection(const LabeledGraph& a, const LabeledGraph& b) {
  std::map<std::pair<int, int>, int> idx;
  LabeledGraph g;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      if (a.label[i] == b.label[j]) idx[{i, j}] = g.add_state(a.label[i]);
  for (auto& [key, u] : idx)
    for (int i2 : a.succ[key.first])
      for (int j2 : b.succ[key.second]) {
        auto it = idx.find({i2, j2});
        if (it != idx.end()) g.add_edge(u, it->second);
      }
  return trim(g);
}

bool graph_includes(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.empty()) return true;
  if (b.empty()) return false;
  Automaton B(b);
  std::set<std::pair<int, Bits>> seen;
  std::deque<std::pair<int, Bits>> q;
  for (int s = 0; s < a.size(); ++s) {
    Bits S = B.start(a.label[s]);
    if (bits_empty(S)) return false;
    if (seen.insert({s, S}).second) q.push_back({s, S});
  }
  while (!q.empty()) {
    auto [s, S] = q.front();
    q.pop_front();
    for (int t : a.succ[s]) {
      Bits T = B.step(S, a.label[t]);
      if (bits_empty(T)) return false;
      if (seen.insert({t, T}).second) q.push_back({t, T});
    }
  }
  return true;
}

bool graph_equal(const LabeledGraph& a, const LabeledGraph& b) {
  return graph_includes(a, b) && graph_includes(b, a);
}

bool finite_language_includes(const LabeledGraph& a, const std::vector<int>& starts_a,
                              const LabeledGraph& b, const std::vector<int>& starts_b) {
  if (starts_a.empty()) return true;
  if (starts_b.empty()) return false;
  Automaton B(b);
  std::set<std::pair<int, Bits>> seen;
  std::deque<std::pair<int, Bits>> q;
  for (int s : starts_a) {
    Bits S = B.start_in(starts_b, a.label[s], b);
    if (bits_empty(S)) return false;
    if (seen.insert({s, S}).second) q.push_back({s, S});
  }
  while (!q.empty()) {
    auto [s, S] = q.front();
    q.pop_front();
    for (int t : a.succ[s]) {
      Bits T = B.step(S, a.label[t]);
      if (bits_empty(T)) return false;
      if (seen.insert({t, T}).second) q.push_back({t, T});
    }
  }
  return true;
}

namespace {

template <class Emit>
void enumerate_words(const Automaton& A, const std::vector<Bits>& starts, int n, Emit emit) {
  Word w(n);
  std::function<bool(int, const Bits&)> rec = [&](int depth, const Bits& S) -> bool {
    if (depth == n) return emit(w);
    for (int c = 0; c < A.alphabet; ++c) {
      Bits T = A.step(S, c);
      if (bits_empty(T)) continue;
      w[depth] = Symbol(c);
      if (!rec(depth + 1, T)) return false;
    }
    return true;
  };
  for (int c = 0; c < int(starts.size()); ++c) {
    if (bits_empty(starts[c])) continue;
    w[0] = Symbol(c);
    if (!rec(1, starts[c])) return;
  }
}

}  // namespace

std::vector<Word> path_words_from(const LabeledGraph& g, const std::vector<int>& starts, int n,
                                  std::uint64_t cap) {
  std::vector<Word> out;
  if (n <= 0 || g.empty()) return out;
  Automaton A(g);
  std::vector<Bits> st;
  for (int c = 0; c < A.alphabet; ++c) st.push_back(A.start_in(starts, c, g));
  bool over = false;
  enumerate_words(A, st, n, [&](const Word& w) {
    if (out.size() >= cap) {
      over = true;
      return false;
    }
    out.push_back(w);
    return true;
  });
  if (over) fail(ErrorCode::OversizeRequest, "more than " + std::to_string(cap) + " words of length " + std::to_string(n));
  return out;
}

std::vector<Word> graph_language(const LabeledGraph& g, int n, std::uint64_t cap) {
  std::vector<int> all(g.size());
  for (int i = 0; i < g.size(); ++i) all[i] = i;
  return path_words_from(g, all, n, cap);
}

std::uint64_t graph_language_count(const LabeledGraph& g, int n, std::uint64_t cap) {
  if (n <= 0 || g.empty()) return 0;
  Automaton A(g);
  std::vector<Bits> st;
  for (int c = 0; c < A.alphabet; ++c) st.push_back(A.start(c));
  std::uint64_t count = 0;
  enumerate_words(A, st, n, [&](const Word&) { return ++count <= cap; });
  return count;
}

bool graph_accepts(const LabeledGraph& g, const Word& w) {
  if (w.empty()) return !g.empty();
  Automaton A(g);
  Bits S = A.start(w[0]);
  for (size_t i = 1; i < w.size() && !bits_empty(S); ++i) S = A.step(S, w[i]);
  return !bits_empty(S);
}

}  // namespace omega
