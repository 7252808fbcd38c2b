#include "omega/sft.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "omega/error.hpp"

namespace omega {

ExplicitBlocks::ExplicitBlocks(int m, std::vector<Word> words) : m_(m), words_(std::move(words)) {
  if (words_.empty()) fail(ErrorCode::InvalidArgument, "empty block set");
  n_ = int(words_[0].size());
  if (n_ == 0) fail(ErrorCode::InvalidArgument, "empty block");
  for (auto& w : words_) {
    if (int(w.size()) != n_) fail(ErrorCode::LengthMismatch, "blocks must share one length");
    for (auto s : w)
      if (s >= m_) fail(ErrorCode::InvalidArgument, "block symbol outside alphabet");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool ExplicitBlocks::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

Word ExplicitBlocks::sample(Rng& rng) const { return words_[rng.below(words_.size())]; }

std::vector<Word> ExplicitBlocks::enumerate(std::uint64_t cap) const {
  if (words_.size() > cap) fail(ErrorCode::OversizeRequest, "block set larger than cap");
  return words_;
}

SftDescr SftDescr::full(int m) { return from_matrix(m, std::vector<std::uint8_t>(size_t(m) * m, 1)); }

SftDescr SftDescr::full_on(int m, const std::vector<Symbol>& symbols) {
  std::vector<std::uint8_t> a(size_t(m) * m, 0);
  for (auto x : symbols)
    for (auto y : symbols) a[x * m + y] = 1;
  return from_matrix(m, a);
}

SftDescr SftDescr::from_matrix(int m, std::vector<std::uint8_t> allowed) {
  if (m < 1 || m > kMaxAlphabet) fail(ErrorCode::InvalidArgument, "alphabet size out of range");
  if (allowed.size() != size_t(m) * m) fail(ErrorCode::InvalidArgument, "matrix must be m x m");
  SftDescr s;
  s.kind_ = Kind::Matrix;
  s.m_ = m;
  for (auto& v : allowed) v = v ? 1 : 0;
  s.allowed_ = std::move(allowed);
  s.finish();
  return s;
}

SftDescr SftDescr::from_blocks(std::shared_ptr<const BlockSource> blocks) {
  SftDescr s;
  s.kind_ = Kind::Blocks;
  s.m_ = blocks->alphabet();
  s.blocks_ = std::move(blocks);
  s.finish();
  return s;
}

void SftDescr::finish() {
  if (kind_ == Kind::Matrix) {
    graph_ = trim(graph_from_matrix(m_, allowed_));
  } else {
    // presentation only for small explicit codes
    if (blocks_->count() <= 4096) {
      auto words = blocks_->enumerate(4096);
      int n = blocks_->block_length();
      LabeledGraph g;
      for (auto& w : words)
        for (int j = 0; j < n; ++j) g.add_state(w[j]);
      int k = int(words.size());
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j + 1 < n; ++j) g.add_edge(i * n + j, i * n + j + 1);
        for (int i2 = 0; i2 < k; ++i2) g.add_edge(i * n + n - 1, i2 * n);
      }
      graph_ = g;
    }
  }
  std::set<Symbol> syms;
  for (auto l : graph_.label) syms.insert(l);
  if (kind_ == Kind::Blocks && graph_.empty()) {
    for (int c = 0; c < m_; ++c) syms.insert(Symbol(c));
  }
  symbols_.assign(syms.begin(), syms.end());
  if (kind_ == Kind::Blocks) {
    irreducible_ = blocks_->count() > 0;
  } else {
    // essential part must be one strongly connected component
    LabeledGraph rt = trim(graph_.reversed());
    LabeledGraph ess = rt.reversed();
    int comps = 0;
    if (!ess.empty()) scc_ids(ess, &comps);
    irreducible_ = comps == 1;
  }
}

bool SftDescr::allows(Symbol a, Symbol b) const {
  if (kind_ != Kind::Matrix) fail(ErrorCode::InvalidArgument, "transition query on a block-SFT");
  if (a >= m_ || b >= m_) return false;
  return allowed_[a * m_ + b] != 0;
}

bool SftDescr::has_symbol(Symbol s) const {
  return std::binary_search(symbols_.begin(), symbols_.end(), s);
}

bool SftDescr::operator==(const SftDescr& o) const {
  if (kind_ != o.kind_ || m_ != o.m_) return false;
  if (kind_ == Kind::Matrix) return allowed_ == o.allowed_;
  if (blocks_ == o.blocks_) return true;
  if (blocks_->block_length() != o.blocks_->block_length() || blocks_->count() != o.blocks_->count())
    return false;
  return blocks_->enumerate(kDefaultLanguageCap) == o.blocks_->enumerate(kDefaultLanguageCap);
}

std::vector<Word> sft_language(const SftDescr& sft, int n, std::uint64_t cap) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "word length must be >= 1");
  if (sft.kind() == SftDescr::Kind::Blocks && sft.graph().empty())
    fail(ErrorCode::OversizeRequest, "block set too large to enumerate its language");
  BigInt count = sft_word_count(sft, n);
  if (count > cap)
    fail(ErrorCode::OversizeRequest, "language of length " + std::to_string(n) + " has " + count.str() + " words");
  return graph_language(sft.graph(), n, cap);
}

BigInt sft_word_count(const SftDescr& sft, int n) {
  if (n < 1) return BigInt(0);
  if (sft.kind() == SftDescr::Kind::Matrix) {
    const int m = sft.m();
    const auto& g = sft.graph();
    // paths of length n in the trimmed graph
    std::vector<BigInt> v(g.size(), BigInt(1));
    for (int step = 1; step < n; ++step) {
      std::vector<BigInt> nv(g.size(), BigInt(0));
      for (int u = 0; u < g.size(); ++u)
        for (int w : g.succ[u]) nv[u] += v[w];
      v.swap(nv);
    }
    (void)m;
    BigInt total = 0;
    for (auto& x : v) total += x;
    return total;
  }
  if (sft.graph().empty()) fail(ErrorCode::OversizeRequest, "block set too large to count its language");
  return BigInt(graph_language_count(sft.graph(), n, ~0ULL >> 1));
}

bool sft_accepts(const SftDescr& sft, const Word& w) {
  if (sft.kind() == SftDescr::Kind::Matrix) {
    for (auto s : w)
      if (!sft.has_symbol(s)) return false;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (!sft.allows(w[i], w[i + 1])) return false;
    return true;
  }
  return graph_accepts(sft.graph(), w);
}

std::optional<Word> bridge_word(const SftDescr& sft, Symbol a, Symbol b) {
  const int m = sft.m();
  if (a >= m || b >= m) return std::nullopt;
  if (sft.allows(a, b)) return Word{};
  // BFS backwards from b so that a forward lexicographic choice is shortest
  std::vector<int> dist(m, -1);
  std::deque<int> q;
  dist[b] = 0;
  q.push_back(b);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u = 0; u < m; ++u)
      if (sft.allows(Symbol(u), Symbol(v)) && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        q.push_back(u);
      }
  }
  int best = -1;
  for (int c = 0; c < m; ++c)
    if (sft.allows(a, Symbol(c)) && dist[c] >= 0 && (best < 0 || dist[c] < dist[best])) best = c;
  if (best < 0) return std::nullopt;
  Word out;
  int cur = best;
  while (cur != b) {
    out.push_back(Symbol(cur));
    int nxt = -1;
    for (int c = 0; c < m; ++c)
      if (sft.allows(Symbol(cur), Symbol(c)) && dist[c] == dist[cur] - 1) {
        nxt = c;
        break;
      }
    cur = nxt;
  }
  return out;
}

std::pair<Word, Word> greedy_path(const SftDescr& sft, Symbol a, bool greatest) {
  const auto& g = sft.graph();
  int start = -1;
  for (int i = 0; i < g.size(); ++i)
    if (g.label[i] == a) start = i;
  if (start < 0) fail(ErrorCode::InvalidArgument, "symbol not in subshift");
  std::vector<int> seen_at(g.size(), -1);
  std::vector<int> path;
  int cur = start;
  while (seen_at[cur] < 0) {
    seen_at[cur] = int(path.size());
    path.push_back(cur);
    const auto& s = g.succ[cur];
    cur = greatest ? s.back() : s.front();
  }
  Word pre, cyc;
  for (int i = 0; i < int(path.size()); ++i)
    (i < seen_at[cur] ? pre : cyc).push_back(g.label[path[i]]);
  return {pre, cyc};
}

}  // namespace omega
