#include "omega/schedule.hpp"

#include <bit>
#include <cmath>
#include <map>

#include "omega/error.hpp"
#include "omega/rng.hpp"

namespace omega {

namespace {

constexpr int kBlockRetries = 400;
constexpr std::uint64_t kCheckedBlock = 1ULL << 22;

bool edges_within(const LabeledGraph& g, const SftDescr& sp) {
  for (int u = 0; u < g.size(); ++u) {
    if (!sp.has_symbol(g.label[u])) return false;
    for (int v : g.succ[u])
      if (!sp.allows(g.label[u], g.label[v])) return false;
  }
  return true;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> triangular_index(std::uint64_t r) {
  std::uint64_t n = std::uint64_t((1 + std::sqrt(8.0 * double(r))) / 2);
  while (n * (n - 1) / 2 >= r) --n;
  while (n * (n + 1) / 2 < r) ++n;
  return {n, r - n * (n - 1) / 2};
}

void BlockSchedule::validate() const {
  if (ambient.kind() != SftDescr::Kind::Matrix) fail(ErrorCode::UnsupportedSchedule, "ambient must be a memory-1 SFT");
  const int m = ambient.m();
  const SftDescr& lam = bridge_space();
  if (lam.kind() != SftDescr::Kind::Matrix || lam.m() != m)
    fail(ErrorCode::UnsupportedSchedule, "bridge space must be a memory-1 SFT on the ambient alphabet");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (lam.allows(Symbol(a), Symbol(b)) && !ambient.allows(Symbol(a), Symbol(b)))
        fail(ErrorCode::UnsupportedSchedule, "bridge space not inside ambient");
  for (auto s : prefix)
    if (s >= m) fail(ErrorCode::AmbientViolation, "prefix symbol outside alphabet");
  for (size_t i = 0; i + 1 < prefix.size(); ++i)
    if (!ambient.allows(prefix[i], prefix[i + 1])) fail(ErrorCode::AmbientViolation, "prefix not admissible");
  if (kappa <= 0 || check_terms < 1) fail(ErrorCode::InvalidArgument, "bad block tolerance");

  if (realizer) {
    if (realizer->kind() != SftDescr::Kind::Matrix || realizer->m() != m)
      fail(ErrorCode::UnsupportedSchedule, "realizer target must be memory-1 on the ambient alphabet");
    if (realizer->symbols().empty()) fail(ErrorCode::UnsupportedSchedule, "realizer target is empty");
    if (!edges_within(realizer->graph(), ambient)) fail(ErrorCode::UnsupportedSchedule, "realizer target not inside ambient");
    return;
  }
  if (phases.empty()) fail(ErrorCode::UnsupportedSchedule, "no phases");
  GrowthClass top{0, 1, 0};
  for (auto& ph : phases) {
    ph.gen.validate();
    if (ph.gen.m != m) fail(ErrorCode::AlphabetMismatch, "generator alphabet differs from ambient");
    for (auto& [w, a] : ph.gen.parts) {
      if (w == 0) continue;
      if (auto* pm = std::get_if<PeriodicMeasure>(&a))
        if (pm->w.empty()) fail(ErrorCode::UnsupportedSchedule, "empty periodic word");
      if (!edges_within(atom_support(a), lam))
        fail(ErrorCode::AmbientViolation, "generator support leaves the bridge space");
    }
    ph.n.validate();
    ph.N.validate();
    if (growth_class(ph.n) <= GrowthClass{0, 1, 0})
      fail(ErrorCode::UnsupportedSchedule, "block lengths must grow without bound");
    top = std::max(top, growth_class(ph.n * ph.N));
  }
  if (enumerate || marker) {
    if (!lam.irreducible()) fail(ErrorCode::NotTransitive, "bridge space must be irreducible for insertions");
    if (top < GrowthClass{0, 1, 2})
      fail(ErrorCode::UnsupportedSchedule, "stage masses too small for zero-density insertions");
  }
  if (marker) {
    Symbol M = *marker;
    if (M >= m || lam.has_symbol(M)) fail(ErrorCode::UnsupportedSchedule, "marker must be a symbol outside the bridge space");
    Word u = transitive_point_prefix(lam, 1);
    if (!ambient.allows(M, u[0])) fail(ErrorCode::AmbientViolation, "marker cannot precede the tail point");
  }
}

std::optional<Word> schedule_join(const BlockSchedule& s, Symbol a, Symbol b, bool ambient_only) {
  const SftDescr& lam = s.bridge_space();
  const bool inside = !ambient_only && lam.has_symbol(a) && lam.has_symbol(b);
  return bridge_word(inside ? lam : s.ambient, a, b);
}

Word transitive_point_prefix(const SftDescr& lambda, std::uint64_t len) {
  Word u;
  for (int l = 1; u.size() < len; ++l) {
    for (auto& w : sft_language(lambda, l)) {
      if (!u.empty()) {
        auto br = bridge_word(lambda, u.back(), w[0]);
        if (!br) fail(ErrorCode::NotTransitive, "bridge space is not irreducible");
        u.insert(u.end(), br->begin(), br->end());
      }
      u.insert(u.end(), w.begin(), w.end());
      if (u.size() >= len) break;
    }
  }
  u.resize(len);
  return u;
}

std::pair<Word, Word> realizer_point(const SftDescr& A, std::uint64_t t) {
  std::uint64_t seen = 0;
  for (int l = 1;; ++l) {
    BigInt cnt = sft_word_count(A, l);
    if (BigInt(seen) + cnt >= BigInt(t)) {
      auto words = sft_language(A, l);
      Word w = words[t - seen - 1];
      auto [pre, cyc] = greedy_path(A, w.back(), false);
      w.pop_back();
      w.insert(w.end(), pre.begin(), pre.end());
      return {w, cyc};
    }
    seen += cnt.convert_to<std::uint64_t>();
  }
}

Word realizer_connector(const SftDescr& ambient, const SftDescr& A, Symbol a, Symbol b) {
  const int m = ambient.m();
  std::optional<Word> fallback;
  for (int l = 1; l <= m + 1; ++l) {
    std::uint64_t total = 1;
    for (int i = 0; i < l; ++i) total *= m;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Word mid = word_from_index(idx, l, m);
      Word full{a};
      full.insert(full.end(), mid.begin(), mid.end());
      full.push_back(b);
      if (!sft_accepts(ambient, full)) continue;
      if (!sft_accepts(A, full)) return mid;
      if (!fallback) fallback = mid;
    }
    if (fallback) return *fallback;
  }
  fail(ErrorCode::NotTransitive, "no ambient connector");
}

namespace {

class Emitter {
 public:
  Emitter(const BlockSchedule& s, std::uint64_t N) : s_(s), N_(N) { out_.reserve(N); }

  bool full() const { return out_.size() >= N_; }
  Word take() {
    out_.resize(std::min<std::uint64_t>(out_.size(), N_));
    return std::move(out_);
  }

  void put(Symbol c) {
    if (full()) return;
    if (!out_.empty() && !s_.ambient.allows(out_.back(), c))
      fail(ErrorCode::AmbientViolation, "transition " + std::to_string(out_.back()) + "->" + std::to_string(c) +
                                            " at position " + std::to_string(out_.size()));
    out_.push_back(c);
  }
  void put(const Word& w) {
    for (auto c : w) {
      if (full()) return;
      put(c);
    }
  }
  void join(Symbol b, bool ambient_only = false) {
    if (out_.empty()) return;
    auto br = schedule_join(s_, out_.back(), b, ambient_only);
    if (!br) fail(ErrorCode::AmbientViolation, "no joining word");
    put(*br);
  }
  void join_realizer(Symbol b) {
    if (out_.empty()) return;
    put(realizer_connector(s_.ambient, *s_.realizer, out_.back(), b));
  }
  std::optional<Symbol> last() const {
    if (out_.empty()) return std::nullopt;
    return out_.back();
  }

  void atom_block(const Atom& a, std::uint64_t n, std::uint64_t seed) {
    if (n == 0) return;
    if (auto* pm = std::get_if<PeriodicMeasure>(&a)) {
      const auto& w = pm->w;
      std::uint64_t q = std::max<std::uint64_t>(1, n / w.size());
      join(w[0]);
      for (std::uint64_t i = 0; i < q && !full(); ++i) put(w);
      return;
    }
    const auto& mu = std::get<MarkovMeasure>(a);
    const int m = mu.m();
    auto prev = last();
    const bool cont = prev && mu.in_recurrent(*prev);
    Symbol s0 = mu.recurrent()[0];
    if (!cont) join(s0);
    // blocks above kCheckedBlock are taken at the first attempt, so a prefix
    // never depends on how much of the block is requested
    std::uint64_t room = N_ - std::min<std::uint64_t>(N_, out_.size());
    const bool check = n <= kCheckedBlock;
    const int depth = rho_depth(m, s_.check_terms);
    const double tol = s_.kappa / std::sqrt(double(n));
    CylinderMeasure target;
    if (check && n >= std::uint64_t(depth)) target = cylinder_table(a, depth);
    std::uint64_t len = check ? n : std::min<std::uint64_t>(n, room);
    Word block(len);
    for (int attempt = 0;; ++attempt) {
      Rng rng(derive_seed(seed, {std::uint64_t(attempt)}));
      Symbol cur = cont ? *prev : s0;
      for (std::uint64_t i = 0; i < len; ++i) {
        if (i == 0 && !cont) {
          block[0] = s0;
          continue;
        }
        double u = rng.uniform(), acc = 0;
        int nxt = -1;
        for (int j = 0; j < m; ++j) {
          double p = mu.p(cur, j);
          if (p <= 0) continue;
          acc += p;
          nxt = j;
          if (u < acc) break;
        }
        cur = Symbol(nxt);
        block[i] = cur;
      }
      if (!check || n < std::uint64_t(depth)) break;
      auto emp = empirical_measure(block, depth, m);
      if (weak_star_distance(emp, target, s_.check_terms).value <= tol) break;
      if (attempt + 1 >= kBlockRetries)
        fail(ErrorCode::GenericityFailure, "no generic block of length " + std::to_string(n));
    }
    put(block);
  }

  void mixed_block(const MixedMeasure& g, std::uint64_t n, std::uint64_t seed) {
    std::vector<std::uint64_t> lens = split_lengths(g, n);
    for (size_t i = 0; i < g.parts.size() && !full(); ++i)
      if (lens[i] > 0) atom_block(g.parts[i].second, lens[i], derive_seed(seed, {i}));
  }

  static std::vector<std::uint64_t> split_lengths(const MixedMeasure& g, std::uint64_t n) {
    std::vector<std::uint64_t> lens(g.parts.size(), 0);
    int last = -1;
    for (size_t i = 0; i < g.parts.size(); ++i)
      if (g.parts[i].first > 0) last = int(i);
    std::uint64_t used = 0;
    for (int i = 0; i < last; ++i) {
      if (g.parts[i].first <= 0) continue;
      Rational v = g.parts[i].first * Rational(BigInt(n));
      lens[i] = (numerator(v) / denominator(v)).convert_to<std::uint64_t>();
      used += lens[i];
    }
    if (last >= 0) lens[last] = n - std::min(n, used);
    return lens;
  }

  const Word& u_prefix(std::uint64_t len) {
    if (u_.size() < len) u_ = transitive_point_prefix(s_.bridge_space(), std::max<std::uint64_t>(len, 2 * u_.size()));
    return u_;
  }
  const std::vector<Word>& lambda_words(int l) {
    auto it = words_.find(l);
    if (it == words_.end()) it = words_.emplace(l, sft_language(s_.bridge_space(), l)).first;
    return it->second;
  }

 private:
  const BlockSchedule& s_;
  std::uint64_t N_;
  Word out_;
  Word u_;
  std::map<int, std::vector<Word>> words_;
};

}  // namespace

std::vector<std::uint64_t> split_mixture_lengths(const MixedMeasure& g, std::uint64_t n) {
  return Emitter::split_lengths(g, n);
}

Word schedule_prefix(const BlockSchedule& s, std::uint64_t N, std::uint64_t cap) {
  if (N > cap) fail(ErrorCode::OversizeRequest, "prefix length " + std::to_string(N) + " above cap");
  s.validate();
  Emitter em(s, N);
  em.put(s.prefix);
  if (s.realizer) {
    for (std::uint64_t r = 1; !em.full(); ++r) {
      auto [n, t] = triangular_index(r);
      auto [w, cyc] = realizer_point(*s.realizer, t);
      Word seg;
      seg.reserve(r);
      for (std::uint64_t i = 0; i < r; ++i) seg.push_back(i < w.size() ? w[i] : cyc[(i - w.size()) % cyc.size()]);
      em.join_realizer(seg[0]);
      em.put(seg);
    }
    return em.take();
  }
  const std::uint64_t P = s.phases.size();
  for (std::uint64_t k = 0; !em.full(); ++k) {
    for (std::uint64_t p = 0; p < P && !em.full(); ++p) {
      const auto& ph = s.phases[p];
      const std::uint64_t st = P * k + p;
      const std::uint64_t n = ph.n.eval(st), reps = ph.N.eval(st);
      if (n == 0) continue;
      for (std::uint64_t b = 0; b < reps && !em.full(); ++b)
        em.mixed_block(ph.gen, n, derive_seed(s.seed, {st, b}));
    }
    if (em.full()) break;
    if (s.enumerate) {
      int l = std::bit_width(k + 1);
      for (auto& w : em.lambda_words(l)) {
        if (em.full()) break;
        em.join(w[0]);
        em.put(w);
      }
    }
    if (s.marker && !em.full()) {
      em.join(*s.marker, true);
      em.put(*s.marker);
      const Word& u = em.u_prefix(k + 1);
      em.put(Word(u.begin(), u.begin() + (k + 1)));
    }
  }
  return em.take();
}

}  // namespace omega
