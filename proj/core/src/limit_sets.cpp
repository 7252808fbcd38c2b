#include "omega/limit_sets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "omega/error.hpp"

namespace omega {

// ---------------------------------------------------------------- sets

namespace {

LabeledGraph cotrim(const LabeledGraph& g, std::vector<int>& exits) {
  auto keep = can_reach(g, exits);
  std::vector<int> map;
  LabeledGraph out = induced(g, keep, &map);
  std::vector<int> ex;
  for (int e : exits)
    if (map[e] >= 0) ex.push_back(map[e]);
  std::sort(ex.begin(), ex.end());
  ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
  exits = ex;
  return out;
}

bool same_tail_key(const MarkerTail& a, const MarkerTail& b) {
  return a.marker == b.marker && a.tail_space == b.tail_space;
}

// merge tails sharing marker and tail space
std::vector<MarkerTail> normalize_tails(const std::vector<MarkerTail>& in) {
  std::vector<MarkerTail> out;
  for (const auto& t : in) {
    if (t.exits.empty()) continue;
    bool merged = false;
    for (auto& o : out) {
      if (!same_tail_key(o, t)) continue;
      int off = o.left.append(t.left);
      for (int e : t.exits) o.exits.push_back(off + e);
      merged = true;
      break;
    }
    if (!merged) out.push_back(t);
  }
  for (auto& o : out) o.left = cotrim(o.left, o.exits);
  return out;
}

bool left_includes(const MarkerTail& a, const MarkerTail& b) {
  return finite_language_includes(a.left.reversed(), a.exits, b.left.reversed(), b.exits);
}

Word primitive_root(const Word& w) {
  const size_t n = w.size();
  for (size_t p = 1; p <= n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return Word(w.begin(), w.begin() + p);
  }
  return w;
}

std::pair<Word, Word> canonical_point(Word pre, Word per) {
  per = primitive_root(per);
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.begin(), per.end() - 1, per.end());
    pre.pop_back();
  }
  return {pre, per};
}

}  // namespace

SubshiftDescr SubshiftDescr::empty_set() { return {}; }

SubshiftDescr SubshiftDescr::from_sft(const SftDescr& sft) {
  SubshiftDescr d;
  d.core = sft.graph();
  return d;
}

SubshiftDescr SubshiftDescr::from_graph(const LabeledGraph& g) {
  SubshiftDescr d;
  d.core = trim(g);
  return d;
}

SubshiftDescr SubshiftDescr::from_points(const std::vector<std::pair<Word, Word>>& pts) {
  LabeledGraph g;
  for (auto& [pre, per] : pts) g.append(graph_from_point(pre, per));
  return from_graph(g);
}

std::vector<Word> SubshiftDescr::language(int n, std::uint64_t cap) const {
  std::set<Word> out;
  if (n < 1) fail(ErrorCode::InvalidArgument, "word length must be >= 1");
  for (auto& w : graph_language(core, n, cap)) out.insert(w);
  for (const auto& t : tails) {
    std::vector<int> all(t.left.size());
    for (int i = 0; i < t.left.size(); ++i) all[i] = i;
    for (auto& w : path_words_from(t.left, all, n, cap)) out.insert(w);
    Word u = transitive_point_prefix(t.tail_space, n);
    LabeledGraph rev = t.left.reversed();
    for (int i = 0; i < n; ++i) {
      std::vector<Word> suffixes;
      if (i == 0) suffixes.push_back({});
      else
        for (auto w : path_words_from(rev, t.exits, i, cap)) {
          std::reverse(w.begin(), w.end());
          suffixes.push_back(w);
        }
      for (auto& v : suffixes) {
        Word w = v;
        w.push_back(t.marker);
        w.insert(w.end(), u.begin(), u.begin() + (n - 1 - i));
        out.insert(w);
      }
    }
    if (out.size() > cap) fail(ErrorCode::OversizeRequest, "language too large");
  }
  return {out.begin(), out.end()};
}

bool SubshiftDescr::accepts(const Word& w) const {
  if (w.empty()) return !is_empty();
  if (graph_accepts(core, w)) return true;
  for (const auto& t : tails) {
    auto it = std::find(w.begin(), w.end(), t.marker);
    if (it == w.end()) {
      if (graph_accepts(t.left, w)) return true;
      continue;
    }
    size_t i = size_t(it - w.begin());
    Word rest(it + 1, w.end());
    Word u = transitive_point_prefix(t.tail_space, rest.size() + 1);
    if (!std::equal(rest.begin(), rest.end(), u.begin())) continue;
    if (i == 0) return true;
    Word v(w.begin(), it);
    std::reverse(v.begin(), v.end());
    // v reversed must label a path of the reversed left graph starting at an exit
    LabeledGraph rev = t.left.reversed();
    std::vector<char> cur(rev.size(), 0);
    for (int e : t.exits)
      if (rev.label[e] == v[0]) cur[e] = 1;
    for (size_t k = 1; k < v.size(); ++k) {
      std::vector<char> nxt(rev.size(), 0);
      for (int s = 0; s < rev.size(); ++s)
        if (cur[s])
          for (int q : rev.succ[s])
            if (rev.label[q] == v[k]) nxt[q] = 1;
      cur.swap(nxt);
    }
    if (std::find(cur.begin(), cur.end(), 1) != cur.end()) return true;
  }
  return false;
}

std::optional<std::vector<std::pair<Word, Word>>> SubshiftDescr::finite_points() const {
  if (!tails.empty()) return std::nullopt;
  int k = 0;
  auto comp = scc_ids(core, &k);
  auto sccs = nontrivial_sccs(core);
  std::vector<char> cyc(k, 0);
  for (auto& c : sccs) {
    cyc[comp[c[0]]] = 1;
    for (int v : c) {
      int inside = 0;
      for (int w : core.succ[v]) inside += comp[w] == comp[v];
      if (inside != 1) return std::nullopt;
    }
  }
  auto next_in = [&](int v) {
    for (int w : core.succ[v])
      if (comp[w] == comp[v]) return w;
    return -1;
  };
  // leaving a cycle is allowed only when every continuation keeps reading the
  // cycle's labels; otherwise the exit time would give infinitely many points
  for (auto& c : sccs) {
    for (int v : c) {
      for (int w : core.succ[v]) {
        if (comp[w] == comp[v]) continue;
        std::set<std::pair<int, int>> seen{{w, next_in(v)}};
        std::vector<std::pair<int, int>> st{{w, next_in(v)}};
        while (!st.empty()) {
          auto [x, q] = st.back();
          st.pop_back();
          if (core.label[x] != core.label[q]) return std::nullopt;
          for (int y : core.succ[x])
            if (seen.insert({y, next_in(q)}).second) st.push_back({y, next_in(q)});
        }
      }
    }
  }
  auto cycle_from = [&](int v) {
    Word per;
    int cur = v;
    do {
      per.push_back(core.label[cur]);
      for (int w : core.succ[cur])
        if (comp[w] == comp[cur]) {
          cur = w;
          break;
        }
    } while (cur != v);
    return per;
  };
  std::set<std::pair<Word, Word>> pts;
  Word pre;
  std::function<void(int)> dfs = [&](int v) {
    if (cyc[comp[v]]) {
      pts.insert(canonical_point(pre, cycle_from(v)));
      return;
    }
    pre.push_back(core.label[v]);
    for (int w : core.succ[v]) dfs(w);
    pre.pop_back();
    if (pts.size() > 100000) fail(ErrorCode::OversizeRequest, "too many points");
  };
  for (int v = 0; v < core.size(); ++v) dfs(v);
  return std::vector<std::pair<Word, Word>>(pts.begin(), pts.end());
}

std::optional<std::vector<std::pair<Word, Word>>> SubshiftDescr::orbit_generators() const {
  auto pts = finite_points();
  if (!pts) return std::nullopt;
  std::set<std::pair<Word, Word>> all(pts->begin(), pts->end()), shifted;
  for (auto& [pre, per] : all) {
    if (pre.empty()) continue;
    shifted.insert(canonical_point(Word(pre.begin() + 1, pre.end()), per));
  }
  std::vector<std::pair<Word, Word>> out;
  for (auto& p : all) {
    if (p.first.empty()) {
      Word best = p.second;
      Word r = p.second;
      for (size_t i = 0; i < r.size(); ++i) {
        std::rotate(r.begin(), r.begin() + 1, r.end());
        best = std::min(best, r);
      }
      if (best == p.second) out.push_back(p);
    } else if (!shifted.count(p)) {
      out.push_back(p);
    }
  }
  return out;
}

SubshiftDescr subshift_union(const SubshiftDescr& a, const SubshiftDescr& b) {
  SubshiftDescr u;
  u.core = trim(graph_union(a.core, b.core));
  std::vector<MarkerTail> t = a.tails;
  t.insert(t.end(), b.tails.begin(), b.tails.end());
  u.tails = normalize_tails(t);
  return u;
}

SubshiftDescr subshift_intersection(const SubshiftDescr& a, const SubshiftDescr& b) {
  SubshiftDescr r;
  r.core = graph_intersection(a.core, b.core);
  for (const auto& ta : a.tails)
    for (const auto& tb : b.tails) {
      if (!same_tail_key(ta, tb)) continue;
      MarkerTail t{LabeledGraph{}, {}, ta.marker, ta.tail_space};
      std::map<std::pair<int, int>, int> idx;
      for (int i = 0; i < ta.left.size(); ++i)
        for (int j = 0; j < tb.left.size(); ++j)
          if (ta.left.label[i] == tb.left.label[j]) idx[{i, j}] = t.left.add_state(ta.left.label[i]);
      for (auto& [key, u] : idx)
        for (int i2 : ta.left.succ[key.first])
          for (int j2 : tb.left.succ[key.second]) {
            auto it = idx.find({i2, j2});
            if (it != idx.end()) t.left.add_edge(u, it->second);
          }
      for (int ea : ta.exits)
        for (int eb : tb.exits) {
          auto it = idx.find({ea, eb});
          if (it != idx.end()) t.exits.push_back(it->second);
        }
      // an empty left context still leaves the point M·u when both allow it
      if (t.exits.empty()) continue;
      r.tails.push_back(t);
    }
  r.tails = normalize_tails(r.tails);
  return r;
}

bool subshift_includes(const SubshiftDescr& a, const SubshiftDescr& b) {
  if (!graph_includes(a.core, b.core)) return false;
  for (const auto& ta : a.tails) {
    bool ok = false;
    for (const auto& tb : b.tails)
      if (same_tail_key(ta, tb) && left_includes(ta, tb)) ok = true;
    if (!ok) {
      // the tail points may also lie in the core of b: test left · M · tail space
      LabeledGraph g = ta.left;
      int M = g.add_state(ta.marker);
      for (int e : ta.exits) g.add_edge(e, M);
      int off = g.append(ta.tail_space.graph());
      Word u0 = transitive_point_prefix(ta.tail_space, 1);
      for (int v = 0; v < ta.tail_space.graph().size(); ++v)
        if (ta.tail_space.graph().label[v] == u0[0]) g.add_edge(M, off + v);
      ok = graph_includes(trim(g), b.core);
    }
    if (!ok) return false;
  }
  return true;
}

bool subshift_equal(const SubshiftDescr& a, const SubshiftDescr& b) {
  return subshift_includes(a, b) && subshift_includes(b, a);
}

SubshiftDescr measure_center(const SubshiftDescr& x) {
  std::vector<char> keep(x.core.size(), 0);
  for (auto& c : nontrivial_sccs(x.core))
    for (int v : c) keep[v] = 1;
  // restrict edges to within components
  int k = 0;
  auto comp = scc_ids(x.core, &k);
  LabeledGraph g;
  std::vector<int> map(x.core.size(), -1);
  for (int v = 0; v < x.core.size(); ++v)
    if (keep[v]) map[v] = g.add_state(x.core.label[v]);
  for (int v = 0; v < x.core.size(); ++v)
    if (keep[v])
      for (int w : x.core.succ[v])
        if (keep[w] && comp[w] == comp[v]) g.add_edge(map[v], map[w]);
  return SubshiftDescr::from_graph(g);
}

bool chain_transitive(const SubshiftDescr& x, int depth) {
  if (x.is_empty()) return false;
  for (int n = 1; n <= depth; ++n) {
    auto words = x.language(n, 1 << 16);
    const int N = int(words.size());
    std::map<Word, std::vector<int>> by_prefix;
    for (int i = 0; i < N; ++i) by_prefix[Word(words[i].begin(), words[i].end() - 1)].push_back(i);
    LabeledGraph g;
    for (int i = 0; i < N; ++i) g.add_state(0);
    for (int i = 0; i < N; ++i) {
      Word suf(words[i].begin() + 1, words[i].end());
      auto it = by_prefix.find(suf);
      if (it != by_prefix.end())
        for (int j : it->second) g.succ[i].push_back(j);
    }
    int comps = 0;
    scc_ids(g, &comps);
    if (comps != 1) return false;
  }
  return true;
}

bool is_minimal_finite(const SubshiftDescr& x) {
  auto gens = x.orbit_generators();
  if (!gens || gens->size() != 1) return false;
  return (*gens)[0].first.empty();
}

// ---------------------------------------------------------------- labels

std::string CaseLabel::str() const { return std::to_string(index) + (primed ? "'" : ""); }

CaseLabel CaseLabel::parse(const std::string& s) {
  CaseLabel c;
  if (s.empty() || s[0] < '1' || s[0] > '6') fail(ErrorCode::InvalidArgument, "case label must be 1..6 or 1'..6'");
  c.index = s[0] - '0';
  std::string rest = s.substr(1);
  if (rest == "'" || rest == "p" || rest == "prime") c.primed = true;
  else if (!rest.empty()) fail(ErrorCode::InvalidArgument, "bad case label '" + s + "'");
  return c;
}

std::vector<CaseLabel> all_case_labels() {
  std::vector<CaseLabel> out;
  for (bool p : {false, true})
    for (int i = 1; i <= 6; ++i) out.push_back({i, p});
  return out;
}

// ---------------------------------------------------------------- omega_f

namespace {

struct Content {
  enum class Entry { Markov, Fixed, AnyOf };
  LabeledGraph g;
  std::vector<int> exits;
  Entry entry = Entry::Fixed;
  const MarkovMeasure* mk = nullptr;
  std::vector<int> sym_state;
  int fixed_state = 0;
  bool ambient_join = false;
  bool is_marker = false;
  Symbol marker = 0;
};

std::vector<int> all_states(const LabeledGraph& g) {
  std::vector<int> v(g.size());
  for (int i = 0; i < g.size(); ++i) v[i] = i;
  return v;
}

Content atom_content(const Atom& a) {
  Content c;
  if (auto* mk = std::get_if<MarkovMeasure>(&a)) {
    c.g = mk->support().graph();
    c.exits = all_states(c.g);
    c.entry = Content::Entry::Markov;
    c.mk = mk;
    c.sym_state.assign(mk->m(), -1);
    for (int i = 0; i < c.g.size(); ++i) c.sym_state[c.g.label[i]] = i;
  } else {
    const auto& w = std::get<PeriodicMeasure>(a).w;
    c.g = graph_from_point({}, w);
    c.exits = {int(w.size()) - 1};
    c.entry = Content::Entry::Fixed;
    c.fixed_state = 0;
  }
  return c;
}

Content space_content(const SftDescr& lam) {
  Content c;
  c.g = lam.graph();
  c.exits = all_states(c.g);
  c.entry = Content::Entry::AnyOf;
  return c;
}

Content enumeration_content(const SftDescr& lam) {
  Content c;
  c.g = lam.graph();
  Symbol lo = lam.symbols().front(), hi = lam.symbols().back();
  auto [pre, cyc] = greedy_path(lam, lo, false);
  int off = c.g.append(graph_from_point(pre, cyc));
  c.entry = Content::Entry::Fixed;
  c.fixed_state = off;
  auto mx = greedy_path(lam, hi, true);
  int off2 = c.g.append(graph_from_point({}, mx.second));
  for (int i = 0; i < int(mx.second.size()); ++i) c.exits.push_back(off2 + i);
  return c;
}

Content marker_content(const SftDescr& lam, Symbol M) {
  Content c = space_content(lam);
  c.is_marker = true;
  c.marker = M;
  c.entry = Content::Entry::Fixed;
  c.ambient_join = true;
  return c;
}

void add_chain(LabeledGraph& G, int from, const Word& mid, int to) {
  int prev = from;
  for (auto s : mid) {
    int v = G.add_state(s);
    G.add_edge(prev, v);
    prev = v;
  }
  if (to >= 0) G.add_edge(prev, to);
}

struct Builder {
  const BlockSchedule& s;
  LabeledGraph G;
  std::vector<MarkerTail> tails;

  void content(const Content& c) { G.append(c.g); }

  void junction(const Content& P, const Content& Q) {
    if (Q.is_marker) {
      MarkerTail t;
      t.marker = Q.marker;
      t.tail_space = s.bridge_space();
      t.left = P.g;
      for (int e : P.exits) {
        auto br = schedule_join(s, P.g.label[e], Q.marker, true);
        if (!br) fail(ErrorCode::UnsupportedSchedule, "marker unreachable");
        int prev = e;
        for (auto x : *br) {
          int v = t.left.add_state(x);
          t.left.add_edge(prev, v);
          prev = v;
        }
        t.exits.push_back(prev);
      }
      t.left = cotrim(t.left, t.exits);
      tails.push_back(t);
      return;
    }
    int offP = G.append(P.g);
    int offQ = G.append(Q.g);
    for (int e : P.exits) {
      Symbol a = P.g.label[e];
      switch (Q.entry) {
        case Content::Entry::Markov: {
          if (Q.mk->in_recurrent(a)) {
            for (int b = 0; b < Q.mk->m(); ++b)
              if (Q.mk->p(a, b) > 0) G.add_edge(offP + e, offQ + Q.sym_state[b]);
          } else {
            Symbol s0 = Q.mk->recurrent()[0];
            auto br = schedule_join(s, a, s0, false);
            if (!br) fail(ErrorCode::UnsupportedSchedule, "no joining word");
            add_chain(G, offP + e, *br, offQ + Q.sym_state[s0]);
          }
          break;
        }
        case Content::Entry::Fixed: {
          Symbol b = Q.g.label[Q.fixed_state];
          auto br = schedule_join(s, a, b, Q.ambient_join);
          if (!br) fail(ErrorCode::UnsupportedSchedule, "no joining word");
          add_chain(G, offP + e, *br, offQ + Q.fixed_state);
          break;
        }
        case Content::Entry::AnyOf: {
          const SftDescr& A = *s.realizer;
          for (int q = 0; q < A.graph().size(); ++q) {
            Symbol b = A.graph().label[q];
            Word mid = realizer_connector(s.ambient, A, a, b);
            add_chain(G, offP + e, mid, offQ + q);
          }
          break;
        }
      }
    }
  }
};

bool repeats(const Template& N) { return N.c >= 2 || growth_class(N) > GrowthClass{0, 1, 0}; }

}  // namespace

SubshiftDescr omega_limit(const BlockSchedule& s) {
  s.validate();
  Builder B{s, {}, {}};
  if (s.realizer) {
    const SftDescr& A = *s.realizer;
    Content c;
    c.g = A.graph();
    for (auto a : A.symbols()) {
      auto [pre, cyc] = greedy_path(A, a, false);
      int off = c.g.append(graph_from_point({}, cyc));
      for (int i = 0; i < int(cyc.size()); ++i) c.exits.push_back(off + i);
    }
    c.entry = Content::Entry::AnyOf;
    B.content(c);
    B.junction(c, c);
  } else {
    std::vector<std::vector<Content>> ph;
    for (auto& p : s.phases) {
      std::vector<Content> comps;
      for (auto& [w, a] : p.gen.parts)
        if (w > 0) comps.push_back(atom_content(a));
      ph.push_back(std::move(comps));
    }
    for (size_t p = 0; p < ph.size(); ++p) {
      for (auto& c : ph[p]) B.content(c);
      for (size_t i = 0; i + 1 < ph[p].size(); ++i) B.junction(ph[p][i], ph[p][i + 1]);
      if (repeats(s.phases[p].N)) B.junction(ph[p].back(), ph[p].front());
      if (p + 1 < ph.size()) B.junction(ph[p].back(), ph[p + 1].front());
    }
    std::vector<Content> round_end{ph.back().back()};
    if (s.enumerate) round_end.push_back(enumeration_content(s.bridge_space()));
    if (s.marker) round_end.push_back(marker_content(s.bridge_space(), *s.marker));
    round_end.push_back(ph.front().front());
    for (size_t i = 0; i + 1 < round_end.size(); ++i) {
      B.content(round_end[i]);
      const Content& prev = round_end[i];
      if (prev.is_marker) {
        // after the marker the orbit runs along u, whose suffixes exhaust the space
        Content after = space_content(s.bridge_space());
        after.entry = Content::Entry::Fixed;
        B.junction(after, round_end[i + 1]);
      } else {
        B.junction(prev, round_end[i + 1]);
      }
    }
  }
  SubshiftDescr d;
  d.core = trim(B.G);
  d.tails = normalize_tails(B.tails);
  return d;
}

// ---------------------------------------------------------------- V_f

VfReport vf_limits(const BlockSchedule& s, int depth) {
  s.validate();
  if (s.realizer) fail(ErrorCode::UnsupportedSchedule, "limit measures of realizer schedules are not tracked");
  const int P = int(s.phases.size());
  VfReport r;
  r.depth = depth;
  // past mass before a stage of phase p
  for (int p = 0; p < P; ++p) {
    std::vector<Asymptotic> past;
    for (int q = 0; q < P; ++q) {
      int d = ((p - q) % P + P) % P;
      past.push_back(progression_sum(s.phases[q].n * s.phases[q].N, d == 0 ? P : d, P));
    }
    auto L = leading_terms(past);
    if (s.phases[p].gen.parts.size() > 1 && !(growth_class(s.phases[p].n) < L.cls))
      fail(ErrorCode::UnsupportedSchedule, "mixture blocks must be negligible against the past");
  }
  std::vector<MixedMeasure> verts;
  for (int p = 0; p < P; ++p) {
    std::vector<Asymptotic> mass;
    for (int q = 0; q < P; ++q) {
      int d = ((p - q) % P + P) % P;
      mass.push_back(progression_sum(s.phases[q].n * s.phases[q].N, d, P));
    }
    auto L = leading_terms(mass);
    Rational tot = 0;
    for (auto& c : L.coef) tot += c;
    std::vector<Rational> w;
    std::vector<std::pair<Rational, MixedMeasure>> parts;
    for (int q = 0; q < P; ++q) {
      w.push_back(L.coef[q] / tot);
      parts.push_back({w.back(), s.phases[q].gen});
    }
    r.weights.push_back(w);
    verts.push_back(combine(parts));
  }
  std::vector<MixedMeasure> dedup;
  for (auto& v : verts)
    if (dedup.empty() || !dedup.back().same_as(v)) dedup.push_back(v);
  if (dedup.size() > 1 && dedup.back().same_as(dedup.front())) dedup.pop_back();
  r.polyline.vertices = dedup;
  r.polyline.closed = dedup.size() > 2;
  r.is_singleton = dedup.size() == 1;
  auto omega = omega_limit(s);
  r.vstar_is_full = nontrivial_sccs(measure_center(omega).core).size() == 1;
  return r;
}

// ---------------------------------------------------------------- syndetic center

SubshiftDescr syndetic_center_of(const SubshiftDescr& omega_f) {
  const auto& g = omega_f.core;
  int k = 0;
  auto comp = scc_ids(g, &k);
  std::vector<SubshiftDescr> orbits;
  for (auto& c : nontrivial_sccs(g)) {
    std::vector<char> keep(g.size(), 0);
    for (int v : c) keep[v] = 1;
    LabeledGraph sub = induced(g, keep);
    const int N = sub.size();
    // an irreducible piece is a single periodic orbit iff its complexity at N+1 is <= N
    if (graph_language_count(sub, N + 1, N) > std::uint64_t(N)) return SubshiftDescr::empty_set();
    SubshiftDescr o = SubshiftDescr::from_graph(sub);
    bool dup = false;
    for (auto& x : orbits)
      if (subshift_equal(x, o)) dup = true;
    if (!dup) orbits.push_back(o);
    if (orbits.size() > 1) return SubshiftDescr::empty_set();
  }
  if (orbits.empty()) return SubshiftDescr::empty_set();
  return orbits[0];
}

SubshiftDescr syndetic_center(const BlockSchedule& s) { return syndetic_center_of(omega_limit(s)); }

// ---------------------------------------------------------------- report

OmegaReport statistical_omegas(const BlockSchedule& s, int depth) {
  OmegaReport r;
  r.depth = depth;
  r.omega_f = omega_limit(s);
  auto vf = vf_limits(s, depth);
  bool first = true;
  for (auto& v : vf.polyline.vertices) {
    auto S = SubshiftDescr::from_graph(v.support());
    if (first) {
      r.omega_dlower = S;
      r.omega_dupper = S;
      first = false;
    } else {
      r.omega_dlower = subshift_intersection(r.omega_dlower, S);
      r.omega_dupper = subshift_union(r.omega_dupper, S);
    }
  }
  r.omega_Bupper = measure_center(r.omega_f);
  r.omega_Blower = syndetic_center_of(r.omega_f);
  r.syndetic_center_nonempty = !r.omega_Blower.is_empty();
  r.omega_f_chain_transitive = chain_transitive(r.omega_f, depth);
  r.omega_f.label = "omega_f";
  r.omega_Blower.label = "omega_B_lower";
  r.omega_dlower.label = "omega_d_lower";
  r.omega_dupper.label = "omega_d_upper";
  r.omega_Bupper.label = "omega_B_upper";
  return r;
}

bool chain_inclusions_hold(const OmegaReport& r) {
  return subshift_includes(r.omega_Blower, r.omega_dlower) && subshift_includes(r.omega_dlower, r.omega_dupper) &&
         subshift_includes(r.omega_dupper, r.omega_Bupper) && subshift_includes(r.omega_Bupper, r.omega_f);
}

Recurrence check_recurrence(const BlockSchedule& s, const SubshiftDescr& omega_f, int horizon) {
  Recurrence rc;
  rc.horizon = horizon;
  Word x = schedule_prefix(s, std::uint64_t(horizon));
  for (int n = 1; n <= horizon; ++n) {
    Word w(x.begin(), x.begin() + n);
    if (!omega_f.accepts(w)) {
      rc.nonrecurrent = true;
      rc.witness = w;
      return rc;
    }
  }
  return rc;
}

CaseLabel label_from_report(const OmegaReport& r) {
  if (r.syndetic_center_nonempty) fail(ErrorCode::SyndeticCenterNonEmpty, "syndetic center is nonempty");
  const bool a = r.omega_dlower.is_empty();
  const bool b = subshift_equal(r.omega_dlower, r.omega_dupper);
  const bool c = subshift_equal(r.omega_dupper, r.omega_Bupper);
  CaseLabel L;
  L.primed = !subshift_equal(r.omega_Bupper, r.omega_f);
  if (b) L.index = c ? 1 : 2;
  else if (c) L.index = a ? 3 : 4;
  else L.index = a ? 5 : 6;
  if (b && a) fail(ErrorCode::Indeterminate, "empty lower density set with equal upper set");
  return L;
}

Classification classify_case(const BlockSchedule& s, int depth) {
  Classification c;
  c.report = statistical_omegas(s, depth);
  c.label = label_from_report(c.report);
  c.report.label = c.label;
  c.recurrence = check_recurrence(s, c.report.omega_f);
  return c;
}

}  // namespace omega
