#include "omega/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "omega/error.hpp"

namespace omega {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_table_size(int m, int depth) {
  if (depth < 1 || depth > kMaxCylinderDepth || std::pow(double(m), depth) > double(1 << 24))
    fail(ErrorCode::DepthTooLarge, "cylinder depth " + std::to_string(depth) + " too large");
}

}  // namespace

double binary_entropy(double p) {
  double h = 0;
  if (p > 0) h -= p * std::log(p);
  if (p < 1) h -= (1 - p) * std::log(1 - p);
  return h;
}

MarkovMeasure MarkovMeasure::from_matrix(int m, std::vector<double> P) {
  if (m < 1 || m > kMaxAlphabet || P.size() != size_t(m) * m)
    fail(ErrorCode::InvalidArgument, "stochastic matrix must be m x m");
  for (int i = 0; i < m; ++i) {
    double s = 0;
    for (int j = 0; j < m; ++j) {
      if (!(P[i * m + j] >= 0)) fail(ErrorCode::InvalidArgument, "negative transition probability");
      s += P[i * m + j];
    }
    if (std::abs(s - 1) > 1e-12) fail(ErrorCode::InvalidArgument, "row " + std::to_string(i) + " does not sum to 1");
  }
  MarkovMeasure mu;
  mu.m_ = m;
  mu.P_ = std::move(P);
  LabeledGraph g;
  for (int i = 0; i < m; ++i) g.add_state(Symbol(i));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (mu.P_[i * m + j] > 0) g.add_edge(i, j);
  int k = 0;
  auto comp = scc_ids(g, &k);
  std::vector<char> closed(k, 1);
  for (int i = 0; i < m; ++i)
    for (int j : g.succ[i])
      if (comp[j] != comp[i]) closed[comp[i]] = 0;
  int nclosed = 0, cls = -1;
  for (int c = 0; c < k; ++c)
    if (closed[c]) ++nclosed, cls = c;
  if (nclosed != 1) fail(ErrorCode::Reducible, "transition matrix has " + std::to_string(nclosed) + " closed classes");
  for (int i = 0; i < m; ++i)
    if (comp[i] == cls) mu.rec_.push_back(Symbol(i));

  // power iteration on the lazy chain (P+I)/2
  std::vector<double> pi(m, 0.0), nx(m);
  for (auto s : mu.rec_) pi[s] = 1.0 / mu.rec_.size();
  for (int it = 0; it < 2000000; ++it) {
    std::fill(nx.begin(), nx.end(), 0.0);
    for (int i = 0; i < m; ++i) {
      if (pi[i] == 0) continue;
      nx[i] += 0.5 * pi[i];
      for (int j = 0; j < m; ++j) nx[j] += 0.5 * pi[i] * mu.P_[i * m + j];
    }
    double diff = 0, tot = 0;
    for (int i = 0; i < m; ++i) diff += std::abs(nx[i] - pi[i]), tot += nx[i];
    for (int i = 0; i < m; ++i) pi[i] = nx[i] / tot;
    if (diff < 1e-15) break;
  }
  mu.pi_ = pi;
  double h = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      double p = mu.P_[i * m + j];
      if (p > 0 && pi[i] > 0) h -= pi[i] * p * std::log(p);
    }
  mu.h_ = h;
  return mu;
}

MarkovMeasure MarkovMeasure::bernoulli(std::vector<double> probs) {
  int m = int(probs.size());
  std::vector<double> P(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) P[i * m + j] = probs[j];
  return from_matrix(m, P);
}

MarkovMeasure MarkovMeasure::bernoulli(int m, const std::vector<std::pair<Symbol, double>>& probs) {
  std::vector<double> row(m, 0.0);
  for (auto [s, p] : probs) row[s] = p;
  return bernoulli(row);
}

bool MarkovMeasure::in_recurrent(Symbol s) const {
  return std::binary_search(rec_.begin(), rec_.end(), s);
}

bool MarkovMeasure::is_bernoulli() const {
  for (auto i : rec_)
    for (auto j : rec_)
      if (std::abs(p(i, j) - p(rec_[0], j)) > 1e-15) return false;
  return true;
}

SftDescr MarkovMeasure::support() const {
  std::vector<std::uint8_t> a(size_t(m_) * m_, 0);
  for (auto i : rec_)
    for (auto j : rec_)
      if (p(i, j) > 0) a[i * m_ + j] = 1;
  return SftDescr::from_matrix(m_, a);
}

double MarkovMeasure::cylinder(const Word& w) const {
  if (w.empty()) return 1.0;
  if (w[0] >= m_) return 0.0;
  double v = pi_[w[0]];
  for (size_t i = 1; i < w.size() && v > 0; ++i) v *= (w[i] < m_ ? p(w[i - 1], w[i]) : 0.0);
  return v;
}

double PeriodicMeasure::cylinder(const Word& c) const {
  const size_t p = w.size();
  int hits = 0;
  for (size_t i = 0; i < p; ++i) {
    bool ok = true;
    for (size_t t = 0; t < c.size() && ok; ++t) ok = w[(i + t) % p] == c[t];
    hits += ok;
  }
  return double(hits) / double(p);
}

int atom_alphabet(const Atom& a) {
  return std::visit([](const auto& x) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MarkovMeasure>) return x.m();
    else return x.m;
  }, a);
}

double atom_cylinder(const Atom& a, const Word& c) {
  return std::visit([&](const auto& x) { return x.cylinder(c); }, a);
}

double atom_entropy(const Atom& a) {
  if (auto* mk = std::get_if<MarkovMeasure>(&a)) return mk->entropy();
  return 0.0;
}

LabeledGraph atom_support(const Atom& a) {
  if (auto* mk = std::get_if<MarkovMeasure>(&a)) return mk->support().graph();
  return std::get<PeriodicMeasure>(a).support_graph();
}

std::string atom_name(const Atom& a) {
  std::ostringstream os;
  if (auto* mk = std::get_if<MarkovMeasure>(&a)) {
    os << "markov[";
    for (int i = 0; i < mk->m(); ++i) {
      if (i) os << ";";
      for (int j = 0; j < mk->m(); ++j) os << (j ? "," : "") << mk->p(i, j);
    }
    os << "]";
  } else {
    os << "periodic(" << to_string(std::get<PeriodicMeasure>(a).w) << ")";
  }
  return os.str();
}

MixedMeasure MixedMeasure::of(const Atom& a) {
  MixedMeasure x;
  x.m = atom_alphabet(a);
  x.parts.push_back({Rational(1), a});
  return x;
}

void MixedMeasure::validate() const {
  if (parts.empty()) fail(ErrorCode::WeightSum, "empty mixture");
  Rational s = 0;
  for (auto& [c, a] : parts) {
    if (c < 0) fail(ErrorCode::WeightSum, "negative mixture weight");
    if (atom_alphabet(a) != m) fail(ErrorCode::AlphabetMismatch, "mixture atoms on different alphabets");
    s += c;
  }
  if (s != 1) fail(ErrorCode::WeightSum, "mixture weights sum to " + to_string(s));
}

double MixedMeasure::cylinder(const Word& c) const {
  double v = 0;
  for (auto& [w, a] : parts)
    if (w != 0) v += to_double(w) * atom_cylinder(a, c);
  return v;
}

double MixedMeasure::entropy() const {
  double h = 0;
  for (auto& [w, a] : parts) h += to_double(w) * atom_entropy(a);
  return h;
}

LabeledGraph MixedMeasure::support() const {
  LabeledGraph g;
  for (auto& [w, a] : parts)
    if (w != 0) g.append(atom_support(a));
  return trim(g);
}

namespace {
bool atoms_equal(const Atom& x, const Atom& y) {
  if (x.index() != y.index()) return false;
  if (auto* a = std::get_if<MarkovMeasure>(&x)) return *a == std::get<MarkovMeasure>(y);
  return std::get<PeriodicMeasure>(x) == std::get<PeriodicMeasure>(y);
}

std::vector<std::pair<Rational, Atom>> merged(const MixedMeasure& x) {
  std::vector<std::pair<Rational, Atom>> out;
  for (auto& [w, a] : x.parts) {
    if (w == 0) continue;
    bool found = false;
    for (auto& [w2, a2] : out)
      if (atoms_equal(a, a2)) w2 += w, found = true;
    if (!found) out.push_back({w, a});
  }
  return out;
}
}  // namespace

bool MixedMeasure::same_as(const MixedMeasure& o) const {
  auto a = merged(*this), b = merged(o);
  if (a.size() != b.size()) return false;
  for (auto& [w, x] : a) {
    bool found = false;
    for (auto& [w2, y] : b)
      if (atoms_equal(x, y) && w == w2) found = true;
    if (!found) return false;
  }
  return true;
}

MixedMeasure combine(const std::vector<std::pair<Rational, MixedMeasure>>& xs) {
  MixedMeasure out;
  for (auto& [c, mm] : xs) {
    if (c == 0) continue;
    out.m = mm.m;
    for (auto& [w, a] : mm.parts) out.parts.push_back({c * w, a});
  }
  MixedMeasure res;
  res.m = out.m;
  res.parts = merged(out);
  return res;
}

double CylinderMeasure::weight(const Word& w) const {
  if (w.empty()) return 1.0;
  if (int(w.size()) > depth) fail(ErrorCode::DepthTooLarge, "cylinder longer than table depth");
  for (auto s : w)
    if (s >= m) return 0.0;
  return level[w.size() - 1][word_index(w, m)];
}

CylinderMeasure table_from_counts(int m, int d, const std::vector<double>& counts) {
  CylinderMeasure t;
  t.m = m;
  t.depth = d;
  t.level.resize(d);
  double tot = 0;
  for (double c : counts) tot += c;
  t.level[d - 1].resize(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) t.level[d - 1][i] = tot > 0 ? counts[i] / tot : 0.0;
  for (int l = d - 1; l >= 1; --l) {
    auto& up = t.level[l];
    auto& cur = t.level[l - 1];
    cur.assign(up.size() / m, 0.0);
    for (size_t i = 0; i < up.size(); ++i) cur[i / m] += up[i];
  }
  return t;
}

CylinderMeasure empirical_measure(const Word& w, int d, int m) {
  check_table_size(m, d);
  if (d > int(w.size())) fail(ErrorCode::DepthTooLarge, "depth exceeds word length");
  std::vector<double> counts(ipow(m, d), 0.0);
  const std::uint64_t mod = ipow(m, d - 1);
  std::uint64_t idx = 0;
  for (int i = 0; i < d - 1; ++i) idx = idx * m + w[i];
  for (size_t i = d - 1; i < w.size(); ++i) {
    if (w[i] >= m) fail(ErrorCode::AlphabetMismatch, "symbol outside alphabet");
    idx = (idx % mod) * m + w[i];
    if (d == 1) idx = w[i];
    counts[idx] += 1;
  }
  return table_from_counts(m, d, counts);
}

CylinderMeasure cylinder_table(const Atom& mu, int depth) {
  const int m = atom_alphabet(mu);
  check_table_size(m, depth);
  CylinderMeasure t;
  t.m = m;
  t.depth = depth;
  t.level.resize(depth);
  if (auto* mk = std::get_if<MarkovMeasure>(&mu)) {
    t.level[0] = mk->pi();
    for (int l = 1; l < depth; ++l) {
      const auto& prev = t.level[l - 1];
      auto& cur = t.level[l];
      cur.assign(prev.size() * m, 0.0);
      for (size_t i = 0; i < prev.size(); ++i) {
        if (prev[i] == 0) continue;
        int last = int(i % m);
        for (int c = 0; c < m; ++c) cur[i * m + c] = prev[i] * mk->p(last, c);
      }
    }
  } else {
    const auto& pm = std::get<PeriodicMeasure>(mu);
    const size_t p = pm.w.size();
    for (int l = 1; l <= depth; ++l) {
      auto& cur = t.level[l - 1];
      cur.assign(ipow(m, l), 0.0);
      for (size_t i = 0; i < p; ++i) {
        std::uint64_t idx = 0;
        for (int k = 0; k < l; ++k) idx = idx * m + pm.w[(i + k) % p];
        cur[idx] += 1.0 / double(p);
      }
    }
  }
  return t;
}

CylinderMeasure cylinder_table(const MixedMeasure& mu, int depth) {
  mu.validate();
  CylinderMeasure out;
  out.m = mu.m;
  out.depth = depth;
  out.level.resize(depth);
  for (int l = 0; l < depth; ++l) out.level[l].assign(ipow(mu.m, l + 1), 0.0);
  for (auto& [w, a] : mu.parts) {
    if (w == 0) continue;
    double c = to_double(w);
    auto t = cylinder_table(a, depth);
    for (int l = 0; l < depth; ++l)
      for (size_t i = 0; i < t.level[l].size(); ++i) out.level[l][i] += c * t.level[l][i];
  }
  return out;
}

int rho_depth(int m, int J) {
  int L = 0;
  double cnt = 0;
  while (cnt < J) {
    ++L;
    cnt += std::pow(double(m), L);
  }
  return L;
}

RhoValue weak_star_distance(const CylinderMeasure& a, const CylinderMeasure& b, int J) {
  if (a.m != b.m) fail(ErrorCode::AlphabetMismatch, "measures on different alphabets");
  if (J < 1) fail(ErrorCode::InvalidArgument, "J must be >= 1");
  const int need = rho_depth(a.m, J);
  if (a.depth < need || b.depth < need)
    fail(ErrorCode::DepthTooLarge, "rho_" + std::to_string(J) + " needs cylinder depth " + std::to_string(need));
  double v = 0, scale = 0.5;
  int j = 0;
  for (int l = 1; j < J; ++l) {
    const auto& x = a.level[l - 1];
    const auto& y = b.level[l - 1];
    for (size_t i = 0; i < x.size() && j < J; ++i, ++j, scale *= 0.5) v += std::abs(x[i] - y[i]) * scale;
  }
  return {v, std::ldexp(1.0, 1 - J)};
}

RhoValue weak_star_distance(const MixedMeasure& a, const MixedMeasure& b, int J) {
  if (a.m != b.m) fail(ErrorCode::AlphabetMismatch, "measures on different alphabets");
  int d = rho_depth(a.m, J);
  return weak_star_distance(cylinder_table(a, d), cylinder_table(b, d), J);
}

MarkovInvariants markov_invariants(int m, const std::vector<double>& P) {
  auto mu = MarkovMeasure::from_matrix(m, P);
  return {mu.pi(), mu.entropy(), mu.support()};
}

CylinderMeasure mix(const std::vector<std::pair<double, MixedMeasure>>& entries, int depth) {
  if (entries.empty()) fail(ErrorCode::WeightSum, "no entries");
  double s = 0;
  for (auto& [w, mm] : entries) {
    if (w < 0) fail(ErrorCode::WeightSum, "negative weight");
    if (mm.m != entries[0].second.m) fail(ErrorCode::AlphabetMismatch, "entries on different alphabets");
    s += w;
  }
  if (std::abs(s - 1) > 1e-12) fail(ErrorCode::WeightSum, "weights sum to " + std::to_string(s));
  CylinderMeasure out;
  out.m = entries[0].second.m;
  out.depth = depth;
  out.level.resize(depth);
  for (int l = 0; l < depth; ++l) out.level[l].assign(ipow(out.m, l + 1), 0.0);
  for (auto& [w, mm] : entries) {
    auto t = cylinder_table(mm, depth);
    for (int l = 0; l < depth; ++l)
      for (size_t i = 0; i < t.level[l].size(); ++i) out.level[l][i] += w * t.level[l][i];
  }
  return out;
}

namespace {

CylinderMeasure lerp(const CylinderMeasure& a, const CylinderMeasure& b, double t) {
  CylinderMeasure c = a;
  for (int l = 0; l < a.depth; ++l)
    for (size_t i = 0; i < a.level[l].size(); ++i) c.level[l][i] = (1 - t) * a.level[l][i] + t * b.level[l][i];
  return c;
}

std::vector<std::pair<CylinderMeasure, CylinderMeasure>> segments(const MeasurePolyline& P, int depth) {
  std::vector<CylinderMeasure> v;
  for (auto& x : P.vertices) v.push_back(cylinder_table(x, depth));
  std::vector<std::pair<CylinderMeasure, CylinderMeasure>> s;
  if (v.size() == 1) s.push_back({v[0], v[0]});
  for (size_t i = 0; i + 1 < v.size(); ++i) s.push_back({v[i], v[i + 1]});
  if (P.closed && v.size() > 2) s.push_back({v.back(), v.front()});
  return s;
}

}  // namespace

double rho_to_segment(const CylinderMeasure& x, const CylinderMeasure& a, const CylinderMeasure& b, int J) {
  // rho_J(x, (1-t)a + tb) is convex in t
  double lo = 0, hi = 1;
  for (int it = 0; it < 60; ++it) {
    double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    double f1 = weak_star_distance(x, lerp(a, b, m1), J).value;
    double f2 = weak_star_distance(x, lerp(a, b, m2), J).value;
    (f1 <= f2 ? hi : lo) = (f1 <= f2 ? m2 : m1);
  }
  double best = weak_star_distance(x, lerp(a, b, 0.5 * (lo + hi)), J).value;
  best = std::min(best, weak_star_distance(x, a, J).value);
  return std::min(best, weak_star_distance(x, b, J).value);
}

double hausdorff_polylines(const MeasurePolyline& A, const MeasurePolyline& B, int J, int samples) {
  if (A.vertices.empty() || B.vertices.empty()) fail(ErrorCode::InvalidArgument, "empty polyline");
  int depth = rho_depth(A.vertices[0].m, J);
  auto sa = segments(A, depth), sb = segments(B, depth);
  auto one_way = [&](const auto& from, const auto& to) {
    double worst = 0;
    for (auto& [p, q] : from)
      for (int k = 0; k <= samples; ++k) {
        auto x = lerp(p, q, double(k) / samples);
        double best = INFINITY;
        for (auto& [r, s] : to) best = std::min(best, rho_to_segment(x, r, s, J));
        worst = std::max(worst, best);
      }
    return worst;
  };
  return std::max(one_way(sa, sb), one_way(sb, sa));
}

}  // namespace omega
