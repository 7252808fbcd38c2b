#include "omega/birkhoff.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "omega/error.hpp"
#include "omega/synthesis.hpp"

namespace omega {

namespace {

std::uint64_t ipow(int m, int d) {
  std::uint64_t r = 1;
  for (int i = 0; i < d; ++i) r *= std::uint64_t(m);
  return r;
}

constexpr int kMaxObservableDepth = 8;

}  // namespace

Observable Observable::indicator(int m, const Word& w) {
  if (w.empty() || int(w.size()) > kMaxObservableDepth) fail(ErrorCode::InvalidArgument, "indicator word length must be 1..8");
  for (auto s : w)
    if (s >= m) fail(ErrorCode::AlphabetMismatch, "indicator word outside alphabet");
  Observable o;
  o.m = m;
  o.depth = int(w.size());
  o.weights.assign(ipow(m, o.depth), 0.0);
  o.weights[word_index(w, m)] = 1.0;
  return o;
}

Observable Observable::constant(int m, double c) {
  Observable o;
  o.m = m;
  o.depth = 1;
  o.weights.assign(m, c);
  return o;
}

Observable Observable::parse(int m, const std::string& s) {
  if (s.rfind("1_[", 0) == 0 && s.back() == ']') return indicator(m, parse_word(s.substr(3, s.size() - 4)));
  if (s.rfind("const:", 0) == 0) return constant(m, std::stod(s.substr(6)));
  auto colon = s.find(':');
  if (colon != std::string::npos) {
    Observable o;
    o.m = m;
    o.depth = std::stoi(s.substr(0, colon));
    if (o.depth < 1 || o.depth > kMaxObservableDepth) fail(ErrorCode::InvalidArgument, "observable depth must be 1..8");
    std::stringstream ss(s.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) o.weights.push_back(std::stod(item));
    if (o.weights.size() != ipow(m, o.depth)) fail(ErrorCode::InvalidArgument, "observable needs m^d weights");
    for (double w : o.weights)
      if (!std::isfinite(w)) fail(ErrorCode::InvalidArgument, "observable weights must be finite");
    return o;
  }
  fail(ErrorCode::InvalidArgument, "cannot parse observable '" + s + "'");
}

double Observable::operator()(const Word& x) const {
  std::uint64_t idx = 0;
  for (int i = 0; i < depth; ++i) {
    if (x[i] >= m) return 0.0;
    idx = idx * m + x[i];
  }
  return weights[idx];
}

double Observable::integral(const MixedMeasure& mu) const {
  double s = 0;
  for (std::uint64_t i = 0; i < weights.size(); ++i)
    if (weights[i] != 0) s += weights[i] * mu.cylinder(word_from_index(i, depth, m));
  return s;
}

std::string Observable::str() const {
  std::ostringstream os;
  os << depth << ':';
  for (size_t i = 0; i < weights.size(); ++i) os << (i ? "," : "") << weights[i];
  return os.str();
}

std::string kind_name(RegularityKind k) {
  switch (k) {
    case RegularityKind::Regular: return "regular";
    case RegularityKind::QuasiRegular: return "quasi_regular";
    case RegularityKind::Historic: return "historic";
    case RegularityKind::Irregular: return "irregular";
  }
  return "?";
}

namespace {

// graph of (d-1)-words with an edge per allowed d-word, weighted by phi
struct WeightedGraph {
  int n = 0;
  std::vector<std::vector<std::pair<int, double>>> out;
};

WeightedGraph observable_graph(const SftDescr& sp, const Observable& phi) {
  WeightedGraph g;
  if (phi.depth == 1) {
    const auto& syms = sp.symbols();
    g.n = sp.m();
    g.out.resize(g.n);
    for (auto a : syms)
      for (auto b : syms)
        if (sp.allows(a, b)) g.out[a].push_back({b, phi(Word{a})});
    return g;
  }
  auto words = sft_language(sp, phi.depth);
  std::map<Word, int> id;
  auto node = [&](const Word& w) {
    auto it = id.find(w);
    if (it != id.end()) return it->second;
    int k = int(id.size());
    id[w] = k;
    g.out.emplace_back();
    return k;
  };
  for (auto& w : words) {
    int u = node(Word(w.begin(), w.end() - 1));
    int v = node(Word(w.begin() + 1, w.end()));
    g.out[u].push_back({v, phi(w)});
  }
  g.n = int(id.size());
  return g;
}

// Karp: minimum cycle mean over walks starting anywhere
double min_cycle_mean(const WeightedGraph& g) {
  const int n = g.n;
  std::vector<std::vector<double>> D(n + 1, std::vector<double>(n, INFINITY));
  for (int v = 0; v < n; ++v) D[0][v] = 0;
  for (int k = 1; k <= n; ++k)
    for (int u = 0; u < n; ++u)
      if (std::isfinite(D[k - 1][u]))
        for (auto [v, w] : g.out[u]) D[k][v] = std::min(D[k][v], D[k - 1][u] + w);
  double best = INFINITY;
  for (int v = 0; v < n; ++v) {
    if (!std::isfinite(D[n][v])) continue;
    double worst = -INFINITY;
    for (int k = 0; k < n; ++k)
      if (std::isfinite(D[k][v])) worst = std::max(worst, (D[n][v] - D[k][v]) / (n - k));
    best = std::min(best, worst);
  }
  return best;
}

WeightedGraph negated(WeightedGraph g) {
  for (auto& e : g.out)
    for (auto& [v, w] : e) w = -w;
  return g;
}

double log_perron(const std::vector<std::vector<int>>& adj) {
  const int n = int(adj.size());
  std::vector<double> v(n, 1.0), w(n);
  double lam = 0;
  for (int it = 0; it < 100000; ++it) {
    double s = 0;
    for (int i = 0; i < n; ++i) {
      double x = v[i];
      for (int j : adj[i]) x += v[j];
      w[i] = x;
      s += x;
    }
    double vs = 0;
    for (double x : v) vs += x;
    double nl = s / vs;
    for (int i = 0; i < n; ++i) v[i] = w[i] / s;
    if (std::abs(nl - lam) < 1e-15 * nl) {
      lam = nl;
      break;
    }
    lam = nl;
  }
  return lam - 1 > 1 ? std::log(lam - 1) : 0.0;
}

// largest entropy carried by cycles of mean exactly `mean`
double optimal_cycle_entropy(const WeightedGraph& g, double mean) {
  const int n = g.n;
  std::vector<std::vector<double>> D(n, std::vector<double>(n, INFINITY));
  for (int u = 0; u < n; ++u)
    for (auto [v, w] : g.out[u]) D[u][v] = std::min(D[u][v], w - mean);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (D[i][k] + D[k][j] < D[i][j]) D[i][j] = D[i][k] + D[k][j];
  LabeledGraph tight;
  for (int i = 0; i < n; ++i) tight.add_state(0);
  for (int u = 0; u < n; ++u)
    for (auto [v, w] : g.out[u]) {
      double back = u == v ? 0.0 : D[v][u];
      if (std::abs(w - mean + back) < 1e-9) tight.add_edge(u, v);
    }
  double best = 0;
  for (auto& c : nontrivial_sccs(tight)) {
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < c.size(); ++i) pos[c[i]] = int(i);
    std::vector<std::vector<int>> adj(c.size());
    for (size_t i = 0; i < c.size(); ++i)
      for (int v : tight.succ[c[i]])
        if (pos[v] >= 0) adj[i].push_back(pos[v]);
    best = std::max(best, log_perron(adj));
  }
  return best;
}

}  // namespace

std::pair<double, double> observable_range(const SftDescr& ambient, const Observable& phi) {
  auto g = observable_graph(ambient, phi);
  if (g.n == 0) fail(ErrorCode::InvalidArgument, "empty space");
  return {min_cycle_mean(g), -min_cycle_mean(negated(g))};
}

std::vector<std::pair<std::uint64_t, double>> prefix_averages(const Word& x, const Observable& phi) {
  std::vector<std::pair<std::uint64_t, double>> out;
  if (x.size() < size_t(phi.depth)) return out;
  const std::uint64_t N = x.size() - phi.depth + 1;
  long double sum = 0;
  std::uint64_t next = 1;
  for (std::uint64_t i = 0; i < N; ++i) {
    sum += phi(Word(x.begin() + i, x.begin() + i + phi.depth));
    if (i + 1 == next || i + 1 == N) {
      out.push_back({i + 1, double(sum / (i + 1))});
      if (i + 1 == next) next *= 2;
    }
  }
  return out;
}

BirkhoffReport birkhoff_bounds(const BlockSchedule& s, const Observable& phi, std::uint64_t horizon) {
  if (s.realizer) fail(ErrorCode::UnsupportedSchedule, "Birkhoff bounds need a phase schedule");
  auto vf = vf_limits(s, 2);
  BirkhoffReport r;
  r.liminf = INFINITY;
  r.limsup = -INFINITY;
  for (auto& v : vf.polyline.vertices) {
    double I = phi.integral(v);
    r.liminf = std::min(r.liminf, I);
    r.limsup = std::max(r.limsup, I);
  }
  r.L_phi = observable_range(s.bridge_space(), phi);
  if (r.limsup - r.liminf > 1e-12) r.kind = RegularityKind::Irregular;
  else if (!vf.is_singleton) r.kind = RegularityKind::Historic;
  else {
    auto S = SubshiftDescr::from_graph(vf.polyline.vertices[0].support());
    r.kind = subshift_includes(omega_limit(s), S) ? RegularityKind::Regular : RegularityKind::QuasiRegular;
  }
  if (horizon > 0) r.series = prefix_averages(schedule_prefix(s, horizon), phi);
  return r;
}

namespace {

struct LevelProblem {
  const Observable& phi;
  int m;

  std::vector<double> matrix(const Eigen::VectorXd& th) const {
    std::vector<double> P(m * m);
    for (int i = 0; i < m; ++i) {
      double mx = -INFINITY;
      for (int j = 0; j < m; ++j) mx = std::max(mx, th[i * m + j]);
      double s = 0;
      for (int j = 0; j < m; ++j) s += P[i * m + j] = std::exp(th[i * m + j] - mx);
      for (int j = 0; j < m; ++j) P[i * m + j] /= s;
    }
    return P;
  }
  std::vector<double> stationary(const std::vector<double>& P) const {
    Eigen::MatrixXd A(m + 1, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) A(j, i) = P[i * m + j] - (i == j ? 1.0 : 0.0);
    for (int i = 0; i < m; ++i) A(m, i) = 1.0;
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m + 1);
    b[m] = 1.0;
    Eigen::VectorXd pi = A.colPivHouseholderQr().solve(b);
    return std::vector<double>(pi.data(), pi.data() + m);
  }
  double psi(int i, int j) const {
    return phi.depth == 1 ? phi(Word{Symbol(i)}) : phi(Word{Symbol(i), Symbol(j)});
  }
  // (entropy, constraint)
  std::pair<double, double> eval(const Eigen::VectorXd& th) const {
    auto P = matrix(th);
    auto pi = stationary(P);
    double h = 0, g = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double p = P[i * m + j];
        if (p > 0) h -= pi[i] * p * std::log(p);
        g += pi[i] * p * psi(i, j);
      }
    return {h, g};
  }
  void gradients(const Eigen::VectorXd& th, Eigen::VectorXd& gh, Eigen::VectorXd& gg) const {
    const double eps = 1e-6;
    gh.resize(th.size());
    gg.resize(th.size());
    for (int k = 0; k < th.size(); ++k) {
      Eigen::VectorXd a = th, b = th;
      a[k] += eps;
      b[k] -= eps;
      auto fa = eval(a), fb = eval(b);
      gh[k] = (fa.first - fb.first) / (2 * eps);
      gg[k] = (fa.second - fb.second) / (2 * eps);
    }
  }
  // move back onto {g = a} along the pseudo-inverse of the constraint Jacobian
  bool project(Eigen::VectorXd& th, double a) const {
    for (int it = 0; it < 50; ++it) {
      double g = eval(th).second;
      if (std::abs(g - a) < 1e-13) return true;
      Eigen::VectorXd gh, gg;
      gradients(th, gh, gg);
      Eigen::MatrixXd J = gg.transpose();
      Eigen::MatrixXd Jp = J.completeOrthogonalDecomposition().pseudoInverse();
      th -= Jp * Eigen::VectorXd::Constant(1, g - a);
    }
    return std::abs(eval(th).second - a) < 1e-10;
  }
};

}  // namespace

LevelEntropy level_entropy(const Observable& phi, double a, std::uint64_t seed) {
  if (phi.depth > 2) fail(ErrorCode::InvalidArgument, "level entropy supports observables of depth 1 or 2");
  const int m = phi.m;
  const SftDescr full = SftDescr::full(m);
  auto [lo, hi] = observable_range(full, phi);
  if (a < lo - 1e-12 || a > hi + 1e-12) fail(ErrorCode::BoundaryValue, "level outside the range of phi");
  LevelEntropy out;
  if (std::abs(a - lo) <= 1e-12 || std::abs(a - hi) <= 1e-12) {
    // degenerate supremum: entropy carried by the extremal cycles
    auto g = observable_graph(full, phi);
    out.boundary = true;
    out.value = std::abs(a - lo) <= 1e-12 ? optimal_cycle_entropy(g, lo) : optimal_cycle_entropy(negated(g), -hi);
    out.restarts = 0;
    return out;
  }
  LevelProblem pr{phi, m};
  Rng rng(derive_seed(seed, {0x6c6576656cULL}));
  double best = -INFINITY;
  Eigen::VectorXd best_th;
  for (int r = 0; r < out.restarts; ++r) {
    Eigen::VectorXd th(m * m);
    for (int k = 0; k < th.size(); ++k) th[k] = 4 * rng.uniform() - 2;
    if (!pr.project(th, a)) continue;
    double h = pr.eval(th).first;
    for (int it = 0; it < 4000; ++it) {
      Eigen::VectorXd gh, gg;
      pr.gradients(th, gh, gg);
      Eigen::MatrixXd J = gg.transpose();
      Eigen::MatrixXd Jp = J.completeOrthogonalDecomposition().pseudoInverse();
      Eigen::VectorXd d = gh - Jp * (J * gh);
      if (d.norm() < 1e-10) break;
      bool moved = false;
      for (double step = 1.0; step > 1e-12; step *= 0.5) {
        Eigen::VectorXd t2 = th + step * d;
        if (!pr.project(t2, a)) continue;
        double h2 = pr.eval(t2).first;
        if (h2 > h) {
          moved = h2 - h > 1e-15;
          th = t2;
          h = h2;
          break;
        }
      }
      if (!moved) break;
    }
    if (h > best) {
      best = h;
      best_th = th;
    }
  }
  if (!std::isfinite(best)) fail(ErrorCode::BoundaryValue, "constraint could not be met");
  out.value = best;
  out.argmax = pr.matrix(best_th);
  return out;
}

IrregularWitness irregular_witness(const Observable& phi, double eta, std::uint64_t seed) {
  if (!(eta > 0)) fail(ErrorCode::InvalidArgument, "eta must be positive");
  const int m = phi.m;
  auto [lo, hi] = observable_range(SftDescr::full(m), phi);
  if (hi - lo < 1e-12) fail(ErrorCode::DegenerateObservable, "phi has the same integral for every invariant measure");
  // integral of phi against the Bernoulli measure q
  auto bern_integral = [&](const std::vector<double>& q) {
    double s = 0;
    for (std::uint64_t i = 0; i < phi.weights.size(); ++i) {
      if (phi.weights[i] == 0) continue;
      double w = phi.weights[i];
      for (auto c : word_from_index(i, phi.depth, m)) w *= q[c];
      s += w;
    }
    return s;
  };
  std::vector<double> uni(m, 1.0 / m);
  const double I0 = bern_integral(uni);
  std::vector<double> psi(m);
  for (int i = 0; i < m; ++i) {
    auto q = uni;
    q[i] += 1e-6;
    psi[i] = (bern_integral(q) - I0) / 1e-6;
  }
  const double htop = std::log(double(m));
  // tilt along the gradient, and along each symbol for observables whose
  // gradient vanishes at the uniform measure
  std::vector<std::vector<double>> dirs = {psi};
  for (int i = 0; i < m; ++i) {
    std::vector<double> e(m, 0.0);
    e[i] = 1;
    dirs.push_back(e);
  }
  std::vector<double> best_q;
  double best_gap = 0;
  for (auto& dir : dirs) {
    for (int k = -1000; k <= 1000; ++k) {
      double t = 0.01 * k;
      std::vector<double> q(m);
      double s = 0;
      for (int i = 0; i < m; ++i) s += q[i] = std::exp(t * dir[i]);
      double h = 0;
      for (auto& x : q) {
        x /= s;
        if (x > 0) h -= x * std::log(x);
      }
      if (h < htop - eta) continue;
      double gap = std::abs(bern_integral(q) - I0);
      if (gap > best_gap + 1e-15) best_gap = gap, best_q = q;
    }
  }
  if (best_gap < 1e-9) fail(ErrorCode::DegenerateObservable, "no Bernoulli measure separates the integrals of phi");

  const int M = m + 1;
  std::vector<std::pair<Symbol, double>> pu, pv;
  std::vector<Symbol> syms;
  for (int i = 0; i < m; ++i) {
    pu.push_back({Symbol(i), 1.0 / m});
    pv.push_back({Symbol(i), best_q[i]});
    syms.push_back(Symbol(i));
  }
  IrregularWitness w;
  w.mu = MixedMeasure::of(MarkovMeasure::bernoulli(M, pu));
  w.nu = MixedMeasure::of(MarkovMeasure::bernoulli(M, pv));
  SynthesisConfig cfg;
  cfg.target.vertices = {w.mu, w.nu};
  cfg.lambda = SftDescr::full_on(M, syms);
  cfg.ambient = SftDescr::full(M);
  cfg.eta = eta / 2;
  cfg.seed = seed;
  w.schedule = build_saturated_schedule(cfg);
  w.schedule.prefix = {Symbol(m)};
  w.schedule.validate();
  w.report = birkhoff_bounds(w.schedule, phi, 1 << 16);
  w.entropy = family_entropy_bound(cfg);
  w.recurrence = check_recurrence(w.schedule, omega_limit(w.schedule));
  return w;
}

}  // namespace omega
