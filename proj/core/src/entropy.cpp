#include "omega/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <set>

#include "omega/error.hpp"
#include "omega/horseshoe.hpp"
#include "omega/synthesis.hpp"

namespace omega {

double counting_entropy(const SftDescr& sft, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  BigInt c = sft_word_count(sft, n);
  if (c == 0) return 0;
  return log_big(c) / n;
}

EntropyEstimate sft_entropy(const SftDescr& sft) {
  EntropyEstimate e;
  if (sft.kind() == SftDescr::Kind::Blocks) {
    const auto& b = sft.blocks();
    e.method = "block_count";
    e.n = b.block_length();
    e.value = log_big(b.count()) / b.block_length();
    e.exact = true;
    return e;
  }
  if (!sft.irreducible()) fail(ErrorCode::Reducible, "entropy needs an irreducible transition matrix");
  const int m = sft.m();
  const auto& A = sft.matrix();
  // (A + I) is aperiodic on the irreducible part with Perron root rho + 1
  std::vector<double> v(m, 1.0), w(m);
  double lam = 0, prev = -1;
  for (int it = 0; it < 1000000; ++it) {
    double s = 0;
    for (int i = 0; i < m; ++i) {
      double x = v[i];
      for (int j = 0; j < m; ++j)
        if (A[i * m + j]) x += v[j];
      w[i] = x;
      s += x;
    }
    double vs = 0;
    for (double x : v) vs += x;
    lam = s / vs;
    for (int i = 0; i < m; ++i) v[i] = w[i] / s;
    if (std::abs(lam - prev) < 1e-15 * lam && it > 8) break;
    prev = lam;
  }
  double rho = lam - 1;
  e.method = "spectral";
  e.value = rho > 0 ? std::max(0.0, std::log(rho)) : 0.0;
  e.error_bound = 1e-12;
  e.exact = true;
  e.n = 20;
  e.details["counting_n20"] = counting_entropy(sft, 20);
  return e;
}

std::uint64_t separated_count(const std::vector<Word>& words, int k) {
  if (words.empty()) return 0;
  const size_t n = words[0].size();
  for (auto& w : words)
    if (w.size() != n) fail(ErrorCode::LengthMismatch, "words must have equal length");
  if (k < 1) fail(ErrorCode::InvalidArgument, "resolution must be >= 1");
  // no full window fits: every pair is within 2^-k along the orbit segment
  if (size_t(k) > n) return 1;
  auto separated = [&](const Word& a, const Word& b) {
    for (size_t i = 0; i + k <= n; ++i)
      if (!std::equal(a.begin() + i, a.begin() + i + k, b.begin() + i)) return true;
    return false;
  };
  std::vector<const Word*> kept;
  for (auto& w : words) {
    bool ok = true;
    for (auto* q : kept)
      if (!separated(w, *q)) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(&w);
  }
  return kept.size();
}

namespace {

struct Group {
  long double weight;  // of one cylinder
  long double count;
};

long double least_count(std::vector<Group> g, double gamma) {
  std::sort(g.begin(), g.end(), [](const Group& a, const Group& b) { return a.weight > b.weight; });
  long double acc = 0, r = 0;
  for (auto& x : g) {
    if (x.weight <= 0) break;
    if (acc + x.weight * x.count >= gamma) {
      r += std::ceil((gamma - acc) / x.weight - 1e-12L);
      return std::max<long double>(r, 1);
    }
    acc += x.weight * x.count;
    r += x.count;
  }
  return r;
}

std::vector<Group> bernoulli_groups(const MarkovMeasure& mu, int n) {
  std::vector<Symbol> sup;
  for (auto s : mu.recurrent())
    if (mu.pi()[s] > 0) sup.push_back(s);
  std::vector<Group> out;
  std::vector<int> k(sup.size(), 0);
  std::function<void(size_t, int, long double, long double)> go = [&](size_t i, int left, long double w, long double c) {
    if (i + 1 == sup.size()) {
      long double p = mu.pi()[sup[i]];
      out.push_back({w * std::pow(p, (long double)left), c});
      return;
    }
    long double p = mu.pi()[sup[i]];
    long double b = 1;  // C(left, v)
    for (int v = 0; v <= left; ++v) {
      go(i + 1, left - v, w * std::pow(p, (long double)v), c * b);
      b = b * (left - v) / (v + 1);
    }
  };
  go(0, n, 1.0L, 1.0L);
  return out;
}

std::vector<Group> binary_markov_groups(const MarkovMeasure& mu, int n) {
  const auto& rec = mu.recurrent();
  const Symbol sym[2] = {rec[0], rec.size() > 1 ? rec[1] : rec[0]};
  std::vector<Group> out;
  for_each_binary_run_type(n, [&](const BinaryRunType& t) {
    if (rec.size() == 1 && t.z != n) return;
    auto c = t.transitions(n);
    long double w = mu.pi()[sym[t.first]];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (c[2 * i + j] > 0) w *= std::pow((long double)mu.p(sym[i], sym[j]), (long double)c[2 * i + j]);
    if (w > 0) out.push_back({w, t.count(n).convert_to<long double>()});
  });
  return out;
}

Word sample_path(const MarkovMeasure& mu, int n, Rng& rng) {
  Word w;
  double u = rng.uniform(), acc = 0;
  int s = mu.recurrent().back();
  for (int i = 0; i < mu.m(); ++i) {
    acc += mu.pi()[i];
    if (u < acc) {
      s = i;
      break;
    }
  }
  w.push_back(Symbol(s));
  while (int(w.size()) < n) {
    u = rng.uniform();
    acc = 0;
    int nxt = s;
    for (int j = 0; j < mu.m(); ++j) {
      acc += mu.p(s, j);
      if (u < acc && mu.p(s, j) > 0) {
        nxt = j;
        break;
      }
    }
    s = nxt;
    w.push_back(Symbol(s));
  }
  return w;
}

double slope(const std::vector<std::pair<int, double>>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = double(pts.size());
  for (auto& [x, y] : pts) sx += x, sy += y, sxx += double(x) * x, sxy += x * y;
  double den = k * sxx - sx * sx;
  return den == 0 ? 0 : (k * sxy - sx * sy) / den;
}

}  // namespace

EntropyEstimate katok_entropy_estimate(const MarkovMeasure& mu, double gamma, int n_max, std::uint64_t seed) {
  if (!(gamma > 0 && gamma < 1)) fail(ErrorCode::InvalidArgument, "gamma must lie in (0,1)");
  if (n_max < 2) fail(ErrorCode::InvalidArgument, "n_max must be >= 2");
  const int m = mu.m();
  const bool bern = mu.is_bernoulli();
  const bool binary = mu.recurrent().size() <= 2;
  EntropyEstimate e;
  e.method = bern ? "katok_exact_types" : binary ? "katok_exact_runs" : "katok_exact";
  e.n = n_max;
  e.exact = false;
  std::vector<std::pair<int, double>> logs;
  bool mc = false;
  double ci = 0;
  for (int n = 1; n <= n_max; ++n) {
    long double r;
    if (bern) r = least_count(bernoulli_groups(mu, n), gamma);
    else if (binary) r = least_count(binary_markov_groups(mu, n), gamma);
    else if (std::pow(double(m), n) <= double(kKatokEnumerationCap)) {
      std::vector<Group> g;
      const std::uint64_t total = std::uint64_t(std::pow(double(m), n) + 0.5);
      for (std::uint64_t i = 0; i < total; ++i) g.push_back({mu.cylinder(word_from_index(i, n, m)), 1});
      r = least_count(g, gamma);
    } else {
      // sampled cylinders: r_n = E[1{mu[w] >= t} / mu[w]] with t the gamma-quantile
      mc = true;
      e.method = "katok_monte_carlo";
      Rng rng(derive_seed(seed, {0x6b61746fULL, std::uint64_t(n)}));
      const int S = 20000;
      std::vector<double> w(S);
      for (auto& x : w) x = mu.cylinder(sample_path(mu, n, rng));
      std::vector<double> sorted = w;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      double t = sorted[std::min<size_t>(S - 1, size_t(std::ceil(gamma * S)) - 1)];
      double s1 = 0, s2 = 0;
      for (double x : w)
        if (x >= t) s1 += 1 / x, s2 += 1 / (x * x);
      double mean = s1 / S, var = std::max(0.0, s2 / S - mean * mean);
      r = mean;
      ci = std::max(ci, 1.96 * std::sqrt(var / S) / std::max(mean, 1e-300) / n);
    }
    double y = std::log(double(std::max<long double>(r, 1)));
    logs.push_back({n, y});
    e.series.push_back({n, y / n});
  }
  std::vector<std::pair<int, double>> tail;
  double lo = INFINITY, hi = -INFINITY;
  for (auto& [n, y] : logs)
    if (n >= n_max / 2) {
      tail.push_back({n, y});
      lo = std::min(lo, y / n);
      hi = std::max(hi, y / n);
    }
  e.value = std::max(0.0, slope(tail));
  e.details["gamma"] = gamma;
  e.details["liminf"] = lo;
  e.details["limsup"] = hi;
  e.details["last_ratio"] = logs.back().second / n_max;
  e.details["h_closed_form"] = mu.entropy();
  e.details["exact_counts"] = mc ? 0 : 1;
  if (mc) e.error_bound = ci;
  else e.error_bound = hi - lo;
  return e;
}

EntropyEstimate family_entropy_bound(const SynthesisConfig& cfg) {
  validate_config(cfg);
  const double eta = cfg.eta;
  auto phases = phase_vertices(cfg.target);
  const int P = int(phases.size());
  double h = INFINITY;
  for (auto& v : cfg.target.vertices) h = std::min(h, v.entropy());
  h = std::max(h, 0.0);

  // per-atom horseshoes at slack eta / 2; zero-entropy atoms contribute one block
  struct AtomRate {
    double log_count = 0;
    long double n0 = 1;
  };
  auto atom_rate = [&](const Atom& a) {
    AtomRate r;
    if (auto* mk = std::get_if<MarkovMeasure>(&a))
      if (mk->entropy() > 1e-12) {
        auto hs = build_horseshoe(*mk, eta / 2, cfg.zeta);
        r.log_count = log_big(hs.count);
        r.n0 = hs.n;
      }
    return r;
  };
  std::vector<std::vector<std::pair<long double, AtomRate>>> rates;
  for (auto& g : phases) {
    std::vector<std::pair<long double, AtomRate>> parts;
    for (auto& [w, a] : g.parts) parts.push_back({to_double(w), atom_rate(a)});
    rates.push_back(parts);
  }
  const SftDescr& lam = cfg.lambda;
  long double L = 0;
  for (auto a : lam.symbols())
    for (auto b : lam.symbols()) {
      auto br = bridge_word(lam, a, b);
      if (br) L = std::max<long double>(L, br->size());
    }

  const int S = 30;
  const double need = h > 2 * eta ? (h - 2 * eta) / (h - eta) : -INFINITY;
  long double M = 0, logW = 0;
  std::vector<char> ok(S, 1);
  for (int s = 0; s < S; ++s) {
    const int p = s % P;
    long double n = cfg.n.eval_ld(s), N = cfg.N.eval_ld(s);
    long double choice = 0, used = 0;
    for (size_t i = 0; i < rates[p].size(); ++i) {
      auto& [w, r] = rates[p][i];
      long double len = i + 1 == rates[p].size() ? n - used : std::floor(w * n);
      used += len;
      choice += std::floor(len / r.n0) * r.log_count;
    }
    // selection of q: M_r / M_{r+1} at the first block of the stage
    if (M > 0 && M / (M + n + L) < need) ok[s] = 0;
    if (M == 0 && need > 0) ok[s] = 0;
    M += N * (n + L);
    logW += N * choice;
    if (p == P - 1 && cfg.enumerate) {
      int len = std::bit_width(std::uint64_t(s / P + 1));
      M += sft_word_count(lam, len).convert_to<long double>() * (len + L);
    }
    if (logW < M * (h - eta)) ok[s] = 0;
  }
  int q = S;
  while (q > 0 && ok[q - 1]) --q;
  if (q >= S) fail(ErrorCode::GrowthViolated, "counting bound fails through stage " + std::to_string(S));

  // cover inequality on a small product tree: any cover V of the leaves W has
  // sum_{v in V} |V_v cap W| / |W| >= 1
  Rng rng(derive_seed(cfg.seed, {0x636f766572ULL}));
  std::vector<int> branch;
  for (int i = 0; i < 4; ++i) {
    auto& parts = rates[i % P];
    double lc = 0;
    for (auto& pr : parts) lc = std::max(lc, pr.second.log_count);
    branch.push_back(int(std::clamp(std::exp(lc), 1.0, 3.0)));
  }
  long double leaves = 1;
  for (int b : branch) leaves *= b;
  int cover_ok = 0;
  const int trials = 64;
  for (int t = 0; t < trials; ++t) {
    long double sum = 0;
    std::function<void(int, long double)> go = [&](int level, long double under) {
      if (level == int(branch.size()) || rng.uniform() < 0.3) {
        sum += under / leaves;
        if (rng.uniform() < 0.1) sum += under / leaves;  // redundant member
        return;
      }
      for (int c = 0; c < branch[level]; ++c) go(level + 1, under / branch[level]);
    };
    go(0, leaves);
    if (sum >= 1 - 1e-12) ++cover_ok;
  }
  if (cover_ok != trials) fail(ErrorCode::GrowthViolated, "prefix cover inequality failed");

  EntropyEstimate e;
  e.method = "family_bound";
  e.value = std::max(0.0, h - 2 * eta);
  e.n = q;
  e.k = S;
  e.details["h_tilde"] = h;
  e.details["eta"] = eta;
  e.details["zeta"] = cfg.zeta;
  e.details["first_certified_stage"] = q;
  e.details["log_W_over_M"] = double(logW / M);
  e.details["cover_checks"] = cover_ok;
  return e;
}

}  // namespace omega
