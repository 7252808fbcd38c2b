#include "omega/horseshoe.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <set>

#include "omega/error.hpp"

namespace omega {

namespace {

BigInt binom(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

double log_binom(long a, long b) { return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0); }

// number of compositions of z into r positive parts (z = r = 0 allowed)
BigInt runs_count(long z, long r) { return (z == 0 && r == 0) ? BigInt(1) : binom(z - 1, r - 1); }
double runs_log_count(long z, long r) { return (z == 0 && r == 0) ? 0.0 : log_binom(z - 1, r - 1); }

int cylinder_terms(int m, int depth) {
  int J = 0, p = 1;
  for (int l = 1; l <= depth; ++l) J += (p *= m);
  return J;
}

}  // namespace

std::array<long, 4> BinaryRunType::transitions(long n) const {
  long o = n - z;
  return {z - r0, r0 - (l == 0 ? 1 : 0), r1 - (l == 1 ? 1 : 0), o - r1};
}

BigInt BinaryRunType::count(long n) const { return runs_count(z, r0) * runs_count(n - z, r1); }
double BinaryRunType::log_count(long n) const { return runs_log_count(z, r0) + runs_log_count(n - z, r1); }

void for_each_binary_run_type(long n, const std::function<void(const BinaryRunType&)>& fn) {
  for (int first = 0; first < 2; ++first)
    for (int last = 0; last < 2; ++last)
      for (long rf = 1; rf <= n; ++rf) {
        long ro = first == last ? rf - 1 : rf;
        long r0 = first == 0 ? rf : ro, r1 = first == 0 ? ro : rf;
        if (r0 + r1 > n) break;
        for (long z = r0; z <= n - r1; ++z) {
          if (r0 == 0 && z != 0) break;
          fn(BinaryRunType{first, last, r0, r1, z});
        }
      }
}

int horseshoe_depth(const MarkovMeasure& mu) {
  if (mu.is_bernoulli()) return 1;
  if (mu.recurrent().size() <= 2) return 2;
  fail(ErrorCode::InvalidArgument, "type classes of Markov measures need at most two recurrent symbols");
}

TypeClassBlocks::TypeClassBlocks(const MarkovMeasure& mu, int n, int depth, double radius)
    : mu_(mu), m_(mu.m()), n_(n), depth_(depth), radius_(radius) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "block length must be >= 1");
  if (depth != 1 && depth != 2) fail(ErrorCode::InvalidArgument, "type class depth must be 1 or 2");
  if (depth == 2 && (mu.recurrent().size() > 2 || n < 2))
    fail(ErrorCode::InvalidArgument, "depth-2 type classes need two recurrent symbols and n >= 2");
  const auto& rec = mu.recurrent();
  const int J = cylinder_terms(m_, depth);
  const auto target = cylinder_table(Atom(mu), depth);
  CylinderMeasure emp;
  emp.m = m_;
  emp.depth = depth;
  emp.level.resize(depth);
  for (int l = 0; l < depth; ++l) emp.level[l].assign(size_t(std::pow(m_, l + 1)), 0.0);

  if (depth == 1) {
    std::vector<Symbol> sup;
    for (auto s : rec)
      if (mu.pi()[s] > 0) sup.push_back(s);
    std::vector<int> k(m_, 0);
    std::function<void(size_t, int)> rec_fn = [&](size_t i, int left) {
      if (i + 1 == sup.size()) {
        k[sup[i]] = left;
        for (int s = 0; s < m_; ++s) emp.level[0][s] = double(k[s]) / n;
        if (weak_star_distance(emp, target, J).value <= radius_) {
          BigInt c = 1;
          int rem = n;
          for (auto s : sup) {
            c *= binom(rem, k[s]);
            rem -= k[s];
          }
          types_.push_back({k, c});
        }
        k[sup[i]] = 0;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        k[sup[i]] = v;
        rec_fn(i + 1, left - v);
      }
      k[sup[i]] = 0;
    };
    rec_fn(0, n);
  } else {
    const Symbol a = rec[0], b = rec.size() > 1 ? rec[1] : rec[0];
    const bool single = rec.size() == 1;
    for_each_binary_run_type(n, [&](const BinaryRunType& t) {
      if (single && t.z != n) return;
      auto c = t.transitions(n);
      const Symbol sym[2] = {a, b};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (c[2 * i + j] > 0 && mu.p(sym[i], sym[j]) <= 0) return;
      for (auto& lv : emp.level) std::fill(lv.begin(), lv.end(), 0.0);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          double v = double(c[2 * i + j]) / (n - 1);
          emp.level[1][sym[i] * m_ + sym[j]] += v;
          emp.level[0][sym[i]] += v;
        }
      if (weak_star_distance(emp, target, J).value > radius_) return;
      types_.push_back({{t.first, t.l, int(t.r0), int(t.r1), int(t.z)}, t.count(n)});
    });
  }
  total_ = 0;
  for (auto& t : types_) total_ += t.count;
  if (total_ == 0) fail(ErrorCode::SlackTooTight, "no word of length " + std::to_string(n) + " within the radius");
  long double acc = 0;
  const long double tot = total_.convert_to<long double>();
  for (auto& t : types_) {
    acc += t.count.convert_to<long double>() / tot;
    cum_.push_back(acc);
  }
}

double TypeClassBlocks::distance(const Word& w) const {
  const int J = cylinder_terms(m_, depth_);
  return weak_star_distance(empirical_measure(w, depth_, m_), cylinder_table(Atom(mu_), depth_), J).value;
}

bool TypeClassBlocks::contains(const Word& w) const {
  if (int(w.size()) != n_) return false;
  if (!sft_accepts(mu_.support(), w)) return false;
  return distance(w) <= radius_;
}

Word TypeClassBlocks::build(const Type& t, Rng& rng) const {
  Word w;
  if (depth_ == 1) {
    for (int s = 0; s < m_; ++s) w.insert(w.end(), t.p[s], Symbol(s));
    for (size_t i = w.size(); i > 1; --i) std::swap(w[i - 1], w[rng.below(i)]);
    return w;
  }
  const auto& rec = mu_.recurrent();
  const Symbol sym[2] = {rec[0], rec.size() > 1 ? rec[1] : rec[0]};
  const long z = t.p[4], o = n_ - z;
  auto parts = [&](long total, long r) {
    // r positive parts: r-1 distinct cuts in 1..total-1 (Floyd sampling)
    std::set<long> cuts;
    for (long j = total - r + 1; j <= total - 1; ++j) {
      long v = 1 + long(rng.below(std::uint64_t(j)));
      if (!cuts.insert(v).second) cuts.insert(j);
    }
    std::vector<long> out;
    long prev = 0;
    for (long c : cuts) out.push_back(c - prev), prev = c;
    if (r > 0) out.push_back(total - prev);
    return out;
  };
  auto p0 = parts(z, t.p[2]), p1 = parts(o, t.p[3]);
  size_t i0 = 0, i1 = 0;
  int cur = t.p[0];
  while (i0 < p0.size() || i1 < p1.size()) {
    if (cur == 0) w.insert(w.end(), p0[i0++], sym[0]);
    else w.insert(w.end(), p1[i1++], sym[1]);
    cur ^= 1;
  }
  return w;
}

Word TypeClassBlocks::sample(Rng& rng) const {
  long double u = static_cast<long double>(rng.uniform());
  size_t i = size_t(std::upper_bound(cum_.begin(), cum_.end(), u) - cum_.begin());
  if (i >= types_.size()) i = types_.size() - 1;
  return build(types_[i], rng);
}

std::vector<Word> TypeClassBlocks::enumerate(std::uint64_t cap) const {
  if (total_ > cap) fail(ErrorCode::OversizeRequest, "block set larger than cap");
  std::vector<Word> out;
  for (auto& w : sft_language(mu_.support(), n_))
    if (distance(w) <= radius_) out.push_back(w);
  return out;
}

double type_class_log_count(const MarkovMeasure& mu, int n, int depth, double radius) {
  const int m = mu.m();
  const int J = cylinder_terms(m, depth);
  const auto target = cylinder_table(Atom(mu), depth);
  CylinderMeasure emp;
  emp.m = m;
  emp.depth = depth;
  emp.level.resize(depth);
  for (int l = 0; l < depth; ++l) emp.level[l].assign(size_t(std::pow(m, l + 1)), 0.0);
  std::vector<double> logs;
  const auto& rec = mu.recurrent();
  if (depth == 1) {
    std::vector<Symbol> sup;
    for (auto s : rec)
      if (mu.pi()[s] > 0) sup.push_back(s);
    std::vector<int> k(m, 0);
    std::function<void(size_t, int)> go = [&](size_t i, int left) {
      if (i + 1 == sup.size()) {
        k[sup[i]] = left;
        for (int s = 0; s < m; ++s) emp.level[0][s] = double(k[s]) / n;
        if (weak_star_distance(emp, target, J).value <= radius) {
          double v = std::lgamma(n + 1.0);
          for (auto s : sup) v -= std::lgamma(k[s] + 1.0);
          logs.push_back(v);
        }
        k[sup[i]] = 0;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        k[sup[i]] = v;
        go(i + 1, left - v);
      }
      k[sup[i]] = 0;
    };
    go(0, n);
  } else {
    const Symbol sym[2] = {rec[0], rec.size() > 1 ? rec[1] : rec[0]};
    for_each_binary_run_type(n, [&](const BinaryRunType& t) {
      if (rec.size() == 1 && t.z != n) return;
      auto c = t.transitions(n);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          if (c[2 * i + j] > 0 && mu.p(sym[i], sym[j]) <= 0) return;
      for (auto& lv : emp.level) std::fill(lv.begin(), lv.end(), 0.0);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          double v = double(c[2 * i + j]) / (n - 1);
          emp.level[1][sym[i] * m + sym[j]] += v;
          emp.level[0][sym[i]] += v;
        }
      if (weak_star_distance(emp, target, J).value > radius) return;
      logs.push_back(t.log_count(n));
    });
  }
  if (logs.empty()) return -INFINITY;
  double mx = *std::max_element(logs.begin(), logs.end());
  double s = 0;
  for (double v : logs) s += std::exp(v - mx);
  return mx + std::log(s);
}

Horseshoe build_horseshoe(const MarkovMeasure& mu, double eta, double zeta, int cap) {
  if (!(eta > 0) || !(zeta > 0)) fail(ErrorCode::InvalidArgument, "eta and zeta must be positive");
  const int depth = horseshoe_depth(mu);
  const double r = zeta / 4;
  const double h = mu.entropy();
  double best = -INFINITY;
  int best_n = 0;
  for (int n = depth == 2 ? 2 : 1; n <= cap; n += std::max(1, n / 32)) {
    double lc = type_class_log_count(mu, n, depth, r);
    if (lc / n > best) best = lc / n, best_n = n;
    if (lc / n + 1e-9 < h - eta) continue;
    auto blocks = std::make_shared<TypeClassBlocks>(mu, n, depth, r);
    double rate = log_big(blocks->count()) / n;
    if (rate < h - eta) continue;
    Horseshoe hs;
    hs.n = n;
    hs.count = blocks->count();
    hs.rate = rate;
    hs.sft = SftDescr::from_blocks(blocks);
    return hs;
  }
  fail(ErrorCode::SlackTooTight, "no n <= " + std::to_string(cap) + " reaches h - eta; best rate " +
                                     std::to_string(best) + " at n = " + std::to_string(best_n));
}

SftDescr entropy_dense_horseshoe(const MarkovMeasure& mu, double eta, double zeta) {
  return build_horseshoe(mu, eta, zeta).sft;
}

}  // namespace omega
