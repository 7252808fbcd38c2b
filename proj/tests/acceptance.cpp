// Acceptance checks 1-11; prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "omega/birkhoff.hpp"
#include "omega/densities.hpp"
#include "omega/entropy.hpp"
#include "omega/horseshoe.hpp"
#include "omega/json_io.hpp"
#include "omega/limit_sets.hpp"
#include "omega/shadowing.hpp"
#include "omega/synthesis.hpp"

using namespace omega;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "failed: ";
      else note << "; ";
      note << what;
      ok = false;
    }
  }
};

Rational pow2(int e) { return e >= 0 ? Rational(BigInt(1) << e) : Rational(1) / Rational(BigInt(1) << -e); }

Outcome twelve_cases() {
  Outcome o;
  auto t0 = Clock::now();
  int runs = 0;
  for (auto L : all_case_labels()) {
    for (auto mode : {RecurrenceMode::Nonrecurrent, RecurrenceMode::RecurrentNontransitive}) {
      if (L.primed && mode == RecurrenceMode::RecurrentNontransitive) continue;
      RealizeOptions opt;
      opt.mode = mode;
      opt.seed = 1;
      auto w = realize_case(L, opt);
      auto c = classify_case(w.schedule);
      o.require(c.label == L, "label " + L.str() + " came back as " + c.label.str());
      o.require(c.recurrence.nonrecurrent == (mode == RecurrenceMode::Nonrecurrent),
                "recurrence flag of " + L.str() + " in mode " + mode_name(mode));
      ++runs;
    }
  }
  double t = seconds_since(t0);
  o.require(runs == 18, "expected 18 runs");
  o.require(t < 60, "runtime " + std::to_string(t) + " s");
  if (o.ok) o.note << runs << " realizations round-trip in " << t << " s";
  return o;
}

Outcome chain_invariant() {
  Outcome o;
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    violations += !chain_inclusions_hold(statistical_omegas(fx::random_schedule(1000003 * seed + 17)));
  o.require(violations == 0, std::to_string(violations) + " violations");
  if (o.ok) o.note << "1000 random schedules, zero violations";
  return o;
}

Outcome sft_entropies() {
  Outcome o;
  auto gm = SftDescr::from_matrix(2, {1, 1, 1, 0});
  double golden = std::log((1 + std::sqrt(5.0)) / 2);
  auto e = sft_entropy(gm);
  o.require(e.method == "spectral", "golden mean not computed spectrally");
  o.require(std::abs(e.value - golden) <= 1e-9, "spectral value off the closed form");
  o.require(std::abs(e.value - 0.481212) <= 5e-7, "spectral value does not round to 0.481212");
  double c = counting_entropy(gm, 20);
  o.require(std::abs(c - 0.481212) <= 1e-2, "counting value at n=20");
  o.require(counting_entropy(SftDescr::full(2), 20) == std::log(2.0), "full shift counting not exactly log 2");
  if (o.ok) o.note << "spectral " << e.value << ", counting(20) " << c;
  return o;
}

// r_n by sorting all 2^n cylinder weights of Bernoulli(p, 1-p)
std::uint64_t brute_katok_count(double p, int n, double gamma) {
  std::vector<double> w(std::size_t(1) << n);
  for (std::size_t i = 0; i < w.size(); ++i) {
    int ones = __builtin_popcountll(i);
    w[i] = std::pow(p, n - ones) * std::pow(1 - p, ones);
  }
  std::sort(w.begin(), w.end(), std::greater<>());
  double acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    acc += w[i];
    if (acc >= gamma - 1e-12) return i + 1;
  }
  return w.size();
}

Outcome katok() {
  Outcome o;
  auto t0 = Clock::now();
  auto fair = katok_entropy_estimate(MarkovMeasure::bernoulli({0.5, 0.5}), 0.5, 24);
  auto skew = katok_entropy_estimate(MarkovMeasure::bernoulli({0.9, 0.1}), 0.5, 24);
  double t = seconds_since(t0);
  o.require(std::abs(fair.value - std::log(2.0)) <= 0.05, "fair slope " + std::to_string(fair.value));
  o.require(std::abs(skew.value - 0.325) <= 0.05, "skewed slope " + std::to_string(skew.value));
  o.require(fair.details.at("exact_counts") == 1 && skew.details.at("exact_counts") == 1, "counts not exact");
  for (auto& [n, v] : fair.series)
    o.require(std::llround(std::exp(v * n)) == (1LL << (n - 1)), "fair count at n=" + std::to_string(n));
  for (auto& [n, v] : skew.series)
    if (n <= 20) o.require(std::llround(std::exp(v * n)) == (long long)brute_katok_count(0.9, n, 0.5),
                           "skewed count at n=" + std::to_string(n));
  o.require(t < 30, "runtime " + std::to_string(t) + " s");
  if (o.ok) o.note << "slopes " << fair.value << " and " << skew.value << " in " << t << " s";
  return o;
}

Outcome saturated_set() {
  Outcome o;
  SynthesisConfig cfg;
  cfg.lambda = SftDescr::full(2);
  cfg.target.vertices = {fx::periodic(2, "0"), fx::bernoulli({0.5, 0.5})};
  auto s = build_saturated_schedule(cfg);
  auto vf = vf_limits(s, 2);
  const int J = 8;
  double h = hausdorff_polylines(vf.polyline, cfg.target, J);
  o.require(h <= 0.05, "vf distance " + std::to_string(h));

  // empirical measures along a 10^7 prefix, from 10^5 on every 2^12 symbols
  const std::uint64_t N = 10000000;
  const int d = rho_depth(2, J);
  Word x = schedule_prefix(s, N);
  std::vector<double> counts(std::size_t(1) << d, 0);
  auto a = cylinder_table(cfg.target.vertices[0], d), b = cylinder_table(cfg.target.vertices[1], d);
  std::vector<CylinderMeasure> cloud;
  std::uint64_t idx = 0;
  for (std::uint64_t i = 0; i < N; ++i) {
    idx = ((idx << 1) | x[i]) & ((1u << d) - 1);
    if (i + 1 >= std::uint64_t(d)) counts[idx] += 1;
    if (i + 1 >= 100000 && (i + 1) % 4096 == 0) cloud.push_back(table_from_counts(2, d, counts));
  }
  double cloud_to_k = 0;
  for (auto& c : cloud) cloud_to_k = std::max(cloud_to_k, rho_to_segment(c, a, b, J));
  double k_to_cloud = 0;
  for (int i = 0; i <= 100; ++i) {
    double t = i / 100.0;
    auto p = mix({{1 - t, cfg.target.vertices[0]}, {t, cfg.target.vertices[1]}}, d);
    double best = 1e9;
    for (auto& c : cloud) best = std::min(best, weak_star_distance(p, c, J).value);
    k_to_cloud = std::max(k_to_cloud, best);
  }
  double oracle = std::max(cloud_to_k, k_to_cloud);
  o.require(oracle <= 0.05, "prefix sweep distance " + std::to_string(oracle));

  auto seg = family_entropy_bound(cfg);
  o.require(seg.value >= -0.1, "segment bound");
  SynthesisConfig one = cfg;
  one.target.vertices = {fx::bernoulli({0.5, 0.5})};
  auto single = family_entropy_bound(one);
  o.require(single.value >= std::log(2.0) - 0.1 - 1e-12, "singleton bound " + std::to_string(single.value));
  if (o.ok)
    o.note << "vf distance " << h << ", prefix sweep " << oracle << ", bounds " << seg.value << " and " << single.value;
  return o;
}

Outcome horseshoe() {
  Outcome o;
  auto mu = MarkovMeasure::bernoulli({0.3, 0.7});
  auto hs = build_horseshoe(mu, 0.05, 0.1);
  auto e = sft_entropy(hs.sft);
  o.require(e.exact, "entropy not exact");
  o.require(e.value >= fx::H(0.7) - 0.05, "entropy " + std::to_string(e.value));
  auto target = cylinder_table(MixedMeasure::of(mu), 1);
  Rng rng(99);
  int failures = 0;
  for (int t = 0; t < 1000; ++t) {
    Word w;
    for (int b = 0; b < 10; ++b) {
      Word blk = hs.sft.blocks().sample(rng);
      w.insert(w.end(), blk.begin(), blk.end());
    }
    auto emp = empirical_measure(w, 1, 2);
    double dist = weak_star_distance(emp, target, 2).value;
    double freq = std::abs(emp.weight({1}) - 0.7);
    failures += !(dist <= 0.1 && freq <= 0.1);
  }
  o.require(failures == 0, std::to_string(failures) + " sampled blocks too far");
  if (o.ok) o.note << "n=" << hs.n << ", entropy " << e.value << " >= " << fx::H(0.7) - 0.05;
  return o;
}

Outcome irregular() {
  Outcome o;
  auto w = irregular_witness(Observable::indicator(2, {1}), 0.1, 0);
  o.require(w.report.liminf < w.report.limsup, "no oscillation");
  o.require(w.report.limsup - w.report.liminf >= 0.1, "gap below 0.1");
  o.require(w.recurrence.nonrecurrent, "recurrent");
  o.require(w.entropy.value >= std::log(2.0) - 0.2, "entropy bound " + std::to_string(w.entropy.value));
  if (o.ok) o.note << "bounds [" << w.report.liminf << ", " << w.report.limsup << "], entropy " << w.entropy.value;
  return o;
}

Outcome level_sets() {
  Outcome o;
  auto phi = Observable::indicator(2, {1});
  // Bernoulli(p) grid, p in {0.01, ..., 0.99}: Birkhoff average of phi is 1 - p0
  auto grid = [](double a) {
    double best = -1;
    for (int i = 1; i <= 99; ++i)
      if (std::abs(i / 100.0 - a) < 1e-9) best = std::max(best, fx::H(i / 100.0));
    return best;
  };
  double half = level_entropy(phi, 0.5).value, quarter = level_entropy(phi, 0.25).value;
  o.require(std::abs(half - std::log(2.0)) <= 1e-6 && std::abs(half - grid(0.5)) <= 1e-6, "t at 1/2 " + std::to_string(half));
  o.require(std::abs(quarter - 0.5623) <= 1e-3 && std::abs(quarter - grid(0.25)) <= 1e-3,
            "t at 1/4 " + std::to_string(quarter));
  if (o.ok) o.note << "t(1/2) " << half << ", t(1/4) " << quarter;
  return o;
}

Outcome shadowing() {
  Outcome o;
  auto t0 = Clock::now();
  Rng rng(2024);
  int shift_fail = 0;
  for (int t = 0; t < 10000; ++t) {
    ShiftPseudoOrbit p;
    p.k = 1 + int(rng.below(8));
    const int len = p.k + 1 + int(rng.below(6)), steps = 2 + int(rng.below(30));
    Word cur(len);
    for (auto& c : cur) c = Symbol(rng.below(2));
    for (int n = 0; n < steps; ++n) {
      p.points.push_back(cur);
      Word next(cur.begin() + 1, cur.begin() + 1 + p.k);
      while (int(next.size()) < len) next.push_back(Symbol(rng.below(2)));
      cur = next;
    }
    auto s = shadow_shift(p);
    // independent check: d(sigma^n y, x_n) over the first len symbols
    Rational worst = 0;
    for (int n = 0; n < steps; ++n) {
      Word yn(s.y.begin() + n, s.y.begin() + std::min<std::size_t>(s.y.size(), n + len));
      Word xn(p.points[n].begin(), p.points[n].begin() + yn.size());
      worst = std::max(worst, shift_distance(yn, xn));
    }
    shift_fail += !(s.epsilon <= pow2(-(p.k + 1)) && worst <= pow2(-(p.k + 1)));
  }
  o.require(shift_fail == 0, std::to_string(shift_fail) + " shift pseudo-orbits not shadowed");

  int real_fail = 0;
  const Rational delta = pow2(-8), eps = pow2(-5);
  for (int t = 0; t < 1000; ++t) {
    RealPseudoOrbit p;
    p.delta = delta;
    Rational x(BigInt(rng.below(1 << 24)), BigInt(1) << 24);
    const int steps = 10 + int(rng.below(40));
    for (int n = 0; n < steps; ++n) {
      p.x.push_back(x);
      Rational jitter(BigInt(rng.below(513)) - 256, BigInt(1) << 16);
      x = frac(2 * x + jitter + 1);
    }
    auto s = shadow_doubling(p, eps);
    Rational y = s.y, worst = 0;
    for (auto& xn : p.x) {
      worst = std::max(worst, circle_distance(y, xn));
      y = frac(2 * y);
    }
    real_fail += !(worst <= eps && s.deviation == worst);
  }
  o.require(real_fail == 0, std::to_string(real_fail) + " doubling pseudo-orbits not shadowed");
  double t = seconds_since(t0);
  o.require(t < 20, "runtime " + std::to_string(t) + " s");
  if (o.ok) o.note << "10^4 shift and 10^3 doubling pseudo-orbits shadowed in " << t << " s";
  return o;
}

Outcome density() {
  Outcome o;
  auto p = density_profile(IndexSet::geometric(4, 1, 2));
  o.require(p.exact && p.B_lower == 0 && p.d_lower == Rational(1, 3) && p.d_upper == Rational(2, 3) && p.B_upper == 1,
            "exact profile");
  const std::uint64_t N = std::uint64_t(1) << 20;
  std::vector<char> in(N, 0);
  for (std::uint64_t b = 1; b < N; b *= 4)
    for (std::uint64_t i = b; i < std::min(2 * b, N); ++i) in[i] = 1;
  std::vector<std::uint64_t> pre(N + 1, 0);
  for (std::uint64_t i = 0; i < N; ++i) pre[i + 1] = pre[i] + in[i];
  double lo = 1, hi = 0;
  for (int j = 8; j <= 10; ++j)
    for (std::uint64_t M : {std::uint64_t(1) << (2 * j), std::uint64_t(2) << (2 * j)})
      if (M <= N) {
        double r = double(pre[M]) / double(M);
        lo = std::min(lo, r), hi = std::max(hi, r);
      }
  const std::uint64_t L = 1 << 10;
  double wlo = 1, whi = 0;
  for (std::uint64_t i = 0; i + L <= N; ++i) {
    double r = double(pre[i + L] - pre[i]) / double(L);
    wlo = std::min(wlo, r), whi = std::max(whi, r);
  }
  o.require(std::abs(lo - 1.0 / 3) <= 1e-3 && std::abs(hi - 2.0 / 3) <= 1e-3, "prefix natural densities");
  o.require(wlo <= 1e-3 && whi >= 1 - 1e-3, "prefix window densities");
  if (o.ok) o.note << "exact (0, 1/3, 2/3, 1); prefix " << lo << ", " << hi << ", windows " << wlo << ", " << whi;
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  const std::string cli = OMEGA_CLI;
  // artifacts go to a scratch directory so runs leave no files behind
  const auto work = std::filesystem::temp_directory_path() / "omega_acceptance";
  std::filesystem::create_directories(work);
  std::filesystem::current_path(work);
  {
    ShiftPseudoOrbit p;
    p.k = 2;
    p.points = {parse_word("0110"), parse_word("1101"), parse_word("1010")};
    std::ofstream("shift_orbit.json") << to_json(p).dump(2);
    RealPseudoOrbit q;
    q.delta = pow2(-8);
    q.x = {Rational(1, 3), Rational(2, 3), Rational(1, 3), Rational(171, 256)};
    std::ofstream("doubling_orbit.json") << to_json(q).dump(2);
  }
  if (std::system((cli + " realize --case 4 --seed 3 --out det_witness.json").c_str()) != 0) {
    o.require(false, "realize failed");
    return o;
  }
  const std::vector<std::string> runs = {
      "realize --case \"2'\" --mode nonrecurrent",
      "classify --in det_witness.json",
      "omega --in det_witness.json",
      "verify --in det_witness.json",
      "synth --vertex periodic:0 --vertex bernoulli:1/2,1/2",
      "density --pattern geometric:4:1:2",
      "density --schedule det_witness.json --cylinder 0 --horizon 4096",
      "entropy --sft golden",
      "entropy --horseshoe bernoulli:0.7,0.3",
      "katok --measure bernoulli:0.9,0.1 --format csv",
      "level --a 0.25",
      "irregular --phi 1_[1]",
      "shadow --in shift_orbit.json",
      "shadow --in doubling_orbit.json --epsilon 1/32",
      "code --x 1/3 --n 24",
      "report --schedule det_witness.json --measure bernoulli:0.9,0.1 --horizon 65536",
      "report --format csv --schedule det_witness.json --horizon 65536",
  };
  int i = 0;
  for (auto& r : runs) {
    std::string a = "det_" + std::to_string(i) + "_a.out", b = "det_" + std::to_string(i) + "_b.out";
    int ra = std::system((cli + " " + r + " --seed 5 --out " + a).c_str());
    int rb = std::system((cli + " " + r + " --seed 5 --out " + b).c_str());
    o.require(ra == 0 && rb == 0, "'" + r + "' exited nonzero");
    std::string ta = slurp(a), tb = slurp(b);
    o.require(!ta.empty() && ta == tb, "'" + r + "' differs between runs");
    ++i;
  }
  if (o.ok) o.note << runs.size() << " subcommand invocations byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"twelve-case realization", twelve_cases}, {"chain invariant", chain_invariant}, {"SFT entropy", sft_entropies},
      {"Katok entropy", katok},                  {"saturated set", saturated_set},     {"horseshoe", horseshoe},
      {"irregular witness", irregular},          {"level sets", level_sets},           {"shadowing", shadowing},
      {"density", density},                      {"determinism", determinism},
  };
  int failed = 0, k = 1;
  for (auto& [name, fn] : checks) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    std::printf("%s criterion %d (%s): %s\n", o.ok ? "PASS" : "FAIL", k, name.c_str(), o.note.str().c_str());
    std::fflush(stdout);
    failed += !o.ok;
    ++k;
  }
  return failed == 0 ? 0 : 1;
}
