#include "omega/synthesis.hpp"

#include <algorithm>
#include <cmath>

#include "omega/error.hpp"

namespace omega {

namespace {

Word sample_markov(const MarkovMeasure& mu, std::uint64_t n, Rng& rng) {
  Word w;
  w.reserve(n);
  auto draw = [&](auto&& prob) {
    double u = rng.uniform(), acc = 0;
    int last = -1;
    for (int j = 0; j < mu.m(); ++j) {
      double p = prob(j);
      if (p <= 0) continue;
      last = j;
      acc += p;
      if (u < acc) return j;
    }
    return last;
  };
  int s = draw([&](int j) { return mu.pi()[j]; });
  w.push_back(Symbol(s));
  while (w.size() < n) {
    s = draw([&](int j) { return mu.p(s, j); });
    w.push_back(Symbol(s));
  }
  return w;
}

}  // namespace

Word generic_word(const MarkovMeasure& mu, std::uint64_t n, double zeta, std::uint64_t seed, const GenericOptions& opt) {
  if (!(zeta > 0)) fail(ErrorCode::InvalidArgument, "zeta must be positive");
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be >= 1");
  const int m = mu.m();
  const int d = opt.depth > 0 ? opt.depth : rho_depth(m, opt.J);
  if (d > kMaxCylinderDepth) fail(ErrorCode::DepthTooLarge, "cylinder depth too large");
  const auto target = cylinder_table(Atom(mu), d);
  Rng rng(derive_seed(seed, {0x67656eULL, n}));
  for (int t = 0; t < opt.retries; ++t) {
    Word w = sample_markov(mu, n, rng);
    if (opt.periodic && mu.p(w.back(), w.front()) <= 0) continue;
    if (w.size() < std::uint64_t(d)) {
      // too short for a depth-d table; accept only exact agreement at depth 1
      if (weak_star_distance(empirical_measure(w, 1, m), cylinder_table(Atom(mu), 1), m).value <= zeta) return w;
      continue;
    }
    if (weak_star_distance(empirical_measure(w, d, m), target, opt.J).value <= zeta) return w;
  }
  fail(ErrorCode::GenericityFailure,
       "no " + std::to_string(zeta) + "-generic word of length " + std::to_string(n) + " after retries");
}

void validate_config(const SynthesisConfig& cfg) {
  const SftDescr& lam = cfg.lambda;
  if (lam.kind() != SftDescr::Kind::Matrix) fail(ErrorCode::InvalidArgument, "lambda must be a memory-1 SFT");
  if (!lam.irreducible()) fail(ErrorCode::NotTransitive, "lambda is not transitive");
  if (cfg.target.vertices.empty()) fail(ErrorCode::InvalidArgument, "empty target");
  if (!(cfg.zeta > 0) || !(cfg.eta > 0)) fail(ErrorCode::InvalidArgument, "zeta and eta must be positive");
  for (auto& v : cfg.target.vertices) {
    v.validate();
    if (v.m != lam.m()) fail(ErrorCode::AlphabetMismatch, "target measure alphabet differs from lambda");
    if (!graph_includes(v.support(), lam.graph()))
      fail(ErrorCode::AmbientViolation, "target measure not supported on lambda");
  }
  cfg.n.validate();
  cfg.N.validate();
  const Template T = cfg.n * cfg.N;
  const GrowthClass past = progression_sum(T, 1, 1).cls;
  // n_k / sum_{j<k} N_j n_j -> 0
  if (!(growth_class(cfg.n) < past)) fail(ErrorCode::ConfigViolatesGrowth, "block length not negligible against the past");
  // N_k n_k / sum_{j<k} N_j n_j -> infinity
  if (!(growth_class(T) > past)) fail(ErrorCode::ConfigViolatesGrowth, "stage mass does not dominate the past");
  if (growth_class(cfg.n) <= GrowthClass{0, 1, 0}) fail(ErrorCode::ConfigViolatesGrowth, "block lengths must grow");
}

std::vector<MixedMeasure> phase_vertices(const MeasurePolyline& K) {
  std::vector<MixedMeasure> out = K.vertices;
  if (!K.closed && out.size() > 2)
    for (size_t i = out.size() - 2; i >= 1; --i) out.push_back(K.vertices[i]);
  return out;
}

BlockSchedule build_saturated_schedule(const SynthesisConfig& cfg) {
  validate_config(cfg);
  BlockSchedule s;
  s.ambient = cfg.ambient ? *cfg.ambient : cfg.lambda;
  s.lambda = cfg.lambda;
  for (auto& v : phase_vertices(cfg.target)) s.phases.push_back({v, cfg.n, cfg.N});
  s.enumerate = cfg.enumerate;
  s.seed = cfg.seed;
  s.kappa = cfg.kappa;
  s.check_terms = cfg.check_terms;
  s.validate();
  return s;
}

StageTotals stage_totals(const SynthesisConfig& cfg, int stages) {
  StageTotals t;
  long double M = 0;
  for (int s = 0; s < stages; ++s) {
    long double n = cfg.n.eval_ld(s), N = cfg.N.eval_ld(s);
    M += n * N;
    t.M.push_back(M);
    t.last.push_back(n * N);
    t.block.push_back(n);
  }
  return t;
}

std::string mode_name(RecurrenceMode m) {
  return m == RecurrenceMode::Nonrecurrent ? "nonrecurrent" : "recurrent_nontransitive";
}

RecurrenceMode parse_mode(const std::string& s) {
  if (s == "nonrecurrent") return RecurrenceMode::Nonrecurrent;
  if (s == "recurrent_nontransitive") return RecurrenceMode::RecurrentNontransitive;
  fail(ErrorCode::InvalidArgument, "unknown recurrence mode '" + s + "'");
}

SynthesisConfig case_config(const CaseLabel& L, const RealizeOptions& opt) {
  if (L.index < 1 || L.index > 6) fail(ErrorCode::InvalidArgument, "case index must be 1..6");
  if (opt.m < 3) fail(ErrorCode::AmbientTooSmall, "ambient alphabet needs at least 3 symbols");
  if (L.primed && opt.mode == RecurrenceMode::RecurrentNontransitive)
    fail(ErrorCode::InvalidArgument, "recurrent_nontransitive mode realizes unprimed labels only");
  const int m = opt.m;
  auto atom = [&](const Atom& a) { return MixedMeasure::of(a); };
  const MixedMeasure d0 = atom(PeriodicMeasure{m, {0}});
  const MixedMeasure d1 = atom(PeriodicMeasure{m, {1}});
  const MixedMeasure full = atom(MarkovMeasure::bernoulli(m, {{0, 0.5}, {1, 0.5}}));
  std::vector<double> gm(m * m, 0.0);
  gm[0] = gm[1] = 0.5;
  gm[m] = 1;
  for (int i = 2; i < m; ++i) gm[i * m] = 1;
  const MixedMeasure golden = atom(MarkovMeasure::from_matrix(m, gm));

  SynthesisConfig cfg;
  cfg.lambda = SftDescr::full_on(m, {0, 1});
  cfg.ambient = SftDescr::full(m);
  cfg.eta = opt.eta;
  cfg.seed = opt.seed;
  auto& V = cfg.target.vertices;
  switch (L.index) {
    case 1: V = {full}; break;
    case 2: V = {golden}; cfg.enumerate = true; break;
    case 3: V = {d0, full, d1}; break;
    case 4: V = {d0, full}; break;
    case 5: V = {d0, d1}; cfg.enumerate = true; break;
    case 6: V = {d0, combine({{Rational(1, 2), d0}, {Rational(1, 2), d1}})}; cfg.enumerate = true; break;
  }
  return cfg;
}

CaseWitness realize_case(const CaseLabel& L, const RealizeOptions& opt) {
  CaseWitness w;
  w.config = case_config(L, opt);
  w.schedule = build_saturated_schedule(w.config);
  auto& s = w.schedule;
  const Symbol marker = 2;
  if (L.primed) s.marker = marker;
  if (opt.mode == RecurrenceMode::Nonrecurrent) {
    // a symbol never seen again; with a marker on three letters, the word "22"
    if (!L.primed) s.prefix = {2};
    else if (opt.m == 3) s.prefix = {2, 2};
    else s.prefix = {3};
  }
  s.validate();

  auto& c = w.certificate;
  c.claimed = L;
  c.mode = opt.mode;
  c.unique_prefix = s.prefix;
  auto cls = classify_case(s, opt.depth);
  c.report = cls.report;
  c.recurrence = cls.recurrence;
  c.vf = vf_limits(s, 2);
  c.target = w.config.target;
  c.J = opt.J;
  c.vf_distance = hausdorff_polylines(c.vf.polyline, c.target, opt.J);
  c.entropy = family_entropy_bound(w.config);
  return w;
}

std::vector<CheckResult> verify_certificate(const BlockSchedule& s, const Certificate& c) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool ok, std::string detail = {}) { out.push_back({std::move(name), ok, std::move(detail)}); };

  OmegaReport r = statistical_omegas(s, c.report.depth);
  add("omega_f", subshift_equal(r.omega_f, c.report.omega_f));
  add("omega_B_lower", subshift_equal(r.omega_Blower, c.report.omega_Blower));
  add("omega_d_lower", subshift_equal(r.omega_dlower, c.report.omega_dlower));
  add("omega_d_upper", subshift_equal(r.omega_dupper, c.report.omega_dupper));
  add("omega_B_upper", subshift_equal(r.omega_Bupper, c.report.omega_Bupper));
  add("chain_inclusions", chain_inclusions_hold(r));
  try {
    CaseLabel got = label_from_report(r);
    add("case_label", got == c.claimed, "recomputed " + got.str() + ", claimed " + c.claimed.str());
  } catch (const Error& e) {
    add("case_label", false, e.what());
  }
  Recurrence rec = check_recurrence(s, r.omega_f, std::max(c.recurrence.horizon, 1));
  const bool want = c.mode == RecurrenceMode::Nonrecurrent;
  add("recurrence", rec.nonrecurrent == want && rec.nonrecurrent == c.recurrence.nonrecurrent,
      rec.nonrecurrent ? "witness " + to_string(rec.witness) : "all prefixes in L(omega_f)");
  if (want) {
    Word x = schedule_prefix(s, c.unique_prefix.size());
    add("unique_prefix", !c.unique_prefix.empty() && x == c.unique_prefix && !r.omega_f.accepts(c.unique_prefix));
  }
  VfReport vf = vf_limits(s, c.vf.depth);
  double d = hausdorff_polylines(vf.polyline, c.target, c.J);
  add("vf_distance", std::abs(d - c.vf_distance) <= 1e-9 && d <= 1e-6, "rho distance " + std::to_string(d));

  SynthesisConfig cfg;
  cfg.target = c.target;
  cfg.lambda = s.bridge_space();
  cfg.ambient = s.ambient;
  cfg.n = s.phases.front().n;
  cfg.N = s.phases.front().N;
  cfg.enumerate = s.enumerate;
  cfg.seed = s.seed;
  auto it = c.entropy.details.find("eta");
  auto iz = c.entropy.details.find("zeta");
  if (it == c.entropy.details.end() || iz == c.entropy.details.end()) {
    add("entropy_bound", false, "missing slack parameters");
  } else {
    cfg.eta = it->second;
    cfg.zeta = iz->second;
    try {
      auto e = family_entropy_bound(cfg);
      add("entropy_bound", std::abs(e.value - c.entropy.value) <= 1e-12, "bound " + std::to_string(e.value));
    } catch (const Error& e) {
      add("entropy_bound", false, e.what());
    }
  }
  return out;
}

BlockSchedule omega_realizer(const SftDescr& A, const SftDescr& ambient, std::uint64_t seed) {
  if (ambient.kind() != SftDescr::Kind::Matrix || A.kind() != SftDescr::Kind::Matrix)
    fail(ErrorCode::InvalidArgument, "realizer needs memory-1 SFTs");
  if (!ambient.irreducible()) fail(ErrorCode::NotTransitive, "ambient is not transitive");
  if (A.symbols().empty()) fail(ErrorCode::InvalidArgument, "A is empty");
  if (!graph_includes(A.graph(), ambient.graph())) fail(ErrorCode::AmbientViolation, "A is not inside the ambient space");
  if (graph_includes(ambient.graph(), A.graph())) fail(ErrorCode::NotProperSubset, "A equals the ambient space");
  BlockSchedule s;
  s.ambient = ambient;
  s.realizer = A;
  s.seed = seed;
  s.validate();
  return s;
}

}  // namespace omega
