#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "omega/birkhoff.hpp"
#include "omega/densities.hpp"
#include "omega/entropy.hpp"
#include "omega/error.hpp"
#include "omega/horseshoe.hpp"
#include "omega/json_io.hpp"
#include "omega/limit_sets.hpp"
#include "omega/report.hpp"
#include "omega/shadowing.hpp"
#include "omega/synthesis.hpp"

using namespace omega;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  int depth = 3;
  int rho_terms = 16;
  std::uint64_t horizon = 0;
  std::string out;
  std::string format = "json";
};

// failures of a certificate or of a claimed property
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// "bernoulli:p0,p1,...", "markov:r0;r1;..." (rows comma separated), "periodic:w"
Atom parse_measure(const std::string& desc, int m) {
  auto colon = desc.find(':');
  if (colon == std::string::npos) fail(ErrorCode::InvalidArgument, "measure description needs 'type:data'");
  std::string type = desc.substr(0, colon), data = desc.substr(colon + 1);
  if (type == "bernoulli") {
    std::vector<double> p;
    for (auto& x : split(data, ',')) p.push_back(to_double(parse_rational(x)));
    if (m == 0) m = int(p.size());
    if (int(p.size()) > m) fail(ErrorCode::AlphabetMismatch, "more probabilities than symbols");
    std::vector<std::pair<Symbol, double>> pairs;
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] > 0) pairs.push_back({Symbol(i), p[i]});
    return MarkovMeasure::bernoulli(m, pairs);
  }
  if (type == "markov") {
    auto rows = split(data, ';');
    std::vector<double> P;
    for (auto& r : rows)
      for (auto& x : split(r, ',')) P.push_back(to_double(parse_rational(x)));
    return MarkovMeasure::from_matrix(int(rows.size()), P);
  }
  if (type == "periodic") {
    Word w = parse_word(data);
    int mm = m;
    for (auto s : w) mm = std::max(mm, int(s) + 1);
    return PeriodicMeasure{mm, w};
  }
  fail(ErrorCode::InvalidArgument, "unknown measure type '" + type + "'");
}

MarkovMeasure parse_markov(const std::string& desc) {
  auto a = parse_measure(desc, 0);
  if (auto* mk = std::get_if<MarkovMeasure>(&a)) return *mk;
  auto& p = std::get<PeriodicMeasure>(a);
  if (p.w.size() != 1) fail(ErrorCode::InvalidArgument, "only fixed points convert to Markov measures");
  int m = std::max(p.m, 2);
  return MarkovMeasure::bernoulli(m, {{p.w[0], 1.0}});
}

// "full:m", "golden", "matrix:11,10", "on:m:symbols" or a JSON file path
SftDescr parse_sft(const std::string& desc) {
  if (desc == "golden") return SftDescr::from_matrix(2, {1, 1, 1, 0});
  if (desc.rfind("full:", 0) == 0) return SftDescr::full(std::stoi(desc.substr(5)));
  if (desc.rfind("on:", 0) == 0) {
    auto parts = split(desc.substr(3), ':');
    if (parts.size() != 2) fail(ErrorCode::InvalidArgument, "use on:m:symbols");
    Word w = parse_word(parts[1]);
    return SftDescr::full_on(std::stoi(parts[0]), std::vector<Symbol>(w.begin(), w.end()));
  }
  if (desc.rfind("matrix:", 0) == 0) {
    auto rows = split(desc.substr(7), ',');
    std::vector<std::uint8_t> A;
    for (auto& r : rows) {
      if (r.size() != rows.size()) fail(ErrorCode::InvalidArgument, "matrix must be square");
      for (char c : r) A.push_back(c == '1');
    }
    return SftDescr::from_matrix(int(rows.size()), A);
  }
  return sft_from_json(read_json_file(desc));
}

// "periodic:P:r1,r2", "geometric:b:alpha:beta", "sparse:c:a:b:e" or a JSON file path
IndexSet parse_index_set(const std::string& desc) {
  auto parts = split(desc, ':');
  auto nums = [](const std::string& s) {
    std::vector<std::uint64_t> v;
    for (auto& x : split(s, ','))
      if (!x.empty()) v.push_back(std::stoull(x));
    return v;
  };
  if (parts[0] == "periodic" && parts.size() >= 3) return IndexSet::periodic(std::stoull(parts[1]), nums(parts[2]));
  if (parts[0] == "geometric" && parts.size() == 4)
    return IndexSet::geometric(std::stoll(parts[1]), parse_rational(parts[2]), parse_rational(parts[3]));
  if (parts[0] == "sparse" && parts.size() == 5)
    return IndexSet::sparse(Template{std::stoll(parts[1]), std::stoi(parts[2]), std::stoll(parts[3]), std::stoi(parts[4])});
  return index_set_from_json(read_json_file(desc));
}

// accepts a bare schedule or a file holding {"schedule": ...}
Json load_witness(const std::string& path) { return read_json_file(path); }
BlockSchedule schedule_of(const Json& j) { return schedule_from_json(j.contains("schedule") ? j.at("schedule") : j); }

void flatten_csv(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) flatten_csv(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) flatten_csv(j[i], path + "." + std::to_string(i), out);
  } else {
    out += path + "," + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

void emit(const Globals& g, const Json& j, const std::string& csv = {}) {
  std::string text;
  if (g.format == "csv") {
    if (!csv.empty()) text = csv;
    else {
      text = "key,value\n";
      flatten_csv(j, "", text);
    }
  } else {
    text = j.dump(2) + "\n";
  }
  if (g.out.empty()) std::cout << text;
  else write_text_file(g.out, text);
}

std::string series_csv(const std::string& name, const std::vector<std::pair<std::uint64_t, double>>& s) {
  ReportResults r;
  r.birkhoff.push_back({name, s});
  return report_csv(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistical omega-limit sets of symbolic orbits: realize, classify and certify"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "PRNG seed")->capture_default_str();
  app.add_option("--depth", g.depth, "cylinder depth")->capture_default_str();
  app.add_option("--rho-terms", g.rho_terms, "terms J of the weak-star metric")->capture_default_str();
  app.add_option("--horizon", g.horizon, "prefix length for sampled quantities");
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  // realize
  auto* realize = app.add_subcommand("realize", "synthesize a witness for a case label");
  std::string case_label, mode = "nonrecurrent";
  int ambient_m = 3;
  double eta = 0.05;
  realize->add_option("--case", case_label, "1..6 or 1'..6'")->required();
  realize->add_option("--mode", mode, "nonrecurrent or recurrent_nontransitive")->capture_default_str();
  realize->add_option("--m", ambient_m, "ambient alphabet size")->capture_default_str();
  realize->add_option("--eta", eta, "entropy slack")->capture_default_str();

  // classify / omega / verify
  std::string in;
  auto* classify = app.add_subcommand("classify", "case label of a schedule");
  classify->add_option("--in", in, "schedule or witness JSON")->required();
  auto* omega_cmd = app.add_subcommand("omega", "statistical omega-limit sets of a schedule");
  omega_cmd->add_option("--in", in, "schedule or witness JSON")->required();
  auto* verify = app.add_subcommand("verify", "re-check a witness certificate");
  verify->add_option("--in", in, "witness JSON from realize")->required();

  // synth
  auto* synth = app.add_subcommand("synth", "saturated schedule for a target polyline");
  std::vector<std::string> vertices;
  std::string lambda_spec = "full:2";
  bool enumerate = false, closed = false;
  synth->add_option("--vertex", vertices, "measure description per vertex, in order")->required();
  synth->add_option("--lambda", lambda_spec, "bridge space SFT")->capture_default_str();
  synth->add_option("--eta", eta, "entropy slack")->capture_default_str();
  synth->add_flag("--enumerate", enumerate, "insert the zero-density enumeration of lambda");
  synth->add_flag("--closed", closed, "close the polyline");

  // density
  auto* density = app.add_subcommand("density", "Banach and natural densities of an index set");
  std::string pattern, sched_in, cyl;
  density->add_option("--pattern", pattern, "periodic:P:r,.. | geometric:b:alpha:beta | sparse:c:a:b:e | file");
  density->add_option("--schedule", sched_in, "schedule JSON (visit times of --cylinder)");
  density->add_option("--cylinder", cyl, "cylinder word for visit times");

  // entropy
  auto* entropy = app.add_subcommand("entropy", "topological entropy of an SFT or entropy-dense horseshoe");
  std::string sft_spec = "golden", horse;
  double zeta = 0.1;
  int count_n = 20;
  entropy->add_option("--sft", sft_spec, "full:m | golden | matrix:rows | file")->capture_default_str();
  entropy->add_option("--n", count_n, "word length for counting")->capture_default_str();
  entropy->add_option("--horseshoe", horse, "measure description: build the entropy-dense horseshoe");
  entropy->add_option("--eta", eta, "horseshoe slack")->capture_default_str();
  entropy->add_option("--zeta", zeta, "horseshoe radius")->capture_default_str();

  // katok
  auto* katok = app.add_subcommand("katok", "Katok entropy estimate by cylinder counting");
  std::string measure = "bernoulli:1/2,1/2";
  double gamma = 0.5;
  int n_max = 24;
  katok->add_option("--measure", measure, "bernoulli:p,.. | markov:rows;.. | periodic:w")->capture_default_str();
  katok->add_option("--gamma", gamma, "mass threshold")->capture_default_str();
  katok->add_option("--n", n_max, "largest word length")->capture_default_str();

  // level / irregular
  std::string phi = "1_[1]";
  int phi_m = 2;
  double level_a = 0.5;
  auto* level = app.add_subcommand("level", "level-set entropy t_a");
  level->add_option("--phi", phi, "1_[w] | const:c | d:w0,w1,..")->capture_default_str();
  level->add_option("--m", phi_m, "alphabet size")->capture_default_str();
  level->add_option("--a", level_a, "level")->capture_default_str();
  auto* irregular = app.add_subcommand("irregular", "nonrecurrent phi-irregular witness");
  irregular->add_option("--phi", phi, "observable")->capture_default_str();
  irregular->add_option("--m", phi_m, "alphabet size")->capture_default_str();
  irregular->add_option("--eta", eta, "entropy slack")->capture_default_str();

  // shadow / code
  auto* shadow = app.add_subcommand("shadow", "shadow a shift or doubling-map pseudo-orbit");
  std::string eps_s = "1/32";
  shadow->add_option("--in", in, "pseudo-orbit JSON")->required();
  shadow->add_option("--epsilon", eps_s, "target for the doubling map")->capture_default_str();
  auto* code = app.add_subcommand("code", "binary itinerary under the doubling map");
  std::string x_s;
  int code_n = 16;
  code->add_option("--x", x_s, "point in [0,1) as p/q or decimal")->required();
  code->add_option("--n", code_n, "itinerary length")->capture_default_str();

  // report
  auto* report = app.add_subcommand("report", "combined JSON/CSV report for plotting");
  std::vector<std::string> schedules, measures;
  report->add_option("--schedule", schedules, "schedule files for Birkhoff series");
  report->add_option("--measure", measures, "measure specs for Katok slopes");
  report->add_option("--phi", phi, "observable for Birkhoff series")->capture_default_str();
  report->add_option("--m", phi_m, "alphabet size of phi")->capture_default_str();
  report->add_option("--n", n_max, "Katok word length")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : 2;
  }

  try {
    if (*realize) {
      RealizeOptions opt;
      opt.m = ambient_m;
      opt.mode = parse_mode(mode);
      opt.seed = g.seed;
      opt.depth = g.depth;
      opt.J = g.rho_terms;
      opt.eta = eta;
      auto w = realize_case(CaseLabel::parse(case_label), opt);
      Json j;
      j["format"] = kJsonFormat;
      j["schedule"] = to_json(w.schedule);
      j["certificate"] = to_json(w.certificate);
      emit(g, j);
      const auto& c = w.certificate;
      if (!c.report.label || !(*c.report.label == c.claimed))
        throw CheckFailure("classification does not match the claimed label");
      if (c.recurrence.nonrecurrent != (opt.mode == RecurrenceMode::Nonrecurrent))
        throw CheckFailure("recurrence does not match the mode");
      return 0;
    }
    if (*classify) {
      auto s = schedule_of(load_witness(in));
      auto c = classify_case(s, g.depth);
      Json j;
      j["format"] = kJsonFormat;
      j["case"] = c.label.str();
      j["nonrecurrent"] = c.recurrence.nonrecurrent;
      j["report"] = to_json(c.report);
      emit(g, j);
      return 0;
    }
    if (*omega_cmd) {
      auto s = schedule_of(load_witness(in));
      Json j;
      j["format"] = kJsonFormat;
      auto r = statistical_omegas(s, g.depth);
      j["report"] = to_json(r);
      j["chain_inclusions_hold"] = chain_inclusions_hold(r);
      j["vf"] = to_json(vf_limits(s, 2));
      emit(g, j);
      return 0;
    }
    if (*verify) {
      auto j = load_witness(in);
      auto s = schedule_of(j);
      auto checks = verify_certificate(s, certificate_from_json(j.at("certificate")));
      bool ok = true;
      for (auto& c : checks) ok = ok && c.ok;
      Json out;
      out["format"] = kJsonFormat;
      out["ok"] = ok;
      out["checks"] = to_json(checks);
      emit(g, out);
      return ok ? 0 : 1;
    }
    if (*synth) {
      SynthesisConfig cfg;
      cfg.lambda = parse_sft(lambda_spec);
      for (auto& v : vertices) cfg.target.vertices.push_back(MixedMeasure::of(parse_measure(v, cfg.lambda.m())));
      cfg.target.closed = closed;
      cfg.eta = eta;
      cfg.seed = g.seed;
      cfg.enumerate = enumerate;
      auto s = build_saturated_schedule(cfg);
      auto vf = vf_limits(s, 2);
      Json j;
      j["format"] = kJsonFormat;
      j["schedule"] = to_json(s);
      j["vf"] = to_json(vf);
      j["vf_distance"] = hausdorff_polylines(vf.polyline, cfg.target, g.rho_terms);
      j["entropy_bound"] = to_json(family_entropy_bound(cfg));
      emit(g, j);
      return 0;
    }
    if (*density) {
      IndexSet S;
      if (!pattern.empty()) S = parse_index_set(pattern);
      else if (!sched_in.empty() && !cyl.empty())
        S = visit_times(schedule_of(load_witness(sched_in)), parse_word(cyl), g.horizon ? g.horizon : 1 << 16);
      else fail(ErrorCode::InvalidArgument, "density needs --pattern or --schedule with --cylinder");
      Json j;
      j["format"] = kJsonFormat;
      j["set"] = to_json(S);
      j["profile"] = to_json(density_profile(S));
      auto syn = is_syndetic(S);
      j["syndetic"] = syn.syndetic;
      if (syn.gap) j["gap"] = *syn.gap;
      emit(g, j);
      return 0;
    }
    if (*entropy) {
      Json j;
      j["format"] = kJsonFormat;
      if (!horse.empty()) {
        auto hs = build_horseshoe(parse_markov(horse), eta, zeta);
        j["horseshoe"] = to_json(hs.sft);
        j["n"] = hs.n;
        j["count"] = hs.count.str();
        j["entropy"] = to_json(sft_entropy(hs.sft));
      } else {
        auto sft = parse_sft(sft_spec);
        j["sft"] = to_json(sft);
        j["entropy"] = to_json(sft_entropy(sft));
        j["counting"] = {{"n", count_n}, {"value", counting_entropy(sft, count_n)}};
      }
      emit(g, j);
      return 0;
    }
    if (*katok) {
      auto e = katok_entropy_estimate(parse_markov(measure), gamma, n_max, g.seed);
      Json j;
      j["format"] = kJsonFormat;
      j["estimate"] = to_json(e);
      ReportResults r;
      r.entropy.push_back({"katok", e});
      emit(g, j, report_csv(r));
      return 0;
    }
    if (*level) {
      auto l = level_entropy(Observable::parse(phi_m, phi), level_a, g.seed);
      Json j;
      j["format"] = kJsonFormat;
      j["a"] = level_a;
      j["level_entropy"] = to_json(l);
      emit(g, j);
      return 0;
    }
    if (*irregular) {
      auto w = irregular_witness(Observable::parse(phi_m, phi), eta, g.seed);
      Json j;
      j["format"] = kJsonFormat;
      j["schedule"] = to_json(w.schedule);
      j["birkhoff"] = to_json(w.report);
      j["entropy_bound"] = to_json(w.entropy);
      j["recurrence"] = to_json(w.recurrence);
      emit(g, j, series_csv("irregular", w.report.series));
      if (!(w.report.liminf < w.report.limsup) || !w.recurrence.nonrecurrent)
        throw CheckFailure("witness is not irregular and nonrecurrent");
      return 0;
    }
    if (*shadow) {
      auto j = read_json_file(in);
      Json out;
      out["format"] = kJsonFormat;
      if (j.is_object() && j.contains("delta")) {
        auto p = real_pseudo_orbit_from_json(j);
        auto s = shadow_doubling(p, parse_rational(eps_s));
        out["y"] = to_string(s.y);
        out["deviation"] = to_string(s.deviation);
        out["epsilon"] = eps_s;
      } else {
        auto p = shift_pseudo_orbit_from_json(j);
        auto s = shadow_shift(p);
        out["y"] = to_string(s.y);
        out["epsilon"] = to_string(s.epsilon);
        Rational bound = Rational(1) / (BigInt(1) << (std::max(p.k, 1) + 1));
        out["bound"] = to_string(bound);
        if (s.epsilon > bound) throw CheckFailure("shadow misses the bound");
      }
      emit(g, out);
      return 0;
    }
    if (*code) {
      Rational x = parse_rational(x_s);
      Json j;
      j["format"] = kJsonFormat;
      j["x"] = to_string(x);
      j["itinerary"] = to_string(doubling_coding(x, code_n));
      emit(g, j);
      return 0;
    }
    if (*report) {
      ReportResults r;
      const std::uint64_t horizon = g.horizon ? g.horizon : 1 << 20;
      for (auto& f : schedules) {
        auto s = schedule_of(load_witness(f));
        auto b = birkhoff_bounds(s, Observable::parse(phi_m, phi), horizon);
        r.records.push_back({f, to_json(b)});
        r.birkhoff.push_back({f, b.series});
      }
      for (auto& m : measures) r.entropy.push_back({m, katok_entropy_estimate(parse_markov(m), 0.5, n_max, g.seed)});
      std::string text = g.format == "csv" ? report_csv(r) : report_json(r);
      if (g.out.empty()) std::cout << text;
      else write_text_file(g.out, text);
      return 0;
    }
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::Io;
    return usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
