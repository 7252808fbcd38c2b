#include "omega/json_io.hpp"

#include <fstream>
#include <sstream>

#include "omega/error.hpp"
#include "omega/horseshoe.hpp"

namespace omega {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::InvalidArgument, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("bad field '") + key + "': " + e.what());
  }
}

Json rational(const Rational& r) { return to_string(r); }
Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  return parse_rational(j.get<std::string>());
}

}  // namespace

Json to_json(const Template& t) { return Json{{"c", t.c}, {"a", t.a}, {"b", t.b}, {"e", t.e}}; }

Template template_from_json(const Json& j) {
  Template t;
  t.c = j.value("c", std::int64_t(1));
  t.a = j.value("a", 0);
  t.b = j.value("b", std::int64_t(1));
  t.e = j.value("e", 0);
  t.validate();
  return t;
}

Json to_json(const SftDescr& s) {
  Json j;
  j["m"] = s.m();
  if (s.kind() == SftDescr::Kind::Matrix) {
    j["kind"] = "matrix";
    Json rows = Json::array();
    for (int a = 0; a < s.m(); ++a) {
      std::string r;
      for (int b = 0; b < s.m(); ++b) r += s.matrix()[a * s.m() + b] ? '1' : '0';
      rows.push_back(r);
    }
    j["allowed"] = rows;
    return j;
  }
  j["kind"] = "blocks";
  const auto& b = s.blocks();
  j["n"] = b.block_length();
  j["source"] = b.kind();
  j["count"] = b.count().str();
  if (auto* tc = dynamic_cast<const TypeClassBlocks*>(&b)) {
    j["measure"] = to_json(Atom(tc->measure()));
    j["depth"] = tc->depth();
    j["radius"] = tc->radius();
  } else if (auto* ex = dynamic_cast<const ExplicitBlocks*>(&b)) {
    Json w = Json::array();
    for (auto& x : ex->words()) w.push_back(to_string(x));
    j["words"] = w;
  }
  return j;
}

SftDescr sft_from_json(const Json& j) {
  const int m = get<int>(j, "m");
  const std::string kind = j.value("kind", std::string("matrix"));
  if (kind == "matrix") {
    auto rows = get<std::vector<std::string>>(j, "allowed");
    if (int(rows.size()) != m) fail(ErrorCode::InvalidArgument, "allowed needs m rows");
    std::vector<std::uint8_t> A;
    for (auto& r : rows) {
      if (int(r.size()) != m) fail(ErrorCode::InvalidArgument, "allowed rows need m entries");
      for (char c : r) A.push_back(c == '1');
    }
    return SftDescr::from_matrix(m, A);
  }
  if (kind != "blocks") fail(ErrorCode::InvalidArgument, "unknown SFT kind '" + kind + "'");
  const std::string src = get<std::string>(j, "source");
  if (src == "explicit") {
    std::vector<Word> w;
    for (auto& s : get<std::vector<std::string>>(j, "words")) w.push_back(parse_word(s));
    return SftDescr::from_blocks(std::make_shared<ExplicitBlocks>(m, w));
  }
  if (src == "type_class") {
    auto a = atom_from_json(j.at("measure"));
    auto* mk = std::get_if<MarkovMeasure>(&a);
    if (!mk) fail(ErrorCode::InvalidArgument, "type_class blocks need a Markov measure");
    return SftDescr::from_blocks(
        std::make_shared<TypeClassBlocks>(*mk, get<int>(j, "n"), get<int>(j, "depth"), get<double>(j, "radius")));
  }
  fail(ErrorCode::InvalidArgument, "unknown block source '" + src + "'");
}

Json to_json(const Atom& a) {
  if (auto* mk = std::get_if<MarkovMeasure>(&a)) {
    Json rows = Json::array();
    for (int i = 0; i < mk->m(); ++i) {
      Json r = Json::array();
      for (int k = 0; k < mk->m(); ++k) r.push_back(mk->p(i, k));
      rows.push_back(r);
    }
    return Json{{"type", "markov"}, {"m", mk->m()}, {"P", rows}};
  }
  const auto& p = std::get<PeriodicMeasure>(a);
  return Json{{"type", "periodic"}, {"m", p.m}, {"w", to_string(p.w)}};
}

Atom atom_from_json(const Json& j) {
  const std::string type = get<std::string>(j, "type");
  const int m = get<int>(j, "m");
  if (type == "markov") {
    auto rows = get<std::vector<std::vector<double>>>(j, "P");
    if (int(rows.size()) != m) fail(ErrorCode::InvalidArgument, "P needs m rows");
    std::vector<double> P;
    for (auto& r : rows) {
      if (int(r.size()) != m) fail(ErrorCode::InvalidArgument, "P rows need m entries");
      P.insert(P.end(), r.begin(), r.end());
    }
    return MarkovMeasure::from_matrix(m, P);
  }
  if (type == "bernoulli") {
    auto p = get<std::vector<double>>(j, "p");
    std::vector<std::pair<Symbol, double>> pairs;
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] > 0) pairs.push_back({Symbol(i), p[i]});
    return MarkovMeasure::bernoulli(m, pairs);
  }
  if (type == "periodic") {
    PeriodicMeasure pm{m, parse_word(get<std::string>(j, "w"))};
    for (auto s : pm.w)
      if (s >= m) fail(ErrorCode::AlphabetMismatch, "periodic word outside alphabet");
    if (pm.w.empty()) fail(ErrorCode::InvalidArgument, "empty periodic word");
    return pm;
  }
  fail(ErrorCode::InvalidArgument, "unknown measure type '" + type + "'");
}

Json to_json(const MixedMeasure& mm) {
  Json parts = Json::array();
  for (auto& [w, a] : mm.parts) parts.push_back(Json{{"weight", rational(w)}, {"atom", to_json(a)}});
  return Json{{"m", mm.m}, {"parts", parts}};
}

MixedMeasure mixed_from_json(const Json& j) {
  if (j.contains("type")) return MixedMeasure::of(atom_from_json(j));
  MixedMeasure mm;
  mm.m = get<int>(j, "m");
  for (auto& p : j.at("parts")) mm.parts.push_back({rational_from(p.at("weight")), atom_from_json(p.at("atom"))});
  mm.validate();
  return mm;
}

Json to_json(const MeasurePolyline& p) {
  Json v = Json::array();
  for (auto& x : p.vertices) v.push_back(to_json(x));
  return Json{{"vertices", v}, {"closed", p.closed}};
}

MeasurePolyline polyline_from_json(const Json& j) {
  MeasurePolyline p;
  for (auto& v : j.at("vertices")) p.vertices.push_back(mixed_from_json(v));
  p.closed = j.value("closed", false);
  return p;
}

Json to_json(const BlockSchedule& s) {
  Json j;
  j["format"] = kJsonFormat;
  j["ambient"] = to_json(s.ambient);
  if (s.lambda) j["lambda"] = to_json(*s.lambda);
  j["prefix"] = to_string(s.prefix);
  Json ph = Json::array();
  for (auto& p : s.phases) ph.push_back(Json{{"gen", to_json(p.gen)}, {"n", to_json(p.n)}, {"N", to_json(p.N)}});
  j["phases"] = ph;
  j["enumerate"] = s.enumerate;
  if (s.marker) j["marker"] = int(*s.marker);
  if (s.realizer) j["realizer"] = to_json(*s.realizer);
  j["seed"] = s.seed;
  j["kappa"] = s.kappa;
  j["check_terms"] = s.check_terms;
  return j;
}

BlockSchedule schedule_from_json(const Json& j) {
  if (j.value("format", kJsonFormat) != kJsonFormat) fail(ErrorCode::InvalidArgument, "unsupported format version");
  BlockSchedule s;
  s.ambient = sft_from_json(j.at("ambient"));
  if (j.contains("lambda")) s.lambda = sft_from_json(j.at("lambda"));
  s.prefix = parse_word(j.value("prefix", std::string()));
  if (j.contains("phases"))
    for (auto& p : j.at("phases"))
      s.phases.push_back({mixed_from_json(p.at("gen")), template_from_json(p.at("n")), template_from_json(p.at("N"))});
  s.enumerate = j.value("enumerate", false);
  if (j.contains("marker")) s.marker = Symbol(get<int>(j, "marker"));
  if (j.contains("realizer")) s.realizer = sft_from_json(j.at("realizer"));
  s.seed = j.value("seed", std::uint64_t(0));
  s.kappa = j.value("kappa", 2.0);
  s.check_terms = j.value("check_terms", 8);
  s.validate();
  return s;
}

Json to_json(const IndexSet& s) {
  Json j;
  j["format"] = kJsonFormat;
  switch (s.kind) {
    case IndexSet::Kind::FinitePrefix:
      j["kind"] = "finite";
      j["indices"] = s.indices;
      j["horizon"] = s.horizon;
      break;
    case IndexSet::Kind::Periodic:
      j["kind"] = "periodic";
      j["period"] = s.period;
      j["residues"] = s.residues;
      j["added"] = s.added;
      j["removed"] = s.removed;
      break;
    case IndexSet::Kind::Geometric:
      j["kind"] = "geometric";
      j["base"] = s.base;
      j["alpha"] = rational(s.alpha);
      j["beta"] = rational(s.beta);
      break;
    case IndexSet::Kind::Sparse:
      j["kind"] = "sparse";
      j["points"] = to_json(s.points);
      break;
  }
  return j;
}

IndexSet index_set_from_json(const Json& j) {
  const std::string kind = get<std::string>(j, "kind");
  using V = std::vector<std::uint64_t>;
  if (kind == "finite") return IndexSet::finite(get<V>(j, "indices"), get<std::uint64_t>(j, "horizon"));
  if (kind == "periodic")
    return IndexSet::periodic(get<std::uint64_t>(j, "period"), get<V>(j, "residues"), j.value("added", V{}),
                              j.value("removed", V{}));
  if (kind == "geometric")
    return IndexSet::geometric(get<std::int64_t>(j, "base"), rational_from(j.at("alpha")), rational_from(j.at("beta")));
  if (kind == "sparse") return IndexSet::sparse(template_from_json(j.at("points")));
  fail(ErrorCode::InvalidArgument, "unknown index set kind '" + kind + "'");
}

Json to_json(const DensityProfile& d) {
  return Json{{"B_lower", rational(d.B_lower)},
              {"d_lower", rational(d.d_lower)},
              {"d_upper", rational(d.d_upper)},
              {"B_upper", rational(d.B_upper)},
              {"exact", d.exact}};
}

Json to_json(const LabeledGraph& g) {
  Json succ = Json::array();
  for (auto& s : g.succ) succ.push_back(s);
  return Json{{"labels", to_string(g.label)}, {"succ", succ}};
}

LabeledGraph graph_from_json(const Json& j) {
  LabeledGraph g;
  for (auto s : parse_word(get<std::string>(j, "labels"))) g.add_state(s);
  auto succ = get<std::vector<std::vector<int>>>(j, "succ");
  if (succ.size() != g.label.size()) fail(ErrorCode::InvalidArgument, "succ needs one list per state");
  for (size_t u = 0; u < succ.size(); ++u)
    for (int v : succ[u]) {
      if (v < 0 || v >= g.size()) fail(ErrorCode::InvalidArgument, "edge target out of range");
      g.add_edge(int(u), v);
    }
  return g;
}

Json to_json(const SubshiftDescr& x) {
  Json j;
  if (!x.label.empty()) j["label"] = x.label;
  j["empty"] = x.is_empty();
  j["core"] = to_json(x.core);
  Json tails = Json::array();
  for (auto& t : x.tails)
    tails.push_back(Json{{"left", to_json(t.left)},
                         {"exits", t.exits},
                         {"marker", int(t.marker)},
                         {"tail_space", to_json(t.tail_space)}});
  j["tails"] = tails;
  if (auto gens = x.orbit_generators()) {
    Json pts = Json::array();
    for (auto& [pre, per] : *gens) pts.push_back(Json::array({to_string(pre), to_string(per)}));
    j["orbits"] = pts;
  }
  return j;
}

SubshiftDescr subshift_from_json(const Json& j) {
  SubshiftDescr x;
  x.label = j.value("label", std::string());
  x.core = graph_from_json(j.at("core"));
  if (j.contains("tails"))
    for (auto& t : j.at("tails")) {
      MarkerTail mt;
      mt.left = graph_from_json(t.at("left"));
      mt.exits = get<std::vector<int>>(t, "exits");
      mt.marker = Symbol(get<int>(t, "marker"));
      mt.tail_space = sft_from_json(t.at("tail_space"));
      x.tails.push_back(mt);
    }
  return x;
}

Json to_json(const OmegaReport& r) {
  Json j;
  j["omega_f"] = to_json(r.omega_f);
  j["omega_B_lower"] = to_json(r.omega_Blower);
  j["omega_d_lower"] = to_json(r.omega_dlower);
  j["omega_d_upper"] = to_json(r.omega_dupper);
  j["omega_B_upper"] = to_json(r.omega_Bupper);
  if (r.label) j["case"] = r.label->str();
  j["syndetic_center_nonempty"] = r.syndetic_center_nonempty;
  j["omega_f_chain_transitive"] = r.omega_f_chain_transitive;
  j["depth"] = r.depth;
  return j;
}

OmegaReport omega_report_from_json(const Json& j) {
  OmegaReport r;
  r.omega_f = subshift_from_json(j.at("omega_f"));
  r.omega_Blower = subshift_from_json(j.at("omega_B_lower"));
  r.omega_dlower = subshift_from_json(j.at("omega_d_lower"));
  r.omega_dupper = subshift_from_json(j.at("omega_d_upper"));
  r.omega_Bupper = subshift_from_json(j.at("omega_B_upper"));
  if (j.contains("case")) r.label = CaseLabel::parse(get<std::string>(j, "case"));
  r.syndetic_center_nonempty = j.value("syndetic_center_nonempty", false);
  r.omega_f_chain_transitive = j.value("omega_f_chain_transitive", false);
  r.depth = j.value("depth", 3);
  return r;
}

Json to_json(const VfReport& v) {
  Json w = Json::array();
  for (auto& row : v.weights) {
    Json r = Json::array();
    for (auto& x : row) r.push_back(rational(x));
    w.push_back(r);
  }
  return Json{{"polyline", to_json(v.polyline)},
              {"is_singleton", v.is_singleton},
              {"vstar_is_full", v.vstar_is_full},
              {"depth", v.depth},
              {"checkpoint_weights", w}};
}

VfReport vf_report_from_json(const Json& j) {
  VfReport v;
  v.polyline = polyline_from_json(j.at("polyline"));
  v.is_singleton = j.value("is_singleton", false);
  v.vstar_is_full = j.value("vstar_is_full", false);
  v.depth = j.value("depth", 2);
  if (j.contains("checkpoint_weights"))
    for (auto& row : j.at("checkpoint_weights")) {
      std::vector<Rational> r;
      for (auto& x : row) r.push_back(rational_from(x));
      v.weights.push_back(r);
    }
  return v;
}

Json to_json(const EntropyEstimate& e) {
  Json j;
  j["value"] = e.value;
  j["unit"] = "nats";
  j["method"] = e.method;
  j["n"] = e.n;
  j["k"] = e.k;
  j["error_bound"] = e.error_bound;
  j["exact"] = e.exact;
  Json d = Json::object();
  for (auto& [k, v] : e.details) d[k] = v;
  j["details"] = d;
  if (!e.series.empty()) {
    Json s = Json::array();
    for (auto& [n, v] : e.series) s.push_back(Json::array({n, v}));
    j["series"] = s;
  }
  return j;
}

EntropyEstimate entropy_from_json(const Json& j) {
  EntropyEstimate e;
  e.value = get<double>(j, "value");
  e.method = j.value("method", std::string());
  e.n = j.value("n", 0);
  e.k = j.value("k", 0);
  e.error_bound = j.value("error_bound", 0.0);
  e.exact = j.value("exact", false);
  if (j.contains("details"))
    for (auto& [k, v] : j.at("details").items()) e.details[k] = v.get<double>();
  if (j.contains("series"))
    for (auto& p : j.at("series")) e.series.push_back({p.at(0).get<int>(), p.at(1).get<double>()});
  return e;
}

Json to_json(const Recurrence& r) {
  return Json{{"nonrecurrent", r.nonrecurrent}, {"witness", to_string(r.witness)}, {"horizon", r.horizon}};
}

Recurrence recurrence_from_json(const Json& j) {
  Recurrence r;
  r.nonrecurrent = get<bool>(j, "nonrecurrent");
  r.witness = parse_word(j.value("witness", std::string()));
  r.horizon = j.value("horizon", 64);
  return r;
}

Json to_json(const Certificate& c) {
  Json j;
  j["format"] = kJsonFormat;
  j["claimed"] = c.claimed.str();
  j["mode"] = mode_name(c.mode);
  j["unique_prefix"] = to_string(c.unique_prefix);
  j["recurrence"] = to_json(c.recurrence);
  j["report"] = to_json(c.report);
  j["vf"] = to_json(c.vf);
  j["target"] = to_json(c.target);
  j["rho_terms"] = c.J;
  j["vf_distance"] = c.vf_distance;
  j["entropy"] = to_json(c.entropy);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.claimed = CaseLabel::parse(get<std::string>(j, "claimed"));
  c.mode = parse_mode(get<std::string>(j, "mode"));
  c.unique_prefix = parse_word(j.value("unique_prefix", std::string()));
  c.recurrence = recurrence_from_json(j.at("recurrence"));
  c.report = omega_report_from_json(j.at("report"));
  c.vf = vf_report_from_json(j.at("vf"));
  c.target = polyline_from_json(j.at("target"));
  c.J = j.value("rho_terms", 8);
  c.vf_distance = get<double>(j, "vf_distance");
  c.entropy = entropy_from_json(j.at("entropy"));
  return c;
}

Json to_json(const BirkhoffReport& r) {
  Json s = Json::array();
  for (auto& [n, v] : r.series) s.push_back(Json::array({n, v}));
  return Json{{"liminf", r.liminf},
              {"limsup", r.limsup},
              {"L_phi", Json::array({r.L_phi.first, r.L_phi.second})},
              {"kind", kind_name(r.kind)},
              {"series", s}};
}

Json to_json(const LevelEntropy& l) {
  return Json{{"value", l.value}, {"unit", "nats"}, {"argmax", l.argmax}, {"boundary", l.boundary}, {"restarts", l.restarts}};
}

Json to_json(const ShiftPseudoOrbit& p) {
  Json pts = Json::array();
  for (auto& w : p.points) pts.push_back(to_string(w));
  return Json{{"k", p.k}, {"points", pts}};
}

ShiftPseudoOrbit shift_pseudo_orbit_from_json(const Json& j) {
  ShiftPseudoOrbit p;
  const Json& pts = j.is_array() ? j : j.at("points");
  p.k = j.is_array() ? 1 : j.value("k", 1);
  for (auto& w : pts) p.points.push_back(parse_word(w.get<std::string>()));
  return p;
}

Json to_json(const RealPseudoOrbit& p) {
  Json xs = Json::array();
  for (auto& x : p.x) xs.push_back(rational(x));
  return Json{{"delta", rational(p.delta)}, {"points", xs}};
}

RealPseudoOrbit real_pseudo_orbit_from_json(const Json& j) {
  RealPseudoOrbit p;
  p.delta = rational_from(j.at("delta"));
  for (auto& x : j.at("points")) p.x.push_back(rational_from(x));
  return p;
}

Json to_json(const std::vector<CheckResult>& checks) {
  Json a = Json::array();
  for (auto& c : checks) a.push_back(Json{{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return a;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Io, "cannot parse '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorCode::Io, "write failed for '" + path + "'");
}

}  // namespace omega
