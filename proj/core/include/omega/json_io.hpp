#pragma once
#include <nlohmann/json.hpp>
#include <string>

#include "omega/birkhoff.hpp"
#include "omega/densities.hpp"
#include "omega/entropy.hpp"
#include "omega/limit_sets.hpp"
#include "omega/schedule.hpp"
#include "omega/shadowing.hpp"
#include "omega/synthesis.hpp"

namespace omega {

using Json = nlohmann::ordered_json;
constexpr int kJsonFormat = 1;

Json to_json(const Template& t);
Template template_from_json(const Json& j);
Json to_json(const SftDescr& s);
SftDescr sft_from_json(const Json& j);
Json to_json(const Atom& a);
Atom atom_from_json(const Json& j);
Json to_json(const MixedMeasure& m);
MixedMeasure mixed_from_json(const Json& j);
Json to_json(const MeasurePolyline& p);
MeasurePolyline polyline_from_json(const Json& j);
Json to_json(const BlockSchedule& s);
BlockSchedule schedule_from_json(const Json& j);
Json to_json(const IndexSet& s);
IndexSet index_set_from_json(const Json& j);
Json to_json(const DensityProfile& d);
Json to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j);
Json to_json(const SubshiftDescr& x);
SubshiftDescr subshift_from_json(const Json& j);
Json to_json(const OmegaReport& r);
OmegaReport omega_report_from_json(const Json& j);
Json to_json(const VfReport& v);
VfReport vf_report_from_json(const Json& j);
Json to_json(const EntropyEstimate& e);
EntropyEstimate entropy_from_json(const Json& j);
Json to_json(const Recurrence& r);
Recurrence recurrence_from_json(const Json& j);
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);
Json to_json(const BirkhoffReport& r);
Json to_json(const LevelEntropy& l);
Json to_json(const ShiftPseudoOrbit& p);
ShiftPseudoOrbit shift_pseudo_orbit_from_json(const Json& j);
Json to_json(const RealPseudoOrbit& p);
RealPseudoOrbit real_pseudo_orbit_from_json(const Json& j);
Json to_json(const std::vector<CheckResult>& checks);

Json read_json_file(const std::string& path);
// writes dump(2) plus a trailing newline
void write_text_file(const std::string& path, const std::string& text);

}  // namespace omega
