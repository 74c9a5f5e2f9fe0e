#include "report.hpp"

#include <algorithm>

namespace gg {

namespace {
constexpr size_t kRenderedRepsLimit = 512;
}

void Report::add(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}
void Report::add(const std::string& key, unsigned long long value) {
  entries_.emplace_back(key, std::to_string(value));
}
void Report::add(const std::string& key, int value) {
  entries_.emplace_back(key, std::to_string(value));
}
void Report::add_flag(const std::string& key, bool value) {
  entries_.emplace_back(key, value ? "yes" : "no");
}
void Report::add_check(const std::string& name, bool passed) {
  entries_.emplace_back("check_" + name, passed ? "pass" : "fail");
  has_checks_ = true;
  if (!passed) all_passed_ = false;
}

bool Report::all_passed() const { return all_passed_; }

std::string Report::render_machine() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    out += k;
    out += ": ";
    out += v;
    out += '\n';
  }
  return out;
}

std::string Report::render_human() const {
  size_t width = 0;
  for (const auto& [k, v] : entries_) width = std::max(width, k.size());
  std::string out = "== " + title_ + " ==\n";
  for (const auto& [k, v] : entries_) {
    out += "  ";
    out += k;
    out.append(width - k.size() + 2, ' ');
    out += v;
    out += '\n';
  }
  return out;
}

std::string format_vector(const std::vector<Elem>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  out += ']';
  return out;
}

namespace {

void add_representatives(Report& rep, const std::vector<std::vector<Elem>>& reps,
                         bool complete) {
  if (!complete) {
    rep.add("representatives", "omitted");
    return;
  }
  if (reps.size() > kRenderedRepsLimit) {
    rep.add("representatives", "omitted (" + std::to_string(reps.size()) + " classes)");
    return;
  }
  rep.add("representatives", static_cast<unsigned long long>(reps.size()));
  for (size_t i = 0; i < reps.size(); ++i)
    rep.add("representative_" + std::to_string(i), format_vector(reps[i]));
}

}  // namespace

Report to_report(const ClassificationReport& r, const std::string& title) {
  Report rep(title);
  rep.add("graph", r.graph_summary);
  rep.add("group", r.group_summary);
  rep.add("rank", r.rank);
  rep.add("total_fields", r.total_fields);
  if (r.pointed_computed) rep.add("pointed_orbits", r.pointed_orbit_count);
  if (r.full_computed) rep.add("full_orbits", r.full_orbit_count);
  rep.add("expected_pointed", r.expected_pointed);
  rep.add("expected_full", r.expected_full);
  rep.add("verification", r.exhaustive ? "exhaustive" : "unverified");
  rep.add_flag("free_action_verified", r.free_action_verified);
  rep.add_flag("fiber_match_verified", r.fiber_match_verified);
  add_representatives(rep, r.representatives, r.reps_complete);
  for (const CheckResult& c : r.checks) rep.add_check(c.name, c.passed);
  return rep;
}

Report to_report(const TheoremAReport& r) {
  Report rep("reconstruction verification");
  rep.add("graph", r.graph_summary);
  rep.add("group", r.group_summary);
  rep.add_flag("exhaustive", r.exhaustive);
  rep.add("fields_checked", r.fields_checked);
  rep.add("failures", r.failures);
  for (const CheckResult& c : r.checks) rep.add_check(c.name, c.passed);
  return rep;
}

Report to_report(const EquivariantReport& r) {
  Report rep("equivariant classification");
  rep.add("action", r.action_summary);
  rep.add("group", r.group_summary);
  rep.add("cocycles", r.cocycle_count);
  rep.add("expected_cocycles", r.expected_cocycles);
  rep.add("pointed_orbits", r.pointed_orbit_count);
  rep.add("full_orbits", r.full_orbit_count);
  rep.add("stabilizer_homs", r.hom_count);
  rep.add("stabilizer_homs_mod_conjugation", r.hom_conj_count);
  for (const CheckResult& c : r.checks) rep.add_check(c.name, c.passed);
  return rep;
}

Report to_report(const ReconstructionReport& r, const GaugeField& w) {
  Report rep("bundle reconstruction");
  rep.add("graph", graph_summary(w.graph()));
  rep.add("group", group_summary(w.bundle().group()));
  rep.add("classes", r.class_count);
  rep.add_check("well_defined", r.well_defined);
  rep.add_check("equivariant", r.equivariant);
  rep.add_check("fiber_preserving", r.fiber_preserving);
  rep.add_check("bijective", r.bijective);
  rep.add_check("representation_matches", r.representation_matches);
  return rep;
}

Report holonomy_report(const GaugeField& w) {
  Report rep("holonomy");
  rep.add("graph", graph_summary(w.graph()));
  rep.add("group", group_summary(w.bundle().group()));
  SpanningTree t = spanning_tree(w.graph());
  std::vector<ReducedPath> gens = loop_generators(w.graph(), t);
  rep.add("rank", static_cast<int>(gens.size()));
  rep.add("holonomy_vector", format_vector(w.holonomy_vector(t)));
  for (size_t i = 0; i < gens.size(); ++i)
    rep.add("loop_" + std::to_string(i), format_vector(gens[i].darts()));
  return rep;
}

Report normalize_report(const GaugeField& original, const GaugeField& normalized,
                        const GaugeTransformation& chi) {
  Report rep("tree normalization");
  rep.add("graph", graph_summary(original.graph()));
  rep.add("group", group_summary(original.bundle().group()));
  rep.add("gauge_assignment", format_vector(chi.vertex_assignment()));
  rep.add_flag("gauge_pointed", chi.is_pointed());
  rep.add("normalized_labels", format_vector(normalized.edge_labels()));
  SpanningTree t = spanning_tree(original.graph());
  rep.add("holonomy_vector", format_vector(original.holonomy_vector(t)));
  return rep;
}

}  // namespace gg
