#pragma once

#include <string>

#include "action.hpp"
#include "gauge_field.hpp"

namespace gg {

// Plain-text formats. Parse errors carry "name:line: message" diagnostics.
//
//   group:   cyclic N | dihedral N | symmetric N | table N <N*N indices>
//   graph:   "graph V E B" then E lines "u v"
//   field:   "field <graph-ref> <group-spec>" then E lines "edge label"
//   bundle:  "trivial B <group-spec>" or "bundle B ORDER" followed by
//            per-point lines "id base" and an action table block
//   action:  "action X B" then a group spec and |group| rows of X points

Group parse_group_spec(const std::string& text, const std::string& name = "group spec");

Graph parse_graph_text(const std::string& text, const std::string& name);

struct FieldFile {
  std::string graph_ref;
  std::string group_spec;
  GaugeField field;
};
// The field is placed on the trivial bundle over the graph's vertices; the
// header's group spec must agree with the supplied group.
FieldFile parse_field_text(const std::string& text, const std::string& name, GraphPtr graph,
                           GroupPtr group);

// Explicit bundles take their group from the caller; the trivial shorthand
// carries its own group spec.
Bundle parse_bundle_text(const std::string& text, const std::string& name,
                         GroupPtr group_for_explicit = nullptr);

GroupAction parse_action_text(const std::string& text, const std::string& name);

std::string render_graph(const Graph& g);
std::string render_field(const GaugeField& w, const std::string& graph_ref);
std::string render_bundle(const Bundle& b);
std::string render_action(const GroupAction& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gg
