#include "gaugegraph.h"

#include <cstring>
#include <memory>
#include <string>

#include "classify.hpp"
#include "formats.hpp"
#include "report.hpp"

using namespace gg;

struct gg_group {
  GroupPtr group;
};
struct gg_graph {
  GraphPtr graph;
};
struct gg_field {
  std::shared_ptr<const GaugeField> field;
};
struct gg_action {
  std::shared_ptr<const GroupAction> action;
};
struct gg_report {
  Report report;
  std::string machine, human;
  bool passed;
};

namespace {

thread_local std::string t_last_error;

gg_status status_of(const Error& e) {
  switch (e.code()) {
    case ErrC::parse:
      return GG_ERR_PARSE;
    case ErrC::invalid:
      return GG_ERR_INVALID;
    case ErrC::bounds:
      return GG_ERR_BOUNDS;
    case ErrC::cap:
      return GG_ERR_CAP;
    case ErrC::io:
      return GG_ERR_IO;
  }
  return GG_ERR_INVALID;
}

template <typename Fn>
gg_status guarded(Fn&& fn) {
  t_last_error.clear();
  try {
    fn();
    return GG_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return GG_ERR_INVALID;
  }
}

gg_status arg_error(const char* msg) {
  t_last_error = msg;
  return GG_ERR_ARG;
}

gg_report* wrap_report(Report rep) {
  auto* out = new gg_report{std::move(rep), "", "", true};
  out->machine = out->report.render_machine();
  out->human = out->report.render_human();
  out->passed = out->report.all_passed();
  return out;
}

unsigned long long cap_or_default(unsigned long long cap) {
  return cap == 0 ? kDefaultCap : cap;
}

constexpr unsigned long long kDefaultSeed = 0x6761756765ULL;

}  // namespace

extern "C" {

const char* gg_status_name(gg_status s) {
  switch (s) {
    case GG_OK:
      return "ok";
    case GG_ERR_PARSE:
      return "parse";
    case GG_ERR_INVALID:
      return "invalid";
    case GG_ERR_BOUNDS:
      return "bounds";
    case GG_ERR_CAP:
      return "cap";
    case GG_ERR_IO:
      return "io";
    case GG_ERR_ARG:
      return "arg";
  }
  return "unknown";
}

const char* gg_last_error(void) { return t_last_error.c_str(); }

unsigned long long gg_default_cap(void) { return kDefaultCap; }

gg_status gg_group_parse(const char* spec, gg_group** out) {
  if (!spec || !out) return arg_error("gg_group_parse: null argument");
  return guarded([&] {
    *out = new gg_group{std::make_shared<Group>(parse_group_spec(spec))};
  });
}

void gg_group_free(gg_group* g) { delete g; }

int gg_group_order(const gg_group* g) { return g ? g->group->order() : -1; }
int gg_group_identity(const gg_group* g) { return g ? g->group->identity() : -1; }

int gg_group_op(const gg_group* g, int a, int b) {
  if (!g) return -1;
  int r = -1;
  if (guarded([&] { r = g->group->op(a, b); }) != GG_OK) return -1;
  return r;
}

int gg_group_inverse(const gg_group* g, int a) {
  if (!g) return -1;
  int r = -1;
  if (guarded([&] { r = g->group->inv(a); }) != GG_OK) return -1;
  return r;
}

const char* gg_group_name(const gg_group* g) { return g ? g->group->name().c_str() : ""; }

gg_status gg_graph_parse(const char* text, const char* name, gg_graph** out) {
  if (!text || !out) return arg_error("gg_graph_parse: null argument");
  return guarded([&] {
    *out = new gg_graph{std::make_shared<Graph>(
        parse_graph_text(text, name ? name : "graph"))};
  });
}

gg_status gg_graph_load(const char* path, gg_graph** out) {
  if (!path || !out) return arg_error("gg_graph_load: null argument");
  return guarded([&] {
    *out = new gg_graph{std::make_shared<Graph>(parse_graph_text(read_file(path), path))};
  });
}

void gg_graph_free(gg_graph* g) { delete g; }

int gg_graph_vertices(const gg_graph* g) { return g ? g->graph->vertex_count() : -1; }
int gg_graph_edges(const gg_graph* g) { return g ? g->graph->edge_count() : -1; }
int gg_graph_basepoint(const gg_graph* g) { return g ? g->graph->basepoint() : -1; }
int gg_graph_connected(const gg_graph* g) { return g ? (g->graph->is_connected() ? 1 : 0) : 0; }

int gg_graph_rank(const gg_graph* g) {
  if (!g || !g->graph->is_connected()) return -1;
  return free_rank(*g->graph);
}

gg_status gg_field_parse(const char* text, const char* name, const gg_graph* graph,
                         const gg_group* group, gg_field** out) {
  if (!text || !graph || !group || !out) return arg_error("gg_field_parse: null argument");
  return guarded([&] {
    FieldFile ff =
        parse_field_text(text, name ? name : "field", graph->graph, group->group);
    *out = new gg_field{std::make_shared<GaugeField>(std::move(ff.field))};
  });
}

gg_status gg_field_load(const char* path, const gg_graph* graph, const gg_group* group,
                        gg_field** out) {
  if (!path || !graph || !group || !out) return arg_error("gg_field_load: null argument");
  return guarded([&] {
    FieldFile ff = parse_field_text(read_file(path), path, graph->graph, group->group);
    *out = new gg_field{std::make_shared<GaugeField>(std::move(ff.field))};
  });
}

gg_status gg_field_from_labels(const gg_graph* graph, const gg_group* group,
                               const int* edge_labels, size_t count, gg_field** out) {
  if (!graph || !group || !out || (!edge_labels && count > 0))
    return arg_error("gg_field_from_labels: null argument");
  return guarded([&] {
    std::vector<Elem> labels(edge_labels, edge_labels + count);
    BundlePtr bundle =
        std::make_shared<Bundle>(Bundle::trivial(graph->graph->vertex_count(), group->group));
    *out = new gg_field{std::make_shared<GaugeField>(
        GaugeField::from_labels(graph->graph, bundle, labels))};
  });
}

void gg_field_free(gg_field* f) { delete f; }

int gg_field_edge_label(const gg_field* f, int edge) {
  if (!f || edge < 0 || edge >= f->field->graph().edge_count()) return -1;
  return f->field->label(2 * edge);
}

gg_status gg_field_render(const gg_field* f, const char* graph_ref, char** out_text) {
  if (!f || !graph_ref || !out_text) return arg_error("gg_field_render: null argument");
  return guarded([&] {
    std::string text = render_field(*f->field, graph_ref);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out_text = buf;
  });
}

void gg_string_free(char* s) { delete[] s; }

gg_status gg_action_parse(const char* text, const char* name, gg_action** out) {
  if (!text || !out) return arg_error("gg_action_parse: null argument");
  return guarded([&] {
    *out = new gg_action{std::make_shared<GroupAction>(
        parse_action_text(text, name ? name : "action"))};
  });
}

gg_status gg_action_load(const char* path, gg_action** out) {
  if (!path || !out) return arg_error("gg_action_load: null argument");
  return guarded([&] {
    *out = new gg_action{
        std::make_shared<GroupAction>(parse_action_text(read_file(path), path))};
  });
}

void gg_action_free(gg_action* a) { delete a; }

gg_status gg_classify(const gg_graph* graph, const gg_group* group, int full,
                      unsigned long long cap, gg_report** out) {
  if (!graph || !group || !out) return arg_error("gg_classify: null argument");
  return guarded([&] {
    ClassificationReport r =
        classify(graph->graph, group->group, full ? ClassifyMode::full : ClassifyMode::pointed,
                 cap_or_default(cap));
    *out = wrap_report(to_report(r, full ? "full classification" : "pointed classification"));
  });
}

gg_status gg_verify(const gg_graph* graph, const gg_group* group, char theorem,
                    unsigned long long cap, unsigned long long seed, gg_report** out) {
  if (!graph || !group || !out) return arg_error("gg_verify: null argument");
  return guarded([&] {
    unsigned long long c = cap_or_default(cap);
    switch (theorem) {
      case 'a':
        *out = wrap_report(
            to_report(verify_theorem_A(graph->graph, group->group, c,
                                       seed == 0 ? kDefaultSeed : seed, 100)));
        return;
      case 'b':
        *out = wrap_report(to_report(verify_theorem_B(graph->graph, group->group, c),
                                     "theorem b verification"));
        return;
      case 'c':
        *out = wrap_report(to_report(verify_theorem_C(graph->graph, group->group, c),
                                     "theorem c verification"));
        return;
      default:
        fail(ErrC::invalid, std::string("unknown theorem '") + theorem + "' (want a, b or c)");
    }
  });
}

gg_status gg_holonomy(const gg_field* field, gg_report** out) {
  if (!field || !out) return arg_error("gg_holonomy: null argument");
  return guarded([&] { *out = wrap_report(holonomy_report(*field->field)); });
}

gg_status gg_normalize(const gg_field* field, gg_field** out_normalized, gg_report** out) {
  if (!field || !out_normalized || !out) return arg_error("gg_normalize: null argument");
  return guarded([&] {
    SpanningTree t = spanning_tree(field->field->graph());
    auto [normalized, chi] = field->field->tree_normalize(t);
    Report rep = normalize_report(*field->field, normalized, chi);
    *out_normalized = new gg_field{std::make_shared<GaugeField>(std::move(normalized))};
    *out = wrap_report(std::move(rep));
  });
}

gg_status gg_reconstruct(const gg_field* field, gg_report** out) {
  if (!field || !out) return arg_error("gg_reconstruct: null argument");
  return guarded([&] {
    ReconstructionReport r = reconstruct(*field->field);
    *out = wrap_report(to_report(r, *field->field));
  });
}

gg_status gg_equivariant(const gg_action* action, const gg_group* group,
                         unsigned long long cap, gg_report** out) {
  if (!action || !group || !out) return arg_error("gg_equivariant: null argument");
  return guarded([&] {
    EquivariantReport r =
        classify_equivariant(*action->action, group->group, cap_or_default(cap));
    *out = wrap_report(to_report(r));
  });
}

int gg_report_passed(const gg_report* r) { return r && r->passed ? 1 : 0; }

const char* gg_report_render(const gg_report* r, int machine) {
  if (!r) return "";
  return machine ? r->machine.c_str() : r->human.c_str();
}

void gg_report_free(gg_report* r) { delete r; }

}  // extern "C"
