/* gaugegraph — lattice gauge fields on finite graphs: holonomy, gauge
 * orbits, and exhaustive classification.
 *
 * C API over the shared library. All objects are opaque handles created and
 * destroyed here; every fallible call returns a gg_status, with a
 * human-readable diagnostic available from gg_last_error() until the next
 * call on the same thread. Handles are immutable after creation and may be
 * shared across threads.
 */
#ifndef GAUGEGRAPH_H
#define GAUGEGRAPH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gg_status {
  GG_OK = 0,
  GG_ERR_PARSE = 1,   /* malformed input text */
  GG_ERR_INVALID = 2, /* semantic violation (bad table, disconnected graph, ...) */
  GG_ERR_BOUNDS = 3,  /* index out of range */
  GG_ERR_CAP = 4,     /* enumeration cap exceeded */
  GG_ERR_IO = 5,      /* file not readable/writable */
  GG_ERR_ARG = 6      /* null handle or bad argument */
} gg_status;

typedef struct gg_group gg_group;
typedef struct gg_graph gg_graph;
typedef struct gg_field gg_field;
typedef struct gg_action gg_action;
typedef struct gg_report gg_report;

const char* gg_status_name(gg_status s);

/* Diagnostic for the most recent failing call on this thread; empty string
 * when the last call succeeded. */
const char* gg_last_error(void);

/* default enumeration cap used when 0 is passed for a cap argument */
unsigned long long gg_default_cap(void);

/* ---- groups: "cyclic N" | "dihedral N" | "symmetric N" | "table N ..." -- */
gg_status gg_group_parse(const char* spec, gg_group** out);
void gg_group_free(gg_group* g);
int gg_group_order(const gg_group* g);
int gg_group_identity(const gg_group* g);
int gg_group_op(const gg_group* g, int a, int b); /* -1 on bad input */
int gg_group_inverse(const gg_group* g, int a);   /* -1 on bad input */
const char* gg_group_name(const gg_group* g);

/* ---- graphs: "graph V E B" header plus E lines "u v" ------------------- */
gg_status gg_graph_parse(const char* text, const char* name, gg_graph** out);
gg_status gg_graph_load(const char* path, gg_graph** out);
void gg_graph_free(gg_graph* g);
int gg_graph_vertices(const gg_graph* g);
int gg_graph_edges(const gg_graph* g);
int gg_graph_basepoint(const gg_graph* g);
int gg_graph_connected(const gg_graph* g);
int gg_graph_rank(const gg_graph* g); /* -1 when disconnected */

/* ---- fields: "field <graph-ref> <group-spec>" plus per-edge labels ------ */
gg_status gg_field_parse(const char* text, const char* name, const gg_graph* graph,
                         const gg_group* group, gg_field** out);
gg_status gg_field_load(const char* path, const gg_graph* graph, const gg_group* group,
                        gg_field** out);
gg_status gg_field_from_labels(const gg_graph* graph, const gg_group* group,
                               const int* edge_labels, size_t count, gg_field** out);
void gg_field_free(gg_field* f);
int gg_field_edge_label(const gg_field* f, int edge); /* -1 on bad input */
/* Renders the field file; the caller frees the string with gg_string_free. */
gg_status gg_field_render(const gg_field* f, const char* graph_ref, char** out_text);
void gg_string_free(char* s);

/* ---- actions: "action X B" header, a group spec, |group| rows ----------- */
gg_status gg_action_parse(const char* text, const char* name, gg_action** out);
gg_status gg_action_load(const char* path, gg_action** out);
void gg_action_free(gg_action* a);

/* ---- operations --------------------------------------------------------
 * Reports own their rendered text; gg_report_passed reflects the embedded
 * pass/fail checks (1 when there are none). Mathematical check failures do
 * not produce an error status: inspect the report. Pass cap = 0 for the
 * default cap and seed = 0 for the default seed. */
gg_status gg_classify(const gg_graph* graph, const gg_group* group, int full,
                      unsigned long long cap, gg_report** out);
gg_status gg_verify(const gg_graph* graph, const gg_group* group, char theorem /* a|b|c */,
                    unsigned long long cap, unsigned long long seed, gg_report** out);
gg_status gg_holonomy(const gg_field* field, gg_report** out);
gg_status gg_normalize(const gg_field* field, gg_field** out_normalized, gg_report** out);
gg_status gg_reconstruct(const gg_field* field, gg_report** out);
gg_status gg_equivariant(const gg_action* action, const gg_group* group,
                         unsigned long long cap, gg_report** out);

int gg_report_passed(const gg_report* r);
const char* gg_report_render(const gg_report* r, int machine);
void gg_report_free(gg_report* r);

#ifdef __cplusplus
}
#endif

#endif /* GAUGEGRAPH_H */
