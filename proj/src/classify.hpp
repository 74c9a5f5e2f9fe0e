#pragma once

#include <cstdint>
#include <string>

#include "action.hpp"
#include "gauge_field.hpp"

namespace gg {

inline constexpr unsigned long long kDefaultCap = 1'000'000;

struct CheckResult {
  std::string name;
  bool passed = false;
};

// Counts and orbit data for one (graph, group) classification run.
// Representatives are canonical holonomy vectors: the vector itself for
// pointed orbits, its conjugation-orbit lexicographic minimum for full ones.
struct ClassificationReport {
  std::string graph_summary;
  std::string group_summary;
  int rank = 0;
  unsigned long long total_fields = 0;
  unsigned long long pointed_orbit_count = 0;
  unsigned long long full_orbit_count = 0;
  bool pointed_computed = false;
  bool full_computed = false;
  unsigned long long expected_pointed = 0;  // |G|^rank
  unsigned long long expected_full = 0;     // conjugation orbits of G^rank (Burnside)
  bool free_action_verified = false;
  bool fiber_match_verified = false;
  bool exhaustive = false;  // counts come from orbit enumeration, not formulas
  std::vector<std::vector<Elem>> representatives;
  bool reps_complete = false;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Streams the |G|^m trivialized fields of a connected graph in lexicographic
// edge-label order. Construction fails with the required count in the message
// when |G|^m exceeds the cap.
class FieldEnumerator {
public:
  FieldEnumerator(GraphPtr graph, GroupPtr group, unsigned long long cap = kDefaultCap);
  unsigned long long total() const { return total_; }
  bool next(std::vector<Elem>& edge_labels);

private:
  GraphPtr graph_;
  GroupPtr group_;
  unsigned long long total_;
  std::vector<Elem> current_;
  bool started_ = false, done_ = false;
};

// Orbit count of G^r under simultaneous conjugation, via the centralizer sum
// (1/|G|) sum_k |C(k)|^r. Independent of the enumerative route.
unsigned long long burnside_count(const Group& g, int r);

// Exhaustive checks of the classification statements on one instance:
// theorem B = the pointed gauge group acts freely with the holonomy vector a
// complete orbit invariant, onto G^rank; theorem C = full gauge orbits match
// conjugation orbits of holonomy vectors, counted twice independently.
ClassificationReport verify_theorem_B(GraphPtr graph, GroupPtr group,
                                      unsigned long long cap = kDefaultCap);
ClassificationReport verify_theorem_C(GraphPtr graph, GroupPtr group,
                                      unsigned long long cap = kDefaultCap);

// Production entry point; no cross-verification. Pointed mode needs no field
// enumeration at all (tree normalization pins one representative per vector);
// full mode enumerates G^rank under the cap.
enum class ClassifyMode { pointed, full };
ClassificationReport classify(GraphPtr graph, GroupPtr group, ClassifyMode mode,
                              unsigned long long cap = kDefaultCap);

// Reconstruction check over sampled fields (exhaustive when |G|^m is small).
struct TheoremAReport {
  std::string graph_summary;
  std::string group_summary;
  int fields_checked = 0;
  int failures = 0;
  bool exhaustive = false;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};
TheoremAReport verify_theorem_A(GraphPtr graph, GroupPtr group,
                                unsigned long long cap = kDefaultCap,
                                uint64_t seed = 0, int samples = 100);

// Equivariant classification for a transitive action: representations of the
// action groupoid on the trivial bundle are cocycles l : Gamma x X -> G with
// l(e,.) = e and l(g2 g1, x) = l(g2, g1.x) l(g1, x), enumerated by extending
// values on group generators. Intransitive actions are rejected.
struct EquivariantReport {
  std::string action_summary;
  std::string group_summary;
  unsigned long long cocycle_count = 0;
  unsigned long long pointed_orbit_count = 0;
  unsigned long long full_orbit_count = 0;
  unsigned long long hom_count = 0;       // |Hom(Stab(*), G)|
  unsigned long long hom_conj_count = 0;  // modulo conjugation in G
  unsigned long long expected_cocycles = 0;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};
EquivariantReport classify_equivariant(const GroupAction& action, GroupPtr group,
                                       unsigned long long cap = kDefaultCap);

// Number of homomorphisms Stab -> G, counted by extending generator images.
unsigned long long hom_count_subgroup(const Group& gamma, const std::vector<Elem>& subgroup,
                                      const Group& g);

// Every connected multigraph on labeled vertices with up to max_vertices
// vertices and up to max_edges edges (loops and parallel edges included),
// in a fixed deterministic order.
std::vector<Graph> connected_graph_corpus(int max_vertices, int max_edges);

// Greedy minimal generating sequence for a group (empty for the trivial one).
std::vector<Elem> generating_set(const Group& g);

std::string graph_summary(const Graph& g);
std::string group_summary(const Group& g);

}  // namespace gg
