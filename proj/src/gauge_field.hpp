#pragma once

#include "bundle.hpp"
#include "graph.hpp"

namespace gg {

// A representation of the graph's path groupoid on a bundle over its vertex
// set: one group label per dart with label(involution(a)) = label(a)^-1,
// read through the fiber-origin trivialization. A dart a moves the point
// origin(source(a)) . d to origin(target(a)) . (label(a) d); on product
// bundles the labels are exactly the usual dart holonomies w1.
class GaugeField {
public:
  // labels per dart (size dart_count) or per edge (size edge_count, the
  // backward dart filled in as the inverse). Involution consistency is
  // enforced; the transport axioms are re-checked on darts and composable
  // dart pairs at construction.
  static GaugeField from_labels(GraphPtr graph, BundlePtr bundle, const std::vector<Elem>& labels);
  static GaugeField trivial(GraphPtr graph, BundlePtr bundle);
  // Dart-wise point maps: image of every fiber origin under each dart.
  static GaugeField from_point_maps(GraphPtr graph, BundlePtr bundle,
                                    const std::vector<int>& origin_image);

  const Graph& graph() const { return *graph_; }
  const Bundle& bundle() const { return *bundle_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const BundlePtr& bundle_ptr() const { return bundle_; }

  Elem label(int dart) const { return labels_[dart]; }
  const std::vector<Elem>& labels() const { return labels_; }
  std::vector<Elem> edge_labels() const;  // forward darts only

  int transport_dart(int dart, int z) const;
  int transport(const EdgePath& p, int z) const;  // z over alpha(p)
  // The point the basepoint lift reaches along a based loop, divided back:
  // gamma(transport(loop, lift), lift). Multiplicative for the composition
  // order of compose_paths.
  Elem holonomy(const ReducedPath& loop) const;
  std::vector<Elem> holonomy_vector(const SpanningTree& t) const;

  // w^chi(c, z) = chi^-1(w(c, chi(z))); a right action.
  GaugeField gauge_act(const GaugeTransformation& chi) const;

  // Pointed gauge transformation built from tree transports; the returned
  // field carries the identity on every tree dart and the holonomy vector on
  // the non-tree forward darts.
  std::pair<GaugeField, GaugeTransformation> tree_normalize(const SpanningTree& t) const;

  bool operator==(const GaugeField& o) const { return labels_ == o.labels_; }

private:
  GaugeField() = default;
  int lift() const { return bundle_->origin(graph_->basepoint()); }

  GraphPtr graph_;
  BundlePtr bundle_;
  std::vector<Elem> labels_;
};

// Outcome of rebuilding the bundle from basepoint paths and holonomy and
// comparing it with the original: classes are the pairs (tree_path(v), g),
// and Phi(u, g) = transport(u, lift) . g must be a G-equivariant
// fiber-preserving bijection carrying the induced representation back to the
// field. Failure of any check signals an implementation bug.
struct ReconstructionReport {
  int class_count = 0;
  bool well_defined = false;
  bool equivariant = false;
  bool fiber_preserving = false;
  bool bijective = false;
  bool representation_matches = false;
  bool ok() const {
    return well_defined && equivariant && fiber_preserving && bijective &&
           representation_matches;
  }
};

ReconstructionReport reconstruct(const GaugeField& w);

// Per-dart images in (E x E)/G; composing with the tautological action of the
// gauge groupoid recovers the field.
std::vector<GaugeGroupoidElement> rep_to_morphism(const GaugeField& w);

// Inverse direction. The dart images must sit over the identity on vertices
// and be involution-compatible; both are checked, as is the composite of each
// dart with its partner against the identity morphism.
GaugeField morphism_to_rep(GraphPtr graph, BundlePtr bundle,
                           const std::vector<GaugeGroupoidElement>& m);

// Tautological action of (E x E)/G on the bundle.
int ee_act(const Bundle& b, const GaugeGroupoidElement& m, int z);

}  // namespace gg
