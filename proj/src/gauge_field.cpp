#include "gauge_field.hpp"

#include <algorithm>
#include <map>

namespace gg {

namespace {

void check_pair(const Graph& g, const Bundle& b) {
  if (b.base_size() != g.vertex_count())
    fail(ErrC::invalid, "bundle base must equal the graph vertex set");
}

}  // namespace

GaugeField GaugeField::from_labels(GraphPtr graph, BundlePtr bundle,
                                   const std::vector<Elem>& labels) {
  if (!graph || !bundle) fail(ErrC::invalid, "field needs a graph and a bundle");
  check_pair(*graph, *bundle);
  const Group& G = bundle->group();
  GaugeField w;
  const int darts = graph->dart_count();
  if (static_cast<int>(labels.size()) == graph->edge_count()) {
    w.labels_.resize(darts);
    for (int i = 0; i < graph->edge_count(); ++i) {
      w.labels_[2 * i] = labels[i];
      w.labels_[2 * i + 1] = G.inv(labels[i]);
    }
  } else if (static_cast<int>(labels.size()) == darts) {
    w.labels_ = labels;
    for (int d = 0; d < darts; d += 2)
      if (w.labels_[d + 1] != G.inv(w.labels_[d]))
        fail(ErrC::invalid, "dart labels violate the involution constraint");
  } else {
    fail(ErrC::invalid, "label count must match edges or darts");
  }
  for (Elem l : w.labels_) {
    if (l < 0 || l >= G.order()) fail(ErrC::bounds, "label out of range");
  }
  w.graph_ = std::move(graph);
  w.bundle_ = std::move(bundle);
  return w;
}

GaugeField GaugeField::trivial(GraphPtr graph, BundlePtr bundle) {
  std::vector<Elem> labels(graph->edge_count(), bundle->group().identity());
  return from_labels(std::move(graph), std::move(bundle), labels);
}

GaugeField GaugeField::from_point_maps(GraphPtr graph, BundlePtr bundle,
                                       const std::vector<int>& origin_image) {
  if (!graph || !bundle) fail(ErrC::invalid, "field needs a graph and a bundle");
  check_pair(*graph, *bundle);
  if (static_cast<int>(origin_image.size()) != graph->dart_count())
    fail(ErrC::invalid, "need one origin image per dart");
  std::vector<Elem> labels(graph->dart_count());
  for (int d = 0; d < graph->dart_count(); ++d) {
    int img = origin_image[d];
    if (bundle->base_of(img) != graph->target(d))
      fail(ErrC::invalid, "dart image lies over the wrong vertex");
    labels[d] = bundle->gamma(img, bundle->origin(graph->target(d)));
  }
  return from_labels(std::move(graph), std::move(bundle), labels);
}

std::vector<Elem> GaugeField::edge_labels() const {
  std::vector<Elem> out(graph_->edge_count());
  for (int i = 0; i < graph_->edge_count(); ++i) out[i] = labels_[2 * i];
  return out;
}

int GaugeField::transport_dart(int dart, int z) const {
  if (bundle_->base_of(z) != graph_->source(dart))
    fail(ErrC::invalid, "transport: point lies over the wrong vertex");
  const Group& G = bundle_->group();
  Elem d = bundle_->delta(z);
  return bundle_->act(bundle_->origin(graph_->target(dart)), G.op(labels_[dart], d));
}

int GaugeField::transport(const EdgePath& p, int z) const {
  if (bundle_->base_of(z) != p.alpha())
    fail(ErrC::invalid, "transport: point lies over the wrong vertex");
  for (int d : p.darts()) z = transport_dart(d, z);
  return z;
}

Elem GaugeField::holonomy(const ReducedPath& loop) const {
  int bp = graph_->basepoint();
  if (loop.alpha() != bp || loop.beta() != bp)
    fail(ErrC::invalid, "holonomy needs a loop based at the basepoint");
  int star = lift();
  return bundle_->gamma(transport(loop, star), star);
}

std::vector<Elem> GaugeField::holonomy_vector(const SpanningTree& t) const {
  std::vector<Elem> out;
  for (const ReducedPath& loop : loop_generators(*graph_, t)) out.push_back(holonomy(loop));
  return out;
}

GaugeField GaugeField::gauge_act(const GaugeTransformation& chi) const {
  if (&chi.bundle() != bundle_.get() && !bundle_->same_structure(chi.bundle()))
    fail(ErrC::invalid, "gauge transformation lives on a different bundle");
  const Group& G = bundle_->group();
  std::vector<Elem> a = chi.vertex_assignment();
  GaugeField w;
  w.graph_ = graph_;
  w.bundle_ = bundle_;
  w.labels_.resize(labels_.size());
  for (int d = 0; d < graph_->dart_count(); ++d) {
    int u = graph_->source(d), v = graph_->target(d);
    w.labels_[d] = G.op(G.op(G.inv(a[v]), labels_[d]), a[u]);
  }
  return w;
}

std::pair<GaugeField, GaugeTransformation> GaugeField::tree_normalize(
    const SpanningTree& t) const {
  std::vector<Elem> a(graph_->vertex_count());
  for (int v = 0; v < graph_->vertex_count(); ++v) {
    int reached = transport(tree_path(*graph_, t, v), lift());
    a[v] = bundle_->gamma(reached, bundle_->origin(v));
  }
  GaugeTransformation chi = GaugeTransformation::from_vertex_assignment(bundle_, a);
  return {gauge_act(chi), chi};
}

ReconstructionReport reconstruct(const GaugeField& w) {
  const Graph& g = w.graph();
  const Bundle& b = w.bundle();
  const Group& G = b.group();
  ReconstructionReport rep;
  SpanningTree t = spanning_tree(g);
  int star = b.origin(g.basepoint());

  // class representatives (tree_path(v), g); Phi evaluated on each
  const int n = g.vertex_count(), ord = G.order();
  rep.class_count = n * ord;
  std::vector<ReducedPath> paths;
  paths.reserve(n);
  for (int v = 0; v < n; ++v) paths.push_back(tree_path(g, t, v));

  auto phi = [&](int v, Elem s) { return b.act(w.transport(paths[v], star), s); };

  // well-definedness on the generating loops: Phi(u c, g) = Phi(u, h(c) g)
  std::vector<ReducedPath> gens = loop_generators(g, t);
  rep.well_defined = true;
  for (const ReducedPath& c : gens) {
    Elem h = w.holonomy(c);
    for (int v = 0; v < n && rep.well_defined; ++v) {
      ReducedPath uc = compose_paths(g, paths[v], c);
      for (Elem x = 0; x < ord; ++x)
        if (b.act(w.transport(uc, star), x) != phi(v, G.op(h, x))) {
          rep.well_defined = false;
          break;
        }
    }
  }

  rep.equivariant = rep.fiber_preserving = true;
  for (int v = 0; v < n; ++v)
    for (Elem x = 0; x < ord; ++x) {
      if (b.base_of(phi(v, x)) != paths[v].beta()) rep.fiber_preserving = false;
      for (Elem y = 0; y < ord; ++y)
        if (b.act(phi(v, x), y) != phi(v, G.op(x, y))) rep.equivariant = false;
    }

  std::vector<char> hit(b.total_size(), 0);
  bool inj = true;
  for (int v = 0; v < n; ++v)
    for (Elem x = 0; x < ord; ++x) {
      int z = phi(v, x);
      if (hit[z]) inj = false;
      hit[z] = 1;
    }
  rep.bijective = inj && std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

  // induced representation w(a, [u, g]) = [a u, g] against the field
  rep.representation_matches = true;
  for (int d = 0; d < g.dart_count() && rep.representation_matches; ++d) {
    int v = g.source(d);
    ReducedPath step(g, {d}, v);
    ReducedPath au = compose_paths(g, step, paths[v]);
    // au = tree_path(target(d)) * c for the based loop c below
    int tv = g.target(d);
    ReducedPath c = compose_paths(g, invert_path(g, paths[tv]), au);
    Elem h = w.holonomy(c);
    for (Elem x = 0; x < ord; ++x) {
      if (w.transport_dart(d, phi(v, x)) != phi(tv, G.op(h, x))) {
        rep.representation_matches = false;
        break;
      }
    }
  }
  return rep;
}

int ee_act(const Bundle& b, const GaugeGroupoidElement& m, int z) {
  // v(<a, o>, z) = a . gamma(z, o)
  return b.act(m.top, b.gamma(z, b.origin(m.bottom_base)));
}

std::vector<GaugeGroupoidElement> rep_to_morphism(const GaugeField& w) {
  const Graph& g = w.graph();
  const Bundle& b = w.bundle();
  std::vector<GaugeGroupoidElement> out;
  out.reserve(g.dart_count());
  for (int d = 0; d < g.dart_count(); ++d) {
    int z = b.origin(g.source(d));
    out.push_back(make_ee_element(b, w.transport_dart(d, z), z));
  }
  return out;
}

GaugeField morphism_to_rep(GraphPtr graph, BundlePtr bundle,
                           const std::vector<GaugeGroupoidElement>& m) {
  if (!graph || !bundle) fail(ErrC::invalid, "need a graph and a bundle");
  check_pair(*graph, *bundle);
  if (static_cast<int>(m.size()) != graph->dart_count())
    fail(ErrC::invalid, "need one gauge groupoid element per dart");
  const Bundle& b = *bundle;
  for (int d = 0; d < graph->dart_count(); ++d) {
    if (m[d].bottom_base != graph->source(d) || b.base_of(m[d].top) != graph->target(d))
      fail(ErrC::invalid, "morphism image has wrong endpoints");
    GaugeGroupoidElement back = m[graph->involution(d)];
    if (!(ee_inverse(b, m[d]) == back))
      fail(ErrC::invalid, "morphism image is not involution-compatible");
    if (!(ee_compose(b, back, m[d]) == ee_identity(b, graph->source(d))))
      fail(ErrC::invalid, "morphism image fails the inverse law");
  }
  std::vector<int> origin_image(graph->dart_count());
  for (int d = 0; d < graph->dart_count(); ++d)
    origin_image[d] = ee_act(b, m[d], b.origin(graph->source(d)));
  return GaugeField::from_point_maps(std::move(graph), std::move(bundle), origin_image);
}

}  // namespace gg
