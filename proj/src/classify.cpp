#include "classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace gg {

namespace {

constexpr unsigned long long kHardEnumerationCeiling = 100'000'000;
constexpr int kStoredRepsLimit = 4096;

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p[b] = a;
  }
};

// Precomputed data for exhaustive field enumeration on one (graph, group)
// pair. Field codes are base-|G| numbers over the forward-dart labels, edge 0
// in the most significant position (lexicographic order = numeric order).
struct Engine {
  const Graph& g;
  const Group& G;
  int n, m, r, ord;
  unsigned long long field_count;
  std::vector<int> esrc, etgt;
  std::vector<std::vector<int>> gen_loops;

  Engine(const Graph& graph, const Group& group, unsigned long long cap)
      : g(graph), G(group) {
    if (!g.is_connected()) fail(ErrC::invalid, "graph is not connected");
    n = g.vertex_count();
    m = g.edge_count();
    r = free_rank(g);
    ord = G.order();
    field_count = checked_pow(ord, m);
    if (field_count > cap)
      fail(ErrC::cap, "enumeration would need " + std::to_string(field_count) +
                          " fields (cap " + std::to_string(cap) + ")");
    if (field_count > kHardEnumerationCeiling)
      fail(ErrC::cap, "enumeration of " + std::to_string(field_count) +
                          " fields exceeds the hard ceiling");
    for (int i = 0; i < m; ++i) {
      esrc.push_back(g.source(2 * i));
      etgt.push_back(g.target(2 * i));
    }
    SpanningTree t = spanning_tree(g);
    for (const ReducedPath& loop : loop_generators(g, t)) gen_loops.push_back(loop.darts());
  }

  void decode(uint64_t code, std::vector<Elem>& l) const {
    l.resize(m);
    for (int i = m - 1; i >= 0; --i) {
      l[i] = static_cast<Elem>(code % ord);
      code /= ord;
    }
  }

  Elem dart_label(const std::vector<Elem>& l, int dart) const {
    Elem v = l[dart / 2];
    return (dart & 1) ? G.inv(v) : v;
  }

  uint64_t holvec_code(const std::vector<Elem>& l) const {
    uint64_t code = 0;
    for (const auto& loop : gen_loops) {
      Elem h = G.identity();
      for (int d : loop) h = G.op(dart_label(l, d), h);
      code = code * ord + h;
    }
    return code;
  }

  std::vector<Elem> vec_of_code(uint64_t vc) const {
    std::vector<Elem> v(r);
    for (int i = r - 1; i >= 0; --i) {
      v[i] = static_cast<Elem>(vc % ord);
      vc /= ord;
    }
    return v;
  }
};

// all r-tuples over [0, ord) in lexicographic order, visited through a callback
void for_each_tuple(int ord, int r, const std::function<void(const std::vector<Elem>&)>& fn) {
  std::vector<Elem> t(r, 0);
  for (;;) {
    fn(t);
    int i = r - 1;
    while (i >= 0 && t[i] == ord - 1) t[i--] = 0;
    if (i < 0) return;
    ++t[i];
  }
}

}  // namespace

bool ClassificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}
bool TheoremAReport::all_passed() const { return failures == 0; }
bool EquivariantReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string graph_summary(const Graph& g) {
  return "vertices=" + std::to_string(g.vertex_count()) + " edges=" +
         std::to_string(g.edge_count()) + " basepoint=" + std::to_string(g.basepoint());
}

std::string group_summary(const Group& g) {
  return g.name() + " (order " + std::to_string(g.order()) + ")";
}

FieldEnumerator::FieldEnumerator(GraphPtr graph, GroupPtr group, unsigned long long cap)
    : graph_(std::move(graph)), group_(std::move(group)) {
  total_ = checked_pow(group_->order(), graph_->edge_count());
  if (total_ > cap)
    fail(ErrC::cap, "enumeration would need " + std::to_string(total_) + " fields (cap " +
                        std::to_string(cap) + ")");
  current_.assign(graph_->edge_count(), group_->identity());
}

bool FieldEnumerator::next(std::vector<Elem>& edge_labels) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    current_.assign(graph_->edge_count(), 0);
    edge_labels = current_;
    return true;
  }
  int i = graph_->edge_count() - 1;
  while (i >= 0 && current_[i] == group_->order() - 1) current_[i--] = 0;
  if (i < 0) {
    done_ = true;
    return false;
  }
  ++current_[i];
  edge_labels = current_;
  return true;
}

unsigned long long burnside_count(const Group& g, int r) {
  if (r < 0) fail(ErrC::invalid, "negative tuple arity");
  const int n = g.order();
  unsigned __int128 sum = 0;
  for (int k = 0; k < n; ++k) {
    unsigned long long cent = 0;
    for (int x = 0; x < n; ++x)
      if (g.op(k, x) == g.op(x, k)) ++cent;
    unsigned __int128 pw = 1;
    for (int i = 0; i < r; ++i) pw *= cent;
    sum += pw;
  }
  sum /= n;
  if (sum > ~0ULL) fail(ErrC::invalid, "orbit count overflows 64 bits");
  return static_cast<unsigned long long>(sum);
}

namespace {

struct OrbitData {
  std::vector<uint64_t> vec;   // holonomy vector code per field
  UnionFind uf;
  unsigned long long orbit_count = 0;
  OrbitData(size_t n) : uf(n) {}
};

OrbitData compute_orbits(const Engine& e, bool pointed) {
  const auto N = static_cast<size_t>(e.field_count);
  OrbitData od(N);
  od.vec.resize(N);

  // per (vertex, value) generator move: a digit permutation on each edge
  struct Move {
    std::vector<Elem> map;  // edge * ord + digit -> digit
  };
  std::vector<Move> moves;
  for (int v = 0; v < e.n; ++v) {
    if (pointed && v == e.g.basepoint()) continue;
    for (Elem k = 0; k < e.ord; ++k) {
      if (k == e.G.identity()) continue;
      Move mv;
      mv.map.resize(static_cast<size_t>(e.m) * e.ord);
      Elem ki = e.G.inv(k);
      for (int i = 0; i < e.m; ++i)
        for (Elem l = 0; l < e.ord; ++l) {
          Elem nl = l;
          if (e.etgt[i] == v) nl = e.G.op(ki, nl);
          if (e.esrc[i] == v) nl = e.G.op(nl, k);
          mv.map[static_cast<size_t>(i) * e.ord + l] = nl;
        }
      moves.push_back(std::move(mv));
    }
  }

  std::vector<Elem> buf;
  for (size_t code = 0; code < N; ++code) {
    e.decode(code, buf);
    od.vec[code] = e.holvec_code(buf);
    for (const Move& mv : moves) {
      uint64_t moved = 0;
      for (int i = 0; i < e.m; ++i)
        moved = moved * e.ord + mv.map[static_cast<size_t>(i) * e.ord + buf[i]];
      od.uf.unite(static_cast<int>(code), static_cast<int>(moved));
    }
  }
  for (size_t code = 0; code < N; ++code)
    if (od.uf.find(static_cast<int>(code)) == static_cast<int>(code)) ++od.orbit_count;
  return od;
}

// Literal stabilizer scan when affordable, orbit-size equality otherwise;
// both decide freeness of the pointed gauge action exactly.
bool verify_free_action(const Engine& e, OrbitData& od) {
  unsigned long long pointed_order = checked_pow(e.ord, e.n - 1);
  const auto N = static_cast<size_t>(e.field_count);
  if ((pointed_order - 1) * e.field_count <= 50'000'000ULL) {
    std::vector<int> free_verts;  // assignment positions; the basepoint stays pinned
    for (int v = 0; v < e.n; ++v)
      if (v != e.g.basepoint()) free_verts.push_back(v);
    // materialize the nonidentity pointed assignments once
    std::vector<std::vector<Elem>> assignments;
    for (unsigned long long idx = 0; idx < pointed_order; ++idx) {
      unsigned long long c = idx;
      std::vector<Elem> assign(e.n, e.G.identity());
      bool is_identity = true;
      for (size_t i = free_verts.size(); i-- > 0;) {
        assign[free_verts[i]] = static_cast<Elem>(c % e.ord);
        c /= e.ord;
        if (assign[free_verts[i]] != e.G.identity()) is_identity = false;
      }
      if (!is_identity) assignments.push_back(std::move(assign));
    }
    std::vector<Elem> labels;
    for (size_t code = 0; code < N; ++code) {
      e.decode(code, labels);
      for (const auto& assign : assignments) {
        bool fixes = true;
        for (int ei = 0; ei < e.m && fixes; ++ei) {
          Elem l = labels[ei];
          Elem nl = e.G.op(e.G.inv(assign[e.etgt[ei]]), e.G.op(l, assign[e.esrc[ei]]));
          if (nl != l) fixes = false;
        }
        if (fixes) return false;  // nonidentity pointed transformation fixes a field
      }
    }
    return true;
  }
  std::vector<unsigned long long> size_of_root(N, 0);
  for (size_t code = 0; code < N; ++code) ++size_of_root[od.uf.find(static_cast<int>(code))];
  for (size_t code = 0; code < N; ++code)
    if (size_of_root[code] != 0 && size_of_root[code] != pointed_order) return false;
  return true;
}

}  // namespace

ClassificationReport verify_theorem_B(GraphPtr graph, GroupPtr group, unsigned long long cap) {
  Engine e(*graph, *group, cap);
  ClassificationReport rep;
  rep.graph_summary = graph_summary(*graph);
  rep.group_summary = group_summary(*group);
  rep.rank = e.r;
  rep.total_fields = e.field_count;
  rep.expected_pointed = checked_pow(e.ord, e.r);
  rep.expected_full = burnside_count(*group, e.r);

  rep.exhaustive = true;

  OrbitData od = compute_orbits(e, /*pointed=*/true);
  rep.pointed_orbit_count = od.orbit_count;
  rep.pointed_computed = true;

  rep.free_action_verified = verify_free_action(e, od);
  rep.checks.push_back({"pointed_gauge_action_free", rep.free_action_verified});

  // holonomy vector constant on orbits, distinct across orbits
  const auto N = static_cast<size_t>(e.field_count);
  bool constant = true;
  std::map<uint64_t, int> root_of_vec;
  bool injective = true;
  for (size_t code = 0; code < N; ++code) {
    int root = od.uf.find(static_cast<int>(code));
    if (od.vec[code] != od.vec[root]) constant = false;
    auto [it, fresh] = root_of_vec.emplace(od.vec[code], root);
    if (!fresh && it->second != root) injective = false;
  }
  rep.fiber_match_verified = constant && injective &&
                             root_of_vec.size() == od.orbit_count;
  rep.checks.push_back({"holonomy_separates_pointed_orbits", rep.fiber_match_verified});

  bool surjective = root_of_vec.size() == rep.expected_pointed;
  rep.checks.push_back({"holonomy_onto_all_vectors", surjective});

  bool counting = rep.pointed_orbit_count * checked_pow(e.ord, e.n - 1) == e.field_count;
  rep.checks.push_back({"counting_identity", counting});

  rep.checks.push_back(
      {"pointed_orbit_count_matches", rep.pointed_orbit_count == rep.expected_pointed});

  if (rep.pointed_orbit_count <= kStoredRepsLimit) {
    for (const auto& [vc, root] : root_of_vec) rep.representatives.push_back(e.vec_of_code(vc));
    std::sort(rep.representatives.begin(), rep.representatives.end());
    rep.reps_complete = true;
  }
  return rep;
}

ClassificationReport verify_theorem_C(GraphPtr graph, GroupPtr group, unsigned long long cap) {
  Engine e(*graph, *group, cap);
  ClassificationReport rep;
  rep.graph_summary = graph_summary(*graph);
  rep.group_summary = group_summary(*group);
  rep.rank = e.r;
  rep.total_fields = e.field_count;
  rep.expected_pointed = checked_pow(e.ord, e.r);
  rep.expected_full = burnside_count(*group, e.r);

  rep.exhaustive = true;

  OrbitData od = compute_orbits(e, /*pointed=*/false);
  rep.full_orbit_count = od.orbit_count;
  rep.full_computed = true;

  // side one: conjugation-canonical holonomy vectors of the field orbits
  const auto N = static_cast<size_t>(e.field_count);
  std::set<std::vector<Elem>> canon_from_orbits;
  bool constant = true;
  std::vector<uint64_t> seen_vecs;
  {
    std::map<int, std::vector<Elem>> canon_of_root;
    for (size_t code = 0; code < N; ++code) {
      int root = od.uf.find(static_cast<int>(code));
      std::vector<Elem> canon = tuple_conj_canonical(*group, e.vec_of_code(od.vec[code]));
      auto [it, fresh] = canon_of_root.emplace(root, canon);
      if (!fresh && it->second != canon) constant = false;
      seen_vecs.push_back(od.vec[code]);
    }
    for (auto& [root, canon] : canon_of_root) canon_from_orbits.insert(std::move(canon));
  }
  rep.checks.push_back({"vector_class_constant_on_full_orbits", constant});

  // side two: conjugation orbits of all of G^rank, enumerated independently
  std::set<std::vector<Elem>> canon_direct;
  for_each_tuple(e.ord, e.r, [&](const std::vector<Elem>& t) {
    canon_direct.insert(tuple_conj_canonical(*group, t));
  });

  bool counts_match = rep.full_orbit_count == canon_direct.size() &&
                      rep.full_orbit_count == canon_from_orbits.size();
  rep.checks.push_back({"full_orbit_count_matches_conjugation_orbits", counts_match});
  rep.checks.push_back({"canonical_representatives_match", canon_from_orbits == canon_direct});
  rep.checks.push_back(
      {"burnside_count_matches", rep.expected_full == canon_direct.size() &&
                                     rep.expected_full == rep.full_orbit_count});
  rep.fiber_match_verified = constant && counts_match;

  // pointed data comes along for free
  std::sort(seen_vecs.begin(), seen_vecs.end());
  seen_vecs.erase(std::unique(seen_vecs.begin(), seen_vecs.end()), seen_vecs.end());
  rep.pointed_orbit_count = seen_vecs.size();
  rep.pointed_computed = true;

  if (rep.full_orbit_count <= kStoredRepsLimit) {
    rep.representatives.assign(canon_direct.begin(), canon_direct.end());
    rep.reps_complete = true;
  }
  return rep;
}

ClassificationReport classify(GraphPtr graph, GroupPtr group, ClassifyMode mode,
                              unsigned long long cap) {
  if (!graph->is_connected()) fail(ErrC::invalid, "graph is not connected");
  ClassificationReport rep;
  rep.graph_summary = graph_summary(*graph);
  rep.group_summary = group_summary(*group);
  rep.rank = free_rank(*graph);
  const int ord = group->order();
  rep.total_fields = checked_pow(ord, graph->edge_count());
  rep.expected_pointed = checked_pow(ord, rep.rank);
  rep.expected_full = burnside_count(*group, rep.rank);

  if (mode == ClassifyMode::pointed) {
    // one orbit per holonomy vector; the tree-normalized field with those
    // labels on the non-tree edges is the canonical representative
    rep.pointed_orbit_count = rep.expected_pointed;
    rep.pointed_computed = true;
    if (rep.expected_pointed <= kStoredRepsLimit) {
      for_each_tuple(ord, rep.rank,
                     [&](const std::vector<Elem>& t) { rep.representatives.push_back(t); });
      rep.reps_complete = true;
    }
  } else {
    if (rep.expected_pointed > cap)
      fail(ErrC::cap, "full classification would enumerate " +
                          std::to_string(rep.expected_pointed) + " vectors (cap " +
                          std::to_string(cap) + ")");
    std::set<std::vector<Elem>> canon;
    for_each_tuple(ord, rep.rank, [&](const std::vector<Elem>& t) {
      canon.insert(tuple_conj_canonical(*group, t));
    });
    rep.full_orbit_count = canon.size();
    rep.full_computed = true;
    if (rep.full_orbit_count <= kStoredRepsLimit) {
      rep.representatives.assign(canon.begin(), canon.end());
      rep.reps_complete = true;
    }
  }
  return rep;
}

TheoremAReport verify_theorem_A(GraphPtr graph, GroupPtr group, unsigned long long cap,
                                uint64_t seed, int samples) {
  if (!graph->is_connected()) fail(ErrC::invalid, "graph is not connected");
  TheoremAReport rep;
  rep.graph_summary = graph_summary(*graph);
  rep.group_summary = group_summary(*group);
  BundlePtr bundle = std::make_shared<Bundle>(Bundle::trivial(graph->vertex_count(), group));

  unsigned long long total = checked_pow(group->order(), graph->edge_count());
  rep.exhaustive = total <= std::min<unsigned long long>(cap, 4096);
  auto run = [&](const std::vector<Elem>& labels) {
    GaugeField w = GaugeField::from_labels(graph, bundle, labels);
    ReconstructionReport rr = reconstruct(w);
    ++rep.fields_checked;
    if (!rr.ok()) ++rep.failures;
  };
  if (rep.exhaustive) {
    FieldEnumerator en(graph, group, cap);
    std::vector<Elem> labels;
    while (en.next(labels)) run(labels);
  } else {
    std::mt19937_64 rng(seed);
    std::vector<Elem> labels(graph->edge_count());
    for (int i = 0; i < samples; ++i) {
      for (auto& l : labels) l = static_cast<Elem>(rng() % group->order());
      run(labels);
    }
  }
  rep.checks.push_back({"reconstruction", rep.failures == 0});
  return rep;
}

std::vector<Elem> generating_set(const Group& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Elem> gens;
  std::vector<char> closure(g.order(), 0);
  closure[g.identity()] = 1;
  int closed = 1;
  for (Elem cand = 0; cand < g.order() && closed < g.order(); ++cand) {
    if (closure[cand]) continue;
    gens.push_back(cand);
    // grow the closure under products with the new generator set
    std::vector<Elem> queue;
    for (Elem x = 0; x < g.order(); ++x)
      if (closure[x]) queue.push_back(x);
    while (!queue.empty()) {
      Elem x = queue.back();
      queue.pop_back();
      for (Elem s : gens) {
        for (Elem y : {g.op(s, x), g.op(x, s)}) {
          if (!closure[y]) {
            closure[y] = 1;
            ++closed;
            queue.push_back(y);
          }
        }
      }
    }
  }
  return gens;
}

namespace {

// BFS factorization of a subgroup over a generating sequence: every element
// is reached as gens[gi] * prev.
struct SubgroupWords {
  std::vector<Elem> members;                 // BFS order, identity first
  std::vector<Elem> gens;
  std::vector<std::pair<int, int>> parent;   // per BFS position: (gen idx, prev position)
};

SubgroupWords subgroup_words(const Group& g, const std::vector<Elem>& subgroup) {
  std::vector<char> in(g.order(), 0);
  for (Elem a : subgroup) in[a] = 1;
  for (Elem a : subgroup)
    for (Elem b : subgroup)
      if (!in[g.op(a, b)]) fail(ErrC::invalid, "element set is not a subgroup");
  SubgroupWords w;
  if (!in[g.identity()]) fail(ErrC::invalid, "subgroup misses the identity");

  // greedy generators within the subgroup
  std::vector<char> closure(g.order(), 0);
  closure[g.identity()] = 1;
  size_t closed = 1;
  for (Elem cand : subgroup) {
    if (closed == subgroup.size()) break;
    if (closure[cand]) continue;
    w.gens.push_back(cand);
    std::vector<Elem> queue;
    for (Elem x : subgroup)
      if (closure[x]) queue.push_back(x);
    while (!queue.empty()) {
      Elem x = queue.back();
      queue.pop_back();
      for (Elem s : w.gens)
        for (Elem y : {g.op(s, x), g.op(x, s)})
          if (!closure[y]) {
            closure[y] = 1;
            ++closed;
            queue.push_back(y);
          }
    }
  }

  std::vector<int> pos(g.order(), -1);
  w.members.push_back(g.identity());
  w.parent.push_back({-1, -1});
  pos[g.identity()] = 0;
  for (size_t head = 0; head < w.members.size(); ++head) {
    Elem x = w.members[head];
    for (size_t gi = 0; gi < w.gens.size(); ++gi) {
      Elem y = g.op(w.gens[gi], x);
      if (pos[y] < 0) {
        pos[y] = static_cast<int>(w.members.size());
        w.members.push_back(y);
        w.parent.push_back({static_cast<int>(gi), static_cast<int>(head)});
      }
    }
  }
  if (w.members.size() != subgroup.size())
    fail(ErrC::invalid, "generating set does not span the subgroup");
  return w;
}

// Enumerate homomorphisms from the subgroup into target by assigning images
// to the generators and propagating along the BFS words. Returns the image
// tuples on the generator sequence.
std::vector<std::vector<Elem>> enumerate_homs(const Group& gamma,
                                              const SubgroupWords& words, const Group& target,
                                              unsigned long long cap) {
  const size_t k = words.gens.size();
  unsigned long long candidates = checked_pow(target.order(), static_cast<unsigned>(k));
  if (candidates > cap)
    fail(ErrC::cap, "homomorphism search would try " + std::to_string(candidates) +
                        " assignments (cap " + std::to_string(cap) + ")");
  std::vector<std::vector<Elem>> found;
  std::vector<Elem> images(k, 0);
  const size_t s = words.members.size();
  std::vector<Elem> phi(s);
  std::vector<int> pos_of(gamma.order(), -1);
  for (size_t i = 0; i < s; ++i) pos_of[words.members[i]] = static_cast<int>(i);
  for (unsigned long long it = 0; it < candidates; ++it) {
    unsigned long long c = it;
    for (size_t i = k; i-- > 0;) {
      images[i] = static_cast<Elem>(c % target.order());
      c /= target.order();
    }
    phi[0] = target.identity();
    for (size_t i = 1; i < s; ++i)
      phi[i] = target.op(images[words.parent[i].first], phi[words.parent[i].second]);
    bool ok = true;
    for (size_t i = 0; i < s && ok; ++i)
      for (size_t j = 0; j < s && ok; ++j) {
        Elem prod = gamma.op(words.members[i], words.members[j]);
        if (phi[pos_of[prod]] != target.op(phi[i], phi[j])) ok = false;
      }
    if (ok) found.push_back(images);
  }
  return found;
}

}  // namespace

unsigned long long hom_count_subgroup(const Group& gamma, const std::vector<Elem>& subgroup,
                                      const Group& g) {
  SubgroupWords words = subgroup_words(gamma, subgroup);
  return enumerate_homs(gamma, words, g, kDefaultCap).size();
}

EquivariantReport classify_equivariant(const GroupAction& action, GroupPtr group,
                                       unsigned long long cap) {
  if (!action.is_transitive())
    fail(ErrC::invalid,
         "action is not transitive; equivariant classification needs a transitive action");
  const Group& Gamma = action.group();
  const Group& G = *group;
  const int X = action.set_size();
  const int star = action.basepoint();

  EquivariantReport rep;
  rep.action_summary = Gamma.name() + " acting on " + std::to_string(X) +
                       " points, basepoint " + std::to_string(star);
  rep.group_summary = group_summary(G);

  // Hom(Stab(*), G), exhaustively via generator images
  std::vector<Elem> stab = action.stabilizer(star);
  SubgroupWords stab_words = subgroup_words(Gamma, stab);
  std::vector<std::vector<Elem>> homs = enumerate_homs(Gamma, stab_words, G, cap);
  rep.hom_count = homs.size();
  {
    std::set<std::vector<Elem>> canon;
    for (const auto& h : homs) canon.insert(tuple_conj_canonical(G, h));
    rep.hom_conj_count = canon.size();
  }
  rep.expected_cocycles =
      checked_pow(G.order(), static_cast<unsigned>(X - 1)) * rep.hom_count;

  // cocycles by extending generator values, then validating the full identity
  SubgroupWords gamma_words = subgroup_words(Gamma, [&] {
    std::vector<Elem> all(Gamma.order());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  const size_t k = gamma_words.gens.size();
  unsigned long long candidates =
      checked_pow(G.order(), static_cast<unsigned>(k) * static_cast<unsigned>(X));
  if (candidates > cap)
    fail(ErrC::cap, "cocycle search would try " + std::to_string(candidates) +
                        " assignments (cap " + std::to_string(cap) + ")");

  const int ord_gamma = Gamma.order();
  std::vector<std::vector<Elem>> cocycles;
  std::map<std::vector<Elem>, int> index_of;
  std::vector<Elem> lambda(static_cast<size_t>(ord_gamma) * X);
  std::vector<Elem> gen_values(k * X);
  for (unsigned long long it = 0; it < candidates; ++it) {
    unsigned long long c = it;
    for (size_t i = k * X; i-- > 0;) {
      gen_values[i] = static_cast<Elem>(c % G.order());
      c /= G.order();
    }
    // fill along BFS words: l(s p, x) = l(s, p.x) l(p, x)
    for (int x = 0; x < X; ++x) lambda[static_cast<size_t>(Gamma.identity()) * X + x] = G.identity();
    for (size_t i = 1; i < gamma_words.members.size(); ++i) {
      Elem cur = gamma_words.members[i];
      int gi = gamma_words.parent[i].first;
      Elem prev = gamma_words.members[gamma_words.parent[i].second];
      for (int x = 0; x < X; ++x) {
        Elem lp = lambda[static_cast<size_t>(prev) * X + x];
        Elem ls = gen_values[static_cast<size_t>(gi) * X + action.apply(prev, x)];
        lambda[static_cast<size_t>(cur) * X + x] = G.op(ls, lp);
      }
    }
    // generator rows must agree with the candidate values
    bool ok = true;
    for (size_t gi = 0; gi < k && ok; ++gi) {
      Elem s = gamma_words.gens[gi];
      for (int x = 0; x < X; ++x)
        if (lambda[static_cast<size_t>(s) * X + x] != gen_values[gi * X + x]) {
          ok = false;
          break;
        }
    }
    // full cocycle identity
    for (int g2 = 0; g2 < ord_gamma && ok; ++g2)
      for (int g1 = 0; g1 < ord_gamma && ok; ++g1) {
        Elem prod = Gamma.op(g2, g1);
        for (int x = 0; x < X; ++x) {
          Elem lhs = lambda[static_cast<size_t>(prod) * X + x];
          Elem rhs = G.op(lambda[static_cast<size_t>(g2) * X + action.apply(g1, x)],
                          lambda[static_cast<size_t>(g1) * X + x]);
          if (lhs != rhs) {
            ok = false;
            break;
          }
        }
      }
    if (ok && index_of.emplace(lambda, static_cast<int>(cocycles.size())).second)
      cocycles.push_back(lambda);
  }
  rep.cocycle_count = cocycles.size();

  // orbit structure under single-vertex gauge moves
  auto gauge_move = [&](const std::vector<Elem>& lam, int v, Elem kk) {
    std::vector<Elem> out(lam.size());
    for (int gi = 0; gi < ord_gamma; ++gi)
      for (int x = 0; x < X; ++x) {
        Elem l = lam[static_cast<size_t>(gi) * X + x];
        if (action.apply(gi, x) == v) l = G.op(G.inv(kk), l);
        if (x == v) l = G.op(l, kk);
        out[static_cast<size_t>(gi) * X + x] = l;
      }
    return out;
  };
  auto orbit_count = [&](bool pointed) {
    UnionFind uf(cocycles.size());
    for (size_t i = 0; i < cocycles.size(); ++i)
      for (int v = 0; v < X; ++v) {
        if (pointed && v == star) continue;
        for (Elem kk = 0; kk < G.order(); ++kk) {
          if (kk == G.identity()) continue;
          auto it = index_of.find(gauge_move(cocycles[i], v, kk));
          if (it == index_of.end())
            fail(ErrC::invalid, "gauge move left the cocycle set");
          uf.unite(static_cast<int>(i), it->second);
        }
      }
    unsigned long long roots = 0;
    for (size_t i = 0; i < cocycles.size(); ++i)
      if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++roots;
    return std::make_pair(roots, std::move(uf));
  };
  auto [pointed_orbits, pointed_uf] = orbit_count(true);
  rep.pointed_orbit_count = pointed_orbits;
  rep.full_orbit_count = orbit_count(false).first;

  rep.checks.push_back({"cocycle_count_matches", rep.cocycle_count == rep.expected_cocycles});
  rep.checks.push_back({"pointed_orbits_match_homs", rep.pointed_orbit_count == rep.hom_count});
  rep.checks.push_back(
      {"full_orbits_match_hom_classes", rep.full_orbit_count == rep.hom_conj_count});

  // restriction to the stabilizer is a complete pointed-orbit invariant
  bool separation = true;
  {
    std::map<std::vector<Elem>, int> root_of_restriction;
    std::set<std::vector<Elem>> attained;
    for (size_t i = 0; i < cocycles.size(); ++i) {
      std::vector<Elem> restr;
      for (Elem s : stab_words.gens)
        restr.push_back(cocycles[i][static_cast<size_t>(s) * X + star]);
      attained.insert(restr);
      int root = pointed_uf.find(static_cast<int>(i));
      std::vector<Elem> root_restr;
      for (Elem s : stab_words.gens)
        root_restr.push_back(cocycles[root][static_cast<size_t>(s) * X + star]);
      if (restr != root_restr) separation = false;
      auto [it, fresh] = root_of_restriction.emplace(restr, root);
      if (!fresh && it->second != root) separation = false;
    }
    std::set<std::vector<Elem>> hom_set(homs.begin(), homs.end());
    if (attained != hom_set) separation = false;
  }
  rep.checks.push_back({"stabilizer_restriction_separates_orbits", separation});
  return rep;
}

std::vector<Graph> connected_graph_corpus(int max_vertices, int max_edges) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> types;
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) types.emplace_back(u, v);
    int min_m = (n == 1) ? 0 : n - 1;
    for (int m = min_m; m <= max_edges; ++m) {
      std::vector<int> pick(m);
      std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == m) {
          std::vector<std::pair<int, int>> edges;
          edges.reserve(m);
          for (int i = 0; i < m; ++i) edges.push_back(types[pick[i]]);
          Graph g = Graph::build(n, edges, 0);
          if (g.is_connected()) out.push_back(std::move(g));
          return;
        }
        for (int t = lo; t < static_cast<int>(types.size()); ++t) {
          pick[pos] = t;
          rec(pos + 1, t);
        }
      };
      rec(0, 0);
    }
  }
  return out;
}

}  // namespace gg
