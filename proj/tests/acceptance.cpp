// Acceptance suite: exhaustive classification checks over every connected
// multigraph with at most 4 vertices and 5 edges, against the groups Z/2,
// Z/3, Z/4 and S3, plus seeded property checks. Prints one line per
// criterion; the exit code is the number of failed criteria.

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "classify.hpp"
#include "formats.hpp"
#include "gauge_field.hpp"

using namespace gg;

namespace {

struct Line {
  int number;
  std::string name;
  bool passed;
  std::string detail;
};
std::vector<Line> lines;

void criterion(int number, const std::string& name, bool passed, const std::string& detail) {
  lines.push_back({number, name, passed, detail});
}

int flush_lines() {
  std::sort(lines.begin(), lines.end(),
            [](const Line& a, const Line& b) { return a.number < b.number; });
  int failures = 0;
  for (const Line& l : lines) {
    std::printf("criterion %d (%s): %s%s\n", l.number, l.name.c_str(),
                l.passed ? "PASS" : "FAIL",
                l.passed || l.detail.empty() ? "" : (" - " + l.detail).c_str());
    if (!l.passed) ++failures;
  }
  return failures;
}

struct Corpus {
  std::vector<GraphPtr> graphs;
  std::vector<GroupPtr> groups;
};

Corpus build_corpus() {
  Corpus c;
  for (Graph& g : connected_graph_corpus(4, 5))
    c.graphs.push_back(std::make_shared<Graph>(std::move(g)));
  c.groups.push_back(std::make_shared<Group>(Group::cyclic(2)));
  c.groups.push_back(std::make_shared<Group>(Group::cyclic(3)));
  c.groups.push_back(std::make_shared<Group>(Group::cyclic(4)));
  c.groups.push_back(std::make_shared<Group>(Group::symmetric(3)));
  return c;
}

GaugeField random_field(std::mt19937_64& rng, const GraphPtr& g, const GroupPtr& G,
                        const BundlePtr& b) {
  std::vector<Elem> labels(g->edge_count());
  for (auto& l : labels) l = static_cast<Elem>(rng() % G->order());
  return GaugeField::from_labels(g, b, labels);
}

std::vector<Elem> random_assignment(std::mt19937_64& rng, int n, int order) {
  std::vector<Elem> a(n);
  for (auto& x : a) x = static_cast<Elem>(rng() % order);
  return a;
}

}  // namespace

int main() {
  Corpus corpus = build_corpus();
  std::printf("corpus: %zu connected graphs (n <= 4, m <= 5), %zu groups\n",
              corpus.graphs.size(), corpus.groups.size());

  // criteria 1 and 3 share one exhaustive pass per instance
  {
    long long instances = 0, count_bad = 0, free_bad = 0, fiber_bad = 0, onto_bad = 0;
    std::string first_bad;
    for (const auto& g : corpus.graphs)
      for (const auto& G : corpus.groups) {
        ClassificationReport rep = verify_theorem_B(g, G);
        ++instances;
        if (rep.pointed_orbit_count != rep.expected_pointed) ++count_bad;
        if (!rep.free_action_verified) ++free_bad;
        if (!rep.fiber_match_verified) ++fiber_bad;
        bool onto = false, counting = false;
        for (const auto& chk : rep.checks) {
          if (chk.name == "holonomy_onto_all_vectors") onto = chk.passed;
          if (chk.name == "counting_identity") counting = chk.passed;
        }
        if (!onto) ++onto_bad;
        if (!counting) ++count_bad;
        if ((count_bad || free_bad || fiber_bad || onto_bad) && first_bad.empty())
          first_bad = rep.graph_summary + " / " + rep.group_summary;
      }
    criterion(1, "pointed orbit count equals |G|^(1-chi) on the whole corpus", count_bad == 0,
              count_bad ? std::to_string(count_bad) + " of " + std::to_string(instances) +
                              " instances failed, first: " + first_bad
                        : "");
    criterion(3, "pointed gauge action free, holonomy separates and is onto",
              free_bad + fiber_bad + onto_bad == 0,
              "free " + std::to_string(free_bad) + ", fiber " + std::to_string(fiber_bad) +
                  ", onto " + std::to_string(onto_bad) + ", first: " + first_bad);
  }

  // criterion 2: full orbits match conjugation orbits and the Burnside count
  {
    long long bad = 0, instances = 0;
    std::string first_bad;
    for (const auto& g : corpus.graphs)
      for (const auto& G : corpus.groups) {
        ClassificationReport rep = verify_theorem_C(g, G);
        ++instances;
        if (!rep.all_passed() || rep.full_orbit_count != rep.expected_full) {
          ++bad;
          if (first_bad.empty()) first_bad = rep.graph_summary + " / " + rep.group_summary;
        }
      }
    criterion(2, "full orbit count equals conjugation orbits and Burnside count", bad == 0,
              bad ? std::to_string(bad) + " of " + std::to_string(instances) +
                        " instances failed, first: " + first_bad
                  : "");
  }

  // criterion 4: reconstruction on 100 seeded random fields across the corpus
  {
    std::mt19937_64 rng(0xA11CE);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const auto& g = corpus.graphs[rng() % corpus.graphs.size()];
      const auto& G = corpus.groups[rng() % corpus.groups.size()];
      BundlePtr b = std::make_shared<Bundle>(Bundle::trivial(g->vertex_count(), G));
      GaugeField w = random_field(rng, g, G, b);
      if (!reconstruct(w).ok()) ++bad;
    }
    criterion(4, "associated-bundle reconstruction on 100 seeded fields", bad == 0,
              std::to_string(bad) + " failures");
  }

  // criterion 5: holonomy conjugation law on 500 seeded (field, gauge) pairs
  {
    std::mt19937_64 rng(0xC0117);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
      const auto& g = corpus.graphs[rng() % corpus.graphs.size()];
      const auto& G = corpus.groups[rng() % corpus.groups.size()];
      BundlePtr b = std::make_shared<Bundle>(Bundle::trivial(g->vertex_count(), G));
      GaugeField w = random_field(rng, g, G, b);
      auto chi = GaugeTransformation::from_vertex_assignment(
          b, random_assignment(rng, g->vertex_count(), G->order()));
      SpanningTree t = spanning_tree(*g);
      Elem r = chi.res();
      std::vector<Elem> before = w.holonomy_vector(t);
      std::vector<Elem> after = w.gauge_act(chi).holonomy_vector(t);
      for (size_t k = 0; k < before.size(); ++k)
        if (after[k] != G->op(G->op(G->inv(r), before[k]), r)) {
          ++bad;
          break;
        }
    }
    criterion(5, "gauge action conjugates holonomy by res on 500 seeded pairs", bad == 0,
              std::to_string(bad) + " failures");
  }

  // criterion 6: representation <-> morphism bijection on 100 seeded fields
  {
    std::mt19937_64 rng(0x4EF70);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const auto& g = corpus.graphs[rng() % corpus.graphs.size()];
      const auto& G = corpus.groups[rng() % corpus.groups.size()];
      BundlePtr b = std::make_shared<Bundle>(Bundle::trivial(g->vertex_count(), G));
      GaugeField w = random_field(rng, g, G, b);
      if (!(morphism_to_rep(g, b, rep_to_morphism(w)) == w)) ++bad;
    }
    criterion(6, "morphism correspondence round-trips 100 seeded fields", bad == 0,
              std::to_string(bad) + " failures");
  }

  // criterion 7: confluence of free reduction on 10^4 seeded walks
  {
    std::mt19937_64 rng(0x5EED);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
      int n = 1 + static_cast<int>(rng() % 5);
      int m = static_cast<int>(rng() % 7);
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < m; ++e)
        edges.emplace_back(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
      Graph g = Graph::build(n, edges, 0);
      int len = static_cast<int>(rng() % 13);
      int at = static_cast<int>(rng() % n);
      std::vector<int> darts;
      for (int s = 0; s < len; ++s) {
        const auto& out = g.darts_from(at);
        if (out.empty()) break;
        int d = out[rng() % out.size()];
        darts.push_back(d);
        at = g.target(d);
      }
      int start = darts.empty() ? at : g.source(darts.front());
      EdgePath p(g, darts, start);
      ReducedPath a = reduce_path_scan(g, p, CancelOrder::leftmost);
      ReducedPath b = reduce_path_scan(g, p, CancelOrder::rightmost);
      if (!(a == b) || !(reduce_path(g, p) == a)) ++bad;
    }
    criterion(7, "leftmost and rightmost reduction agree on 10000 seeded walks", bad == 0,
              std::to_string(bad) + " disagreements");
  }

  // criterion 8: equivariant cocycle and orbit counts for three actions
  {
    std::vector<std::pair<std::string, GroupAction>> actions;
    actions.emplace_back("Z/2 swap",
                         parse_action_text("action 2 0\ncyclic 2\n0 1\n1 0\n", "swap"));
    actions.emplace_back(
        "Z/3 rotation",
        parse_action_text("action 3 0\ncyclic 3\n0 1 2\n1 2 0\n2 0 1\n", "rot"));
    actions.emplace_back(
        "S3 natural",
        parse_action_text(
            "action 3 0\nsymmetric 3\n0 1 2\n0 2 1\n1 0 2\n1 2 0\n2 0 1\n2 1 0\n", "nat"));
    std::vector<GroupPtr> targets = {std::make_shared<Group>(Group::cyclic(2)),
                                     std::make_shared<Group>(Group::symmetric(3))};
    int bad = 0;
    std::string detail;
    for (const auto& [name, act] : actions)
      for (const auto& G : targets) {
        EquivariantReport rep = classify_equivariant(act, G);
        unsigned long long expected =
            checked_pow(G->order(), static_cast<unsigned>(act.set_size() - 1)) * rep.hom_count;
        bool ok = rep.all_passed() && rep.cocycle_count == expected &&
                  rep.pointed_orbit_count == rep.hom_count;
        if (!ok) {
          ++bad;
          if (detail.empty()) detail = name + " with " + G->name();
        }
      }
    criterion(8, "equivariant cocycle and pointed orbit counts for 3 actions x 2 groups",
              bad == 0, detail);
  }

  // criterion 9: pinned fixture numbers
  {
    bool ok = true;
    std::string detail;
    auto expect = [&](bool cond, const std::string& what) {
      if (!cond) {
        ok = false;
        if (detail.empty()) detail = what;
      }
    };

    auto theta = std::make_shared<Graph>(Graph::build(2, {{0, 1}, {0, 1}, {0, 1}}, 0));
    auto z2 = std::make_shared<Group>(Group::cyclic(2));
    ClassificationReport tb = verify_theorem_B(theta, z2);
    ClassificationReport tc = verify_theorem_C(theta, z2);
    expect(tb.total_fields == 8, "theta/Z2 field count");
    expect(tb.pointed_orbit_count == 4, "theta/Z2 pointed orbits");
    expect(tc.full_orbit_count == 4, "theta/Z2 full orbits");

    auto bouquet1 = std::make_shared<Graph>(Graph::build(1, {{0, 0}}, 0));
    auto s3 = std::make_shared<Group>(Group::symmetric(3));
    ClassificationReport bb = verify_theorem_B(bouquet1, s3);
    ClassificationReport bc = verify_theorem_C(bouquet1, s3);
    expect(bb.total_fields == 6, "bouquet1/S3 field count");
    expect(bb.pointed_orbit_count == 6, "bouquet1/S3 pointed orbits");
    expect(bc.full_orbit_count == 3, "bouquet1/S3 full orbits");

    std::vector<GraphPtr> trees = {
        std::make_shared<Graph>(Graph::build(1, {}, 0)),
        std::make_shared<Graph>(Graph::build(2, {{0, 1}}, 0)),
        std::make_shared<Graph>(Graph::build(4, {{0, 1}, {1, 2}, {1, 3}}, 0)),
    };
    for (const auto& t : trees)
      for (const auto& G : corpus.groups) {
        ClassificationReport r = verify_theorem_B(t, G);
        expect(r.pointed_orbit_count == 1, "tree pointed orbit count");
      }

    criterion(9, "pinned fixture numbers (theta/Z2, bouquet/S3, trees)", ok, detail);
  }

  int failures = flush_lines();
  std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
  return failures;
}
