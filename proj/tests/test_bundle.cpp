#include <random>
#include <set>

#include "bundle.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace gg;
using namespace ggtest;

TEST_CASE("trivial bundles") {
  auto G = Z(2);
  Bundle b = Bundle::trivial(3, G);
  CHECK(b.total_size() == 6);
  CHECK(b.base_size() == 3);
  for (int x = 0; x < 3; ++x) CHECK(b.fiber(x).size() == 2);
  CHECK(b.basepoint_lift() == 0);
  // product action: (x, g) . h = (x, gh)
  CHECK(b.act(0, 1) == 1);
  CHECK(b.act(3, 1) == 2);  // point (1,1) . 1 = (1,0)

  Bundle one = Bundle::trivial(1, Z(2));
  CHECK(one.total_size() == 2);

  Bundle s = Bundle::trivial(2, S(3));
  CHECK(s.total_size() == 12);
}

TEST_CASE("explicit bundles validate the torsor axioms") {
  auto G = Z(2);

  SUBCASE("a shuffled product passes") {
    auto g = triangle();
    BundlePtr b = shuffled_bundle(g, G, 7);
    CHECK(b->total_size() == 6);
    for (int z = 0; z < 6; ++z) {
      CHECK(b->act(z, 0) == z);
      CHECK(b->base_of(b->act(z, 1)) == b->base_of(z));
      CHECK(b->act(b->act(z, 1), 1) == z);
    }
  }

  SUBCASE("non-free actions are rejected") {
    // identity works but the involution fixes points
    std::vector<int> point_base{0, 0};
    std::vector<std::vector<int>> action{{0, 0}, {1, 1}};
    CHECK_THROWS_WITH_AS(Bundle::from_tables(G, point_base, action),
                         doctest::Contains("free"), Error);
  }

  SUBCASE("fibers must be single orbits") {
    // two fibers of size 1 over the same base point is no torsor for Z/2
    std::vector<int> point_base{0};
    std::vector<std::vector<int>> action{{0, 0}};
    CHECK_THROWS_AS(Bundle::from_tables(G, point_base, action), Error);
  }

  SUBCASE("explicit basepoint lift re-roots fiber 0") {
    std::vector<int> point_base{0, 0};
    std::vector<std::vector<int>> action{{0, 1}, {1, 0}};
    Bundle b = Bundle::from_tables(G, point_base, action, 1);
    CHECK(b.basepoint_lift() == 1);
    CHECK(b.gamma(0, 1) == 1);
  }
}

TEST_CASE("gamma division") {
  auto G = S(3);
  Bundle b = Bundle::trivial(2, G);

  SUBCASE("gamma(z, z) is the identity") {
    for (int z = 0; z < b.total_size(); ++z) CHECK(b.gamma(z, z) == G->identity());
  }

  SUBCASE("trivial bundle formula h^-1 g") {
    for (int x = 0; x < 2; ++x)
      for (Elem g = 0; g < 6; ++g)
        for (Elem h = 0; h < 6; ++h) {
          int y = x * 6 + g, z = x * 6 + h;
          CHECK(b.gamma(y, z) == G->op(G->inv(h), g));
        }
  }

  SUBCASE("gamma(z.g, z) recovers g") {
    for (int z = 0; z < b.total_size(); ++z)
      for (Elem g = 0; g < 6; ++g) CHECK(b.gamma(b.act(z, g), z) == g);
  }

  SUBCASE("different fibers are rejected") { CHECK_THROWS_AS(b.gamma(0, 6), Error); }
}

TEST_CASE("gauge transformations") {
  auto g = make_graph(3, {{0, 1}, {1, 2}});
  auto G = Z(2);
  BundlePtr b = trivial_bundle(g, G);

  SUBCASE("identity assignment gives the identity map") {
    auto chi = GaugeTransformation::from_vertex_assignment(b, {0, 0, 0});
    for (int z = 0; z < b->total_size(); ++z) CHECK(chi.apply(z) == z);
    CHECK(chi.res() == 0);
    CHECK(chi.is_pointed());
  }

  SUBCASE("assignment acts by left translation on fibers") {
    auto chi = GaugeTransformation::from_vertex_assignment(b, {0, 1, 1});
    // chi(x, g) = (x, a(x) g)
    for (int x = 0; x < 3; ++x)
      for (Elem gg = 0; gg < 2; ++gg) {
        int z = x * 2 + gg;
        Elem a = (x == 0) ? 0 : 1;
        CHECK(chi.apply(z) == x * 2 + G->op(a, gg));
      }
    CHECK(chi.vertex_assignment() == std::vector<Elem>{0, 1, 1});
    CHECK(chi.is_pointed());

    auto moved = GaugeTransformation::from_vertex_assignment(b, {1, 0, 0});
    CHECK(moved.res() == 1);
    CHECK_FALSE(moved.is_pointed());
  }

  SUBCASE("wrong assignment length") {
    CHECK_THROWS_AS(GaugeTransformation::from_vertex_assignment(b, {0, 0}), Error);
  }

  SUBCASE("from_mapping validates") {
    // swap the two points of fiber 0: left translation, hence equivariant
    std::vector<int> m{1, 0, 2, 3, 4, 5};
    auto chi = GaugeTransformation::from_mapping(b, m);
    CHECK(chi.res() == 1);
    // not fiber-preserving
    CHECK_THROWS_AS(GaugeTransformation::from_mapping(b, {2, 3, 0, 1, 4, 5}), Error);
    // not a bijection
    CHECK_THROWS_AS(GaugeTransformation::from_mapping(b, {0, 0, 2, 3, 4, 5}), Error);
    // not equivariant: a fiber transposition that is no left translation
    BundlePtr s3b = std::make_shared<Bundle>(Bundle::trivial(1, S(3)));
    CHECK_THROWS_WITH_AS(GaugeTransformation::from_mapping(s3b, {1, 0, 2, 3, 4, 5}),
                         doctest::Contains("equivariant"), Error);
  }
}

TEST_CASE("gauge composition law and res homomorphism") {
  auto g = make_graph(2, {{0, 1}});
  auto G = S(3);
  BundlePtr b = trivial_bundle(g, G);

  SUBCASE("compose of assignments is the pointwise product") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      auto a1 = random_labels(rng, 2, 6);
      auto a2 = random_labels(rng, 2, 6);
      auto chi1 = GaugeTransformation::from_vertex_assignment(b, a1);
      auto chi2 = GaugeTransformation::from_vertex_assignment(b, a2);
      auto composed = chi1.compose(chi2);
      CHECK(composed.vertex_assignment() ==
            std::vector<Elem>{G->op(a1[0], a2[0]), G->op(a1[1], a2[1])});
      CHECK(chi1.compose(chi1.inverse()).vertex_assignment() ==
            std::vector<Elem>(2, G->identity()));
    }
  }

  SUBCASE("gamma(chi1 chi2 (z), z) = gamma(chi1(z), z) gamma(chi2(z), z)") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      auto chi1 = GaugeTransformation::from_vertex_assignment(b, random_labels(rng, 2, 6));
      auto chi2 = GaugeTransformation::from_vertex_assignment(b, random_labels(rng, 2, 6));
      auto comp = chi1.compose(chi2);
      for (int z = 0; z < b->total_size(); ++z) {
        CHECK(b->gamma(comp.apply(z), z) ==
              G->op(b->gamma(chi1.apply(z), z), b->gamma(chi2.apply(z), z)));
        CHECK(b->gamma(chi1.inverse().apply(z), z) == G->inv(b->gamma(chi1.apply(z), z)));
      }
    }
  }

  SUBCASE("res is a homomorphism over the whole gauge group") {
    // |gauge group| = 6^2 = 36; check all pairs
    std::vector<GaugeTransformation> all;
    GaugeEnumerator en(b, false);
    std::vector<Elem> a;
    while (en.next(a)) all.push_back(GaugeTransformation::from_vertex_assignment(b, a));
    CHECK(all.size() == 36);
    for (const auto& c1 : all)
      for (const auto& c2 : all)
        CHECK(c1.compose(c2).res() == G->op(c1.res(), c2.res()));
  }

  SUBCASE("res is onto and kernel has the right size") {
    std::set<Elem> image;
    int pointed = 0;
    GaugeEnumerator en(b, false);
    std::vector<Elem> a;
    int total = 0;
    while (en.next(a)) {
      auto chi = GaugeTransformation::from_vertex_assignment(b, a);
      image.insert(chi.res());
      if (chi.is_pointed()) ++pointed;
      ++total;
    }
    CHECK(total == 36);             // |G|^base
    CHECK(image.size() == 6);       // surjective
    CHECK(pointed == 6);            // |G|^(base-1)
    CHECK(total == pointed * static_cast<int>(image.size()));
  }

  SUBCASE("pointed enumerator pins the basepoint assignment") {
    GaugeEnumerator en(b, true);
    std::vector<Elem> a;
    int count = 0;
    while (en.next(a)) {
      CHECK(a[0] == G->identity());
      ++count;
    }
    CHECK(count == 6);
  }
}

TEST_CASE("gauge groupoid") {
  SUBCASE("one object, group-sized vertex group") {
    auto G = Z(2);
    Bundle b = Bundle::trivial(1, G);
    FiniteGroupoid ee = gauge_groupoid(b);
    CHECK(ee.object_count() == 1);
    CHECK(ee.morphism_count() == 2);
    ee.validate();
  }

  SUBCASE("identity morphisms are neutral and morphism count is base^2 |G|") {
    auto G = Z(3);
    Bundle b = Bundle::trivial(2, G);
    FiniteGroupoid ee = gauge_groupoid(b);
    CHECK(ee.morphism_count() == 2 * 2 * 3);
    ee.validate();
    for (int m = 0; m < ee.morphism_count(); ++m) {
      CHECK(ee.compose(m, ee.identity(ee.alpha(m))) == m);
      CHECK(ee.compose(ee.identity(ee.beta(m)), m) == m);
    }
    CHECK(ee.is_transitive());
  }

  SUBCASE("groupoid axioms hold exhaustively on small bundles") {
    gauge_groupoid(Bundle::trivial(2, Z(2))).validate();
    gauge_groupoid(Bundle::trivial(3, Z(2))).validate();
    gauge_groupoid(Bundle::trivial(2, Z(3))).validate();
    gauge_groupoid(Bundle::trivial(1, S(3))).validate();
    gauge_groupoid(Bundle::trivial(2, S(3))).validate();
    auto shuffled = shuffled_bundle(triangle(), Z(2), 99);
    gauge_groupoid(*shuffled).validate();
  }

  SUBCASE("orbit identification and canonical form") {
    auto G = S(3);
    Bundle b = Bundle::trivial(2, G);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      int a = static_cast<int>(rng() % b.total_size());
      int z = static_cast<int>(rng() % b.total_size());
      Elem k = static_cast<Elem>(rng() % 6);
      // <a.g, z.g> is the same element
      CHECK(make_ee_element(b, a, z) == make_ee_element(b, b.act(a, k), b.act(z, k)));
    }
  }

  SUBCASE("vertex group at the basepoint is G via g -> <lift.g, lift>") {
    auto G = S(3);
    Bundle b = Bundle::trivial(2, G);
    FiniteGroupoid ee = gauge_groupoid(b);
    int lift = b.basepoint_lift();
    std::set<int> images;
    for (Elem g = 0; g < 6; ++g)
      images.insert(ee_morphism_id(b, make_ee_element(b, b.act(lift, g), lift)));
    CHECK(images.size() == 6);
    std::vector<int> vg = ee.vertex_group(0);
    CHECK(vg.size() == 6);
    for (int m : vg) CHECK(images.count(m) == 1);
    // the map is a homomorphism into the vertex group
    for (Elem g = 0; g < 6; ++g)
      for (Elem h = 0; h < 6; ++h) {
        int mg = ee_morphism_id(b, make_ee_element(b, b.act(lift, g), lift));
        int mh = ee_morphism_id(b, make_ee_element(b, b.act(lift, h), lift));
        int mgh = ee_morphism_id(b, make_ee_element(b, b.act(lift, G->op(g, h)), lift));
        CHECK(ee.compose(mg, mh) == mgh);
      }
  }
}
