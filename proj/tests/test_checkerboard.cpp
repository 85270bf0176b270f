#include "doctest.h"

#include <set>

#include "tangletwist/catalog.hpp"
#include "tangletwist/checkerboard.hpp"
#include "tangletwist/rng.hpp"
#include "tangletwist/twist.hpp"

using namespace tangletwist;

TEST_CASE("two_coloring: unknot has one white and one black face") {
  Coloring c = two_coloring(Diagram::unknot());
  REQUIRE(c.color.size() == 2);
  CHECK(c.color[0] != c.color[1]);
}

TEST_CASE("two_coloring: trefoil 5 faces properly colored, deterministic seed") {
  Diagram d = catalog_diagram("trefoil");
  Coloring c = two_coloring(d);
  REQUIRE(static_cast<int>(c.color.size()) == d.face_count());
  for (int a = 1; a <= d.arc_count(); ++a) CHECK(c.at(d.left_face(a)) != c.at(d.right_face(a)));
  CHECK(c.at(d.left_face(1)) == FaceColor::white);
  // flipping the seed color yields the complementary coloring
  Coloring f = c.flipped();
  for (int i = 0; i < d.face_count(); ++i) CHECK(f.color[static_cast<size_t>(i)] != c.color[static_cast<size_t>(i)]);
}

TEST_CASE("enhanced_digraph: one edge per crossing, endpoints share a color") {
  for (const char* key : {"trefoil", "figure8", "10_152"}) {
    Diagram d = catalog_diagram(key);
    SignedDigraph g = enhanced_digraph(d, two_coloring(d));
    CHECK(static_cast<int>(g.edges.size()) == d.n());
    for (const auto& e : g.edges) CHECK(g.color[static_cast<size_t>(e.tail)] == g.color[static_cast<size_t>(e.head)]);
  }
}

TEST_CASE("enhanced_digraph: mirror flips edge signs, keeps directions") {
  Diagram d = catalog_diagram("figure8");
  SignedDigraph g = enhanced_digraph(d, two_coloring(d));
  SignedDigraph gm = enhanced_digraph(mirror(d), two_coloring(mirror(d)));
  REQUIRE(g.edges.size() == gm.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) CHECK(gm.edges[i].sign == -g.edges[i].sign);
}

TEST_CASE("digraph_is_alternative: trivial sign cases") {
  SignedDigraph g;
  g.nv = 3;
  g.color.assign(3, FaceColor::white);
  g.edges = {{0, 1, 1, 0}, {1, 2, 1, 1}};
  CHECK(digraph_is_alternative(g));  // all positive
  g.edges[1].sign = -1;              // path with signs (+,-): the walk e then f is mixed
  CHECK_FALSE(digraph_is_alternative(g));
  // opposite-sign edges out of reach of one another
  SignedDigraph h;
  h.nv = 4;
  h.color.assign(4, FaceColor::white);
  h.edges = {{0, 1, 1, 0}, {2, 3, -1, 1}, {3, 0, 1, 2}};
  // walk - then + exists (2->3 then 3->0), so still mixed
  CHECK_FALSE(digraph_is_alternative(h));
  SignedDigraph k;
  k.nv = 3;
  k.color.assign(3, FaceColor::white);
  k.edges = {{0, 1, 1, 0}, {2, 1, -1, 1}};
  CHECK(digraph_is_alternative(k));  // no directed walk joins them head-to-tail
  CHECK_FALSE(digraph_is_alternative(k, WalkMode::semi));  // semi-walks may reverse edges
}

TEST_CASE("digraph_is_alternative: reachability formulation equals brute-force walks") {
  Rng rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    SignedDigraph g;
    g.nv = 2 + static_cast<int>(rng.below(4));
    g.color.assign(static_cast<size_t>(g.nv), FaceColor::white);
    int m = 1 + static_cast<int>(rng.below(8));
    for (int e = 0; e < m; ++e)
      g.edges.push_back({static_cast<int>(rng.below(static_cast<uint64_t>(g.nv))),
                         static_cast<int>(rng.below(static_cast<uint64_t>(g.nv))), rng.flip() ? 1 : -1, e});
    // brute force: grow all walks up to length |E| tracking (vertex, signs seen)
    bool mixed = false;
    struct Stt {
      int v;
      bool pos, neg;
    };
    std::set<std::tuple<int, bool, bool>> seen;
    std::vector<Stt> frontier;
    for (const auto& e : g.edges) frontier.push_back({e.head, e.sign > 0, e.sign < 0});
    for (auto& s : frontier) seen.insert({s.v, s.pos, s.neg});
    for (int step = 1; step < static_cast<int>(g.edges.size()) + g.nv && !mixed; ++step) {
      std::vector<Stt> next;
      for (const auto& s : frontier) {
        if (s.pos && s.neg) mixed = true;
        for (const auto& e : g.edges)
          if (e.tail == s.v) {
            Stt t{e.head, s.pos || e.sign > 0, s.neg || e.sign < 0};
            if (t.pos && t.neg) mixed = true;
            if (seen.insert({t.v, t.pos, t.neg}).second) next.push_back(t);
          }
      }
      frontier = std::move(next);
    }
    for (const auto& s : frontier)
      if (s.pos && s.neg) mixed = true;
    CAPTURE(trial);
    CHECK(digraph_is_alternative(g) == !mixed);
  }
}

TEST_CASE("is_alternative: catalog facts and mirror invariance") {
  CHECK(is_alternative(catalog_diagram("trefoil")));
  CHECK(is_alternative(catalog_diagram("figure8")));
  CHECK(is_alternative(catalog_diagram("10_152")));
  Diagram bad = braid_closure({1, 2, -1, 2}, 3);
  CHECK_FALSE(is_alternative(bad));
  for (const char* key : {"trefoil", "figure8", "pretzel-2-2-m2-m2", "10_152"}) {
    Diagram d = catalog_diagram(key);
    CHECK(is_alternative(d) == is_alternative(mirror(d)));
  }
  CHECK(is_alternative(bad) == is_alternative(mirror(bad)));
}
