#include "doctest.h"

#include "tangletwist/catalog.hpp"
#include "tangletwist/seifert.hpp"
#include "tangletwist/twist.hpp"

using namespace tangletwist;

namespace {
Diagram right_trefoil() { return catalog_diagram("trefoil-right"); }
}

TEST_CASE("seifert_circles: counts") {
  CHECK(seifert_circles(Diagram::unknot()).count == 1);
  CHECK(seifert_circles(right_trefoil()).count == 2);
  // figure-eight standard diagram has 3 Seifert circles
  CHECK(seifert_circles(catalog_diagram("figure8")).count == 3);
}

namespace {

// The diagram with every component's orientation reversed: arc labels are
// renumbered to ascend along the new direction and each tuple starts at the
// new incoming under-strand (the old outgoing one).
Diagram reversed(const Diagram& d) {
  auto relabel = [&](int arc) {
    auto [lo, hi] = d.components()[static_cast<size_t>(d.component_of(arc))];
    return lo + (hi - arc);
  };
  std::vector<std::array<int, 4>> tuples;
  for (const auto& c : d.crossings()) {
    const auto& a = c.arcs;
    tuples.push_back({relabel(a[2]), relabel(a[3]), relabel(a[0]), relabel(a[1])});
  }
  return Diagram(d.name(), std::move(tuples), d.loop_count());
}

}  // namespace

TEST_CASE("seifert_circles: independent of global orientation reversal") {
  for (const char* key : {"trefoil-right", "figure8", "10_152"}) {
    Diagram d = catalog_diagram(key);
    Diagram r = reversed(d);
    REQUIRE(r.structurally_ok());
    CHECK(seifert_circles(r).count == seifert_circles(d).count);
    // reversal also keeps writhe signs, hence the whole Seifert graph classes
    CHECK(is_homogeneous(r) == is_homogeneous(d));
    CHECK(is_positive(r) == is_positive(d));
  }
  Diagram d = right_trefoil();
  CHECK(seifert_circles(d).count == seifert_circles(mirror(d)).count);
}

TEST_CASE("seifert_graph: right trefoil is 2 vertices with 3 positive parallel edges") {
  SignedGraph g = seifert_graph(right_trefoil());
  CHECK(g.nv == 2);
  CHECK(g.ne() == 3);
  for (const auto& e : g.edges) {
    CHECK(e.sign == +1);
    CHECK(e.u != e.v);
  }
}

TEST_CASE("seifert_graph: edge count equals crossing count, mirror flips signs") {
  for (const char* key : {"trefoil", "figure8", "pretzel-2-2-m2-m2", "10_152"}) {
    Diagram d = catalog_diagram(key);
    SignedGraph g = seifert_graph(d);
    CHECK(g.ne() == d.n());
    SignedGraph gm = seifert_graph(mirror(d));
    REQUIRE(gm.ne() == g.ne());
    for (int i = 0; i < g.ne(); ++i)
      CHECK(gm.edges[static_cast<size_t>(i)].sign == -g.edges[static_cast<size_t>(i)].sign);
  }
}

TEST_CASE("blocks of the figure-eight Seifert graph: two blocks of opposite uniform sign") {
  SignedGraph g = seifert_graph(catalog_diagram("figure8"));
  auto dec = blocks(g);
  REQUIRE(dec.blocks.size() == 2);
  int s0 = g.edges[static_cast<size_t>(dec.blocks[0][0])].sign;
  int s1 = g.edges[static_cast<size_t>(dec.blocks[1][0])].sign;
  for (int e : dec.blocks[0]) CHECK(g.edges[static_cast<size_t>(e)].sign == s0);
  for (int e : dec.blocks[1]) CHECK(g.edges[static_cast<size_t>(e)].sign == s1);
  CHECK(s0 == -s1);
}

TEST_CASE("is_homogeneous: catalog facts") {
  CHECK(is_homogeneous(right_trefoil()));
  CHECK(is_homogeneous(catalog_diagram("figure8")));
  CHECK(is_homogeneous(catalog_diagram("10_152")));
  // a 4-crossing diagram with a mixed 2-connected block
  Diagram bad = braid_closure({1, 2, -1, 2}, 3, "mixed");
  REQUIRE(bad.connected());
  CHECK_FALSE(is_homogeneous(bad));
}

TEST_CASE("is_homogeneous: mirror invariance") {
  for (const char* key : {"trefoil", "figure8", "pretzel-2-2-m2-m2", "10_152"}) {
    Diagram d = catalog_diagram(key);
    CHECK(is_homogeneous(d) == is_homogeneous(mirror(d)));
  }
  Diagram bad = braid_closure({1, 2, -1, 2}, 3);
  CHECK(is_homogeneous(bad) == is_homogeneous(mirror(bad)));
}

TEST_CASE("is_positive") {
  CHECK(is_positive(right_trefoil()));
  CHECK_FALSE(is_positive(catalog_diagram("trefoil")));
  CHECK_FALSE(is_positive(catalog_diagram("figure8")));
  CHECK(is_positive(catalog_diagram("10_152")));
  // positive implies homogeneous on the catalog
  for (const char* key : {"trefoil-right", "10_152"}) {
    Diagram d = catalog_diagram(key);
    if (is_positive(d)) CHECK(is_homogeneous(d));
  }
}

TEST_CASE("block decomposition partitions the Seifert edge set") {
  for (const char* key : {"figure8", "pretzel-2-2-m2-m2", "10_152"}) {
    SignedGraph g = seifert_graph(catalog_diagram(key));
    auto dec = blocks(g);
    size_t total = 0;
    for (auto& b : dec.blocks) total += b.size();
    CHECK(total == static_cast<size_t>(g.ne()));
  }
}
