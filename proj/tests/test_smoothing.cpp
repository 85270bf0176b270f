#include "doctest.h"

#include "tangletwist/pd.hpp"
#include "tangletwist/rng.hpp"
#include "tangletwist/smoothing.hpp"

using namespace tangletwist;

namespace {
Diagram left_trefoil() { return parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n"); }
}

TEST_CASE("resolve: unknot with empty state") {
  Diagram u = Diagram::unknot();
  CHECK(resolve(u, State{}).circle_count == 1);
}

TEST_CASE("resolve: trefoil all-A circle count (hand-traced oracle)") {
  // Hand trace of the 3-crossing code: A joins (a,b) and (c,d) per crossing,
  // giving circles {1,4}, {2,5}, {3,6} for the left trefoil.
  Diagram d = left_trefoil();
  CHECK(resolve(d, all_A(d)).circle_count == 3);
  CHECK(resolve(d, all_B(d)).circle_count == 2);
}

TEST_CASE("all_A / all_B sigma") {
  Diagram d = left_trefoil();
  CHECK(all_A(d).sigma() == 3);
  CHECK(all_B(d).sigma() == -3);
  // the two special states agree on a crossing only when there are none
  for (int i = 0; i < d.n(); ++i) CHECK(all_A(d).s[static_cast<size_t>(i)] != all_B(d).s[static_cast<size_t>(i)]);
}

TEST_CASE("one-flip property: circle counts differ by exactly 1") {
  Diagram d = left_trefoil();
  Rng rng(12345);
  for (int trial = 0; trial < 64; ++trial) {
    State s = all_A(d);
    for (auto& v : s.s) v = rng.flip() ? 1 : -1;
    int base = resolve(d, s).circle_count;
    for (int i = 0; i < d.n(); ++i) {
      State t = s;
      t.s[static_cast<size_t>(i)] = static_cast<int8_t>(-t.s[static_cast<size_t>(i)]);
      int c = resolve(d, t).circle_count;
      CHECK(std::abs(c - base) == 1);
    }
  }
}

TEST_CASE("adequacy: trefoil is adequate, kink is not") {
  Diagram d = left_trefoil();
  CHECK(is_adequate(d));
  Diagram kink("", {{1, 2, 2, 1}});
  CHECK_FALSE(is_adequate(kink));
  CHECK(is_adequate(d) == is_adequate(mirror(d)));
}

TEST_CASE("adequacy: touch-pair criterion equals enumeration definition") {
  for (auto d : {left_trefoil(), mirror(left_trefoil()), Diagram("", {{1, 2, 2, 1}})}) {
    CHECK(is_A_adequate(d) == is_A_adequate_by_enumeration(d));
    CHECK(is_B_adequate(d) == is_B_adequate_by_enumeration(d));
  }
}

TEST_CASE("resolve: partial state rejected") {
  Diagram d = left_trefoil();
  CHECK_THROWS_AS(resolve(d, State{}), domain_error);
}
