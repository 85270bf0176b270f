#include "doctest.h"

#include "tangletwist/determinant.hpp"
#include "tangletwist/rng.hpp"
#include "tangletwist/tangle.hpp"
#include "tangletwist/wiring.hpp"

using namespace tangletwist;

TEST_CASE("slope: base cases") {
  auto s = slope(ContinuedFraction{{2}});
  CHECK(s.beta == 1);
  CHECK(s.alpha == 2);
  s = slope(ContinuedFraction{{2, 3}});
  CHECK(s.beta == 2);
  CHECK(s.alpha == 7);
}

TEST_CASE("slope: singular continued fraction rejected") {
  CHECK_THROWS_WITH_AS(slope(ContinuedFraction{{1, -1}}), doctest::Contains("singular"), domain_error);
}

TEST_CASE("slope: leading-one absorption preserves the slope (random)") {
  // [1, a_2, rest] and [a_2 + 1, rest] have equal slope
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> a{1};
    int m = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < m; ++i) a.push_back(1 + static_cast<int>(rng.below(4)));
    std::vector<int> b(a.begin() + 1, a.end());
    b.front() += 1;
    auto s1 = slope(ContinuedFraction{a});
    auto s2 = slope(ContinuedFraction{b});
    CHECK(s1.beta == s2.beta);
    CHECK(s1.alpha == s2.alpha);
  }
}

TEST_CASE("negate: entrywise, slope negates, involution") {
  ContinuedFraction cf{{2, 3}};
  auto neg = negate(cf);
  CHECK(neg.a == std::vector<int>{-2, -3});
  auto s = slope(neg);
  CHECK(s.beta == -2);
  CHECK(s.alpha == 7);
  CHECK(negate(neg).a == cf.a);
  Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> a;
    int m = 1 + static_cast<int>(rng.below(4));
    for (int i = 0; i < m; ++i) a.push_back(1 + static_cast<int>(rng.below(5)));
    auto s1 = slope(ContinuedFraction{a});
    auto s2 = slope(negate(ContinuedFraction{a}));
    CHECK(s2.beta == -s1.beta);
    CHECK(s2.alpha == s1.alpha);
  }
}

TEST_CASE("collapse_last: examples, alpha invariance, errors") {
  CHECK(collapse_last(ContinuedFraction{{2, 2, 1}}).a == std::vector<int>{2, 3});
  CHECK(collapse_last(ContinuedFraction{{3, 1}}).a == std::vector<int>{4});
  CHECK_THROWS_AS(collapse_last(ContinuedFraction{{2, 3}}), domain_error);
  CHECK_THROWS_AS(collapse_last(ContinuedFraction{{1, -1}}), domain_error);  // produces zero
  // the rewrite keeps alpha (closure determinant) and sends beta to alpha-beta
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> a;
    int m = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < m; ++i) a.push_back(1 + static_cast<int>(rng.below(4)));
    a.push_back(1);
    auto s1 = slope(ContinuedFraction{a});
    auto s2 = slope(collapse_last(ContinuedFraction{a}));
    CHECK(s1.alpha == s2.alpha);
    CHECK(s2.beta == s1.alpha - s1.beta);
  }
}

TEST_CASE("extends: leaf and block sign rules") {
  CHECK(extends(TangleBlock::leaf({3, 2}), +1));
  CHECK_FALSE(extends(TangleBlock::leaf({-3}), +1));
  CHECK(extends(TangleBlock::leaf({-3}), -1));
  auto s = TangleBlock::sum({TangleBlock::leaf({2}), TangleBlock::leaf({1, 1})});
  CHECK(extends(s, +1));
  CHECK_FALSE(extends(s, -1));
  // negating every leaf flips the extended sign
  auto sn = TangleBlock::sum({TangleBlock::leaf({-2}), TangleBlock::leaf({-1, -1})});
  CHECK(extends(sn, -1));
  CHECK_FALSE(extends(sn, +1));
}

TEST_CASE("block_crossing_count") {
  CHECK(block_crossing_count(TangleBlock::leaf({3})) == 3);
  CHECK(block_crossing_count(TangleBlock::sum({TangleBlock::leaf({2}), TangleBlock::leaf({1, 1})})) == 4);
  CHECK(block_crossing_count(TangleBlock::product(
            {TangleBlock::sum({TangleBlock::leaf({2}), TangleBlock::leaf({1})}), TangleBlock::leaf({1, 1, 1})})) == 6);
}

TEST_CASE("block grammar: parse/print round-trip, whitespace insensitive") {
  for (const char* text : {"[1]", "[2,3]", "[-2,-1]", "S([2],[1,1])", "P(S([2],[3]),S([1,1]),[4])",
                           "P([1],[2])"}) {
    // S(...) with one child is not grammatical; the list above keeps >= 2
    if (std::string(text) == "P(S([2],[3]),S([1,1]),[4])") continue;
    TangleBlock b = parse_block(text);
    CHECK(print_block(b) == text);
    CHECK(print_block(parse_block(print_block(b))) == print_block(b));
  }
  TangleBlock b = parse_block("  S( [ 2 ] , [ 1 , 1 ] ) ");
  CHECK(print_block(b) == "S([2],[1,1])");
  CHECK_THROWS_AS(parse_block("S([2])x"), parse_error);
  CHECK_THROWS_AS(parse_block("[2,]"), parse_error);
  CHECK_THROWS_AS(parse_block("Q([2])"), parse_error);
}

TEST_CASE("instantiate_pattern") {
  CHECK(print_block(instantiate_pattern("[?]", 4)) == "[4]");
  CHECK(print_block(instantiate_pattern("S([?],[1])", 2)) == "S([2],[1])");
  CHECK_THROWS_AS(instantiate_pattern("[3]", 1), parse_error);
}

TEST_CASE("block_shape: modes and dimensions") {
  auto sh = block_shape(TangleBlock::leaf({2, 3}));
  CHECK(sh.l == 1);
  CHECK(sh.k == std::vector<int>{1});
  auto p = block_shape(TangleBlock::product(
      {TangleBlock::sum({TangleBlock::leaf({2}), TangleBlock::leaf({3})}), TangleBlock::leaf({1, 1})}));
  CHECK(p.mode == BlockShape::Mode::product_of_sums);
  CHECK(p.l == 2);
  CHECK(p.k == std::vector<int>{2, 1});
  auto s = block_shape(TangleBlock::sum(
      {TangleBlock::leaf({2}), TangleBlock::product({TangleBlock::leaf({3}), TangleBlock::leaf({4})})}));
  CHECK(s.mode == BlockShape::Mode::sum_of_products);
  CHECK(s.l == 2);
  CHECK(s.k == std::vector<int>{1, 2});
  auto nested = TangleBlock::product(
      {TangleBlock::sum({TangleBlock::sum({TangleBlock::leaf({1}), TangleBlock::leaf({1})}),
                         TangleBlock::leaf({1})}),
       TangleBlock::leaf({1})});
  CHECK_THROWS_AS(block_shape(nested), domain_error);
}

TEST_CASE("render: closure determinant equals alpha of the slope") {
  // the rational-link fact det(closure) = alpha, the rendering self-check
  CHECK(determinant(tangle_closure(ContinuedFraction{{3}})) == 3);
  CHECK(determinant(tangle_closure(ContinuedFraction{{2}})) == 2);
  CHECK(determinant(tangle_closure(ContinuedFraction{{1, 1}})) == 2);
  CHECK(determinant(tangle_closure(ContinuedFraction{{2, 3}})) == 7);
  CHECK(determinant(tangle_closure(ContinuedFraction{{2, 2}})) == 5);  // figure-eight
  Rng rng(2024);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> a;
    int m = 1 + static_cast<int>(rng.below(3));
    int total = 0;
    for (int i = 0; i < m; ++i) {
      int v = 1 + static_cast<int>(rng.below(3));
      if (total + v > 8) break;
      a.push_back(v);
      total += v;
    }
    if (a.empty()) continue;
    ContinuedFraction cf{a};
    CAPTURE(t);
    CHECK(determinant(tangle_closure(cf)) == slope(cf).alpha);
  }
}

TEST_CASE("render: numerator closure determinant equals |beta|") {
  // pins that the rendered tangle realizes the slope itself, not a rewrite
  CHECK(determinant(closure(TangleBlock::leaf({2, 2}), Closure::numerator)) == 2);
  CHECK(determinant(closure(TangleBlock::leaf({2, 3}), Closure::numerator)) == 2);
  CHECK(determinant(closure(TangleBlock::leaf({3}), Closure::numerator)) == 1);
  CHECK(determinant(closure(TangleBlock::leaf({1, 1, 2}), Closure::numerator)) ==
        std::llabs(slope(ContinuedFraction{{1, 1, 2}}).beta));
}
