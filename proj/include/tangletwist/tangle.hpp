#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tangletwist/errors.hpp"

namespace tangletwist {

// Integer denominators [a_1, ..., a_n] of the continued fraction
//   beta/alpha = 1 / (a_n + 1 / (a_{n-1} + ... + 1/a_1)).
struct ContinuedFraction {
  std::vector<int> a;

  int length() const { return static_cast<int>(a.size()); }
  bool sign_uniform() const {
    if (a.empty()) return false;
    for (int x : a)
      if ((x > 0) != (a.front() > 0) || x == 0) return false;
    return true;
  }
  int crossing_count() const {
    int t = 0;
    for (int x : a) t += std::abs(x);
    return t;
  }
};

struct Slope {
  long long beta = 0;
  long long alpha = 1;  // always > 0, gcd(|beta|, alpha) = 1
};

inline Slope slope(const ContinuedFraction& cf) {
  if (cf.a.empty()) throw domain_error("slope: empty continued fraction");
  for (int x : cf.a)
    if (x == 0) throw domain_error("slope: zero denominator entry");
  // f = a_1, then f <- a_i + 1/f; slope = 1/f
  long long p = cf.a.front(), q = 1;
  for (size_t i = 1; i < cf.a.size(); ++i) {
    if (p == 0) throw domain_error("singular continued fraction");
    long long np = cf.a[i] * p + q;
    q = p;
    p = np;
  }
  if (p == 0) throw domain_error("singular continued fraction");
  long long g = std::gcd(std::abs(q), std::abs(p));
  long long beta = q / g, alpha = p / g;
  if (alpha < 0) {
    alpha = -alpha;
    beta = -beta;
  }
  return {beta, alpha};
}

inline ContinuedFraction negate(const ContinuedFraction& cf) {
  ContinuedFraction r = cf;
  for (int& x : r.a) x = -x;
  return r;
}

// [a_1, ..., a_{n-1}, +-1] -> [a_1, ..., a_{n-1} +- 1]. Keeps the crossing
// count and the slope denominator alpha (so closures keep their
// determinant); beta maps to alpha - beta.
inline ContinuedFraction collapse_last(const ContinuedFraction& cf) {
  if (cf.length() < 2) throw domain_error("collapse_last: need at least two entries");
  int last = cf.a.back();
  if (last != 1 && last != -1) throw domain_error("collapse_last: last entry not +-1");
  ContinuedFraction r;
  r.a.assign(cf.a.begin(), cf.a.end() - 1);
  r.a.back() += last;
  if (r.a.back() == 0) throw domain_error("collapse_last: produces zero entry");
  return r;
}

// Expression tree over rational tangles: sums juxtapose side by side,
// products stack. Interior nodes have at least two children.
struct TangleBlock {
  enum class Kind { leaf, sum, product };
  Kind kind = Kind::leaf;
  ContinuedFraction cf;               // leaf payload
  std::vector<TangleBlock> children;  // sum/product payload

  static TangleBlock leaf(std::vector<int> entries) {
    TangleBlock b;
    b.kind = Kind::leaf;
    b.cf.a = std::move(entries);
    return b;
  }
  static TangleBlock sum(std::vector<TangleBlock> ch) {
    if (ch.size() < 2) throw domain_error("tangle sum: need >= 2 children");
    TangleBlock b;
    b.kind = Kind::sum;
    b.children = std::move(ch);
    return b;
  }
  static TangleBlock product(std::vector<TangleBlock> ch) {
    if (ch.size() < 2) throw domain_error("tangle product: need >= 2 children");
    TangleBlock b;
    b.kind = Kind::product;
    b.children = std::move(ch);
    return b;
  }

  template <typename F>
  void for_each_leaf(F&& f) const {
    if (kind == Kind::leaf) {
      f(cf);
      return;
    }
    for (const auto& c : children) c.for_each_leaf(f);
  }
};

inline bool extends(const TangleBlock& b, int sign_c) {
  bool ok = true;
  b.for_each_leaf([&](const ContinuedFraction& cf) {
    if (cf.a.empty()) ok = false;
    for (int x : cf.a)
      if (x == 0 || (x > 0 ? 1 : -1) != sign_c) ok = false;
  });
  return ok;
}

inline int block_crossing_count(const TangleBlock& b) {
  int t = 0;
  b.for_each_leaf([&](const ContinuedFraction& cf) { t += cf.crossing_count(); });
  return t;
}

// --- grammar ---------------------------------------------------------------
// tangle := "[" int ("," int)* "]"
// block  := tangle | "S(" block ("," block)+ ")" | "P(" block ("," block)+ ")"
// Whitespace insensitive; print is the canonical space-free form.

namespace detail {

struct BlockParser {
  const std::string& s;
  size_t i = 0;

  explicit BlockParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  void expect(char c) {
    if (peek() != c) throw parse_error(std::string("block grammar: expected '") + c + "' at position " + std::to_string(i));
    ++i;
  }
  int integer() {
    skip_ws();
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) throw parse_error("block grammar: expected integer at position " + std::to_string(i));
    int v = std::stoi(s.substr(i, k - i));
    i = k;
    return v;
  }

  TangleBlock block() {
    char c = peek();
    if (c == '[') {
      ++i;
      std::vector<int> entries;
      entries.push_back(integer());
      while (peek() == ',') {
        ++i;
        entries.push_back(integer());
      }
      expect(']');
      return TangleBlock::leaf(std::move(entries));
    }
    if (c == 'S' || c == 'P') {
      ++i;
      expect('(');
      std::vector<TangleBlock> ch;
      ch.push_back(block());
      while (peek() == ',') {
        ++i;
        ch.push_back(block());
      }
      expect(')');
      if (ch.size() < 2) throw parse_error("block grammar: sum/product needs at least 2 operands");
      return c == 'S' ? TangleBlock::sum(std::move(ch)) : TangleBlock::product(std::move(ch));
    }
    throw parse_error("block grammar: unexpected character at position " + std::to_string(i));
  }
};

}  // namespace detail

inline TangleBlock parse_block(const std::string& text) {
  detail::BlockParser p(text);
  TangleBlock b = p.block();
  if (p.peek() != '\0') throw parse_error("block grammar: trailing input");
  return b;
}

inline std::string print_block(const TangleBlock& b) {
  std::ostringstream os;
  if (b.kind == TangleBlock::Kind::leaf) {
    os << "[";
    for (size_t i = 0; i < b.cf.a.size(); ++i) os << (i ? "," : "") << b.cf.a[i];
    os << "]";
  } else {
    os << (b.kind == TangleBlock::Kind::sum ? "S(" : "P(");
    for (size_t i = 0; i < b.children.size(); ++i)
      os << (i ? "," : "") << print_block(b.children[i]);
    os << ")";
  }
  return os.str();
}

// Pattern with one integer hole '?', e.g. "[?]" or "S([?],[1])".
inline TangleBlock instantiate_pattern(const std::string& pattern, int value) {
  std::string text;
  bool hole = false;
  for (char c : pattern) {
    if (c == '?') {
      text += std::to_string(value);
      hole = true;
    } else {
      text += c;
    }
  }
  if (!hole) throw parse_error("pattern has no '?' hole");
  return parse_block(text);
}

// --- Proposition-shaped blocks ----------------------------------------------
// A two-level block: product of l sums of k_n rational tangles, or sum of l
// products. Single leaves count as either; deeper nesting is rejected.
struct BlockShape {
  enum class Mode { product_of_sums, sum_of_products };
  Mode mode = Mode::product_of_sums;
  int l = 0;
  std::vector<int> k;
  std::vector<std::vector<std::vector<int>>> cf;  // cf[i][j] = denominators of leaf (i,j)
};

inline BlockShape block_shape(const TangleBlock& b) {
  BlockShape sh;
  auto leaf_row = [](const TangleBlock& t) {
    std::vector<std::vector<int>> row;
    if (t.kind == TangleBlock::Kind::leaf) {
      row.push_back(t.cf.a);
      return row;
    }
    for (const auto& c : t.children) {
      if (c.kind != TangleBlock::Kind::leaf)
        throw domain_error("block_shape: shape not covered by Proposition (nesting too deep)");
      row.push_back(c.cf.a);
    }
    return row;
  };
  if (b.kind == TangleBlock::Kind::leaf) {
    sh.mode = BlockShape::Mode::product_of_sums;
    sh.l = 1;
    sh.k = {1};
    sh.cf = {{b.cf.a}};
    return sh;
  }
  if (b.kind == TangleBlock::Kind::product) {
    sh.mode = BlockShape::Mode::product_of_sums;
    for (const auto& c : b.children) {
      if (c.kind == TangleBlock::Kind::product)
        throw domain_error("block_shape: shape not covered by Proposition (product of products)");
      sh.cf.push_back(leaf_row(c));
    }
  } else {
    sh.mode = BlockShape::Mode::sum_of_products;
    for (const auto& c : b.children) {
      if (c.kind == TangleBlock::Kind::sum)
        throw domain_error("block_shape: shape not covered by Proposition (sum of sums)");
      sh.cf.push_back(leaf_row(c));
    }
  }
  sh.l = static_cast<int>(sh.cf.size());
  for (auto& row : sh.cf) sh.k.push_back(static_cast<int>(row.size()));
  return sh;
}

}  // namespace tangletwist
