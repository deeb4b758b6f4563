#include <doctest.h>

#include <set>
#include <string>

#include "stacksort/closed_forms.hpp"
#include "stacksort/enumeration.hpp"
#include "stacksort/error.hpp"
#include "stacksort/perm_core.hpp"
#include "stacksort/sortability.hpp"
#include "stacksort/tree_model.hpp"

using namespace stacksort;

namespace {

// Parenthesized shape with labels dropped.
std::string shape(const DecreasingTree& t, std::int32_t v = 0) {
  if (v == DecreasingTree::kAbsent) return ".";
  std::string s = "(";
  for (auto c : t.node(v).child) s += shape(t, c);
  return s + ")";
}

}  // namespace

TEST_CASE("example tree") {
  Word pi = parse_word("544453222335611166");
  auto t = to_tree(pi, 3);
  CHECK(t.size() == 6);
  CHECK(t.child_count() == 5);
  CHECK(t.node(0).label == 6);
  CHECK(inorder_read(t) == pi);
  CHECK(postorder_read(t) == parse_word("423516"));
  auto dot = tree_to_dot(t);
  CHECK(dot.find("digraph") == 0);
  std::size_t edges = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  CHECK(edges == 5);
}

TEST_CASE("single node") {
  auto t = to_tree(parse_word("333"), 3);
  CHECK(t.size() == 1);
  CHECK(t.child_count() == 0);
  CHECK(inorder_read(t) == parse_word("333"));
  CHECK(postorder_read(t) == Word{3});
  CHECK_THROWS_AS(to_tree(Word{}, 1), InvalidInput);
  CHECK_THROWS_AS(to_tree(parse_word("1212"), 2), InvalidInput);
}

TEST_CASE("round trips and postorder = S o inorder") {
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned n = 1; n <= 4; ++n)
      for_each_r_permutation(n, r, [&](WordView w) {
        auto t = to_tree(w, r);
        Word in = inorder_read(t);
        REQUIRE(in == Word(w.begin(), w.end()));
        REQUIRE(postorder_read(t) == stack_sort(in));
        REQUIRE(t.child_count() == n - 1);
        // Slot i is filled exactly when the label is a type-i descent.
        auto sets = descent_sets(w, r);
        for (const auto& node : t.nodes())
          for (unsigned i = 0; i <= r; ++i) {
            bool filled = node.child[i] != DecreasingTree::kAbsent;
            bool desc = std::find(sets[i].begin(), sets[i].end(), node.label) != sets[i].end();
            REQUIRE(filled == desc);
          }
      });
}

TEST_CASE("stack-sortable r-permutations realize every tree shape once") {
  for (unsigned r = 1; r <= 2; ++r)
    for (unsigned n = 1; n <= 5; ++n) {
      std::set<std::string> shapes;
      std::size_t sortable = 0;
      for_each_r_permutation(n, r, [&](WordView w) {
        if (!is_identity(stack_sort(w))) return;
        ++sortable;
        shapes.insert(shape(to_tree(w, r)));
      });
      // Fuss-Catalan count of (r+1)-ary trees on n nodes.
      BigInt fuss = binomial((r + 1) * n, n) / (r * n + 1);
      CHECK(shapes.size() == sortable);
      CHECK(BigInt(sortable) == fuss);
    }
}

TEST_CASE("explicit arena validation") {
  using N = DecreasingTree::Node;
  DecreasingTree ok(1, {N{3, {1, DecreasingTree::kAbsent}}, N{2, {DecreasingTree::kAbsent, DecreasingTree::kAbsent}}});
  CHECK(inorder_read(ok) == parse_word("23"));
  CHECK_THROWS_AS(DecreasingTree(1, {N{2, {1, DecreasingTree::kAbsent}}, N{3, {-1, -1}}}), InvalidInput);
  CHECK_THROWS_AS(DecreasingTree(1, {N{3, {1, 1}}, N{2, {-1, -1}}}), InvalidInput);
  CHECK_THROWS_AS(DecreasingTree(1, {N{3, {-1}}}), InvalidInput);
}

TEST_CASE("forests") {
  KTuple t{parse_tuple("553111335 | | 442224776667"), 3};
  auto f = to_forest(t);
  CHECK(f.trees.size() == 2);
  CHECK(f.trees[0].node(0).label == 5);
  CHECK(f.trees[1].node(0).label == 7);
  auto dot = forest_to_dot(f);
  CHECK(dot.find("digraph") == 0);
  auto empty = forest_to_dot(DecreasingForest{});
  CHECK(empty.find("->") == std::string::npos);
  CHECK(empty.find("label") == std::string::npos);
}

TEST_CASE("text rendering") {
  auto txt = tree_to_text(to_tree(parse_word("311223"), 2));
  CHECK(txt == "3\n  [2] 2\n    [1] 1\n");
}
