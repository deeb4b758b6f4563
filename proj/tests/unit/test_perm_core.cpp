#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "stacksort/enumeration.hpp"
#include "stacksort/error.hpp"
#include "stacksort/perm_core.hpp"

using namespace stacksort;

namespace {

const char* kExample = "544453222335611166";

std::vector<Letter> set_of(std::initializer_list<Letter> l) { return l; }

// Brute-force nesting test straight from the definition.
bool nesting_oracle(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t k = i + 1; k < w.size(); ++k)
      if (w[i] == w[k])
        for (std::size_t j = i + 1; j < k; ++j)
          if (w[j] > w[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("parse and format") {
  CHECK(parse_word("5 4 4 5") == Word{5, 4, 4, 5});
  CHECK(parse_word("5445") == Word{5, 4, 4, 5});
  CHECK(parse_word("10,2, 3") == Word{10, 2, 3});
  CHECK(parse_word("12 ") == Word{12});
  CHECK(parse_word("") == Word{});
  CHECK_THROWS_AS(parse_word("1 0 2"), InvalidInput);
  CHECK_THROWS_AS(parse_word("1 x"), InvalidInput);
  CHECK(format_word(Word{4, 2, 3}) == "4 2 3");
  CHECK(format_word_compact(Word{4, 2, 3}) == "423");
  CHECK(format_word_compact(Word{10, 2}) == "10 2");
  auto t = parse_tuple("11||22");
  REQUIRE(t.size() == 3);
  CHECK(t[1].empty());
  CHECK(format_tuple(t) == "1 1 |  | 2 2");
}

TEST_CASE("r-permutation validation") {
  CHECK(is_r_permutation(parse_word(kExample), 3));
  CHECK(is_r_permutation(Word{}, 2));
  CHECK_FALSE(is_r_permutation(parse_word("123321"), 2));
  CHECK_FALSE(is_r_permutation(parse_word("1122"), 3));
  CHECK_FALSE(is_r_permutation(parse_word("2211"), 1));
  CHECK(is_r_word(parse_word("3355"), 2));
  CHECK_FALSE(is_r_permutation(parse_word("3355"), 2));
  CHECK_FALSE(satisfies_nesting(parse_word("1313")));
}

TEST_CASE("nesting agrees with the definition on all short words") {
  // Every word over {1,2,3} of length <= 6.
  for (std::size_t len = 0; len <= 6; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Word w;
      for (std::size_t c = code, i = 0; i < len; ++i, c /= 3) w.push_back(static_cast<Letter>(c % 3 + 1));
      CHECK(satisfies_nesting(w) == nesting_oracle(w));
    }
  }
}

TEST_CASE("stack_sort examples") {
  CHECK(stack_sort(parse_word(kExample)) == parse_word("423516"));
  CHECK(stack_sort(Word{7}) == Word{7});
  CHECK(stack_sort(parse_word("231")) == parse_word("213"));
  CHECK(stack_sort(Word{}).empty());
  CHECK_THROWS_AS(stack_sort(parse_word("1313")), InvalidInput);
}

TEST_CASE("stack_sort of an r-permutation is an ordinary permutation") {
  for (unsigned r = 1; r <= 3; ++r)
    for_each_r_permutation(4, r, [&](WordView w) {
      Word s = stack_sort(w);
      Word sorted = s;
      std::sort(sorted.begin(), sorted.end());
      Word iota(4);
      std::iota(iota.begin(), iota.end(), 1u);
      CHECK(sorted == iota);
    });
}

TEST_CASE("stack machine") {
  CHECK(stack_sort_machine(parse_word("231")) == parse_word("213"));
  CHECK(stack_sort_machine(parse_word("123")) == parse_word("123"));
  CHECK(stack_sort_machine(parse_word("321")) == parse_word("123"));
  CHECK_THROWS_AS(stack_sort_machine(parse_word("1221")), InvalidInput);
  for (unsigned n = 0; n <= 8; ++n)
    for_each_r_permutation(n, 1, [](WordView w) { REQUIRE(stack_sort_machine(w) == stack_sort(w)); });
}

TEST_CASE("S preserves the order of a < b when a comes first") {
  for (unsigned n = 1; n <= 7; ++n)
    for_each_r_permutation(n, 1, [&](WordView p) {
      Word s = stack_sort(p);
      std::vector<std::size_t> pos_p(n + 1), pos_s(n + 1);
      for (std::size_t i = 0; i < n; ++i) {
        pos_p[p[i]] = i;
        pos_s[s[i]] = i;
      }
      for (Letter a = 1; a <= n; ++a)
        for (Letter b = a + 1; b <= n; ++b)
          if (pos_p[a] < pos_p[b]) REQUIRE(pos_s[a] < pos_s[b]);
    });
}

TEST_CASE("inversions of S(p) have a larger letter between them in p") {
  for (unsigned n = 1; n <= 7; ++n)
    for_each_r_permutation(n, 1, [&](WordView p) {
      Word s = stack_sort(p);
      std::vector<std::size_t> pos(n + 1);
      for (std::size_t i = 0; i < n; ++i) pos[p[i]] = i;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Letter b = s[i], a = s[j];
          if (b < a) continue;
          bool found = false;
          for (std::size_t m = pos[b] + 1; m < pos[a] && !found; ++m) found = p[m] > b;
          REQUIRE(found);
        }
    });
}

TEST_CASE("descent sets and vectors") {
  auto sets = descent_sets(parse_word(kExample), 3);
  REQUIRE(sets.size() == 4);
  CHECK(sets[0] == set_of({6}));
  CHECK(sets[1] == set_of({3, 5, 6}));
  CHECK(sets[2] == set_of({5}));
  CHECK(sets[3].empty());
  CHECK(descent_vector(parse_word(kExample), 3) == DescentVector({1, 3, 1, 0}));
  CHECK(descent_vector(Word{1}, 1) == DescentVector({0, 0}));
  auto inc = descent_sets(parse_word("1122"), 2);
  CHECK(inc[0] == set_of({2}));
  CHECK(inc[1].empty());
  CHECK(inc[2].empty());
  for_each_r_permutation(4, 2, [](WordView w) { REQUIRE(descent_vector(w, 2).total() == 3); });
}

TEST_CASE("S_lambda") {
  CHECK(stack_sort_lambda(parse_word("11"), Lambda({1, 2}, 2)) == parse_word("11"));
  CHECK_THROWS_AS(stack_sort_lambda(parse_word("221211"), Lambda({1, 2}, 2)), InvalidInput);
  CHECK_THROWS_AS(Lambda({2, 1}, 2), InvalidInput);
  CHECK_THROWS_AS(Lambda({1}, 2), InvalidInput);
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned n = 0; n <= 4; ++n)
      for_each_r_permutation(n, r, [&](WordView w) {
        REQUIRE(stack_sort_lambda(w, Lambda::trivial(r)) == stack_sort(w));
      });
  // lambda = (1,2) yields a 2-permutation of the same letters.
  for_each_r_permutation(4, 2, [](WordView w) {
    Word s = stack_sort_lambda(w, Lambda({1, 2}, 2));
    REQUIRE(s.size() == 8);
    REQUIRE(is_r_permutation(s, 2));
  });
}

TEST_CASE("k-tuples") {
  KTuple t{parse_tuple("553111335 | 442224776667"), 3};
  CHECK(is_valid_ktuple(t));
  CHECK(ktuple_descent_vector(t) == DescentVector({1, 1, 3, 0}));
  KTuple empty{{Word{}, Word{}}, 1};
  CHECK(is_valid_ktuple(empty));
  CHECK(ktuple_descent_vector(empty) == DescentVector({0, 0}));
  KTuple overlap{{Word{1, 1}, Word{1, 2, 2}}, 2};
  CHECK_FALSE(is_valid_ktuple(overlap));
  CHECK_THROWS_AS(ktuple_descent_vector(overlap), InvalidInput);
}
