#include <doctest.h>

#include "stacksort/enumeration.hpp"
#include "stacksort/error.hpp"
#include "stacksort/perm_core.hpp"
#include "stacksort/sortability.hpp"

using namespace stacksort;

TEST_CASE("iterated S") {
  CHECK_FALSE(is_t_stack_sortable(parse_word("2341"), 2));
  CHECK(is_t_stack_sortable(parse_word("2341"), 3));
  CHECK(is_t_stack_sortable(parse_word("1234"), 1));
  CHECK(sorting_depth(parse_word("1234")) == 0);
  CHECK(sorting_depth(parse_word("2341")) == 3);
  CHECK_THROWS_AS(is_t_stack_sortable(parse_word("1134"), 1), InvalidInput);
  for (unsigned n = 2; n <= 7; ++n)
    for_each_r_permutation(n, 1, [&](WordView p) { REQUIRE(is_t_stack_sortable(p, n - 1)); });
}

TEST_CASE("231 avoidance") {
  CHECK_FALSE(avoids_231(parse_word("231")));
  CHECK(avoids_231(parse_word("132")));
  int count = 0;
  for_each_r_permutation(4, 1, [&](WordView p) { count += avoids_231(p); });
  CHECK(count == 14);
  for (unsigned n = 1; n <= 7; ++n)
    for_each_r_permutation(n, 1, [&](WordView p) { REQUIRE(avoids_231(p) == is_t_stack_sortable(p, 1)); });
}

TEST_CASE("West's two-stack test") {
  CHECK(west_two_stack_check(parse_word("35241")));
  CHECK_FALSE(west_two_stack_check(parse_word("2341")));
  CHECK_FALSE(west_two_stack_check(parse_word("3241")));
  int count = 0;
  for_each_r_permutation(4, 1, [&](WordView p) { count += west_two_stack_check(p); });
  CHECK(count == 22);
  for (unsigned n = 1; n <= 7; ++n)
    for_each_r_permutation(n, 1, [&](WordView p) { REQUIRE(west_two_stack_check(p) == is_t_stack_sortable(p, 2)); });
}

TEST_CASE("pattern characterization") {
  auto res = t_char_check(parse_word("2341"), 2);
  CHECK_FALSE(res.sortable);
  REQUIRE(res.witness);
  CHECK(res.witness->positions == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(t_char_check(parse_word("1234"), 1).sortable);
  CHECK_FALSE(t_char_check(parse_word("1234"), 1).witness);
  // t = 1, 2 agree with iterated S; t = 3 is exercised by the acceptance suite.
  for (unsigned n = 1; n <= 7; ++n)
    for_each_r_permutation(n, 1, [&](WordView p) {
      REQUIRE(t_char_check(p, 1).sortable == is_t_stack_sortable(p, 1));
      REQUIRE(t_char_check(p, 2).sortable == is_t_stack_sortable(p, 2));
    });
}

TEST_CASE("two-stack-sortable tuples") {
  CHECK_FALSE(is_2ss_ktuple(KTuple{parse_tuple("553111335 | 442224776667"), 3}));
  CHECK(is_2ss_ktuple(KTuple{{Word{}}, 1}));
  CHECK(is_2ss_ktuple(KTuple{parse_tuple("1|2"), 1}));
  CHECK_THROWS_AS(is_2ss_ktuple(KTuple{parse_tuple("1|1"), 1}), InvalidInput);
  // One component is plain two-stack-sortability.
  for_each_r_permutation(5, 1, [](WordView p) {
    REQUIRE(is_2ss_ktuple(KTuple{{Word(p.begin(), p.end())}, 1}) == is_t_stack_sortable(p, 2));
  });
}

TEST_CASE("mu-tuples") {
  CHECK(is_3ss_mutuple({{parse_word("12345")}}));
  CHECK(is_3ss_mutuple({{parse_word("12")}, {parse_word("3"), parse_word("45")}}));
  for (unsigned n = 1; n <= 5; ++n)
    for_each_r_permutation(n, 1, [](WordView p) {
      REQUIRE(is_3ss_mutuple({{Word(p.begin(), p.end())}}) == is_t_stack_sortable(p, 3));
    });
  CHECK_THROWS_AS(is_3ss_mutuple({{parse_word("13")}}), InvalidInput);
}
