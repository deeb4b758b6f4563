#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stacksort/word.hpp"

namespace stacksort {

/// S applied t times yields 1 2 ... n. Throws InvalidInput unless p is a
/// permutation of [n].
bool is_t_stack_sortable(WordView p, unsigned t);

/// Least t with S^t(p) = identity (0 for the identity itself).
unsigned sorting_depth(WordView p);

/// No i < j < k with p_k < p_i < p_j.
bool avoids_231(WordView p);

/// West's test: false iff p contains 2341, or contains 3241 whose "3" and
/// "2" have no letter larger than the "4" between them (i.e. the 3241 does
/// not extend to 35241).
bool west_two_stack_check(WordView p);

/// A subsequence a_1 ... a_{t+2} of p (0-based positions) certifying that p
/// is not t-stack-sortable under the pattern characterization.
struct CharWitness {
  std::vector<std::size_t> positions;
};

struct CharResult {
  bool sortable = true;
  std::optional<CharWitness> witness;
};

/// Pattern characterization of t-stack-sortability. Searches for a_1..a_{t+2}
/// with a_{t+2} the smallest and a_{t+1} the largest of the subsequence, such
/// that for every inversion a_i > a_j (i < j <= t) no increasing run
/// c_1 < ... < c_s with c_1 > a_i, s = t + 2 - rank(a_i), occurs strictly
/// between a_i and a_j in p. Ranks are taken within the subsequence; the
/// blockers c are drawn from all of p. Reports the first witness in
/// lexicographic position order.
CharResult t_char_check(WordView p, unsigned t);

/// S(S(a_1) ... S(a_k)) is the identity on the tuple's letters (relabelled
/// by rank). Throws InvalidInput on an invalid tuple.
bool is_2ss_ktuple(const KTuple& t);

/// Nested three-pass sort of a mu-tuple permutation: each group
/// (a_1..a_{mu_i}) contributes S(S(a_1)...S(a_{mu_i})), and the concatenation
/// of those is sorted once more. Throws InvalidInput unless the concatenation
/// of all components is a permutation of [n].
bool is_3ss_mutuple(const std::vector<std::vector<Word>>& groups);

}  // namespace stacksort
