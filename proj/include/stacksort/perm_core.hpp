#pragma once

#include <vector>

#include "stacksort/word.hpp"

namespace stacksort {

/// True iff for all positions i < j < k with w[i] == w[k] we have w[j] <= w[i].
bool satisfies_nesting(WordView w);

/// Every letter that occurs does so exactly r times, and the nesting
/// condition holds. The letter set is arbitrary (tuple components and
/// sub-blocks keep their original letters).
bool is_r_word(WordView w, unsigned r);

/// An r-word whose letters are exactly 1..n.
bool is_r_permutation(WordView w, unsigned r);

/// True iff w is 1 2 ... n.
bool is_identity(WordView w);

/// Replaces each letter by its rank among the distinct letters of w.
Word relabel_by_rank(WordView w);

/// Stack-sorting operator: split at every occurrence of the maximum m,
/// w = a_1 m a_2 m ... m a_{j+1}, and return S(a_1) ... S(a_{j+1}) m.
/// Handles ordinary words (one split) and r-permutations (r splits) alike.
/// Throws InvalidInput if w violates the nesting condition.
Word stack_sort(WordView w);

/// One pass through a single stack. Requires distinct letters.
Word stack_sort_machine(WordView w);

/// Generalized sorter S_lambda on an r-word, r = lambda.r(). Blocks
/// a_0..a_{cut_0} are emitted, then the maximum, then a_{cut_0+1}..a_{cut_1},
/// the maximum, and so on; the result is an (l+1)-word.
Word stack_sort_lambda(WordView w, const Lambda& lambda);

/// Descent sets pi^(0..r) of an r-word, each sorted ascending. Type i >= 1:
/// letters whose i-th occurrence is immediately followed by a smaller letter.
/// Type 0: letters whose first occurrence immediately follows a smaller one.
/// The final position is never a descent.
std::vector<std::vector<Letter>> descent_sets(WordView w, unsigned r);

DescentVector descent_vector(WordView w, unsigned r);

/// Components pairwise letter-disjoint and the concatenation an
/// r-permutation of [n].
bool is_valid_ktuple(const KTuple& t);

/// Sum of the component descent vectors (boundaries between components do
/// not contribute). Throws InvalidInput on an invalid tuple.
DescentVector ktuple_descent_vector(const KTuple& t);

namespace detail {

// Unchecked variants used on the enumeration hot path. The input must
// satisfy the nesting condition (and for the lambda variant, be an r-word).
void stack_sort_into(WordView w, Word& out);
void stack_sort_lambda_into(WordView w, const Lambda& lambda, Word& out);
void descent_vector_into(WordView w, unsigned r, DescentVector& acc);

}  // namespace detail

}  // namespace stacksort
