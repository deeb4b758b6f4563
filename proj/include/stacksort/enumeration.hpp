#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "stacksort/bigint.hpp"
#include "stacksort/word.hpp"

namespace stacksort {

using Histogram = std::map<DescentVector, BigInt>;

BigInt histogram_total(const Histogram& h);

/// prod_{i=0}^{n-1} (r*i + 1): the number of r-permutations of [n].
BigInt r_permutation_count(unsigned n, unsigned r);

/// Subset of the generation tree owned by one worker: the subtrees below a
/// fixed split depth are dealt round-robin, item i going to shard i % count.
struct Shard {
  unsigned index = 0;
  unsigned count = 1;
};

/// Every r-permutation of [n] exactly once. Built by inserting the blocks
/// n^r, (n-1)^r, ..., 1^r into gaps of the current word (equivalently, by
/// hanging each new smallest letter on a free slot of the decreasing tree).
/// Order is lexicographic in the gap choices, so streams are reproducible.
void for_each_r_permutation(unsigned n, unsigned r, const std::function<void(WordView)>& visit,
                            Shard shard = {});

std::vector<Word> r_permutations(unsigned n, unsigned r);

/// Every k-tuple r-permutation of [n] (components empty or not), in order of
/// the underlying r-permutation and then of the cut positions.
void for_each_ktuple(unsigned n, unsigned r, unsigned k, bool allow_empty,
                     const std::function<void(const std::vector<WordView>&)>& visit, Shard shard = {});

enum class Filter {
  All,               // every object
  StackSortable,     // S(pi) = I
  TwoStackSortable,  // S(S(pi)) = I, or S(S(a_1)..S(a_k)) = I for tuples
};

struct EnumerationQuery {
  unsigned n = 0;
  unsigned r = 1;
  Filter filter = Filter::TwoStackSortable;
  /// Tuple size; unset means plain r-permutations.
  std::optional<unsigned> k;
  bool allow_empty = false;
  /// With TwoStackSortable: count S(S_lambda(pi)) = I instead.
  std::optional<Lambda> lambda;
  unsigned jobs = 1;
};

/// Histogram of the selected objects keyed by descent vector. Work is split
/// across `jobs` threads and reduced by addition; the result does not depend
/// on the job count.
Histogram enumerate_histogram(const EnumerationQuery& q);

BigInt count_2ss(unsigned n, unsigned r, unsigned jobs = 1);
Histogram count_2ss_by_descents(unsigned n, unsigned r, unsigned jobs = 1);
Histogram count_ss_by_descents(unsigned n, unsigned r, unsigned jobs = 1);
BigInt count_2ss_ktuple(unsigned n, unsigned r, unsigned k, bool allow_empty, unsigned jobs = 1);
Histogram count_2ss_ktuple_by_descents(unsigned n, unsigned r, unsigned k, bool allow_empty, unsigned jobs = 1);
BigInt count_2ss_lambda(unsigned n, unsigned r, const Lambda& lambda, unsigned jobs = 1);
Histogram count_2ss_lambda_by_descents(unsigned n, unsigned r, const Lambda& lambda, unsigned jobs = 1);

/// Ordinary permutations of [n] grouped by least t with S^t = I.
std::map<unsigned, BigInt> count_exactly_t_sortable(unsigned n, unsigned jobs = 1);

/// Entry i: two-stack-sortable permutations of [n] in which n, n-1, ...,
/// n-i+1 appear in decreasing order (i = 0..n).
std::vector<BigInt> count_2ss_by_top_run(unsigned n);

}  // namespace stacksort
