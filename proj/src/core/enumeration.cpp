#include "stacksort/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "stacksort/error.hpp"
#include "stacksort/perm_core.hpp"

namespace stacksort {

namespace {

// Smallest depth whose prefix count gives every shard a few subtrees.
unsigned split_depth(unsigned n, unsigned r, unsigned shards) {
  if (shards <= 1) return 0;
  std::uint64_t prefixes = 1;
  unsigned d = 0;
  while (d < n && prefixes < 8ull * shards) {
    prefixes *= static_cast<std::uint64_t>(r) * d + 1;
    ++d;
  }
  return d;
}

class Generator {
 public:
  Generator(unsigned n, unsigned r, Shard shard, const std::function<void(WordView)>& visit)
      : n_(n), r_(r), shard_(shard), visit_(visit), split_(split_depth(n, r, shard.count)) {
    word_.reserve(static_cast<std::size_t>(n) * r);
  }

  void run() { extend(n_, 0); }

 private:
  void extend(unsigned letter, unsigned depth) {
    if (depth == split_ && shard_.count > 1) {
      if (item_++ % shard_.count != shard_.index) return;
    }
    if (letter == 0) {
      visit_(word_);
      return;
    }
    for (std::size_t g = 0; g <= word_.size(); ++g) {
      word_.insert(word_.begin() + static_cast<std::ptrdiff_t>(g), r_, letter);
      extend(letter - 1, depth + 1);
      word_.erase(word_.begin() + static_cast<std::ptrdiff_t>(g),
                  word_.begin() + static_cast<std::ptrdiff_t>(g + r_));
    }
  }

  unsigned n_, r_;
  Shard shard_;
  const std::function<void(WordView)>& visit_;
  unsigned split_;
  std::uint64_t item_ = 0;
  Word word_;
};

// Cut positions 0..len at which no letter has copies on both sides.
std::vector<std::size_t> closed_cuts(WordView w) {
  Letter n = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  std::vector<std::size_t> first(n + 1, w.size()), last(n + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    first[w[i]] = std::min(first[w[i]], i);
    last[w[i]] = i;
  }
  std::vector<int> delta(w.size() + 1, 0);
  for (Letter a = 1; a <= n; ++a) {
    if (first[a] == w.size()) continue;
    // straddles cuts first+1 .. last
    delta[first[a] + 1] += 1;
    delta[last[a] + 1] -= 1;
  }
  std::vector<std::size_t> cuts;
  int open = 0;
  for (std::size_t c = 0; c <= w.size(); ++c) {
    open += delta[c];
    if (open == 0) cuts.push_back(c);
  }
  return cuts;
}

void for_each_cut_choice(const std::vector<std::size_t>& cuts, std::size_t len, unsigned k, bool allow_empty,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
  // bounds holds 0, c_1, ..., c_{k-1}, len
  if (k == 0) {
    if (len == 0) visit({});
    return;
  }
  std::vector<std::size_t> candidates;
  for (auto c : cuts)
    if (allow_empty || (c > 0 && c < len)) candidates.push_back(c);
  if (!allow_empty && len == 0) return;
  std::vector<std::size_t> bounds(k + 1);
  bounds[0] = 0;
  bounds[k] = len;
  std::function<void(unsigned, std::size_t)> rec = [&](unsigned slot, std::size_t from) {
    if (slot == k) {
      visit(bounds);
      return;
    }
    for (std::size_t ci = from; ci < candidates.size(); ++ci) {
      bounds[slot] = candidates[ci];
      rec(slot + 1, allow_empty ? ci : ci + 1);
    }
  };
  rec(1, 0);
}

template <class Classify>
Histogram parallel_histogram(unsigned jobs, Classify classify) {
  jobs = std::max(1u, jobs);
  std::vector<Histogram> partial(jobs);
  if (jobs == 1) {
    classify(Shard{0, 1}, partial[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j)
      workers.emplace_back([&, j] { classify(Shard{j, jobs}, partial[j]); });
    for (auto& w : workers) w.join();
  }
  Histogram total;
  for (auto& h : partial)
    for (auto& [k, v] : h) total[k] += v;
  return total;
}

bool sorts_to_identity(const EnumerationQuery& q, WordView w, Word& once, Word& twice) {
  once.clear();
  if (q.filter == Filter::All) return true;
  if (q.filter == Filter::StackSortable) {
    detail::stack_sort_into(w, once);
    return is_identity(once);
  }
  if (q.lambda)
    detail::stack_sort_lambda_into(w, *q.lambda, once);
  else
    detail::stack_sort_into(w, once);
  twice.clear();
  detail::stack_sort_into(once, twice);
  return is_identity(twice);
}

}  // namespace

BigInt histogram_total(const Histogram& h) {
  BigInt total = 0;
  for (const auto& [k, v] : h) total += v;
  return total;
}

BigInt r_permutation_count(unsigned n, unsigned r) {
  BigInt c = 1;
  for (unsigned i = 0; i < n; ++i) c *= static_cast<unsigned long>(r) * i + 1;
  return c;
}

void for_each_r_permutation(unsigned n, unsigned r, const std::function<void(WordView)>& visit, Shard shard) {
  if (r == 0) throw InvalidInput("r must be positive");
  if (shard.count == 0 || shard.index >= shard.count) throw InvalidInput("bad shard");
  Generator(n, r, shard, visit).run();
}

std::vector<Word> r_permutations(unsigned n, unsigned r) {
  std::vector<Word> out;
  for_each_r_permutation(n, r, [&](WordView w) { out.emplace_back(w.begin(), w.end()); });
  return out;
}

void for_each_ktuple(unsigned n, unsigned r, unsigned k, bool allow_empty,
                     const std::function<void(const std::vector<WordView>&)>& visit, Shard shard) {
  std::vector<WordView> comps(k);
  for_each_r_permutation(
      n, r,
      [&](WordView w) {
        auto cuts = closed_cuts(w);
        for_each_cut_choice(cuts, w.size(), k, allow_empty, [&](const std::vector<std::size_t>& b) {
          for (unsigned i = 0; i < k; ++i) comps[i] = w.subspan(b[i], b[i + 1] - b[i]);
          visit(comps);
        });
      },
      shard);
}

Histogram enumerate_histogram(const EnumerationQuery& q) {
  if (q.r == 0) throw InvalidInput("r must be positive");
  if (q.lambda && q.lambda->r() != q.r) throw InvalidInput("lambda does not match r");
  if (q.lambda && q.k) throw InvalidInput("lambda counts are defined for single r-permutations only");
  if (q.lambda && q.filter != Filter::TwoStackSortable)
    throw InvalidInput("lambda applies to the two-stack-sortable filter");

  if (!q.k) {
    return parallel_histogram(q.jobs, [&](Shard shard, Histogram& h) {
      Word once, twice;
      for_each_r_permutation(
          q.n, q.r,
          [&](WordView w) {
            if (!sorts_to_identity(q, w, once, twice)) return;
            DescentVector dv(q.r + 1);
            detail::descent_vector_into(w, q.r, dv);
            ++h[dv];
          },
          shard);
    });
  }

  const unsigned k = *q.k;
  return parallel_histogram(q.jobs, [&](Shard shard, Histogram& h) {
    Word once, twice;
    for_each_ktuple(
        q.n, q.r, k, q.allow_empty,
        [&](const std::vector<WordView>& comps) {
          if (q.filter != Filter::All) {
            once.clear();
            for (auto c : comps) detail::stack_sort_into(c, once);
            if (q.filter == Filter::TwoStackSortable) {
              twice.clear();
              detail::stack_sort_into(once, twice);
              if (!is_identity(twice)) return;
            } else {
              // a tuple is stack-sortable when the concatenated S-images are
              if (!is_identity(once)) return;
            }
          }
          DescentVector dv(q.r + 1);
          for (auto c : comps) detail::descent_vector_into(c, q.r, dv);
          ++h[dv];
        },
        shard);
  });
}

BigInt count_2ss(unsigned n, unsigned r, unsigned jobs) { return histogram_total(count_2ss_by_descents(n, r, jobs)); }

Histogram count_2ss_by_descents(unsigned n, unsigned r, unsigned jobs) {
  return enumerate_histogram({.n = n, .r = r, .filter = Filter::TwoStackSortable, .jobs = jobs});
}

Histogram count_ss_by_descents(unsigned n, unsigned r, unsigned jobs) {
  return enumerate_histogram({.n = n, .r = r, .filter = Filter::StackSortable, .jobs = jobs});
}

BigInt count_2ss_ktuple(unsigned n, unsigned r, unsigned k, bool allow_empty, unsigned jobs) {
  return histogram_total(count_2ss_ktuple_by_descents(n, r, k, allow_empty, jobs));
}

Histogram count_2ss_ktuple_by_descents(unsigned n, unsigned r, unsigned k, bool allow_empty, unsigned jobs) {
  return enumerate_histogram(
      {.n = n, .r = r, .filter = Filter::TwoStackSortable, .k = k, .allow_empty = allow_empty, .jobs = jobs});
}

BigInt count_2ss_lambda(unsigned n, unsigned r, const Lambda& lambda, unsigned jobs) {
  return histogram_total(count_2ss_lambda_by_descents(n, r, lambda, jobs));
}

Histogram count_2ss_lambda_by_descents(unsigned n, unsigned r, const Lambda& lambda, unsigned jobs) {
  return enumerate_histogram({.n = n, .r = r, .filter = Filter::TwoStackSortable, .lambda = lambda, .jobs = jobs});
}

std::map<unsigned, BigInt> count_exactly_t_sortable(unsigned n, unsigned jobs) {
  // Reuse the histogram reducer with the depth stored in a one-slot vector.
  auto h = parallel_histogram(jobs, [&](Shard shard, Histogram& acc) {
    Word cur, next;
    for_each_r_permutation(
        n, 1,
        [&](WordView w) {
          cur.assign(w.begin(), w.end());
          std::uint64_t t = 0;
          while (!is_identity(cur)) {
            next.clear();
            detail::stack_sort_into(cur, next);
            cur.swap(next);
            ++t;
          }
          ++acc[DescentVector(std::vector<std::uint64_t>{t})];
        },
        shard);
  });
  std::map<unsigned, BigInt> out;
  for (auto& [k, v] : h) out[static_cast<unsigned>(k[0])] = v;
  return out;
}

std::vector<BigInt> count_2ss_by_top_run(unsigned n) {
  std::vector<BigInt> out(n + 1, 0);
  Word once, twice;
  std::vector<std::size_t> pos(n + 1);
  for_each_r_permutation(n, 1, [&](WordView w) {
    once.clear();
    detail::stack_sort_into(w, once);
    twice.clear();
    detail::stack_sort_into(once, twice);
    if (!is_identity(twice)) return;
    for (std::size_t i = 0; i < w.size(); ++i) pos[w[i]] = i;
    unsigned run = n == 0 ? 0 : 1;
    while (run < n && pos[n - run] > pos[n - run + 1]) ++run;
    for (unsigned i = 0; i <= run; ++i) out[i] += 1;
  });
  return out;
}

}  // namespace stacksort
