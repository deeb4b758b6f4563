#include "stacksort/sortability.hpp"

#include <algorithm>

#include "stacksort/error.hpp"
#include "stacksort/perm_core.hpp"

namespace stacksort {

namespace {

void require_permutation(WordView p) {
  if (!is_r_permutation(p, 1)) throw InvalidInput("'" + format_word(p) + "' is not a permutation of [n]");
}

// Length of the longest strictly increasing subsequence of p[lo, hi) using
// only values greater than floor.
std::size_t lis_above(WordView p, std::size_t lo, std::size_t hi, Letter floor) {
  Word tails;
  for (std::size_t i = lo; i < hi; ++i) {
    Letter v = p[i];
    if (v <= floor) continue;
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return tails.size();
}

class CharSearch {
 public:
  CharSearch(WordView p, unsigned t) : p_(p), t_(t), pos_(t + 2) {}

  std::optional<CharWitness> run() {
    const std::size_t n = p_.size();
    if (n < t_ + 2) return std::nullopt;
    // Every (a_{t+1}, a_{t+2}) pair is tried; the smallest witness wins.
    std::optional<CharWitness> best;
    for (std::size_t hi = t_; hi + 1 < n; ++hi) {
      for (std::size_t lo = hi + 1; lo < n; ++lo) {
        if (p_[lo] >= p_[hi]) continue;
        pos_[t_] = hi;
        pos_[t_ + 1] = lo;
        if (choose(0, 0, p_[lo], p_[hi])) {
          if (!best || pos_ < best->positions) best = CharWitness{pos_};
        }
      }
    }
    return best;
  }

 private:
  // Fill pos_[depth..t-1] with increasing positions before pos_[t] whose
  // values lie strictly between min_v and max_v; first hit in lexicographic
  // order wins.
  bool choose(std::size_t depth, std::size_t from, Letter min_v, Letter max_v) {
    if (depth == t_) return blockers_absent();
    std::size_t need = t_ - depth;
    for (std::size_t i = from; i + need <= pos_[t_]; ++i) {
      Letter v = p_[i];
      if (v <= min_v || v >= max_v) continue;
      pos_[depth] = i;
      if (choose(depth + 1, i + 1, min_v, max_v)) return true;
    }
    return false;
  }

  bool blockers_absent() const {
    for (std::size_t i = 0; i < t_; ++i) {
      Letter ai = p_[pos_[i]];
      // rank within the subsequence: a_{t+2} is below everything, a_{t+1}
      // above; count the rest directly.
      std::size_t rank = 2;
      for (std::size_t k = 0; k < t_; ++k)
        if (p_[pos_[k]] < ai) ++rank;
      std::size_t s = t_ + 2 - rank;
      for (std::size_t j = i + 1; j < t_; ++j) {
        if (p_[pos_[j]] >= ai) continue;
        if (lis_above(p_, pos_[i] + 1, pos_[j], ai) >= s) return false;
      }
    }
    return true;
  }

  WordView p_;
  std::size_t t_;
  std::vector<std::size_t> pos_;
};

}  // namespace

bool is_t_stack_sortable(WordView p, unsigned t) {
  require_permutation(p);
  Word cur(p.begin(), p.end()), next;
  for (unsigned i = 0; i < t && !is_identity(cur); ++i) {
    next.clear();
    detail::stack_sort_into(cur, next);
    cur.swap(next);
  }
  return is_identity(cur);
}

unsigned sorting_depth(WordView p) {
  require_permutation(p);
  Word cur(p.begin(), p.end()), next;
  unsigned t = 0;
  while (!is_identity(cur)) {
    next.clear();
    detail::stack_sort_into(cur, next);
    cur.swap(next);
    ++t;
  }
  return t;
}

bool avoids_231(WordView p) {
  const std::size_t n = p.size();
  for (std::size_t j = 1; j + 1 < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (p[i] >= p[j]) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (p[k] < p[i]) return false;
    }
  }
  return true;
}

bool west_two_stack_check(WordView p) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          Letter va = p[a], vb = p[b], vc = p[c], vd = p[d];
          if (!(vd < va && vd < vb && vc > va && vc > vb)) continue;
          if (va < vb) return false;  // 2341
          // 3241: blocked only by a letter above the "4" between "3" and "2".
          bool extends = false;
          for (std::size_t e = a + 1; e < b && !extends; ++e)
            if (p[e] > vc) extends = true;
          if (!extends) return false;
        }
  return true;
}

CharResult t_char_check(WordView p, unsigned t) {
  if (t == 0) throw InvalidInput("t_char_check requires t >= 1");
  require_permutation(p);
  CharResult result;
  result.witness = CharSearch(p, t).run();
  result.sortable = !result.witness.has_value();
  return result;
}

bool is_2ss_ktuple(const KTuple& t) {
  if (!is_valid_ktuple(t)) throw InvalidInput("invalid k-tuple r-permutation");
  Word once, twice;
  for (const auto& c : t.components) detail::stack_sort_into(c, once);
  detail::stack_sort_into(once, twice);
  return is_identity(relabel_by_rank(twice));
}

bool is_3ss_mutuple(const std::vector<std::vector<Word>>& groups) {
  Word all;
  for (const auto& g : groups)
    for (const auto& c : g) all.insert(all.end(), c.begin(), c.end());
  require_permutation(all);

  Word outer;
  Word inner, sorted_inner;
  for (const auto& g : groups) {
    inner.clear();
    for (const auto& c : g) detail::stack_sort_into(c, inner);
    sorted_inner.clear();
    detail::stack_sort_into(inner, sorted_inner);
    outer.insert(outer.end(), sorted_inner.begin(), sorted_inner.end());
  }
  Word final_pass;
  detail::stack_sort_into(outer, final_pass);
  return is_identity(final_pass);
}

}  // namespace stacksort
