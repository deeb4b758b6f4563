#include "stacksort/perm_core.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "stacksort/error.hpp"

namespace stacksort {

namespace {

// Dense index for the letters of a word: letter -> 0..distinct-1.
class LetterIndex {
 public:
  explicit LetterIndex(WordView w) : sorted_(w.begin(), w.end()) {
    std::sort(sorted_.begin(), sorted_.end());
    sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
    dense_ = !sorted_.empty() && sorted_.back() <= 4 * sorted_.size() + 64;
    if (dense_) {
      table_.assign(sorted_.back() + 1, 0);
      for (std::size_t i = 0; i < sorted_.size(); ++i) table_[sorted_[i]] = static_cast<std::uint32_t>(i);
    }
  }

  std::size_t size() const { return sorted_.size(); }
  const Word& letters() const { return sorted_; }

  std::size_t operator()(Letter a) const {
    if (dense_) return table_[a];
    return static_cast<std::size_t>(std::lower_bound(sorted_.begin(), sorted_.end(), a) - sorted_.begin());
  }

 private:
  Word sorted_;
  std::vector<std::uint32_t> table_;
  bool dense_ = false;
};

std::vector<std::uint32_t> multiplicities(WordView w, const LetterIndex& idx) {
  std::vector<std::uint32_t> mult(idx.size(), 0);
  for (Letter a : w) ++mult[idx(a)];
  return mult;
}

// Scan with a stack of "open" letters (seen, not yet exhausted). A letter
// strictly inside an open letter's span must be smaller, and a re-occurring
// letter must be the innermost open one.
bool nesting_ok(WordView w, const LetterIndex& idx, std::vector<std::uint32_t> remaining) {
  std::vector<Letter> open;
  for (Letter a : w) {
    std::size_t i = idx(a);
    if (!open.empty() && open.back() == a) {
      // continuing the innermost span
    } else {
      if (!open.empty() && a > open.back()) return false;
      if (std::find(open.begin(), open.end(), a) != open.end()) return false;
      open.push_back(a);
    }
    if (--remaining[i] == 0) open.pop_back();
  }
  return true;
}

void require_nesting(WordView w) {
  if (!satisfies_nesting(w))
    throw InvalidInput("word '" + format_word(w) + "' violates the nesting condition");
}

}  // namespace

bool satisfies_nesting(WordView w) {
  LetterIndex idx(w);
  return nesting_ok(w, idx, multiplicities(w, idx));
}

bool is_r_word(WordView w, unsigned r) {
  if (r == 0) return false;
  if (w.empty()) return true;
  LetterIndex idx(w);
  auto mult = multiplicities(w, idx);
  for (auto m : mult)
    if (m != r) return false;
  return nesting_ok(w, idx, std::move(mult));
}

bool is_r_permutation(WordView w, unsigned r) {
  if (!is_r_word(w, r)) return false;
  Letter n = static_cast<Letter>(w.size() / r);
  for (Letter a : w)
    if (a > n) return false;
  return true;
}

bool is_identity(WordView w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != i + 1) return false;
  return true;
}

Word relabel_by_rank(WordView w) {
  LetterIndex idx(w);
  Word out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(static_cast<Letter>(idx(a) + 1));
  return out;
}

namespace detail {

void stack_sort_into(WordView w, Word& out) {
  // Work items are either a half-open segment to sort or a letter to emit.
  struct Item {
    std::uint32_t lo, hi;
    Letter emit;
  };
  std::vector<Item> work;
  work.push_back({0, static_cast<std::uint32_t>(w.size()), 0});
  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    if (it.emit != 0) {
      out.push_back(it.emit);
      continue;
    }
    if (it.lo >= it.hi) continue;
    Letter m = *std::max_element(w.begin() + it.lo, w.begin() + it.hi);
    work.push_back({0, 0, m});
    std::uint32_t end = it.hi;
    for (std::uint32_t i = it.hi; i-- > it.lo;) {
      if (w[i] == m) {
        work.push_back({i + 1, end, 0});
        end = i;
      }
    }
    work.push_back({it.lo, end, 0});
  }
}

void stack_sort_lambda_into(WordView w, const Lambda& lambda, Word& out) {
  struct Item {
    std::uint32_t lo, hi;
    Letter emit;
  };
  const auto& cuts = lambda.cuts();
  std::vector<Item> work;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> blocks;
  work.push_back({0, static_cast<std::uint32_t>(w.size()), 0});
  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    if (it.emit != 0) {
      out.push_back(it.emit);
      continue;
    }
    if (it.lo >= it.hi) continue;
    Letter m = *std::max_element(w.begin() + it.lo, w.begin() + it.hi);
    blocks.clear();
    std::uint32_t start = it.lo;
    for (std::uint32_t i = it.lo; i < it.hi; ++i) {
      if (w[i] == m) {
        blocks.emplace_back(start, i);
        start = i + 1;
      }
    }
    blocks.emplace_back(start, it.hi);
    // blocks.size() == r + 1 for a valid r-word.
    for (std::size_t c = cuts.size(); c-- > 0;) {
      work.push_back({0, 0, m});
      std::size_t first = c == 0 ? 0 : cuts[c - 1] + 1;
      for (std::size_t b = cuts[c] + 1; b-- > first;) work.push_back({blocks[b].first, blocks[b].second, 0});
    }
  }
}

void descent_vector_into(WordView w, unsigned r, DescentVector& acc) {
  if (w.empty()) return;
  LetterIndex idx(w);
  std::vector<std::uint32_t> seen(idx.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter a = w[i];
    std::uint32_t occ = ++seen[idx(a)];
    if (occ == 1 && i > 0 && w[i - 1] < a) ++acc[0];
    if (i + 1 < w.size() && w[i + 1] < a && occ <= r) ++acc[occ];
  }
}

}  // namespace detail

Word stack_sort(WordView w) {
  require_nesting(w);
  Word out;
  out.reserve(w.size());
  detail::stack_sort_into(w, out);
  return out;
}

Word stack_sort_machine(WordView w) {
  {
    Word sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("stack machine requires distinct letters");
  }
  Word out, stack;
  out.reserve(w.size());
  for (Letter a : w) {
    while (!stack.empty() && stack.back() < a) {
      out.push_back(stack.back());
      stack.pop_back();
    }
    stack.push_back(a);
  }
  while (!stack.empty()) {
    out.push_back(stack.back());
    stack.pop_back();
  }
  return out;
}

Word stack_sort_lambda(WordView w, const Lambda& lambda) {
  if (!is_r_word(w, lambda.r()))
    throw InvalidInput("word '" + format_word(w) + "' is not a valid " + std::to_string(lambda.r()) +
                       "-permutation");
  Word out;
  detail::stack_sort_lambda_into(w, lambda, out);
  return out;
}

std::vector<std::vector<Letter>> descent_sets(WordView w, unsigned r) {
  if (!is_r_word(w, r))
    throw InvalidInput("word '" + format_word(w) + "' is not a valid " + std::to_string(r) + "-permutation");
  std::vector<std::set<Letter>> sets(r + 1);
  LetterIndex idx(w);
  std::vector<std::uint32_t> seen(idx.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter a = w[i];
    std::uint32_t occ = ++seen[idx(a)];
    if (occ == 1 && i > 0 && w[i - 1] < a) sets[0].insert(a);
    if (i + 1 < w.size() && w[i + 1] < a) sets[occ].insert(a);
  }
  std::vector<std::vector<Letter>> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

DescentVector descent_vector(WordView w, unsigned r) {
  auto sets = descent_sets(w, r);
  DescentVector k(r + 1);
  for (unsigned i = 0; i <= r; ++i) k[i] = sets[i].size();
  return k;
}

bool is_valid_ktuple(const KTuple& t) {
  if (t.r == 0) return false;
  std::set<Letter> seen;
  for (const auto& c : t.components) {
    std::set<Letter> mine(c.begin(), c.end());
    for (Letter a : mine)
      if (!seen.insert(a).second) return false;
  }
  return is_r_permutation(t.concatenation(), t.r);
}

DescentVector ktuple_descent_vector(const KTuple& t) {
  if (!is_valid_ktuple(t)) throw InvalidInput("invalid k-tuple r-permutation");
  DescentVector k(t.r + 1);
  for (const auto& c : t.components) detail::descent_vector_into(c, t.r, k);
  return k;
}

}  // namespace stacksort
