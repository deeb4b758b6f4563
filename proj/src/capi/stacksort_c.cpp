#include "stacksort.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>

#include "stacksort/acceptance.hpp"
#include "stacksort/closed_forms.hpp"
#include "stacksort/enumeration.hpp"
#include "stacksort/error.hpp"
#include "stacksort/perm_core.hpp"
#include "stacksort/report.hpp"
#include "stacksort/series_lab.hpp"
#include "stacksort/sortability.hpp"
#include "stacksort/tree_model.hpp"

using namespace stacksort;

struct ss_word {
  std::vector<Word> components;
  bool tuple = false;

  Word concat() const {
    Word out;
    for (const auto& c : components) out.insert(out.end(), c.begin(), c.end());
    return out;
  }
};

struct ss_text {
  std::string s;
};

namespace {

thread_local std::string g_last_error;

ss_status fail(ss_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
ss_status guard(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const InvalidInput& e) {
    return fail(SS_ERR_INVALID_INPUT, e.what());
  } catch (const DomainError& e) {
    return fail(SS_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SS_ERR_INTERNAL, e.what());
  }
}

ss_status need(const void* p, const char* what) {
  if (p) return SS_OK;
  return fail(SS_ERR_INVALID_ARGUMENT, std::string(what) + " is null");
}

ss_text* text(std::string s) { return new ss_text{std::move(s)}; }

ss_word* single(Word w) {
  auto* out = new ss_word;
  out->components.push_back(std::move(w));
  return out;
}

const Word& plain(const ss_word* w) {
  if (w->tuple) throw InvalidInput("expected a single word, got a tuple");
  return w->components.front();
}

unsigned infer_r(const ss_word* w) {
  Word all = w->concat();
  if (all.empty()) return 1;
  Letter m = *std::max_element(all.begin(), all.end());
  return static_cast<unsigned>(std::count(all.begin(), all.end(), m));
}

}  // namespace

extern "C" {

const char* ss_version(void) { return "1.0.0"; }

const char* ss_last_error(void) { return g_last_error.c_str(); }

const char* ss_status_name(ss_status s) {
  switch (s) {
    case SS_OK: return "ok";
    case SS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SS_ERR_INVALID_INPUT: return "invalid input";
    case SS_ERR_DOMAIN: return "domain error";
    case SS_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

ss_status ss_word_parse(const char* t, ss_word** out) {
  if (auto s = need(t, "text"); s != SS_OK) return s;
  if (auto s = need(out, "out"); s != SS_OK) return s;
  return guard([&] {
    std::string_view sv(t);
    auto* w = new ss_word;
    if (sv.find('|') != std::string_view::npos) {
      w->components = parse_tuple(sv);
      w->tuple = true;
    } else {
      w->components.push_back(parse_word(sv));
    }
    *out = w;
    return SS_OK;
  });
}

ss_status ss_word_from_letters(const uint32_t* letters, size_t len, ss_word** out) {
  if (len > 0)
    if (auto s = need(letters, "letters"); s != SS_OK) return s;
  if (auto s = need(out, "out"); s != SS_OK) return s;
  return guard([&] {
    Word w(letters, letters + len);
    if (std::find(w.begin(), w.end(), 0u) != w.end()) throw InvalidInput("letter 0 is not allowed");
    *out = single(std::move(w));
    return SS_OK;
  });
}

void ss_word_free(ss_word* w) { delete w; }

size_t ss_word_components(const ss_word* w) { return w ? w->components.size() : 0; }

size_t ss_word_length(const ss_word* w) {
  if (!w) return 0;
  size_t n = 0;
  for (const auto& c : w->components) n += c.size();
  return n;
}

ss_status ss_word_letters(const ss_word* w, uint32_t* buf, size_t cap, size_t* len) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (cap > 0)
    if (auto s = need(buf, "buf"); s != SS_OK) return s;
  Word all = w->concat();
  std::copy_n(all.begin(), std::min(cap, all.size()), buf);
  if (len) *len = all.size();
  return SS_OK;
}

ss_status ss_word_format(const ss_word* w, ss_text** out) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (auto s = need(out, "out"); s != SS_OK) return s;
  return guard([&] {
    *out = text(w->tuple ? format_tuple(w->components) : format_word(w->components.front()));
    return SS_OK;
  });
}

const char* ss_text_str(const ss_text* t) { return t ? t->s.c_str() : ""; }

void ss_text_free(ss_text* t) { delete t; }

ss_status ss_infer_r(const ss_word* w, unsigned* r) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (auto s = need(r, "r"); s != SS_OK) return s;
  *r = infer_r(w);
  return SS_OK;
}

ss_status ss_is_r_permutation(const ss_word* w, unsigned r, int* result) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (auto s = need(result, "result"); s != SS_OK) return s;
  return guard([&] {
    if (r == 0) r = infer_r(w);
    if (w->tuple)
      *result = is_valid_ktuple(KTuple{w->components, r});
    else
      *result = is_r_permutation(w->components.front(), r);
    return SS_OK;
  });
}

ss_status ss_stack_sort(const ss_word* w, ss_word** out) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (auto s = need(out, "out"); s != SS_OK) return s;
  return guard([&] {
    *out = single(stack_sort(plain(w)));
    return SS_OK;
  });
}

ss_status ss_stack_sort_machine(const ss_word* w, ss_word** out) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (auto s = need(out, "out"); s != SS_OK) return s;
  return guard([&] {
    *out = single(stack_sort_machine(plain(w)));
    return SS_OK;
  });
}

ss_status ss_stack_sort_lambda(const ss_word* w, const unsigned* cuts, size_t ncuts, unsigned r, ss_word** out) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (auto s = need(cuts, "cuts"); s != SS_OK) return s;
  if (auto s = need(out, "out"); s != SS_OK) return s;
  return guard([&] {
    if (r == 0) r = infer_r(w);
    Lambda lam(std::vector<unsigned>(cuts, cuts + ncuts), r);
    *out = single(stack_sort_lambda(plain(w), lam));
    return SS_OK;
  });
}

ss_status ss_descents(const ss_word* w, unsigned r, ss_text** out) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (auto s = need(out, "out"); s != SS_OK) return s;
  return guard([&] {
    if (r == 0) r = infer_r(w);
    if (!w->tuple && !is_r_word(w->components.front(), r))
      throw InvalidInput("'" + format_word(w->components.front()) + "' is not an r-word for r = " + std::to_string(r));
    *out = text(render_descents(w->components, r));
    return SS_OK;
  });
}

ss_status ss_tree_render(const ss_word* w, unsigned r, ss_format format, ss_text** out) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (auto s = need(out, "out"); s != SS_OK) return s;
  if (format != SS_FORMAT_DOT && format != SS_FORMAT_TEXT) return fail(SS_ERR_INVALID_ARGUMENT, "tree format must be dot or text");
  return guard([&] {
    if (r == 0) r = infer_r(w);
    if (w->tuple) {
      auto forest = to_forest(KTuple{w->components, r});
      if (format == SS_FORMAT_DOT) {
        *out = text(forest_to_dot(forest));
      } else {
        std::string s;
        for (std::size_t i = 0; i < forest.trees.size(); ++i) {
          if (i) s += "--\n";
          s += tree_to_text(forest.trees[i]);
        }
        *out = text(s);
      }
    } else {
      auto tree = to_tree(w->components.front(), r);
      *out = text(format == SS_FORMAT_DOT ? tree_to_dot(tree) : tree_to_text(tree));
    }
    return SS_OK;
  });
}

ss_status ss_check(const ss_word* w, unsigned t, const char* method, int* sortable, ss_text** json) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (auto s = need(sortable, "sortable"); s != SS_OK) return s;
  std::string m = method ? method : "char";
  if (t == 0) return fail(SS_ERR_INVALID_ARGUMENT, "t must be positive");
  if (m != "char" && m != "iterate" && m != "231" && m != "west")
    return fail(SS_ERR_INVALID_ARGUMENT, "unknown method: " + m);
  if (m == "231" && t != 1) return fail(SS_ERR_INVALID_ARGUMENT, "the 231 test applies to t = 1");
  if (m == "west" && t != 2) return fail(SS_ERR_INVALID_ARGUMENT, "West's test applies to t = 2");
  if (w->tuple && t != 2)
    return fail(SS_ERR_INVALID_ARGUMENT, "tuples are checked for two-stack-sortability only (t = 2)");
  return guard([&] {
    std::optional<CharWitness> witness;
    bool ok = false;
    Word all = w->concat();
    if (w->tuple) {
      ok = is_2ss_ktuple(KTuple{w->components, infer_r(w)});
      m = "iterate";
    } else if (m == "char") {
      auto res = t_char_check(all, t);
      ok = res.sortable;
      witness = res.witness;
    } else if (m == "iterate") {
      ok = is_t_stack_sortable(all, t);
    } else if (m == "231") {
      if (!is_r_permutation(all, 1)) throw InvalidInput("not a permutation of [n]");
      ok = avoids_231(all);
    } else if (m == "west") {
      if (!is_r_permutation(all, 1)) throw InvalidInput("not a permutation of [n]");
      ok = west_two_stack_check(all);
    }
    *sortable = ok;
    if (json) *json = text(render_check(t, m, ok, witness, all));
    return SS_OK;
  });
}

ss_status ss_is_2ss_tuple(const ss_word* w, unsigned r, int* result) {
  if (auto s = need(w, "word"); s != SS_OK) return s;
  if (auto s = need(result, "result"); s != SS_OK) return s;
  return guard([&] {
    if (r == 0) r = infer_r(w);
    *result = is_2ss_ktuple(KTuple{w->components, r});
    return SS_OK;
  });
}

ss_status ss_enumerate(const ss_enum_query* q, ss_format format, ss_text** out) {
  if (auto s = need(q, "query"); s != SS_OK) return s;
  if (auto s = need(out, "out"); s != SS_OK) return s;
  if (format != SS_FORMAT_JSON && format != SS_FORMAT_CSV) return fail(SS_ERR_INVALID_ARGUMENT, "format must be json or csv");
  if (q->lambda_len > 0)
    if (auto s = need(q->lambda, "lambda"); s != SS_OK) return s;
  return guard([&] {
    EnumerationQuery eq;
    eq.n = q->n;
    eq.r = q->r;
    switch (q->filter) {
      case SS_FILTER_ALL: eq.filter = Filter::All; break;
      case SS_FILTER_SS: eq.filter = Filter::StackSortable; break;
      case SS_FILTER_2SS: eq.filter = Filter::TwoStackSortable; break;
      default: throw InvalidInput("unknown filter");
    }
    if (q->has_k) eq.k = q->k;
    eq.allow_empty = q->allow_empty != 0;
    if (q->lambda_len > 0) eq.lambda = Lambda(std::vector<unsigned>(q->lambda, q->lambda + q->lambda_len), q->r);
    eq.jobs = std::max(1u, q->jobs);
    auto h = enumerate_histogram(eq);
    *out = text(render_enumeration(eq, h, q->by_descents != 0, format == SS_FORMAT_CSV ? Format::Csv : Format::Json));
    return SS_OK;
  });
}

ss_status ss_count_formula(const char* formula, unsigned n, unsigned r, const uint64_t* k, size_t k_len,
                           ss_format format, ss_text** out) {
  if (auto s = need(formula, "formula"); s != SS_OK) return s;
  {
    std::string f = formula;
    if (f != "ss" && f != "2ss" && f != "2ss-total" && f != "h-variant" && f != "lambda12")
      return fail(SS_ERR_INVALID_ARGUMENT, "unknown formula: " + f);
  }
  if (auto s = need(out, "out"); s != SS_OK) return s;
  if (format != SS_FORMAT_JSON && format != SS_FORMAT_CSV) return fail(SS_ERR_INVALID_ARGUMENT, "format must be json or csv");
  return guard([&] {
    std::optional<DescentVector> kv;
    if (k && k_len > 0) kv = DescentVector(std::vector<std::uint64_t>(k, k + k_len));
    *out = text(render_formula(formula, n, r, kv, format == SS_FORMAT_CSV ? Format::Csv : Format::Json));
    return SS_OK;
  });
}

ss_status ss_verify_series(const char* which, unsigned r, unsigned z_order, unsigned x_degree, int* ok,
                           ss_text** json) {
  if (auto s = need(which, "which"); s != SS_OK) return s;
  if (auto s = need(ok, "ok"); s != SS_OK) return s;
  return guard([&] {
    auto rep = verify_series(which, r, z_order, x_degree);
    *ok = rep.ok();
    if (json) *json = text(render_series_report(rep));
    return SS_OK;
  });
}

ss_status ss_selftest(unsigned jobs, ss_selftest_cb cb, void* user, int* all_passed) {
  return guard([&] {
    bool all = true;
    run_acceptance(std::max(1u, jobs), [&](const CriterionResult& r) {
      all = all && r.passed;
      if (cb) cb(user, r.id, r.name.c_str(), r.passed, r.detail.c_str(), r.seconds, r.budget);
    });
    if (all_passed) *all_passed = all;
    return SS_OK;
  });
}

}  // extern "C"
