// Command-line front end. Talks to the library only through stacksort.h.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stacksort.h"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string message;
};

void check(ss_status s) {
  if (s == SS_OK) return;
  int code = s == SS_ERR_INTERNAL ? 3 : kExitUsage;
  throw Failure{code, std::string(ss_status_name(s)) + ": " + ss_last_error()};
}

// Owning wrappers over the C handles.
struct Word {
  ss_word* p = nullptr;
  Word() = default;
  explicit Word(const std::string& text) { check(ss_word_parse(text.c_str(), &p)); }
  Word(const Word&) = delete;
  Word& operator=(const Word&) = delete;
  ~Word() { ss_word_free(p); }
};

struct Text {
  ss_text* p = nullptr;
  Text() = default;
  Text(const Text&) = delete;
  Text& operator=(const Text&) = delete;
  ~Text() { ss_text_free(p); }
  std::string str() const { return ss_text_str(p); }
};

std::vector<unsigned> parse_list(const std::string& s, const char* what) {
  std::vector<unsigned> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    std::istringstream ts(tok);
    long v;
    std::string rest;
    if (!(ts >> v) || (ts >> rest) || v < 0) throw Failure{kExitUsage, std::string("bad ") + what + ": '" + s + "'"};
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw Failure{kExitUsage, std::string("empty ") + what};
  return out;
}

ss_format parse_format(const std::string& s) {
  if (s == "json") return SS_FORMAT_JSON;
  if (s == "csv") return SS_FORMAT_CSV;
  if (s == "dot") return SS_FORMAT_DOT;
  if (s == "text") return SS_FORMAT_TEXT;
  throw Failure{kExitUsage, "unknown format '" + s + "'"};
}

void emit(const std::string& s, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << s;
    std::cout.flush();
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "cannot open '" + out_path + "' for writing"};
  f << s;
}

unsigned default_order() {
  const char* env = std::getenv("STACKSORT_ORDER");
  if (!env || !*env) return 4;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 64) throw Failure{kExitUsage, "STACKSORT_ORDER must be an integer in 1..64"};
  return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stack-sorting toolkit: sorting operators, sortability checks, exhaustive counts and series checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ss_version()));

  std::string perm, lambda_s, format = "json", tree_format = "dot", out_path, method = "char", formula, k_s, which, filter = "2ss";
  unsigned r = 0, t = 0, n = 0, k = 0, jobs = 1, order = 0, z_order = 0, x_degree = 0;
  bool machine = false, allow_empty = false, by_descents = false;

  auto* sort = app.add_subcommand("sort", "Apply S (or S_lambda, or the one-stack machine) to a word");
  sort->add_option("--perm", perm, "Word, e.g. \"5 4 4 4 5 3\" or 231")->required();
  sort->add_flag("--machine", machine, "Run the push/pop stack procedure (distinct letters)");
  sort->add_option("--lambda", lambda_s, "Cuts of S_lambda, e.g. 1,2");
  sort->add_option("--r", r, "Multiplicity r (default: inferred)");

  auto* desc = app.add_subcommand("descents", "Descent sets and descent vector of a word or tuple");
  desc->add_option("--perm", perm, "Word or tuple (components separated by |)")->required();
  desc->add_option("--r", r, "Multiplicity r (default: inferred)");

  auto* tree = app.add_subcommand("tree", "Decreasing tree (or forest) of an r-permutation");
  tree->add_option("--perm", perm, "Word or tuple")->required();
  tree->add_option("--r", r, "Multiplicity r (default: inferred)");
  tree->add_option("--format", tree_format, "dot or text")->capture_default_str();

  auto* chk = app.add_subcommand("check", "Is the permutation t-stack-sortable? Exit 1 if not");
  chk->add_option("--t", t, "Number of passes")->required();
  chk->add_option("--perm", perm, "Permutation, or tuple for t = 2")->required();
  chk->add_option("--method", method, "char (pattern characterization), iterate, 231 or west")->default_str("char");

  auto* en = app.add_subcommand("enumerate", "Exhaustive counts, optionally by descent vector");
  en->add_option("--n", n, "Number of distinct letters")->required();
  en->add_option("--r", r, "Multiplicity r")->default_str("1");
  en->add_option("--k", k, "Count k-tuples");
  en->add_flag("--allow-empty", allow_empty, "Allow empty tuple components");
  en->add_flag("--by-descents", by_descents, "Histogram keyed by descent vector");
  en->add_option("--lambda", lambda_s, "Count S(S_lambda(pi)) = I, e.g. 1,2");
  en->add_option("--filter", filter, "all, ss or 2ss")->default_str("2ss");
  en->add_option("--jobs", jobs, "Worker threads")->default_str("1");
  en->add_option("--format", format, "json or csv")->default_str("json");
  en->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* cnt = app.add_subcommand("count", "Closed-form counts");
  cnt->add_option("--formula", formula, "ss, 2ss, 2ss-total, h-variant or lambda12")->required();
  cnt->add_option("--n", n, "n (omit with --k)");
  cnt->add_option("--r", r, "Multiplicity r")->default_str("1");
  cnt->add_option("--k", k_s, "Descent vector, e.g. 1,1 (default: every k with sum n-1)");
  cnt->add_option("--format", format, "json or csv")->default_str("json");
  cnt->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* vs = app.add_subcommand("verify-series", "Coefficientwise series checks. Exit 1 on any mismatch");
  vs->add_option("--which", which, "fe, solution, p, zeilberger, h, lambda12 or identities")->required();
  vs->add_option("--r", r, "Multiplicity r")->default_str("1");
  vs->add_option("--order", order, "Truncation order (default: $STACKSORT_ORDER or 4)");
  vs->add_option("--z-order", z_order, "z-degree bound (default: order)");
  vs->add_option("--x-degree", x_degree, "x-degree bound (default: order)");
  vs->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* st = app.add_subcommand("selftest", "Run the acceptance suite");
  st->add_option("--jobs", jobs, "Worker threads")->default_str("1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sort) {
      Word w(perm);
      Word out;
      if (!lambda_s.empty()) {
        auto cuts = parse_list(lambda_s, "lambda");
        check(ss_stack_sort_lambda(w.p, cuts.data(), cuts.size(), r, &out.p));
      } else if (machine) {
        check(ss_stack_sort_machine(w.p, &out.p));
      } else {
        check(ss_stack_sort(w.p, &out.p));
      }
      Text s;
      check(ss_word_format(out.p, &s.p));
      emit(s.str() + "\n", "");
      return 0;
    }
    if (*desc) {
      Word w(perm);
      Text s;
      check(ss_descents(w.p, r, &s.p));
      emit(s.str(), "");
      return 0;
    }
    if (*tree) {
      Word w(perm);
      Text s;
      check(ss_tree_render(w.p, r, parse_format(tree_format), &s.p));
      emit(s.str(), "");
      return 0;
    }
    if (*chk) {
      Word w(perm);
      Text s;
      int ok = 0;
      check(ss_check(w.p, t, method.c_str(), &ok, &s.p));
      emit(s.str(), "");
      return ok ? 0 : kExitFalse;
    }
    if (*en) {
      if (jobs == 0) throw Failure{kExitUsage, "--jobs must be positive"};
      ss_enum_query q{};
      q.n = n;
      q.r = r == 0 ? 1 : r;
      if (filter == "all") q.filter = SS_FILTER_ALL;
      else if (filter == "ss") q.filter = SS_FILTER_SS;
      else if (filter == "2ss") q.filter = SS_FILTER_2SS;
      else throw Failure{kExitUsage, "unknown filter '" + filter + "'"};
      q.has_k = en->count("--k") > 0;
      q.k = k;
      q.allow_empty = allow_empty;
      std::vector<unsigned> cuts;
      if (!lambda_s.empty()) cuts = parse_list(lambda_s, "lambda");
      q.lambda = cuts.empty() ? nullptr : cuts.data();
      q.lambda_len = cuts.size();
      q.by_descents = by_descents;
      q.jobs = jobs;
      Text s;
      check(ss_enumerate(&q, parse_format(format), &s.p));
      emit(s.str(), out_path);
      return 0;
    }
    if (*cnt) {
      std::vector<std::uint64_t> kv;
      if (!k_s.empty())
        for (auto v : parse_list(k_s, "k")) kv.push_back(v);
      if (kv.empty() && cnt->count("--n") == 0) throw Failure{kExitUsage, "--n or --k is required"};
      Text s;
      check(ss_count_formula(formula.c_str(), n, r == 0 ? 1 : r, kv.empty() ? nullptr : kv.data(), kv.size(),
                             parse_format(format), &s.p));
      emit(s.str(), out_path);
      return 0;
    }
    if (*vs) {
      if (order == 0) order = default_order();
      if (z_order == 0) z_order = order;
      if (x_degree == 0) x_degree = order;
      Text s;
      int ok = 0;
      check(ss_verify_series(which.c_str(), r == 0 ? 1 : r, z_order, x_degree, &ok, &s.p));
      emit(s.str(), out_path);
      return ok ? 0 : kExitFalse;
    }
    if (*st) {
      int all = 0;
      auto cb = [](void*, int id, const char* name, int passed, const char* detail, double secs, double budget) {
        std::printf("%s [%d] %s (%.2fs / %.0fs): %s\n", passed ? "PASS" : "FAIL", id, name, secs, budget, detail);
        std::fflush(stdout);
      };
      check(ss_selftest(jobs == 0 ? 1 : jobs, cb, nullptr, &all));
      return all ? 0 : kExitFalse;
    }
  } catch (const Failure& f) {
    std::cerr << "stacksort: " << f.message << "\n";
    return f.code;
  }
  return kExitUsage;
}
