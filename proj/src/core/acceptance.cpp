#include "stacksort/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "stacksort/closed_forms.hpp"
#include "stacksort/enumeration.hpp"
#include "stacksort/perm_core.hpp"
#include "stacksort/report.hpp"
#include "stacksort/series_lab.hpp"
#include "stacksort/sortability.hpp"

namespace stacksort {

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (ok) detail.str("");
    if (!ok) detail << "; ";
    ok = false;
    detail << what;
  }
};

std::string series_summary(const SeriesReport& rep) {
  std::ostringstream os;
  os << rep.which << " r=" << rep.r << ": " << rep.checked_coeffs() << " coefficients, " << rep.mismatch_count()
     << " mismatches";
  if (!rep.mismatches.empty()) {
    const auto& m = rep.mismatches.front();
    os << " (first: " << m.check << " at " << m.monomial << " expected " << m.expected << " got " << m.actual << ")";
  }
  return os.str();
}

void c1_west(Outcome& o, unsigned jobs) {
  for (unsigned n = 1; n <= 8; ++n) {
    BigInt got = count_2ss(n, 1, jobs), want = west_number(n);
    if (got != want) o.fail("n=" + std::to_string(n) + ": brute " + to_string(got) + " vs " + to_string(want));
  }
  if (o.ok) o.detail << "n=1..8 match, n=8 count " << to_string(west_number(8));
}

void c2_r_general(Outcome& o, unsigned jobs) {
  const std::pair<unsigned, unsigned> cases[] = {{2, 5}, {3, 4}};
  for (auto [r, nmax] : cases)
    for (unsigned n = 1; n <= nmax; ++n) {
      BigInt got = count_2ss(n, r, jobs), want = twoss_total(n, r);
      if (got != want)
        o.fail("r=" + std::to_string(r) + " n=" + std::to_string(n) + ": " + to_string(got) + " vs " + to_string(want));
    }
  if (o.ok) o.detail << "r=2 n<=5 and r=3 n<=4 match";
}

void c3_descents(Outcome& o, unsigned jobs) {
  std::size_t cells = 0;
  const std::pair<unsigned, unsigned> cases[] = {{1, 7}, {2, 5}};
  for (auto [r, nmax] : cases)
    for (unsigned n = 1; n <= nmax; ++n) {
      auto h = count_2ss_by_descents(n, r, jobs);
      for (const auto& k : descent_vectors(n - 1, r + 1)) {
        ++cells;
        auto it = h.find(k);
        BigInt got = it == h.end() ? BigInt(0) : it->second;
        BigInt want = twoss_descent_count(k);
        if (got != want)
          o.fail("r=" + std::to_string(r) + " k=" + format_descent_vector(k) + ": " + to_string(got) + " vs " +
                 to_string(want));
        if (r == 1 && want != bmt_descent_count(n, static_cast<unsigned>(k[1])))
          o.fail("r=1 k=" + format_descent_vector(k) + " differs from the one-parameter form");
      }
      if (h.size() > descent_vectors(n - 1, r + 1).size()) o.fail("unexpected descent vectors");
    }
  if (o.ok) o.detail << cells << " (n,k) cells match; r=1 agrees with the one-parameter form";
}

void c4_ss(Outcome& o, unsigned jobs) {
  std::size_t cells = 0;
  for (unsigned r = 1; r <= 2; ++r)
    for (unsigned n = 1; n <= 6; ++n) {
      auto h = count_ss_by_descents(n, r, jobs);
      BigInt row = 0;
      for (const auto& k : descent_vectors(n - 1, r + 1)) {
        ++cells;
        auto it = h.find(k);
        BigInt got = it == h.end() ? BigInt(0) : it->second;
        if (got != ss_count(k))
          o.fail("r=" + std::to_string(r) + " k=" + format_descent_vector(k) + ": " + to_string(got) + " vs " +
                 to_string(ss_count(k)));
        if (r == 1 && got != narayana(n, static_cast<unsigned>(k[1]) + 1))
          o.fail("r=1 n=" + std::to_string(n) + " not Narayana at k=" + format_descent_vector(k));
        row += got;
      }
      if (r == 1 && row != catalan(n)) o.fail("r=1 n=" + std::to_string(n) + " row sum is not Catalan");
    }
  if (o.ok) o.detail << cells << " cells match; r=1 rows Narayana, sums Catalan";
}

struct CharTally {
  std::uint64_t perms = 0;
  std::uint64_t mismatch[4] = {0, 0, 0, 0};
  std::uint64_t pattern_mismatch[3] = {0, 0, 0};
  std::vector<Word> examples[4];
};

void c5_characterization(Outcome& o, unsigned jobs) {
  jobs = std::max(1u, jobs);
  std::vector<CharTally> tallies(jobs);
  for (unsigned n = 1; n <= 8; ++n) {
    auto work = [&, n](unsigned j) {
      CharTally& tl = tallies[j];
      for_each_r_permutation(
          n, 1,
          [&](WordView p) {
            ++tl.perms;
            unsigned depth = sorting_depth(p);
            for (unsigned t = 1; t <= 3; ++t) {
              bool truth = depth <= t;
              if (t_char_check(p, t).sortable != truth) {
                ++tl.mismatch[t];
                if (tl.examples[t].size() < 4) tl.examples[t].emplace_back(p.begin(), p.end());
              }
            }
            if (avoids_231(p) != (depth <= 1)) ++tl.pattern_mismatch[1];
            if (west_two_stack_check(p) != (depth <= 2)) ++tl.pattern_mismatch[2];
          },
          Shard{j, jobs});
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> ts;
      for (unsigned j = 0; j < jobs; ++j) ts.emplace_back(work, j);
      for (auto& t : ts) t.join();
    }
  }
  CharTally all;
  for (auto& tl : tallies) {
    all.perms += tl.perms;
    for (int t = 1; t <= 3; ++t) {
      all.mismatch[t] += tl.mismatch[t];
      all.examples[t].insert(all.examples[t].end(), tl.examples[t].begin(), tl.examples[t].end());
    }
    for (int t = 1; t <= 2; ++t) all.pattern_mismatch[t] += tl.pattern_mismatch[t];
  }
  std::ostringstream os;
  os << all.perms << " permutations (n<=8); characterization mismatches t=1: " << all.mismatch[1]
     << ", t=2: " << all.mismatch[2] << ", t=3: " << all.mismatch[3] << "; 231-avoidance mismatches "
     << all.pattern_mismatch[1] << ", West test mismatches " << all.pattern_mismatch[2];
  for (int t = 1; t <= 3; ++t) {
    if (all.mismatch[t] == 0) continue;
    auto ex = all.examples[t];
    std::sort(ex.begin(), ex.end(), [](const Word& a, const Word& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    os << "; t=" << t << " e.g. " << format_word_compact(ex.front()) << " (depth " << sorting_depth(ex.front()) << ")";
  }
  bool clean = all.mismatch[1] == 0 && all.mismatch[2] == 0 && all.mismatch[3] == 0 && all.pattern_mismatch[1] == 0 &&
               all.pattern_mismatch[2] == 0;
  if (!clean) o.fail(os.str());
  else o.detail << os.str();
}

void c6_exactly_t(Outcome& o, unsigned jobs) {
  for (unsigned n = 4; n <= 7; ++n) {
    auto h = count_exactly_t_sortable(n, jobs);
    BigInt a = factorial(n - 2);
    BigInt b = exact_div(7 * factorial(n - 2), 2) + factorial(n - 3);
    if (h[n - 1] != a) o.fail("n=" + std::to_string(n) + " exactly-(n-1) " + to_string(h[n - 1]) + " vs " + to_string(a));
    if (h[n - 2] != b) o.fail("n=" + std::to_string(n) + " exactly-(n-2) " + to_string(h[n - 2]) + " vs " + to_string(b));
  }
  if (o.ok) o.detail << "n=4..7 match both formulas";
}

void series_criterion(Outcome& o, const std::vector<SeriesReport>& reps) {
  std::uint64_t coeffs = 0;
  for (const auto& rep : reps) {
    coeffs += rep.checked_coeffs();
    if (!rep.ok()) o.fail(series_summary(rep));
  }
  if (o.ok) o.detail << reps.size() << (reps.size() == 1 ? " report, " : " reports, ") << coeffs << " coefficients checked, no mismatches";
}

void c7_solution(Outcome& o) {
  std::vector<SeriesReport> reps;
  for (unsigned r = 1; r <= 2; ++r) {
    reps.push_back(verify_fe(r, 3, 5));
    reps.push_back(verify_solution_2ss(r, 3, 5));
  }
  series_criterion(o, reps);
}

void c8_p(Outcome& o) {
  std::vector<SeriesReport> reps;
  for (unsigned r = 1; r <= 2; ++r) reps.push_back(verify_p_pipeline(r, 4, 4));
  reps.push_back(verify_zeilberger(4));
  series_criterion(o, reps);
}

void c9_h(Outcome& o) {
  series_criterion(o, {verify_h_variant(1, 3, 4)});
  std::size_t n_checks = 0;
  for (unsigned r = 1; r <= 2; ++r)
    for (unsigned s = 0; s <= 4; ++s)
      for (const auto& k : descent_vectors(s, r + 1)) {
        ++n_checks;
        if (!reflection_check(1 + static_cast<long>(s), k))
          o.fail("reflection fails at r=" + std::to_string(r) + " k=" + format_descent_vector(k));
      }
  if (o.ok) o.detail << "; reflection holds at " << n_checks << " points";
}

void c10_lambda(Outcome& o, unsigned jobs) {
  const Lambda lam({1, 2}, 2);
  for (unsigned n = 1; n <= 4; ++n) {
    BigInt got = count_2ss_lambda(n, 2, lam, jobs), want = lambda12_p1_coeff(n);
    if (got != want) o.fail("n=" + std::to_string(n) + ": " + to_string(got) + " vs " + to_string(want));
  }
  auto rep = verify_lambda12(4);
  if (!rep.ok()) o.fail(series_summary(rep));
  if (o.ok) o.detail << "n=1..4 match (1, 3, 13, 67); series pipeline agrees";
}

void c11_det(Outcome& o) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> numd(-20, 20), dend(1, 20), lend(1, 5);
  unsigned done = 0;
  while (done < 100) {
    std::vector<BigRational> x(static_cast<std::size_t>(lend(rng)));
    bool bad = false;
    for (auto& v : x) {
      v = BigRational(numd(rng), dend(rng));
      v.canonicalize();
      if (v == -1) bad = true;
    }
    if (bad) continue;
    ++done;
    if (!det_identity_check(x)) o.fail("vector " + std::to_string(done) + " disagrees");
  }
  if (o.ok) o.detail << "100 vectors of length 1..5 agree";
}

void c12_determinism(Outcome& o) {
  std::vector<EnumerationQuery> qs;
  qs.push_back({.n = 7, .r = 1, .filter = Filter::TwoStackSortable});
  qs.push_back({.n = 4, .r = 2, .filter = Filter::All});
  qs.push_back({.n = 4, .r = 2, .filter = Filter::TwoStackSortable, .k = 2u, .allow_empty = true});
  qs.push_back({.n = 4, .r = 2, .filter = Filter::TwoStackSortable, .lambda = Lambda({1, 2}, 2)});
  for (auto q : qs) {
    q.jobs = 1;
    std::string a = render_enumeration(q, enumerate_histogram(q), true, Format::Json);
    q.jobs = 8;
    std::string b = render_enumeration(q, enumerate_histogram(q), true, Format::Json);
    if (a != b) o.fail("jobs 1 and 8 differ for n=" + std::to_string(q.n) + " r=" + std::to_string(q.r));
  }
  if (o.ok) o.detail << qs.size() << " queries byte-identical at jobs 1 and 8";
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  char times[64];
  std::snprintf(times, sizeof times, "%.2fs / %.0fs", r.seconds, r.budget);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + times +
         "): " + r.detail;
}

std::vector<CriterionResult> run_acceptance(unsigned jobs, const std::function<void(const CriterionResult&)>& on_result) {
  struct Spec {
    int id;
    const char* name;
    double budget;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Spec> specs = {
      {1, "West numbers by brute force", 10, [&](Outcome& o) { c1_west(o, jobs); }},
      {2, "two-stack-sortable r-permutation totals", 60, [&](Outcome& o) { c2_r_general(o, jobs); }},
      {3, "descent-refined two-stack-sortable counts", 60, [&](Outcome& o) { c3_descents(o, jobs); }},
      {4, "descent-refined stack-sortable counts", 10, [&](Outcome& o) { c4_ss(o, jobs); }},
      {5, "t-stack-sortable characterization", 300, [&](Outcome& o) { c5_characterization(o, jobs); }},
      {6, "exactly-t-sortable counts", 30, [&](Outcome& o) { c6_exactly_t(o, jobs); }},
      {7, "series solution G, F", 60, [&](Outcome& o) { c7_solution(o); }},
      {8, "P pipeline and Zeilberger equation", 60, [&](Outcome& o) { c8_p(o); }},
      {9, "h-variant and reflection", 30, [&](Outcome& o) { c9_h(o); }},
      {10, "S_lambda with lambda = (1,2)", 60, [&](Outcome& o) { c10_lambda(o, jobs); }},
      {11, "determinant identity", 5, [&](Outcome& o) { c11_det(o); }},
      {12, "jobs 1 vs 8 determinism", 60, [&](Outcome& o) { c12_determinism(o); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& s : specs) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      s.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CriterionResult r{s.id, s.name, o.ok, o.detail.str(), secs, s.budget};
    if (r.passed && secs > s.budget) {
      r.passed = false;
      r.detail += "; over the time budget";
    }
    results.push_back(r);
    if (on_result) on_result(r);
  }
  return results;
}

}  // namespace stacksort
