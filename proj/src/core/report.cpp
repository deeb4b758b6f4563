#include "stacksort/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "stacksort/closed_forms.hpp"
#include "stacksort/error.hpp"
#include "stacksort/perm_core.hpp"

namespace stacksort {

using nlohmann::json;

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

json vector_json(const DescentVector& k) {
  json a = json::array();
  for (auto v : k.counts()) a.push_back(num(v));
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_header(std::size_t types) {
  std::string h;
  for (std::size_t i = 0; i < types; ++i) h += "k_" + std::to_string(i) + ",";
  return h + "count\n";
}

std::string csv_row(const DescentVector& k, const std::string& count) {
  std::string row;
  for (auto v : k.counts()) row += num(v) + ",";
  return row + count + "\n";
}

const char* filter_name(Filter f) {
  switch (f) {
    case Filter::All: return "all";
    case Filter::StackSortable: return "ss";
    case Filter::TwoStackSortable: return "2ss";
  }
  return "?";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw InvalidInput("unknown format: " + name);
}

std::string render_enumeration(const EnumerationQuery& q, const Histogram& h, bool by_descents, Format f) {
  BigInt total = histogram_total(h);
  if (f == Format::Csv) {
    if (!by_descents) return "n,r,count\n" + num(q.n) + "," + num(q.r) + "," + to_string(total) + "\n";
    std::string out = csv_header(q.r + 1);
    for (const auto& [k, v] : h) out += csv_row(k, to_string(v));
    return out;
  }
  json j;
  j["n"] = num(q.n);
  j["r"] = num(q.r);
  j["filter"] = filter_name(q.filter);
  j["total"] = to_string(total);
  if (q.k) {
    j["k"] = num(*q.k);
    j["allow_empty"] = q.allow_empty;
  }
  if (q.lambda) {
    json cuts = json::array();
    for (auto c : q.lambda->cuts()) cuts.push_back(num(c));
    j["lambda"] = cuts;
  }
  if (by_descents) {
    json rows = json::array();
    for (const auto& [k, v] : h) rows.push_back({{"k", vector_json(k)}, {"count", to_string(v)}});
    j["rows"] = rows;
  }
  return dump(j);
}

std::string render_formula(const std::string& formula, unsigned n, unsigned r, const std::optional<DescentVector>& k,
                           Format f) {
  if (r == 0) throw InvalidInput("r must be positive");
  auto scalar = [&](const BigInt& v) {
    if (f == Format::Csv) return "formula,n,r,value\n" + formula + "," + num(n) + "," + num(r) + "," + to_string(v) + "\n";
    json j{{"formula", formula}, {"n", num(n)}, {"r", num(r)}, {"value", to_string(v)}};
    return dump(j);
  };
  if (formula == "2ss-total") return scalar(twoss_total(n, r));
  if (formula == "lambda12") return scalar(lambda12_p1_coeff(n));

  BigInt (*eval)(const DescentVector&) = nullptr;
  if (formula == "ss") eval = ss_count;
  else if (formula == "2ss") eval = twoss_descent_count;
  else if (formula == "h-variant") eval = h_variant_count;
  else throw InvalidInput("unknown formula: " + formula);

  if (k) {
    if (k->types() != r + 1) throw InvalidInput("k needs r+1 entries");
    if (n != 0 && n != 1 + k->total()) throw InvalidInput("n must equal 1 + sum of k");
    BigInt v = eval(*k);
    if (f == Format::Csv) return csv_header(r + 1) + csv_row(*k, to_string(v));
    json j{{"formula", formula}, {"n", num(1 + k->total())}, {"r", num(r)}, {"k", vector_json(*k)}, {"value", to_string(v)}};
    return dump(j);
  }
  if (n == 0) throw InvalidInput("n must be positive");
  auto ks = descent_vectors(n - 1, r + 1);
  if (f == Format::Csv) {
    std::string out = csv_header(r + 1);
    for (const auto& kv : ks) out += csv_row(kv, to_string(eval(kv)));
    return out;
  }
  json rows = json::array();
  BigInt total = 0;
  for (const auto& kv : ks) {
    BigInt v = eval(kv);
    total += v;
    rows.push_back({{"k", vector_json(kv)}, {"count", to_string(v)}});
  }
  json j{{"formula", formula}, {"n", num(n)}, {"r", num(r)}, {"rows", rows}, {"total", to_string(total)}};
  return dump(j);
}

std::string render_series_report(const SeriesReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"checked", num(c.checked)}, {"mismatches", num(c.mismatches)}});
  json mism = json::array();
  for (const auto& m : rep.mismatches)
    mism.push_back({{"check", m.check}, {"monomial", m.monomial}, {"expected", m.expected}, {"actual", m.actual}});
  json j{{"which", rep.which},
         {"r", num(rep.r)},
         {"z_order", num(rep.z_order)},
         {"x_degree", num(rep.x_degree)},
         {"checked_coeffs", num(rep.checked_coeffs())},
         {"mismatch_count", num(rep.mismatch_count())},
         {"ok", rep.ok()},
         {"checks", checks},
         {"mismatches", mism}};
  return dump(j);
}

std::string render_descents(const std::vector<Word>& components, unsigned r) {
  std::vector<std::vector<Letter>> sets(r + 1);
  DescentVector k(r + 1);
  if (components.size() == 1) {
    sets = descent_sets(components[0], r);
    k = descent_vector(components[0], r);
  } else {
    KTuple t{components, r};
    k = ktuple_descent_vector(t);
    for (const auto& c : components) {
      auto s = descent_sets(c, r);
      for (unsigned i = 0; i <= r; ++i) sets[i].insert(sets[i].end(), s[i].begin(), s[i].end());
    }
    for (auto& s : sets) std::sort(s.begin(), s.end());
  }
  json js = json::array();
  for (const auto& s : sets) {
    json a = json::array();
    for (auto l : s) a.push_back(num(l));
    js.push_back(a);
  }
  json j{{"r", num(r)}, {"sets", js}, {"vector", vector_json(k)}, {"components", num(components.size())}};
  return dump(j);
}

std::string render_check(unsigned t, const std::string& method, bool sortable, const std::optional<CharWitness>& witness,
                         WordView p) {
  json j{{"t", num(t)}, {"method", method}, {"sortable", sortable}};
  if (witness) {
    json pos = json::array(), letters = json::array();
    for (auto i : witness->positions) {
      pos.push_back(num(i + 1));
      letters.push_back(num(p[i]));
    }
    j["witness"] = {{"positions", pos}, {"letters", letters}};
  } else {
    j["witness"] = nullptr;
  }
  return dump(j);
}

}  // namespace stacksort
