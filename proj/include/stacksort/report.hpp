#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stacksort/enumeration.hpp"
#include "stacksort/series_lab.hpp"
#include "stacksort/sortability.hpp"
#include "stacksort/tree_model.hpp"

namespace stacksort {

// Renderers for machine-readable output. JSON objects have sorted keys and
// every number is a decimal string; CSV columns are fixed.

enum class Format { Json, Csv };

Format parse_format(const std::string& name);

std::string render_enumeration(const EnumerationQuery& q, const Histogram& h, bool by_descents, Format f);

/// count --formula ss|2ss|2ss-total|h-variant|lambda12. With k given, a single
/// value; otherwise a table over every k with sum n-1 (descent formulas).
std::string render_formula(const std::string& formula, unsigned n, unsigned r,
                           const std::optional<DescentVector>& k, Format f);

std::string render_series_report(const SeriesReport& rep);

/// Descent sets and vector of a word or tuple.
std::string render_descents(const std::vector<Word>& components, unsigned r);

/// Check verdict; witness positions are 1-based.
std::string render_check(unsigned t, const std::string& method, bool sortable,
                         const std::optional<CharWitness>& witness, WordView p);

}  // namespace stacksort
