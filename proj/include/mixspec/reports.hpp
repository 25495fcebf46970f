#pragma once

#include <string>

#include "mixspec/bounds.hpp"
#include "mixspec/components.hpp"
#include "mixspec/spectra.hpp"
#include "mixspec/walks.hpp"

namespace mixspec {

// Deterministic JSON reports: every document carries a versioned top-level
// "schema" field, reals are rounded to 12 significant digits, and ordering
// is fixed by construction.
double round_real(double v);

std::string spectrum_report_json(const MixedGraph& g, bool include_charpoly);
std::string components_report_json(const MixedGraph& g);
std::string det_report_json(const MixedGraph& g, bool want_formula, bool want_exact);
std::string bounds_report_json(const MixedGraph& g, bool exact_alpha_omega);
std::string walks_report_json(const MixedGraph& g, Vertex from, Vertex to, int length,
                              std::int64_t budget = kDefaultWalkBudget);

// Plain-text renderings.
std::string matrix_text(const MixedGraph& g);
std::string spectrum_text(const MixedGraph& g, bool include_charpoly);
std::string components_text(const MixedGraph& g);

}  // namespace mixspec
