#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/json_io.hpp"
#include "axial/verification.hpp"

namespace axial {

// A parsed analyze request: which algebra, which idempotent, how to report.
struct AnalysisRequest {
  Family family = Family::A;
  int rank = 2;
  std::string alpha = "1/4";  // a rational literal or "symbolic"
  bool hat = false;

  // exactly one of: axis index; identity support; coset outer/inner supports
  std::optional<int> axis_index;
  std::optional<std::vector<int>> identity_support;          // 1-based coordinates
  std::optional<std::pair<std::vector<int>, std::vector<int>>> coset_supports;

  bool paper_candidates = false;  // inject the closed-form eigenvalue formulas
  std::string format = "json";    // "json" or "table"
};

// Parses "1..5" or "1,2,5" into sorted 1-based indices.
std::vector<int> parse_support(const std::string& text);

// Matrix-dimension cap honouring AXIAL_MAX_DIM (default 300).
int max_dimension_cap();

// Builds the algebra and idempotent, eigendecomposes, computes the fusion
// table, gradings, primitivity and central charge. Deterministic output.
ordered_json run_analysis(const AnalysisRequest& request);

// Human-readable rendering of the analysis document.
std::string analysis_to_text(const ordered_json& document);

ordered_json verification_to_json(const std::vector<ClaimResult>& claims);

}  // namespace axial
