#pragma once

#include <map>
#include <string>
#include <vector>

#include "axial/rational.hpp"

namespace axial {

enum class ClaimStatus { pass, fail, skipped };

struct ClaimResult {
  std::string id;         // unique, criterion-prefixed: "c4.fusion.n6m4l3.a=1/4"
  std::string statement;  // what was checked, in mathematical terms
  ClaimStatus status = ClaimStatus::skipped;
  std::string details;    // counterexample payload or skip reason
};

struct VerifyOptions {
  int max_rank = 6;
  std::vector<Rational> alphas = {Rational(1, 4), Rational(1, 7), Rational(1, 32)};
};

// Runs every verifiable claim and returns one result per claim, ordered by
// id. Claims needing a specialised alpha outside the requested set are
// reported as skipped. Failures are data, not exceptions.
std::vector<ClaimResult> run_verification(const VerifyOptions& options);

// Criterion number -> one-line description, for per-criterion reporting.
const std::map<int, std::string>& criterion_titles();

// Aggregation helpers for reports.
int criterion_of(const ClaimResult& claim);  // 1..9, or 0 for report-only entries
bool all_passed(const std::vector<ClaimResult>& claims);

}  // namespace axial
