// Acceptance suite: runs every verification claim at the full benchmark
// ranges and prints one line per criterion. Exit 0 iff everything passed.

#include <cstdio>
#include <map>
#include <vector>

#include "axial/verification.hpp"

int main() {
  using namespace axial;

  VerifyOptions options;
  options.max_rank = 7;
  options.alphas = {Rational(1, 4), Rational(1, 7), Rational(1, 32)};
  std::vector<ClaimResult> claims = run_verification(options);

  struct Tally {
    int passed = 0, failed = 0, skipped = 0;
    std::vector<const ClaimResult*> failures;
  };
  std::map<int, Tally> tallies;
  for (const ClaimResult& claim : claims) {
    Tally& t = tallies[criterion_of(claim)];
    switch (claim.status) {
      case ClaimStatus::pass: ++t.passed; break;
      case ClaimStatus::skipped: ++t.skipped; break;
      case ClaimStatus::fail:
        ++t.failed;
        t.failures.push_back(&claim);
        break;
    }
  }

  bool ok = true;
  for (const auto& [criterion, title] : criterion_titles()) {
    const Tally& t = tallies[criterion];
    bool criterion_ok = t.failed == 0 && t.passed > 0;
    ok = ok && criterion_ok;
    std::printf("[%s] criterion %d: %s (%d claims%s)\n", criterion_ok ? "PASS" : "FAIL", criterion,
                title.c_str(), t.passed,
                t.skipped ? (", " + std::to_string(t.skipped) + " skipped").c_str() : "");
    for (const ClaimResult* failure : t.failures)
      std::printf("       failed %s: %s -- %s\n", failure->id.c_str(), failure->statement.c_str(),
                  failure->details.c_str());
  }
  const Tally& reports = tallies[0];
  for (const ClaimResult& claim : claims)
    if (criterion_of(claim) == 0)
      std::printf("[note] %s: %s\n", claim.id.c_str(), claim.details.c_str());
  if (reports.failed) ok = false;

  std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES PRESENT");
  return ok ? 0 : 1;
}
