#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "axial/analysis.hpp"
#include "axial/virasoro.hpp"

using namespace axial;

namespace {

int emit_error(const std::string& kind, const std::string& message, int code) {
  ordered_json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  std::cout << j.dump(2) << "\n";
  return code;
}

int run_analyze(const AnalysisRequest& request) {
  ordered_json doc = run_analysis(request);
  if (request.format == "table")
    std::cout << analysis_to_text(doc);
  else
    std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_verify(int max_rank, const std::vector<std::string>& alpha_texts,
               const std::string& format) {
  VerifyOptions options;
  options.max_rank = max_rank;
  if (!alpha_texts.empty()) {
    options.alphas.clear();
    for (const std::string& text : alpha_texts) options.alphas.push_back(Rational::from_string(text));
  }
  std::vector<ClaimResult> claims = run_verification(options);
  if (format == "json") {
    std::cout << verification_to_json(claims).dump(2) << "\n";
  } else {
    std::map<int, std::pair<int, int>> per_criterion;  // criterion -> {passed, total non-skipped}
    for (const ClaimResult& claim : claims) {
      const char* status = claim.status == ClaimStatus::pass   ? "pass"
                           : claim.status == ClaimStatus::fail ? "FAIL"
                                                               : "skip";
      std::cout << "[" << status << "] " << claim.id << ": " << claim.statement;
      if (!claim.details.empty()) std::cout << " -- " << claim.details;
      std::cout << "\n";
      int c = criterion_of(claim);
      if (claim.status != ClaimStatus::skipped) {
        ++per_criterion[c].second;
        if (claim.status == ClaimStatus::pass) ++per_criterion[c].first;
      }
    }
    std::cout << "\n";
    for (const auto& [criterion, counts] : per_criterion) {
      if (criterion == 0) continue;
      std::cout << "criterion " << criterion << " (" << criterion_titles().at(criterion)
                << "): " << counts.first << "/" << counts.second << " claims passed\n";
    }
  }
  return all_passed(claims) ? 0 : 1;
}

int run_kac(int p, int q, bool halved, bool fusion, int hits) {
  MinimalModel model{p, q};
  model.validate();
  std::cout << kac_table_markdown(model, halved);
  if (fusion) {
    std::cout << "\nfusion rules on halved weights (with the extra eigenvalue 1):\n";
    std::cout << derive_algebra_fusion_rules(model).to_text();
  }
  if (hits > 0) {
    std::cout << "\nobserved eigenvalue identifications at c(" << hits + 3 << "," << hits + 2
              << "):\n";
    for (const KacObservation& obs : match_kac_observations(hits)) {
      std::cout << "  " << obs.name << ": ";
      if (obs.skipped)
        std::cout << "skipped (" << obs.rhs << ")\n";
      else
        std::cout << (obs.holds ? "holds, both sides " : "FAILS: ") << obs.lhs
                  << (obs.holds ? "" : " vs " + obs.rhs) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for Matsuo algebras of simply-laced Weyl groups"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "build an idempotent and analyse its spectrum");
  std::string family_text = "A", alpha_text = "1/4", coset_text, identity_text;
  std::string candidates_text, format = "json";
  int rank = 2, axis_index = -1;
  bool hat = false;
  analyze->add_option("--family", family_text, "root system family: A, D or E");
  analyze->add_option("--rank", rank, "root system rank")->required();
  analyze->add_option("--alpha", alpha_text, "rational like 1/4, or 'symbolic'");
  analyze->add_flag("--hat", hat, "use the signed double of the algebra");
  auto* axis_opt = analyze->add_option("--axis", axis_index, "axis by transposition index");
  auto* id_opt =
      analyze->add_option("--identity", identity_text, "identity of the support, e.g. 1..4");
  auto* coset_opt =
      analyze->add_option("--coset", coset_text, "coset axis from supports, e.g. 1..5/1..4");
  analyze->add_option("--candidates", candidates_text,
                      "'paper' injects the closed-form eigenvalues (required when symbolic)");
  analyze->add_option("--format", format, "json or table");

  // verify
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  int max_rank = 6;
  std::vector<std::string> alpha_list;
  std::string verify_format = "text";
  verify->add_option("--max-rank", max_rank, "cap on the rank sweeps (default 6)");
  verify->add_option("--alpha", alpha_list, "alpha values to verify at (default 1/4 1/7 1/32)");
  verify->add_option("--format", verify_format, "text or json");

  // kac
  auto* kac = app.add_subcommand("kac", "Kac table of a minimal model");
  int p = 0, q = 0, hits = 0;
  bool halved = false, fusion = false;
  kac->add_option("--p", p, "first parameter")->required();
  kac->add_option("--q", q, "second parameter")->required();
  kac->add_flag("--halved", halved, "show halved weights");
  kac->add_flag("--fusion", fusion, "emit the derived fusion rules");
  kac->add_option("--hits", hits, "emit the eigenvalue identifications for this m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << ordered_json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) {
      AnalysisRequest request;
      request.family = family_from_string(family_text);
      request.rank = rank;
      request.alpha = alpha_text;
      request.hat = hat;
      if (axis_opt->count()) request.axis_index = axis_index;
      if (id_opt->count()) request.identity_support = parse_support(identity_text);
      if (coset_opt->count()) {
        size_t slash = coset_text.find('/');
        if (slash == std::string::npos)
          throw std::invalid_argument("coset argument must look like 1..5/1..4");
        request.coset_supports = {parse_support(coset_text.substr(0, slash)),
                                  parse_support(coset_text.substr(slash + 1))};
      }
      if (!candidates_text.empty()) {
        if (candidates_text != "paper")
          throw std::invalid_argument("--candidates only supports 'paper'");
        request.paper_candidates = true;
      }
      request.format = format;
      return run_analyze(request);
    }
    if (verify->parsed()) return run_verify(max_rank, alpha_list, verify_format);
    if (kac->parsed()) return run_kac(p, q, halved, fusion, hits);
  } catch (const std::invalid_argument& e) {
    return emit_error("usage", e.what(), 2);
  } catch (const std::exception& e) {
    return emit_error("domain", e.what(), 1);
  }
  return 2;
}
