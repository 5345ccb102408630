#include "axial/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace axial {

std::vector<int> parse_support(const std::string& text) {
  std::vector<int> indices;
  auto parse_int = [](const std::string& s) {
    size_t used = 0;
    int value = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("malformed support: " + s);
    return value;
  };
  size_t dots = text.find("..");
  if (dots != std::string::npos) {
    int lo = parse_int(text.substr(0, dots));
    int hi = parse_int(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw std::invalid_argument("malformed support range: " + text);
    for (int i = lo; i <= hi; ++i) indices.push_back(i);
    return indices;
  }
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    int value = parse_int(text.substr(pos, comma - pos));
    if (value < 1) throw std::invalid_argument("support indices are 1-based");
    indices.push_back(value);
    pos = comma + 1;
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) throw std::invalid_argument("empty support");
  return indices;
}

int max_dimension_cap() {
  const char* env = std::getenv("AXIAL_MAX_DIM");
  if (!env || !*env) return 300;
  try {
    int cap = std::stoi(env);
    if (cap < 1) throw std::invalid_argument("");
    return cap;
  } catch (...) {
    throw std::invalid_argument("AXIAL_MAX_DIM must be a positive integer");
  }
}

namespace {

std::vector<int> to_zero_based(const std::vector<int>& support, int dim) {
  std::vector<int> zero_based;
  for (int i : support) {
    if (i < 1 || i > dim)
      throw std::invalid_argument("support index " + std::to_string(i) + " out of range (1.." +
                                  std::to_string(dim) + ")");
    zero_based.push_back(i - 1);
  }
  return zero_based;
}

// The closed-form candidate eigenvalues for the requested idempotent.
std::vector<Scalar> paper_candidates(const AlgebraSpace& space, const AnalysisRequest& request) {
  Scalar one = Scalar::one(space.mode()), zero = Scalar::zero(space.mode());
  const Scalar& alpha = space.alpha();
  std::vector<Scalar> values;
  auto push_unique = [&](const Scalar& v) {
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  };
  if (request.axis_index) {
    for (const Scalar& v : {one, zero, alpha}) push_unique(v);
  } else if (request.identity_support) {
    int m = static_cast<int>(request.identity_support->size());
    push_unique(one);
    push_unique(zero);
    push_unique(eta(m, alpha));
    if (space.hat()) push_unique(eta_hat(m, alpha));
  } else {
    int m = static_cast<int>(request.coset_supports->first.size());
    int l = static_cast<int>(request.coset_supports->second.size());
    push_unique(one);
    push_unique(zero);
    push_unique(eta(m, alpha));
    push_unique(one - eta(l, alpha));
    push_unique(eta(m, alpha) - eta(l, alpha));
    if (space.hat()) {
      push_unique(eta_hat(m, alpha) - eta(l, alpha));
      push_unique(eta_hat(m, alpha) - eta_hat(l, alpha));
    }
  }
  return values;
}

}  // namespace

ordered_json run_analysis(const AnalysisRequest& request) {
  int provided = (request.axis_index ? 1 : 0) + (request.identity_support ? 1 : 0) +
                 (request.coset_supports ? 1 : 0);
  if (provided != 1)
    throw std::invalid_argument("exactly one of --axis, --identity, --coset is required");

  auto set = TranspositionSet::build({request.family, request.rank});
  Scalar alpha = Scalar::parameter();
  if (request.alpha != "symbolic") {
    try {
      alpha = Scalar(Rational::from_string(request.alpha));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed alpha \"" + request.alpha +
                                  "\" (expected a rational like 1/4, or 'symbolic')");
    }
  }
  AlgebraSpace space = AlgebraSpace::construct(set, alpha, request.hat);
  if (space.dimension() > max_dimension_cap())
    throw std::domain_error("algebra dimension " + std::to_string(space.dimension()) +
                            " exceeds AXIAL_MAX_DIM=" + std::to_string(max_dimension_cap()));

  int coord_dim = set->id().coordinate_dim();
  Idempotent idempotent;
  ordered_json requested;
  if (request.axis_index) {
    if (*request.axis_index < 0 || *request.axis_index >= set->size())
      throw std::invalid_argument("axis index out of range");
    idempotent = space.axis(*request.axis_index);
    requested["kind"] = "axis";
    requested["transposition"] = set->root(*request.axis_index).to_string();
  } else if (request.identity_support) {
    auto subset = set->parabolic_subset(to_zero_based(*request.identity_support, coord_dim));
    idempotent = space.subalgebra_identity(subset);
    requested["kind"] = "identity";
    requested["support_size"] = request.identity_support->size();
    requested["transpositions"] = subset.size();
  } else {
    auto outer = set->parabolic_subset(to_zero_based(request.coset_supports->first, coord_dim));
    auto inner = set->parabolic_subset(to_zero_based(request.coset_supports->second, coord_dim));
    idempotent = space.coset_axis(outer, inner);
    requested["kind"] = "coset";
    requested["outer_transpositions"] = outer.size();
    requested["inner_transpositions"] = inner.size();
  }

  ordered_json doc;
  doc["algebra"] = {{"family", family_name(request.family)},
                    {"rank", request.rank},
                    {"alpha", alpha.to_string()},
                    {"hat", request.hat},
                    {"dimension", space.dimension()}};
  doc["idempotent"] = std::move(requested);
  doc["idempotent"]["vector"] = vector_to_json(space, idempotent.vector);
  doc["idempotent"]["degenerate"] = idempotent.degenerate;
  doc["central_charge"] = space.central_charge(idempotent.vector).to_string();
  if (idempotent.degenerate) return doc;

  std::optional<std::vector<Scalar>> candidates;
  if (request.paper_candidates) candidates = paper_candidates(space, request);
  if (space.mode() == FieldMode::symbolic && !candidates)
    throw std::invalid_argument(
        "symbolic analysis requires --candidates paper (eigenvalue discovery needs rational alpha)");

  Eigendecomposition dec = eigendecompose(space, idempotent, candidates);
  doc["eigendecomposition"] = eigendecomposition_to_json(space, dec);
  doc["complete"] = dec.complete;
  if (dec.complete) {
    doc["primitive"] = primitive(dec);
    FusionTable table = fusion_table(space, dec);
    doc["fusion_table"] = fusion_table_to_json(table);
    ordered_json gradings = ordered_json::array();
    for (const Grading& g : find_z2_gradings(table)) gradings.push_back(grading_to_json(table, g));
    doc["gradings"] = std::move(gradings);
  }
  return doc;
}

std::string analysis_to_text(const ordered_json& document) {
  std::string out;
  const auto& algebra = document.at("algebra");
  out += "algebra: " + algebra.at("family").get<std::string>() +
         std::to_string(algebra.at("rank").get<int>()) +
         (algebra.at("hat").get<bool>() ? " (hat double)" : "") +
         ", alpha = " + algebra.at("alpha").get<std::string>() +
         ", dimension " + std::to_string(algebra.at("dimension").get<int>()) + "\n";
  out += "idempotent: " + document.at("idempotent").at("kind").get<std::string>() +
         ", central charge " + document.at("central_charge").get<std::string>() + "\n";
  if (document.contains("eigendecomposition")) {
    out += "eigenvalues:";
    for (const auto& pair : document.at("eigendecomposition"))
      out += " " + pair.at("eigenvalue").get<std::string>() + " (dim " +
             std::to_string(pair.at("dim").get<int>()) + ")";
    out += "\n";
    out += "complete: " + std::string(document.at("complete").get<bool>() ? "yes" : "no") + "\n";
  }
  if (document.contains("primitive"))
    out += "primitive: " + std::string(document.at("primitive").get<bool>() ? "yes" : "no") + "\n";
  if (document.contains("fusion_table")) {
    FieldMode mode = document.at("algebra").at("alpha").get<std::string>().front() == '('
                         ? FieldMode::symbolic
                         : FieldMode::rational;
    out += "fusion table:\n" + fusion_table_from_json(document.at("fusion_table"), mode).to_text();
  }
  if (document.contains("gradings")) {
    out += "gradings: " + std::to_string(document.at("gradings").size()) + "\n";
    for (const auto& g : document.at("gradings")) {
      out += "  plus {";
      bool first = true;
      for (const auto& v : g.at("plus")) {
        out += (first ? "" : ", ") + v.get<std::string>();
        first = false;
      }
      out += "} minus {";
      first = true;
      for (const auto& v : g.at("minus")) {
        out += (first ? "" : ", ") + v.get<std::string>();
        first = false;
      }
      out += "}\n";
    }
  }
  return out;
}

ordered_json verification_to_json(const std::vector<ClaimResult>& claims) {
  ordered_json j = ordered_json::array();
  for (const ClaimResult& claim : claims) {
    ordered_json entry;
    entry["id"] = claim.id;
    entry["statement"] = claim.statement;
    entry["status"] = claim.status == ClaimStatus::pass   ? "pass"
                      : claim.status == ClaimStatus::fail ? "fail"
                                                          : "skipped";
    entry["details"] = claim.details;
    j.push_back(std::move(entry));
  }
  return j;
}

}  // namespace axial
