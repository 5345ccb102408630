#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "axial/analysis.hpp"
#include "axial/virasoro.hpp"

namespace py = pybind11;
using namespace axial;

namespace {

std::string analyze(const std::string& family, int rank, const std::string& alpha, bool hat,
                    std::optional<int> axis, std::optional<std::string> identity,
                    std::optional<std::string> coset, bool paper_candidates,
                    const std::string& format) {
  AnalysisRequest request;
  request.family = family_from_string(family);
  request.rank = rank;
  request.alpha = alpha;
  request.hat = hat;
  if (axis) request.axis_index = *axis;
  if (identity) request.identity_support = parse_support(*identity);
  if (coset) {
    size_t slash = coset->find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("coset argument must look like 1..5/1..4");
    request.coset_supports = {parse_support(coset->substr(0, slash)),
                              parse_support(coset->substr(slash + 1))};
  }
  request.paper_candidates = paper_candidates;
  ordered_json doc = run_analysis(request);
  return format == "table" ? analysis_to_text(doc) : doc.dump(2);
}

std::string verify(int max_rank, const std::vector<std::string>& alphas) {
  VerifyOptions options;
  options.max_rank = max_rank;
  if (!alphas.empty()) {
    options.alphas.clear();
    for (const std::string& text : alphas) options.alphas.push_back(Rational::from_string(text));
  }
  return verification_to_json(run_verification(options)).dump(2);
}

std::string fusion_rules_json(int p, int q) {
  return fusion_table_to_json(derive_algebra_fusion_rules({p, q})).dump(2);
}

}  // namespace

PYBIND11_MODULE(axialpy, m) {
  m.doc() = "exact engine for Matsuo axial algebras of simply-laced Weyl groups";

  m.def("analyze", &analyze, py::arg("family"), py::arg("rank"), py::arg("alpha") = "1/4",
        py::arg("hat") = false, py::arg("axis") = py::none(), py::arg("identity") = py::none(),
        py::arg("coset") = py::none(), py::arg("paper_candidates") = false,
        py::arg("format") = "json",
        "Build an idempotent and analyse it; returns a JSON document (or aligned text).");

  m.def("verify", &verify, py::arg("max_rank") = 6,
        py::arg("alphas") = std::vector<std::string>{},
        "Run the verification suite; returns the claim report as JSON.");

  m.def("kac_table", [](int p, int q, bool halved) { return kac_table_markdown({p, q}, halved); },
        py::arg("p"), py::arg("q"), py::arg("halved") = false,
        "Markdown Kac table with the c(p,q) header.");

  m.def("central_charge", [](int p, int q) { return central_charge_pq({p, q}).to_string(); },
        py::arg("p"), py::arg("q"));

  m.def("kac_weight",
        [](int p, int q, int r, int s) { return kac_weight({p, q}, {r, s}).to_string(); },
        py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"));

  m.def("fusion_rules", &fusion_rules_json, py::arg("p"), py::arg("q"),
        "Fusion rules on halved Kac weights plus the extra eigenvalue 1, as JSON.");

  m.def("eta",
        [](int n, const std::string& alpha) {
          return eta(n, Scalar(Rational::from_string(alpha))).to_string();
        },
        py::arg("m"), py::arg("alpha"));

  m.def("eta_hat",
        [](int n, const std::string& alpha) {
          return eta_hat(n, Scalar(Rational::from_string(alpha))).to_string();
        },
        py::arg("m"), py::arg("alpha"));

  m.attr("__version__") = "1.0.0";
}
