#pragma once

#include <json.hpp>

#include "axial/fusion.hpp"
#include "axial/spectral.hpp"
#include "axial/virasoro.hpp"

namespace axial {

using ordered_json = nlohmann::ordered_json;

// Scalars serialise as strings: "p/q" or "p" in rational mode and
// "(poly)/(poly)" in symbolic mode. scalar_from_string reverses both.
std::string scalar_to_string(const Scalar& s);
Scalar scalar_from_string(const std::string& text, FieldMode mode);

// {label: scalar-string} in canonical label order.
ordered_json vector_to_json(const AlgebraSpace& space, const AlgVector& v);
AlgVector vector_from_json(const AlgebraSpace& space, const ordered_json& j);

// [{"eigenvalue": ..., "dim": ..., "basis": [...]}, ...]
ordered_json eigendecomposition_to_json(const AlgebraSpace& space, const Eigendecomposition& dec);

// {"eigenvalues": [...], "table": {lambda: {mu: [...]}}}
ordered_json fusion_table_to_json(const FusionTable& table);
FusionTable fusion_table_from_json(const ordered_json& j, FieldMode mode);

ordered_json grading_to_json(const FusionTable& table, const Grading& grading);

}  // namespace axial
