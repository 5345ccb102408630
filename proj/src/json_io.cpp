#include "axial/json_io.hpp"

#include <cctype>
#include <stdexcept>

namespace axial {

std::string scalar_to_string(const Scalar& s) { return s.to_string(); }

namespace {

// Parses polynomial text like "2 + 2*a", "-a^2 + 1/2*a", "0".
RatPoly parse_poly(const std::string& text) {
  std::vector<Rational> coeffs;
  auto put = [&](size_t power, const Rational& c) {
    if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
    coeffs[power] += c;
  };
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("malformed polynomial: " + text);
    }
    first = false;
    // optional rational coefficient
    size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    Rational coeff(1);
    bool have_coeff = pos > start;
    if (have_coeff) coeff = Rational::from_string(text.substr(start, pos - start));
    if (pos < text.size() && text[pos] == '*') ++pos;
    size_t power = 0;
    if (pos < text.size() && text[pos] == 'a') {
      ++pos;
      power = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        size_t pstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        power = std::stoul(text.substr(pstart, pos - pstart));
      }
    } else if (!have_coeff) {
      throw std::invalid_argument("malformed polynomial term: " + text);
    }
    put(power, sign < 0 ? -coeff : coeff);
  }
  return RatPoly(std::move(coeffs));
}

}  // namespace

Scalar scalar_from_string(const std::string& text, FieldMode mode) {
  if (mode == FieldMode::rational) return Scalar(Rational::from_string(text));
  // "(num)/(den)"
  if (text.size() < 5 || text.front() != '(')
    throw std::invalid_argument("malformed symbolic scalar: " + text);
  size_t split = text.find(")/(");
  if (split == std::string::npos || text.back() != ')')
    throw std::invalid_argument("malformed symbolic scalar: " + text);
  RatPoly num = parse_poly(text.substr(1, split - 1));
  RatPoly den = parse_poly(text.substr(split + 3, text.size() - split - 4));
  return Scalar(RatFunc(std::move(num), std::move(den)));
}

ordered_json vector_to_json(const AlgebraSpace& space, const AlgVector& v) {
  ordered_json j = ordered_json::object();
  for (const auto& [label, coeff] : v.terms()) j[space.label_string(label)] = coeff.to_string();
  return j;
}

AlgVector vector_from_json(const AlgebraSpace& space, const ordered_json& j) {
  AlgVector v(space.mode());
  for (auto it = j.begin(); it != j.end(); ++it)
    v.add_term(space.label_from_string(it.key()),
               scalar_from_string(it.value().get<std::string>(), space.mode()));
  return v;
}

ordered_json eigendecomposition_to_json(const AlgebraSpace& space, const Eigendecomposition& dec) {
  ordered_json j = ordered_json::array();
  for (const EigenPair& pair : dec.pairs) {
    ordered_json entry;
    entry["eigenvalue"] = pair.eigenvalue.to_string();
    entry["dim"] = pair.dim();
    ordered_json basis = ordered_json::array();
    for (const AlgVector& v : pair.basis) basis.push_back(vector_to_json(space, v));
    entry["basis"] = std::move(basis);
    j.push_back(std::move(entry));
  }
  return j;
}

ordered_json fusion_table_to_json(const FusionTable& table) {
  ordered_json j;
  ordered_json values = ordered_json::array();
  for (const Scalar& v : table.eigenvalues()) values.push_back(v.to_string());
  j["eigenvalues"] = std::move(values);
  ordered_json rows = ordered_json::object();
  for (int i = 0; i < table.size(); ++i) {
    ordered_json row = ordered_json::object();
    for (int k = 0; k < table.size(); ++k) {
      ordered_json cell = ordered_json::array();
      for (int v : table.entry(i, k)) cell.push_back(table.eigenvalues()[v].to_string());
      row[table.eigenvalues()[k].to_string()] = std::move(cell);
    }
    rows[table.eigenvalues()[i].to_string()] = std::move(row);
  }
  j["table"] = std::move(rows);
  return j;
}

FusionTable fusion_table_from_json(const ordered_json& j, FieldMode mode) {
  std::vector<Scalar> eigenvalues;
  for (const auto& v : j.at("eigenvalues"))
    eigenvalues.push_back(scalar_from_string(v.get<std::string>(), mode));
  FusionTable table(eigenvalues);
  const ordered_json& rows = j.at("table");
  for (int i = 0; i < table.size(); ++i)
    for (int k = i; k < table.size(); ++k) {
      const ordered_json& cell =
          rows.at(eigenvalues[i].to_string()).at(eigenvalues[k].to_string());
      std::set<int> values;
      for (const auto& v : cell) {
        int idx = table.index_of(scalar_from_string(v.get<std::string>(), mode));
        if (idx < 0) throw std::invalid_argument("fusion entry value outside eigenvalue list");
        values.insert(idx);
      }
      table.set_entry(i, k, std::move(values));
    }
  return table;
}

ordered_json grading_to_json(const FusionTable& table, const Grading& grading) {
  ordered_json j;
  ordered_json plus = ordered_json::array(), minus = ordered_json::array();
  for (int i : grading.plus) plus.push_back(table.eigenvalues()[i].to_string());
  for (int i : grading.minus) minus.push_back(table.eigenvalues()[i].to_string());
  j["plus"] = std::move(plus);
  j["minus"] = std::move(minus);
  return j;
}

}  // namespace axial
