#include "ptcat/category_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ptcat {

namespace {

using Json = nlohmann::ordered_json;

unsigned long phi_degree(unsigned long n) {
  return cyclotomic_polynomial(n).size() - 1;
}

Json coeff_vector(const Cyc& value, unsigned long order) {
  Json arr = Json::array();
  Cyc lifted = value.lifted_to(order);
  for (const auto& c : lifted.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Cyc parse_coeffs(const Json& arr, unsigned long order) {
  if (!arr.is_array()) throw CategoryFileError("coefficient vector must be an array");
  if (arr.size() > phi_degree(order))
    throw CategoryFileError("coefficient vector longer than the field degree");
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) throw CategoryFileError("coefficients must be rational strings");
    try {
      coeffs.emplace_back(item.get<std::string>());
      coeffs.back().canonicalize();
    } catch (const std::invalid_argument&) {
      throw CategoryFileError("bad rational: " + item.get<std::string>());
    }
  }
  return Cyc::from_coeffs(order, std::move(coeffs));
}

}  // namespace

std::string emit_category(const FusionData& d) {
  const std::size_t L = d.size();
  Json root;
  root["schema"] = kCategorySchema;
  root["cyclotomic_order"] = d.cyclotomic_order;
  root["labels"] = d.labels;
  root["unit"] = d.labels[d.unit];

  Json dual = Json::array();
  for (std::size_t i = 0; i < L; ++i)
    dual.push_back(Json::array({d.labels[i], d.labels[d.dual[i]]}));
  root["dual"] = dual;

  Json fusion = Json::array();
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j)
      for (std::size_t k = 0; k < L; ++k)
        if (d.n(i, j, k))
          fusion.push_back(Json::array({d.labels[i], d.labels[j], d.labels[k]}));
  root["fusion"] = fusion;

  Json fs = Json::array();
  for (const auto& [key, value] : d.f_symbols) {
    Json t = Json::array();
    for (auto idx : key) t.push_back(d.labels[idx]);
    fs.push_back(Json{{"t", t}, {"v", coeff_vector(value, d.cyclotomic_order)}});
  }
  root["F"] = fs;

  Json rs = Json::array();
  for (const auto& [key, value] : d.r_symbols) {
    Json t = Json::array();
    for (auto idx : key) t.push_back(d.labels[idx]);
    rs.push_back(Json{{"t", t}, {"v", coeff_vector(value, d.cyclotomic_order)}});
  }
  root["R"] = rs;

  Json tw = Json::array();
  for (std::size_t i = 0; i < L; ++i)
    tw.push_back(Json{{"t", d.labels[i]}, {"v", coeff_vector(d.twists[i], d.cyclotomic_order)}});
  root["twist"] = tw;

  return root.dump(2) + "\n";
}

FusionData parse_category(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CategoryFileError(std::string("not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw CategoryFileError("top level must be an object");
  for (const char* field :
       {"schema", "cyclotomic_order", "labels", "unit", "dual", "fusion", "F", "R", "twist"})
    if (!root.contains(field)) throw CategoryFileError(std::string("missing field: ") + field);
  if (root["schema"] != kCategorySchema)
    throw CategoryFileError("unsupported schema version");

  FusionData d;
  if (!root["cyclotomic_order"].is_number_unsigned() || root["cyclotomic_order"] == 0)
    throw CategoryFileError("cyclotomic_order must be a positive integer");
  d.cyclotomic_order = root["cyclotomic_order"].get<unsigned long>();

  if (!root["labels"].is_array() || root["labels"].empty())
    throw CategoryFileError("labels must be a nonempty array");
  for (const auto& l : root["labels"]) {
    if (!l.is_string()) throw CategoryFileError("labels must be strings");
    d.labels.push_back(l.get<std::string>());
  }
  const std::size_t L = d.size();
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j)
      if (d.labels[i] == d.labels[j]) throw CategoryFileError("duplicate label " + d.labels[i]);

  auto index_of = [&](const Json& j) -> std::size_t {
    if (!j.is_string()) throw CategoryFileError("expected a label string");
    auto it = std::find(d.labels.begin(), d.labels.end(), j.get<std::string>());
    if (it == d.labels.end())
      throw CategoryFileError("unknown label: " + j.get<std::string>());
    return static_cast<std::size_t>(it - d.labels.begin());
  };

  d.unit = index_of(root["unit"]);

  d.dual.assign(L, L);
  if (!root["dual"].is_array()) throw CategoryFileError("dual must be an array of pairs");
  for (const auto& pair : root["dual"]) {
    if (!pair.is_array() || pair.size() != 2) throw CategoryFileError("dual entries are pairs");
    d.dual[index_of(pair[0])] = index_of(pair[1]);
  }
  for (std::size_t i = 0; i < L; ++i)
    if (d.dual[i] >= L) throw CategoryFileError("dual map incomplete");

  d.fusion.assign(L * L * L, 0);
  for (const auto& t : root["fusion"]) {
    if (!t.is_array() || t.size() != 3) throw CategoryFileError("fusion entries are triples");
    d.fusion[(index_of(t[0]) * L + index_of(t[1])) * L + index_of(t[2])] = 1;
  }

  for (const auto& entry : root["F"]) {
    if (!entry.is_object() || !entry.contains("t") || !entry.contains("v") ||
        !entry["t"].is_array() || entry["t"].size() != 6)
      throw CategoryFileError("F entries need a 6-label tuple and a value");
    std::array<std::size_t, 6> key{};
    for (std::size_t i = 0; i < 6; ++i) key[i] = index_of(entry["t"][i]);
    d.f_symbols[key] = parse_coeffs(entry["v"], d.cyclotomic_order);
  }
  for (const auto& entry : root["R"]) {
    if (!entry.is_object() || !entry.contains("t") || !entry.contains("v") ||
        !entry["t"].is_array() || entry["t"].size() != 3)
      throw CategoryFileError("R entries need a 3-label tuple and a value");
    std::array<std::size_t, 3> key{};
    for (std::size_t i = 0; i < 3; ++i) key[i] = index_of(entry["t"][i]);
    d.r_symbols[key] = parse_coeffs(entry["v"], d.cyclotomic_order);
  }

  d.twists.assign(L, Cyc::zero());
  std::vector<bool> seen(L, false);
  for (const auto& entry : root["twist"]) {
    if (!entry.is_object() || !entry.contains("t") || !entry.contains("v"))
      throw CategoryFileError("twist entries need a label and a value");
    std::size_t i = index_of(entry["t"]);
    d.twists[i] = parse_coeffs(entry["v"], d.cyclotomic_order);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < L; ++i)
    if (!seen[i]) throw CategoryFileError("missing twist for label " + d.labels[i]);
  return d;
}

std::string render_reports_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  bool all_ok = true;
  for (const auto& rep : reports) {
    os << "[" << rep.suite << "] " << (rep.ok() ? "pass" : "FAIL") << " ("
       << rep.checks_run << " checks";
    if (!rep.ok()) os << ", " << rep.violations.size() << " violations";
    os << ")\n";
    for (const auto& v : rep.violations)
      os << "  " << v.check << " @ " << v.location << ": " << v.detail << "\n";
    all_ok = all_ok && rep.ok();
  }
  os << (all_ok ? "overall: pass" : "overall: FAIL") << "\n";
  return os.str();
}

std::string render_reports_json(const std::vector<Report>& reports) {
  Json root;
  bool all_ok = true;
  Json suites = Json::array();
  for (const auto& rep : reports) {
    Json s;
    s["suite"] = rep.suite;
    s["checks_run"] = rep.checks_run;
    s["pass"] = rep.ok();
    Json vs = Json::array();
    for (const auto& v : rep.violations)
      vs.push_back(Json{{"check", v.check}, {"location", v.location}, {"detail", v.detail}});
    s["violations"] = vs;
    suites.push_back(s);
    all_ok = all_ok && rep.ok();
  }
  root["suites"] = suites;
  root["pass"] = all_ok;
  return root.dump(2) + "\n";
}

}  // namespace ptcat
