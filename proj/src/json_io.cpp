#include "liecap/json_io.hpp"

#include <map>

namespace liecap {

ordered_json algebra_to_json(const LieAlgebra& algebra) {
  const Field& f = algebra.field();
  ordered_json doc;
  doc["dim"] = algebra.dim();
  doc["labels"] = algebra.labels();
  if (f.is_rational())
    doc["field"] = "Q";
  else
    doc["field"] = ordered_json{{"p", f.characteristic()}};
  ordered_json brackets = ordered_json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
      const auto& entry = algebra.table_entry(i, j);
      if (entry.empty()) continue;
      ordered_json out = ordered_json::array();
      for (const auto& [k, c] : entry) out.push_back({{"k", k + 1}, {"c", f.format(c)}});
      brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"out", std::move(out)}});
    }
  doc["brackets"] = std::move(brackets);
  return doc;
}

namespace {

Error bad(const std::string& why) { return Error(ErrorKind::ParseError, why); }

std::size_t index_field(const nlohmann::json& obj, const char* name, std::size_t n) {
  if (!obj.contains(name) || !obj[name].is_number_integer()) throw bad(std::string("missing integer '") + name + "'");
  long v = obj[name].get<long>();
  if (v < 1 || static_cast<std::size_t>(v) > n)
    throw bad(std::string("index '") + name + "' = " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

Field parse_field(const nlohmann::json& doc) {
  if (!doc.contains("field")) return Field::rationals();
  const auto& fj = doc["field"];
  if (fj.is_string()) {
    if (fj.get<std::string>() == "Q") return Field::rationals();
    throw bad("field must be \"Q\" or {\"p\": prime}");
  }
  if (fj.is_object() && fj.contains("p") && fj["p"].is_number_integer()) {
    long p = fj["p"].get<long>();
    if (p <= 0 || p > 0x7fffffffL) throw bad("bad characteristic");
    try {
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const Error& e) {
      throw bad(e.what());
    }
  }
  throw bad("field must be \"Q\" or {\"p\": prime}");
}

}  // namespace

LieAlgebra algebra_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw bad("algebra must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 0)
    throw bad("missing non-negative integer 'dim'");
  const std::size_t n = doc["dim"].get<std::size_t>();
  const Field field = parse_field(doc);
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw bad("'labels' must be an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw bad("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != n) throw bad("expected " + std::to_string(n) + " labels");
  }
  LieAlgebra algebra(field, n, std::move(labels));
  std::map<std::pair<std::size_t, std::size_t>, Vector> seen;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw bad("'brackets' must be an array");
    for (const auto& b : doc["brackets"]) {
      if (!b.is_object()) throw bad("bracket entries must be objects");
      std::size_t i = index_field(b, "i", n), j = index_field(b, "j", n);
      Vector out = zero_vector(n);
      if (b.contains("out")) {
        if (!b["out"].is_array()) throw bad("'out' must be an array");
        for (const auto& term : b["out"]) {
          std::size_t k = index_field(term, "k", n);
          if (!term.contains("c")) throw bad("term without coefficient 'c'");
          std::string text = term["c"].is_string() ? term["c"].get<std::string>() : term["c"].dump();
          out[k] = field.add(out[k], field.parse(text));
        }
      }
      if (i == j) {
        if (!is_zero(out)) throw bad("[e_" + std::to_string(i + 1) + ", e_" + std::to_string(i + 1) + "] must vanish");
        continue;
      }
      if (i > j) {
        std::swap(i, j);
        for (auto& x : out) x = field.neg(x);
      }
      auto [it, inserted] = seen.emplace(std::make_pair(i, j), out);
      if (!inserted && it->second != out)
        throw bad("conflicting values for [e_" + std::to_string(i + 1) + ", e_" + std::to_string(j + 1) + "]");
      algebra.set_bracket(i, j, out);
    }
  }
  return algebra;
}

LieAlgebra algebra_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw bad(e.what());
  }
  return algebra_from_json(doc);
}

}  // namespace liecap
