#include "cochain/json_io.hpp"

#include <set>

#include <json.hpp>

#include "cochain/sexpr.hpp"

namespace cochain {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::size_t read_count(const json& doc, const char* key, std::size_t lo, std::size_t hi) {
  const std::string path = std::string("/") + key;
  if (!doc.contains(key)) throw SchemaError(path, "missing");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw SchemaError(path, "must be an integer");
  const auto n = v.get<long long>();
  if (n < static_cast<long long>(lo) || n > static_cast<long long>(hi)) {
    throw SchemaError(path, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

TensorDocument parse_tensor(std::string_view json_text, const EqualityPolicy& policy) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw SchemaError("", "document must be an object");
  static const std::set<std::string> known{"dim", "rank", "space", "grade", "entries"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw SchemaError("/" + key, "unknown key");
  }
  const std::size_t dim = read_count(doc, "dim", 1, kMaxDim);
  const std::size_t rank = read_count(doc, "rank", 0, 8);

  std::optional<Space> space;
  std::string family = "generic";
  if (doc.contains("space")) {
    if (!doc["space"].is_string()) throw SchemaError("/space", "must be a string");
    family = doc["space"].get<std::string>();
  }
  if (family == "K" || family == "G") {
    const std::size_t grade = read_count(doc, "grade", 0, 7);
    space = family == "K" ? Space::K(grade) : Space::G(grade);
    if (space->rank() != rank) {
      throw SchemaError("/grade", "grade " + std::to_string(grade) + " needs rank " +
                                      std::to_string(space->rank()));
    }
  } else if (family != "generic") {
    throw SchemaError("/space", "must be \"K\", \"G\" or \"generic\"");
  }

  if (!doc.contains("entries")) throw SchemaError("/entries", "missing");
  const json& entries = doc["entries"];
  if (!entries.is_array()) throw SchemaError("/entries", "must be an array");
  Tensor t(dim, rank);
  std::vector<ScalarField> fields(t.size(), ScalarField(dim));
  std::vector<bool> seen(t.size(), false);
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const std::string base = "/entries/" + std::to_string(n);
    const json& e = entries[n];
    if (!e.is_object()) throw SchemaError(base, "must be an object");
    if (!e.contains("index") || !e["index"].is_array()) {
      throw SchemaError(base + "/index", "must be an array");
    }
    const json& index = e["index"];
    if (index.size() != rank) {
      throw SchemaError(base + "/index", "needs " + std::to_string(rank) + " components");
    }
    MultiIndex idx(rank);
    for (std::size_t k = 0; k < rank; ++k) {
      if (!index[k].is_number_integer() || index[k].get<long long>() < 0 ||
          index[k].get<long long>() >= static_cast<long long>(dim)) {
        throw SchemaError(base + "/index/" + std::to_string(k),
                          "must be an integer in [0, " + std::to_string(dim) + ")");
      }
      idx[k] = index[k].get<std::size_t>();
    }
    if (!e.contains("expr") || !e["expr"].is_string()) {
      throw SchemaError(base + "/expr", "must be a string");
    }
    const std::size_t off = t.offset(idx);
    if (seen[off]) throw SchemaError(base + "/index", "duplicate index " + to_string(idx));
    seen[off] = true;
    try {
      fields[off] = parse_field(e["expr"].get<std::string>(), dim);
    } catch (const ParseError& err) {
      throw SchemaError(base + "/expr", err.what());
    }
  }
  t = Tensor(dim, rank, std::move(fields));
  if (space) {
    const MembershipReport r = check_membership(t, *space, policy);
    if (!r.member) {
      throw MembershipError("tensor claims " + space->to_string() + " but " +
                                r.failed_condition + " fails at index " +
                                to_string(r.witness_index),
                            r.witness_index);
    }
  }
  return {std::move(t), space};
}

std::string emit_tensor(const Tensor& t, const std::optional<Space>& space) {
  ordered_json doc;
  doc["dim"] = t.dim();
  doc["rank"] = t.rank();
  if (space) {
    doc["space"] = space->family == Space::Family::kK ? "K" : "G";
    doc["grade"] = space->grade;
  } else {
    doc["space"] = "generic";
  }
  auto entries = ordered_json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.at(i).is_zero()) continue;
    ordered_json e;
    e["index"] = t.unflatten(i);
    e["expr"] = t.at(i).to_sexpr();
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string emit_tensor(const CochainElement& e) { return emit_tensor(e.tensor(), e.space()); }

spacetime::IsotropicMetric parse_metric(std::string_view json_text) {
  const json doc = parse_json(json_text);
  if (!doc.is_object()) throw SchemaError("", "document must be an object");
  if (!doc.contains("name") || !doc["name"].is_string()) {
    throw SchemaError("/name", "must be a string");
  }
  for (const auto& [key, value] : doc.items()) {
    if (key != "name" && key != "params" && key != "f" && key != "g" && key != "H") {
      throw SchemaError("/" + key, "unknown key");
    }
  }
  spacetime::MetricParams params;
  auto read_string = [&](const json& obj, const char* key, const std::string& path,
                         std::optional<std::string>& out) {
    if (!obj.contains(key)) return;
    if (!obj[key].is_string()) throw SchemaError(path, "must be a string");
    out = obj[key].get<std::string>();
  };
  auto read_rational = [&](const json& obj, const char* key, const std::string& path,
                           std::optional<Rational>& out) {
    std::optional<std::string> text;
    read_string(obj, key, path, text);
    if (!text) return;
    try {
      out = parse_rational(*text);
    } catch (const ParseError& e) {
      throw SchemaError(path, e.what());
    }
  };
  if (doc.contains("params")) {
    const json& p = doc["params"];
    if (!p.is_object()) throw SchemaError("/params", "must be an object");
    for (const auto& [key, value] : p.items()) {
      if (key != "mass" && key != "omega") throw SchemaError("/params/" + key, "unknown key");
    }
    read_rational(p, "mass", "/params/mass", params.mass);
    read_rational(p, "omega", "/params/omega", params.omega);
  }
  read_string(doc, "f", "/f", params.f);
  read_string(doc, "g", "/g", params.g);
  read_string(doc, "H", "/H", params.h);
  try {
    return spacetime::builtin_metric(doc["name"].get<std::string>(), params);
  } catch (const ParseError& e) {
    throw SchemaError("", e.what());
  }
}

}  // namespace cochain
