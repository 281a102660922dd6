#include "krasner/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace krasner {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParse, "instance field '" + where + "': " + what);
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : key) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

struct LabelIndex {
  std::map<std::string, ElementId> ids;

  ElementId get(const std::string& where, const std::string& label) const {
    auto it = ids.find(label);
    if (it == ids.end()) parse_fail(where, "unknown label '" + label + "'");
    return it->second;
  }
};

Subset parse_label_set(const std::string& where, const json& arr, const LabelIndex& idx, int N) {
  if (!arr.is_array()) parse_fail(where, "expected a list of labels");
  Subset s(N);
  for (const auto& v : arr) {
    if (!v.is_string()) parse_fail(where, "expected a label string");
    s.set(idx.get(where, v.get<std::string>()));
  }
  return s;
}

}  // namespace

InstanceData parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParse, "instance document must be a JSON object");

  InstanceData data;
  auto require = [&](const char* field) -> const json& {
    auto it = doc.find(field);
    if (it == doc.end()) parse_fail(field, "missing");
    return *it;
  };

  const json& jm = require("m");
  const json& jn = require("n");
  if (!jm.is_number_integer() || jm.get<int>() < 2) parse_fail("m", "must be an integer >= 2");
  if (!jn.is_number_integer() || jn.get<int>() < 2) parse_fail("n", "must be an integer >= 2");
  data.tables.m = jm.get<int>();
  data.tables.n = jn.get<int>();

  const json& jcarrier = require("carrier");
  if (!jcarrier.is_array() || jcarrier.empty()) parse_fail("carrier", "must be a nonempty label list");
  LabelIndex idx;
  for (const auto& v : jcarrier) {
    if (!v.is_string()) parse_fail("carrier", "labels must be strings");
    std::string label = v.get<std::string>();
    if (label.empty() || label.find(',') != std::string::npos)
      parse_fail("carrier", "label '" + label + "' is empty or contains ','");
    if (!idx.ids.emplace(label, static_cast<ElementId>(data.tables.labels.size())).second)
      parse_fail("carrier", "duplicate label '" + label + "'");
    data.tables.labels.push_back(label);
  }
  int N = data.tables.size();

  const json& jzero = require("zero");
  if (!jzero.is_string()) parse_fail("zero", "must be a label");
  data.tables.zero = idx.get("zero", jzero.get<std::string>());
  if (auto it = doc.find("one"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) parse_fail("one", "must be a label");
    data.tables.one = idx.get("one", it->get<std::string>());
  }

  auto parse_tuple_key = [&](const char* field, const std::string& key, int arity) {
    std::vector<std::string> parts = split_key(key);
    if (static_cast<int>(parts.size()) != arity)
      parse_fail(field, "key '" + key + "' must name " + std::to_string(arity) + " labels");
    std::vector<ElementId> tuple;
    for (const auto& p : parts) tuple.push_back(idx.get(std::string(field) + "." + key, p));
    for (size_t i = 1; i < tuple.size(); ++i)
      if (tuple[i - 1] > tuple[i])
        parse_fail(field, "key '" + key + "' is not sorted in carrier order");
    return tuple;
  };

  const json& jh = require("h");
  if (!jh.is_object()) parse_fail("h", "must be a map from tuple keys to label lists");
  data.tables.h = HyperOpTable(data.tables.m, N);
  for (const auto& [key, value] : jh.items()) {
    std::vector<ElementId> tuple = parse_tuple_key("h", key, data.tables.m);
    if (data.tables.h.entry_assigned(tuple)) parse_fail("h", "duplicate entry for '" + key + "'");
    Subset entry = parse_label_set("h." + key, value, idx, N);
    if (entry.empty()) parse_fail("h", "entry '" + key + "' must be a nonempty label list");
    data.tables.h.set_entry(tuple, entry);
  }
  if (auto missing = data.tables.h.first_incomplete()) {
    std::string key;
    for (size_t i = 0; i < missing->size(); ++i)
      key += (i ? "," : "") + data.tables.labels[static_cast<size_t>((*missing)[i])];
    parse_fail("h", "missing entry for tuple '" + key + "'");
  }

  const json& jk = require("k");
  if (!jk.is_object()) parse_fail("k", "must be a map from tuple keys to labels");
  data.tables.k = NaryOpTable(data.tables.n, N);
  for (const auto& [key, value] : jk.items()) {
    std::vector<ElementId> tuple = parse_tuple_key("k", key, data.tables.n);
    if (data.tables.k.entry_assigned(tuple)) parse_fail("k", "duplicate entry for '" + key + "'");
    if (!value.is_string()) parse_fail("k", "entry '" + key + "' must be a label");
    data.tables.k.set_entry(tuple, idx.get("k." + key, value.get<std::string>()));
  }
  if (auto missing = data.tables.k.first_incomplete()) {
    std::string key;
    for (size_t i = 0; i < missing->size(); ++i)
      key += (i ? "," : "") + data.tables.labels[static_cast<size_t>((*missing)[i])];
    parse_fail("k", "missing entry for tuple '" + key + "'");
  }

  if (auto it = doc.find("ideals"); it != doc.end()) {
    if (!it->is_object()) parse_fail("ideals", "must be a map from names to label lists");
    for (const auto& [name, value] : it->items())
      data.ideals.emplace(name, parse_label_set("ideals." + name, value, idx, N));
  }
  if (auto it = doc.find("expansions"); it != doc.end()) {
    if (!it->is_object()) parse_fail("expansions", "must be a map from names to pair lists");
    for (const auto& [name, value] : it->items()) {
      if (!value.is_array()) parse_fail("expansions." + name, "must be a list of (ideal, image) pairs");
      std::vector<std::pair<Subset, Subset>> pairs;
      for (const auto& pair : value) {
        if (!pair.is_array() || pair.size() != 2)
          parse_fail("expansions." + name, "each entry must be a two-element pair");
        pairs.emplace_back(parse_label_set("expansions." + name, pair[0], idx, N),
                           parse_label_set("expansions." + name, pair[1], idx, N));
      }
      data.expansions.emplace(name, std::move(pairs));
    }
  }
  return data;
}

InstanceData load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

LoadedInstance validate_instance(const InstanceData& data) {
  LoadedInstance out;
  out.ring = Ring::create(data.tables, &out.report);
  if (!out.ring) return out;
  for (const auto& [name, subset] : data.ideals) {
    ClassificationReport check = is_hyperideal(out.ring, subset);
    if (!check.passed)
      throw Error(ErrorCode::kInvalidInput,
                  "named ideal '" + name + "' is not a hyperideal: " + check.detail);
    out.ideals.emplace(name, Hyperideal(out.ring, subset));
  }
  if (!data.expansions.empty()) {
    out.lattice = IdealLattice::enumerate(out.ring);
    for (const auto& [name, pairs] : data.expansions) {
      if (name == "delta0" || name == "delta1" || name == "deltaR")
        throw Error(ErrorCode::kInvalidInput,
                    "expansion name '" + name + "' is reserved for the built-in");
      ClassificationReport axioms;
      Expansion d = expansion_from_pairs(name, *out.lattice, pairs, &axioms);
      if (!axioms.passed)
        throw Error(ErrorCode::kInvalidInput,
                    "expansion '" + name + "' violates the expansion axioms: " + axioms.detail);
      out.expansions.emplace(name, std::move(d));
    }
  }
  return out;
}

LoadedInstance load_and_validate(const std::string& path) {
  return validate_instance(load_instance_file(path));
}

std::string serialize_instance(
    const Ring& ring, const std::map<std::string, Subset>* ideals,
    const std::map<std::string, std::vector<std::pair<Subset, Subset>>>* expansions) {
  ordered_json doc;
  doc["m"] = ring.m();
  doc["n"] = ring.n();
  doc["carrier"] = ring.labels();
  doc["zero"] = ring.label(ring.zero());
  if (ring.one()) doc["one"] = ring.label(*ring.one());

  auto label_list = [&](const Subset& s) {
    std::vector<std::string> out;
    s.for_each([&](int e) { out.push_back(ring.label(e)); });
    return out;
  };

  ordered_json jh = ordered_json::object();
  const TupleIndex& hidx = ring.tables().h.index();
  for (size_t r = 0; r < hidx.table_size(); ++r) {
    std::vector<ElementId> tuple = hidx.unrank(r);
    std::string key;
    for (size_t i = 0; i < tuple.size(); ++i) key += (i ? "," : "") + ring.label(tuple[i]);
    jh[key] = label_list(ring.add(tuple));
  }
  doc["h"] = std::move(jh);

  ordered_json jk = ordered_json::object();
  const TupleIndex& kidx = ring.tables().k.index();
  for (size_t r = 0; r < kidx.table_size(); ++r) {
    std::vector<ElementId> tuple = kidx.unrank(r);
    std::string key;
    for (size_t i = 0; i < tuple.size(); ++i) key += (i ? "," : "") + ring.label(tuple[i]);
    jk[key] = ring.label(ring.mul(tuple));
  }
  doc["k"] = std::move(jk);

  if (ideals && !ideals->empty()) {
    ordered_json ji = ordered_json::object();
    for (const auto& [name, subset] : *ideals) ji[name] = label_list(subset);
    doc["ideals"] = std::move(ji);
  }
  if (expansions && !expansions->empty()) {
    ordered_json je = ordered_json::object();
    for (const auto& [name, pairs] : *expansions) {
      ordered_json list = ordered_json::array();
      for (const auto& [from, to] : pairs)
        list.push_back(ordered_json::array({label_list(from), label_list(to)}));
      je[name] = std::move(list);
    }
    doc["expansions"] = std::move(je);
  }
  return doc.dump(1) + "\n";
}

}  // namespace krasner
