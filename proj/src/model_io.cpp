#include "fole/model_io.hpp"

#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fole/error.hpp"

namespace fole {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::parse_error, e.what());
  }
}

void check_name(const Name& n, const char* role) {
  if (has_reserved_prefix(n))
    fail(Errc::validation_error,
         std::string(role) + " '" + n + "' uses a reserved prefix");
  for (char c : n)
    if (static_cast<unsigned char>(c) < 0x20)
      fail(Errc::validation_error,
           std::string(role) + " contains a control character");
}

NameSet read_name_array(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_array())
    fail(Errc::validation_error, std::string("missing name array '") + field + "'");
  NameSet out;
  for (const json& item : doc[field]) {
    if (!item.is_string())
      fail(Errc::validation_error, std::string("non-string name in '") + field + "'");
    Name n = item.get<Name>();
    check_name(n, field);
    out.insert(std::move(n));
  }
  return out;
}

PairSet read_pair_array(const json& doc, const char* field, const NameSet& first_carrier,
                        const NameSet& second_carrier) {
  if (!doc.contains(field) || !doc[field].is_array())
    fail(Errc::validation_error, std::string("missing pair array '") + field + "'");
  PairSet out;
  for (const json& item : doc[field]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      fail(Errc::validation_error, std::string("'") + field + "' entries must be [name, name]");
    Name a = item[0].get<Name>();
    Name b = item[1].get<Name>();
    if (!first_carrier.contains(a))
      fail(Errc::validation_error, std::string("'") + field + "' references undeclared '" + a + "'");
    if (!second_carrier.contains(b))
      fail(Errc::validation_error, std::string("'") + field + "' references undeclared '" + b + "'");
    out.emplace(std::move(a), std::move(b));
  }
  return out;
}

std::map<Name, IndexedList> read_list_map(const json& doc, const char* field,
                                          const char* value_key, const NameSet& owners,
                                          const NameSet& targets) {
  if (!doc.contains(field) || !doc[field].is_object())
    fail(Errc::validation_error, std::string("missing object '") + field + "'");
  std::map<Name, IndexedList> out;
  for (const auto& [owner, entries] : doc[field].items()) {
    if (!owners.contains(owner))
      fail(Errc::validation_error, std::string("'") + field + "' keyed by undeclared '" + owner + "'");
    if (!entries.is_array())
      fail(Errc::validation_error, std::string("'") + field + "' entries must be arrays");
    IndexedList list;
    for (const json& entry : entries) {
      if (!entry.is_object() || !entry.contains("index") || !entry.contains(value_key) ||
          !entry["index"].is_string() || !entry[value_key].is_string())
        fail(Errc::validation_error, std::string("'") + field + "' entry needs index and " +
                                         value_key + " strings");
      Name index = entry["index"].get<Name>();
      Name target = entry[value_key].get<Name>();
      check_name(index, "index");
      if (!targets.contains(target))
        fail(Errc::validation_error,
             std::string("'") + field + "' assigns undeclared '" + target + "'");
      if (!list.entries.emplace(std::move(index), std::move(target)).second)
        fail(Errc::validation_error,
             std::string("duplicate index in '") + field + "' entry for '" + owner + "'");
    }
    out.emplace(owner, std::move(list));
  }
  for (const Name& owner : owners)
    if (!out.contains(owner))
      fail(Errc::validation_error, std::string("'") + field + "' misses '" + owner + "'");
  return out;
}

json list_map_json(const std::map<Name, IndexedList>& lists, const char* value_key) {
  json out = json::object();
  for (const auto& [owner, list] : lists) {
    json entries = json::array();
    for (const auto& [index, target] : list.entries)
      entries.push_back({{"index", index}, {value_key, target}});
    out[owner] = std::move(entries);
  }
  return out;
}

json pair_array_json(const PairSet& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

NameMap read_map_field(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_array())
    fail(Errc::validation_error, std::string("missing map array '") + field + "'");
  NameMap out;
  for (const json& item : doc[field]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      fail(Errc::validation_error, std::string("'") + field + "' entries must be [name, name]");
    Name a = item[0].get<Name>();
    Name b = item[1].get<Name>();
    if (!out.emplace(std::move(a), std::move(b)).second)
      fail(Errc::validation_error, std::string("'") + field + "' maps a name twice");
  }
  return out;
}

std::string csv_field(const Name& n) {
  if (n.find_first_of(",\"\r\n") == Name::npos) return n;
  std::string out = "\"";
  for (char c : n) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string dot_quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Structure parse_model(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail(Errc::validation_error, "model document must be a JSON object");

  Structure m;
  m.attr.types = read_name_array(doc, "sorts");
  m.attr.instances = read_name_array(doc, "values");
  m.ent.types = read_name_array(doc, "entityTypes");
  m.ent.instances = read_name_array(doc, "keys");
  m.attr.incidence = read_pair_array(doc, "attrIncidence", m.attr.types, m.attr.instances);
  m.ent.incidence = read_pair_array(doc, "entIncidence", m.ent.types, m.ent.instances);
  m.schema.entity_types = m.ent.types;
  m.schema.sorts = m.attr.types;
  m.schema.signatures = read_list_map(doc, "signatures", "sort", m.ent.types, m.attr.types);
  m.universe.keys = m.ent.instances;
  m.universe.values = m.attr.instances;
  m.universe.tuples = read_list_map(doc, "tuples", "value", m.ent.instances, m.attr.instances);
  return m;
}

std::string emit_model(const Structure& m) {
  json doc;
  doc["sorts"] = m.attr.types;
  doc["values"] = m.attr.instances;
  doc["entityTypes"] = m.ent.types;
  doc["keys"] = m.ent.instances;
  doc["attrIncidence"] = pair_array_json(m.attr.incidence);
  doc["entIncidence"] = pair_array_json(m.ent.incidence);
  doc["signatures"] = list_map_json(m.schema.signatures, "sort");
  doc["tuples"] = list_map_json(m.universe.tuples, "value");
  return doc.dump(2) + "\n";
}

MorphismDocument parse_morphism(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail(Errc::validation_error, "morphism document must be a JSON object");
  MorphismDocument out;
  if (!doc.contains("sourceRef") || !doc["sourceRef"].is_string() ||
      !doc.contains("targetRef") || !doc["targetRef"].is_string())
    fail(Errc::validation_error, "morphism document needs sourceRef and targetRef strings");
  out.source_ref = doc["sourceRef"].get<std::string>();
  out.target_ref = doc["targetRef"].get<std::string>();
  out.r = read_map_field(doc, "r");
  out.f = read_map_field(doc, "f");
  out.k = read_map_field(doc, "k");
  out.g = read_map_field(doc, "g");
  return out;
}

StructureMorphism assemble_morphism(const MorphismDocument& doc, Structure source,
                                    Structure target) {
  StructureMorphism out;
  out.source = std::move(source);
  out.target = std::move(target);
  out.ent_map = doc.r;
  out.sort_map = doc.f;
  out.key_map = doc.k;
  out.value_map = doc.g;
  return out;
}

std::string emit_table_csv(const Table& table) {
  const bool embedded = table.signature.has_index(kSelfIndex);
  std::vector<Name> columns;
  if (embedded) columns.push_back(kSelfIndex);
  for (const auto& [index, sort] : table.signature.entries)
    if (index != kSelfIndex) columns.push_back(index);

  std::string out;
  for (std::size_t n = 0; n < columns.size(); ++n) {
    if (n) out += ',';
    out += csv_field(columns[n]);
  }
  out += "\r\n";
  for (const auto& [key, row] : table.rows) {
    for (std::size_t n = 0; n < columns.size(); ++n) {
      if (n) out += ',';
      out += csv_field(embedded ? strip_tag(row.at(columns[n])) : row.at(columns[n]));
    }
    out += "\r\n";
  }
  return out;
}

std::string emit_olog_dot(const OlogGraph& graph) {
  std::string out = "digraph olog {\n";
  for (const Name& node : graph.nodes) out += "  " + dot_quoted(node) + ";\n";
  for (const OlogEdge& edge : graph.edges)
    out += "  " + dot_quoted(edge.source) + " -> " + dot_quoted(edge.target) + " [label=" +
           dot_quoted("(" + edge.label.first + "," + edge.label.second + ")") + "];\n";
  out += "}\n";
  return out;
}

}  // namespace fole
