#include "fole/linearization.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "fole/error.hpp"

namespace fole {

namespace {

void require_valid_structure(const Structure& m, const char* what) {
  try {
    if (check_structure(m).ok()) return;
  } catch (const Error&) {
  }
  fail(Errc::invalid_structure, what);
}

// Offenders blocking the unified model: sorts without an entity type and
// entity types without a sort.
NameSet unified_offenders(const Structure& m) {
  NameSet out;
  for (const Name& x : m.attr.types)
    if (!m.ent.types.contains(x)) out.insert(x);
  for (const Name& r : m.ent.types)
    if (!m.attr.types.contains(r)) out.insert(r);
  return out;
}

std::string joined(const NameSet& names) {
  std::string out;
  for (const Name& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

std::string ntriples_escape(const Name& n) {
  std::string out;
  for (char c : n) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

QuadSet linearize(const Structure& m) {
  require_valid_structure(m, "linearization requires a valid structure");
  QuadSet out;
  for (const auto& [r, k] : m.ent.incidence) {
    const IndexedList& signature = m.schema.signature_of(r);
    const IndexedList& tuple = m.universe.tuple_of(k);
    for (const auto& [index, sort] : signature.entries)
      out.insert({r, k, index, sort, tuple.at(index)});
  }
  return out;
}

Skeleton skeleton_of(const Structure& m) {
  return {m.ent.types, m.ent.instances, m.attr.types, m.attr.instances, m.attr};
}

Delinearized delinearize(const QuadSet& quads, const Schema& schema,
                         const Skeleton& skeleton) {
  Delinearized out;
  for (const LinQuad& q : quads) {
    if (!skeleton.entity_types.contains(q.entity_type) || !skeleton.keys.contains(q.key) ||
        !skeleton.sorts.contains(q.sort) || !skeleton.values.contains(q.value))
      fail(Errc::invalid_input, "quad references names outside the skeleton");
    const IndexedList& signature = schema.signature_of(q.entity_type);
    if (!signature.has_index(q.index) || signature.at(q.index) != q.sort)
      fail(Errc::inconsistent_quads,
           "quad slot (" + q.entity_type + ", " + q.index + ") disagrees with the schema");
    if (!skeleton.attr.classifies(q.sort, q.value))
      fail(Errc::inconsistent_quads,
           "quad value '" + q.value + "' is not classified by sort '" + q.sort + "'");
    auto [it, inserted] = out.classified_tuples[q.key].entries.emplace(q.index, q.value);
    if (!inserted && it->second != q.value)
      fail(Errc::inconsistent_quads,
           "two quads disagree on (" + q.key + ", " + q.index + ")");
    out.ent_incidence.emplace(q.entity_type, q.key);
  }
  // every classified key must carry a complete row for each of its types
  for (const auto& [r, k] : out.ent_incidence) {
    const IndexedList& signature = schema.signature_of(r);
    if (out.classified_tuples.at(k).arity() != signature.arity())
      fail(Errc::inconsistent_quads,
           "quads for key '" + k + "' do not fill the signature of '" + r + "'");
  }
  return out;
}

OlogGraph olog_schema(const Structure& m) {
  require_valid_structure(m, "olog export requires a valid structure");
  const NameSet offenders = unified_offenders(m);
  if (!offenders.empty())
    fail(Errc::not_unified_model, "entity/attribute types differ: " + joined(offenders));
  OlogGraph out;
  out.nodes = m.ent.types;
  for (const Name& r : m.ent.types)
    for (const auto& [index, sort] : m.schema.signature_of(r).entries)
      out.edges.insert({r, {r, index}, sort});
  return out;
}

OlogInstance olog_instance(const Structure& m) {
  const OlogGraph graph = olog_schema(m);
  const IntegrityReport integrity = check_integrity(m);
  if (!integrity.referential_violations.empty()) {
    const auto& [t, y] = integrity.referential_violations.front();
    fail(Errc::referential_violation,
         "'" + y + "' of sort '" + t + "' is not a key of that type");
  }
  OlogInstance out;
  for (const Name& node : graph.nodes) out.node_sets.emplace(node, extent(m.ent, node));
  for (const OlogEdge& edge : graph.edges) {
    NameMap fn;
    for (const Name& k : out.node_sets.at(edge.source))
      fn.emplace(k, m.universe.tuple_of(k).at(edge.label.second));
    out.edge_fns.emplace(edge.label, std::move(fn));
  }
  return out;
}

Structure unify(const Structure& m) {
  require_valid_structure(m, "unification requires a valid structure");
  const IntegrityReport integrity = check_integrity(m);
  if (!integrity.referential_violations.empty()) {
    const auto& [t, y] = integrity.referential_violations.front();
    fail(Errc::invalid_input,
         "referential integrity fails at (" + t + ", " + y + "); unify needs a mixed model");
  }
  for (const Name& x : m.attr.types) {
    if (m.ent.types.contains(x)) continue;
    for (const Name& y : extent(m.attr, x))
      if (m.ent.instances.contains(y))
        fail(Errc::invalid_input, "key '" + y + "' is classified by promoted sort '" + x +
                                      "'; its tuple cannot become a self-description");
  }

  Structure out;
  NameSet types = m.ent.types;
  types.insert(m.attr.types.begin(), m.attr.types.end());
  NameSet instances = m.ent.instances;
  instances.insert(m.attr.instances.begin(), m.attr.instances.end());
  PairSet incidence = m.ent.incidence;
  incidence.insert(m.attr.incidence.begin(), m.attr.incidence.end());
  out.ent = {types, instances, incidence};
  out.attr = out.ent;

  out.schema.entity_types = types;
  out.schema.sorts = types;
  for (const Name& t : types) {
    auto it = m.schema.signatures.find(t);
    if (it != m.schema.signatures.end()) {
      out.schema.signatures.emplace(t, it->second);
    } else {
      IndexedList self;
      self.entries.emplace(kUnifySelfIndex, t);
      out.schema.signatures.emplace(t, std::move(self));
    }
  }
  out.universe.keys = instances;
  out.universe.values = instances;
  for (const Name& i : instances) {
    auto it = m.universe.tuples.find(i);
    if (it != m.universe.tuples.end()) {
      out.universe.tuples.emplace(i, it->second);
    } else {
      IndexedList self;
      self.entries.emplace(kUnifySelfIndex, i);
      out.universe.tuples.emplace(i, std::move(self));
    }
  }
  return out;
}

std::string export_eav(const QuadSet& quads) {
  std::ostringstream out;
  for (const LinQuad& q : quads)
    out << q.entity_type << '\t' << q.key << '\t' << q.index << '\t' << q.sort << '\t'
        << q.value << '\n';
  return out.str();
}

std::string export_ntriples(const QuadSet& quads) {
  std::vector<std::string> lines;
  lines.reserve(quads.size());
  for (const LinQuad& q : quads)
    lines.push_back("<" + q.key + "> <" + q.entity_type + "#" + q.index + "> \"" +
                    ntriples_escape(q.value) + "\" .");
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace fole
