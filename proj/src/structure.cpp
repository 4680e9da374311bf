#include "fole/structure.hpp"

#include <algorithm>

#include "fole/error.hpp"

namespace fole {

namespace {

void require_carrier_agreement(const Structure& m) {
  if (!well_formed(m.ent)) fail(Errc::carrier_mismatch, "entity classification is malformed");
  if (!well_formed(m.attr)) fail(Errc::carrier_mismatch, "attribute classification is malformed");
  if (!well_formed(m.schema)) fail(Errc::carrier_mismatch, "schema is malformed");
  if (!well_formed(m.universe)) fail(Errc::carrier_mismatch, "universe is malformed");
  if (m.ent.types != m.schema.entity_types)
    fail(Errc::carrier_mismatch, "entity types differ between ent and schema");
  if (m.ent.instances != m.universe.keys)
    fail(Errc::carrier_mismatch, "keys differ between ent and universe");
  if (m.attr.types != m.schema.sorts)
    fail(Errc::carrier_mismatch, "sorts differ between attr and schema");
  if (m.attr.instances != m.universe.values)
    fail(Errc::carrier_mismatch, "values differ between attr and universe");
}

void require_valid(const Structure& m, Errc code, const char* what) {
  try {
    if (check_structure(m).ok()) return;
  } catch (const Error&) {
  }
  fail(code, what);
}

// Tags the key side of a map with the entity tag and the value side with the
// attribute tag, producing the summed-carrier map r+f (or k+g).
NameMap tagged_sum_map(const NameMap& ent_part, const NameMap& attr_part) {
  NameMap out;
  for (const auto& [a, b] : ent_part) out.emplace(tag_entity(a), tag_entity(b));
  for (const auto& [a, b] : attr_part) out.emplace(tag_attribute(a), tag_attribute(b));
  return out;
}

IndexedList self_prefixed(const Name& self_value, const IndexedList& rest) {
  IndexedList out;
  out.entries.emplace(kSelfIndex, tag_entity(self_value));
  for (const auto& [index, name] : rest.entries)
    out.entries.emplace(index, tag_attribute(name));
  return out;
}

}  // namespace

StructureReport check_structure(const Structure& m) {
  require_carrier_agreement(m);
  StructureReport report;
  for (const auto& [r, k] : m.ent.incidence) {
    const IndexedList& signature = m.schema.signature_of(r);
    const IndexedList& tuple = m.universe.tuple_of(k);
    if (signature.arity() != tuple.arity()) {
      report.violations.push_back({r, k, Name()});
      continue;
    }
    for (const auto& [index, sort] : signature.entries)
      if (!m.attr.classifies(sort, tuple.at(index)))
        report.violations.push_back({r, k, index});
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

StructureMorphismReport check_structure_morphism(const StructureMorphism& phi) {
  try {
    if (!check_structure(phi.source).ok())
      fail(Errc::invalid_endpoint, "source structure fails its designation check");
    if (!check_structure(phi.target).ok())
      fail(Errc::invalid_endpoint, "target structure fails its designation check");
  } catch (const Error& e) {
    if (e.code() == Errc::carrier_mismatch)
      fail(Errc::invalid_endpoint, "endpoint structure is malformed");
    throw;
  }

  const Structure& m2 = phi.source;
  const Structure& m1 = phi.target;
  if (!total_on(phi.ent_map, m2.ent.types) || !maps_into(phi.ent_map, m1.ent.types))
    fail(Errc::partial_map, "entity type map is not total R2 -> R1");
  if (!total_on(phi.sort_map, m2.attr.types) || !maps_into(phi.sort_map, m1.attr.types))
    fail(Errc::partial_map, "sort map is not total X2 -> X1");
  if (!total_on(phi.key_map, m1.ent.instances) || !maps_into(phi.key_map, m2.ent.instances))
    fail(Errc::partial_map, "key map is not total K1 -> K2");
  if (!total_on(phi.value_map, m1.attr.instances) ||
      !maps_into(phi.value_map, m2.attr.instances))
    fail(Errc::partial_map, "value map is not total Y1 -> Y2");

  StructureMorphismReport report;
  for (const Name& r2 : m2.ent.types) {
    const IndexedList& image_sig = m1.schema.signature_of(map_apply(phi.ent_map, r2));
    if (!(image_sig == sum_along(phi.sort_map, m2.schema.signature_of(r2))))
      report.schema_violations.push_back(r2);
  }
  for (const Name& k1 : m1.ent.instances) {
    const IndexedList& image_tuple = m2.universe.tuple_of(map_apply(phi.key_map, k1));
    if (!(image_tuple == sum_along(phi.value_map, m1.universe.tuple_of(k1))))
      report.universe_violations.push_back(k1);
  }
  for (const Name& r2 : m2.ent.types) {
    const Name& r1 = map_apply(phi.ent_map, r2);
    for (const Name& k1 : m1.ent.instances) {
      const bool lhs = m2.ent.classifies(r2, map_apply(phi.key_map, k1));
      const bool rhs = m1.ent.classifies(r1, k1);
      if (lhs != rhs) report.entity_violations.emplace_back(r2, k1);
    }
  }
  for (const Name& x2 : m2.attr.types) {
    const Name& x1 = map_apply(phi.sort_map, x2);
    for (const Name& y1 : m1.attr.instances) {
      const bool lhs = m2.attr.classifies(x2, map_apply(phi.value_map, y1));
      const bool rhs = m1.attr.classifies(x1, y1);
      if (lhs != rhs) report.attribute_violations.emplace_back(x2, y1);
    }
  }
  return report;
}

StructureMorphism identity_structure_morphism(const Structure& m) {
  return {m, m, identity_map(m.ent.types), identity_map(m.ent.instances),
          identity_map(m.attr.types), identity_map(m.attr.instances)};
}

StructureMorphism compose_structure_morphisms(const StructureMorphism& first,
                                              const StructureMorphism& then) {
  if (!(first.target == then.source)) fail(Errc::endpoint_mismatch, "middle structures differ");
  StructureMorphism out;
  out.source = first.source;
  out.target = then.target;
  out.ent_map = compose_maps(first.ent_map, then.ent_map);
  out.sort_map = compose_maps(first.sort_map, then.sort_map);
  out.key_map = compose_maps(then.key_map, first.key_map);
  out.value_map = compose_maps(then.value_map, first.value_map);
  return out;
}

SchemaMorphism schema_projection(const StructureMorphism& phi) {
  return {phi.source.schema, phi.target.schema, phi.ent_map, phi.sort_map};
}

UniverseMorphism universe_projection(const StructureMorphism& phi) {
  return {phi.source.universe, phi.target.universe, phi.key_map, phi.value_map};
}

Structure key_embed(const Structure& m) {
  require_valid(m, Errc::invalid_structure, "key embedding requires a valid structure");
  Structure out;
  out.ent = m.ent;
  out.attr = parallel_sum(m.ent, m.attr);
  out.schema.entity_types = m.ent.types;
  out.schema.sorts = out.attr.types;
  for (const Name& r : m.ent.types)
    out.schema.signatures.emplace(r, self_prefixed(r, m.schema.signature_of(r)));
  out.universe.keys = m.ent.instances;
  out.universe.values = out.attr.instances;
  for (const Name& k : m.ent.instances)
    out.universe.tuples.emplace(k, self_prefixed(k, m.universe.tuple_of(k)));
  return out;
}

StructureMorphism key_embed_morphism(const StructureMorphism& phi) {
  if (!check_structure_morphism(phi).ok())
    fail(Errc::invalid_morphism, "key embedding requires a valid structure morphism");
  StructureMorphism out;
  out.source = key_embed(phi.source);
  out.target = key_embed(phi.target);
  out.ent_map = phi.ent_map;
  out.key_map = phi.key_map;
  out.sort_map = tagged_sum_map(phi.ent_map, phi.sort_map);
  out.value_map = tagged_sum_map(phi.key_map, phi.value_map);
  return out;
}

IntegrityReport check_integrity(const Structure& m) {
  IntegrityReport report;
  report.entity_ok = well_formed(m.universe);
  report.domain_ok = false;
  try {
    report.domain_ok = well_formed(m.schema) && check_structure(m).ok();
  } catch (const Error&) {
  }
  for (const Name& t : m.ent.types) {
    if (!m.attr.types.contains(t)) continue;
    for (auto it = m.attr.incidence.lower_bound({t, Name()});
         it != m.attr.incidence.end() && it->first == t; ++it) {
      const Name& y = it->second;
      if (!m.ent.instances.contains(y) || !m.ent.classifies(t, y))
        report.referential_violations.emplace_back(t, y);
    }
  }
  return report;
}

OverlapReport check_overlap_coherence(const Structure& m) {
  OverlapReport report;
  for (const Name& t : m.ent.types) {
    if (!m.attr.types.contains(t)) continue;
    NameSet combined;
    for (auto it = m.ent.incidence.lower_bound({t, Name()});
         it != m.ent.incidence.end() && it->first == t; ++it)
      combined.insert(it->second);
    for (auto it = m.attr.incidence.lower_bound({t, Name()});
         it != m.attr.incidence.end() && it->first == t; ++it)
      combined.insert(it->second);
    for (const Name& inst : combined)
      if (!m.ent.instances.contains(inst) || !m.attr.instances.contains(inst))
        report.violations.emplace_back(t, inst);
  }
  return report;
}

bool is_extensive(const Structure& m) {
  require_valid(m, Errc::invalid_structure, "extensiveness requires a valid structure");
  for (const Name& r : m.ent.types) {
    const NameSet ext = extent(m.ent, r);
    std::set<IndexedList> image;
    for (const Name& k : ext) image.insert(m.universe.tuple_of(k));
    for (const Name& k : m.ent.instances)
      if (!ext.contains(k) && image.contains(m.universe.tuple_of(k))) return false;
  }
  return true;
}

}  // namespace fole
