#include "fole/schema.hpp"

#include "fole/error.hpp"

namespace fole {

const IndexedList& Schema::signature_of(const Name& r) const {
  auto it = signatures.find(r);
  if (it == signatures.end())
    fail(Errc::unknown_type, "'" + r + "' has no signature in the schema");
  return it->second;
}

const IndexedList& Universe::tuple_of(const Name& k) const {
  auto it = tuples.find(k);
  if (it == tuples.end())
    fail(Errc::unknown_type, "'" + k + "' has no tuple in the universe");
  return it->second;
}

bool well_formed(const Schema& s) {
  if (s.signatures.size() != s.entity_types.size()) return false;
  for (const auto& [r, signature] : s.signatures) {
    if (!s.entity_types.contains(r)) return false;
    for (const auto& [index, sort] : signature.entries)
      if (!s.sorts.contains(sort)) return false;
  }
  return true;
}

bool well_formed(const Universe& u) {
  if (u.tuples.size() != u.keys.size()) return false;
  for (const auto& [k, tuple] : u.tuples) {
    if (!u.keys.contains(k)) return false;
    for (const auto& [index, value] : tuple.entries)
      if (!u.values.contains(value)) return false;
  }
  return true;
}

HypergraphMorphismReport check_schema_morphism(const SchemaMorphism& m) {
  if (!total_on(m.ent_map, m.source.entity_types) ||
      !maps_into(m.ent_map, m.target.entity_types))
    fail(Errc::partial_map, "entity type map is not total R2 -> R1");
  if (!total_on(m.sort_map, m.source.sorts) || !maps_into(m.sort_map, m.target.sorts))
    fail(Errc::partial_map, "sort map is not total X2 -> X1");
  HypergraphMorphismReport report;
  for (const Name& r2 : m.source.entity_types) {
    const IndexedList& image_sig = m.target.signature_of(map_apply(m.ent_map, r2));
    if (!(image_sig == sum_along(m.sort_map, m.source.signature_of(r2))))
      report.violations.push_back(r2);
  }
  return report;
}

HypergraphMorphismReport check_universe_morphism(const UniverseMorphism& m) {
  if (!total_on(m.key_map, m.target.keys) || !maps_into(m.key_map, m.source.keys))
    fail(Errc::partial_map, "key map is not total K1 -> K2");
  if (!total_on(m.value_map, m.target.values) || !maps_into(m.value_map, m.source.values))
    fail(Errc::partial_map, "value map is not total Y1 -> Y2");
  HypergraphMorphismReport report;
  for (const Name& k1 : m.target.keys) {
    const IndexedList& image_tuple = m.source.tuple_of(map_apply(m.key_map, k1));
    if (!(image_tuple == sum_along(m.value_map, m.target.tuple_of(k1))))
      report.violations.push_back(k1);
  }
  return report;
}

SchemaMorphism identity_schema_morphism(const Schema& s) {
  return {s, s, identity_map(s.entity_types), identity_map(s.sorts)};
}

UniverseMorphism identity_universe_morphism(const Universe& u) {
  return {u, u, identity_map(u.keys), identity_map(u.values)};
}

SchemaMorphism compose_schema_morphisms(const SchemaMorphism& m, const SchemaMorphism& n) {
  if (!(m.target == n.source)) fail(Errc::endpoint_mismatch, "middle schemas differ");
  return {m.source, n.target, compose_maps(m.ent_map, n.ent_map),
          compose_maps(m.sort_map, n.sort_map)};
}

UniverseMorphism compose_universe_morphisms(const UniverseMorphism& m,
                                            const UniverseMorphism& n) {
  if (!(m.target == n.source)) fail(Errc::endpoint_mismatch, "middle universes differ");
  return {m.source, n.target, compose_maps(n.key_map, m.key_map),
          compose_maps(n.value_map, m.value_map)};
}

}  // namespace fole
