#include "fole/fibration.hpp"

#include "fole/error.hpp"

namespace fole {

namespace {

void require_reduct_inputs(const Structure& target, const SchemaMorphism& m) {
  try {
    if (!check_structure(target).ok())
      fail(Errc::invalid_input, "structure fails its designation check");
    if (!check_schema_morphism(m).ok())
      fail(Errc::invalid_input, "schema morphism fails its preservation check");
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_input) throw;
    fail(Errc::invalid_input, e.what());
  }
  if (!(m.target == target.schema))
    fail(Errc::invalid_input, "schema morphism does not land in the structure's schema");
}

void require_image_inputs(const Structure& source, const UniverseMorphism& u) {
  try {
    if (!check_structure(source).ok())
      fail(Errc::invalid_input, "structure fails its designation check");
    if (!check_universe_morphism(u).ok())
      fail(Errc::invalid_input, "universe morphism fails its preservation check");
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_input) throw;
    fail(Errc::invalid_input, e.what());
  }
  if (!(u.source == source.universe))
    fail(Errc::invalid_input, "universe morphism does not leave the structure's universe");
}

}  // namespace

Structure reduct_along_schema(const Structure& target, const SchemaMorphism& m) {
  require_reduct_inputs(target, m);
  Structure out;
  out.ent = inverse_image_by_types(m.ent_map, target.ent);
  out.attr = inverse_image_by_types(m.sort_map, target.attr);
  out.schema = m.source;
  out.universe = target.universe;
  return out;
}

StructureMorphism bridge_schema(const Structure& target, const SchemaMorphism& m) {
  StructureMorphism out;
  out.source = reduct_along_schema(target, m);
  out.target = target;
  out.ent_map = m.ent_map;
  out.sort_map = m.sort_map;
  out.key_map = identity_map(target.universe.keys);
  out.value_map = identity_map(target.universe.values);
  return out;
}

Structure image_along_universe(const Structure& source, const UniverseMorphism& u) {
  require_image_inputs(source, u);
  Structure out;
  out.ent = inverse_image_by_instances(u.key_map, source.ent);
  out.attr = inverse_image_by_instances(u.value_map, source.attr);
  out.schema = source.schema;
  out.universe = u.target;
  return out;
}

StructureMorphism bridge_universe(const Structure& source, const UniverseMorphism& u) {
  StructureMorphism out;
  out.source = source;
  out.target = image_along_universe(source, u);
  out.ent_map = identity_map(source.ent.types);
  out.sort_map = identity_map(source.attr.types);
  out.key_map = u.key_map;
  out.value_map = u.value_map;
  return out;
}

FiberedMorphismWitness factorize_structure_morphism(const StructureMorphism& phi) {
  try {
    if (!check_structure_morphism(phi).ok())
      fail(Errc::invalid_morphism, "structure morphism fails its laws; nothing to factorize");
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_morphism) throw;
    fail(Errc::invalid_morphism, e.what());
  }

  const Structure& m2 = phi.source;
  const Structure& m1 = phi.target;
  FiberedMorphismWitness witness;
  witness.original = phi;
  witness.schema_mid = reduct_along_schema(m1, schema_projection(phi));
  witness.universe_mid = image_along_universe(m2, universe_projection(phi));

  const NameMap id_r2 = identity_map(m2.ent.types);
  const NameMap id_x2 = identity_map(m2.attr.types);
  const NameMap id_k1 = identity_map(m1.ent.instances);
  const NameMap id_y1 = identity_map(m1.attr.instances);

  witness.schema_fiber_leg =
      {m2, witness.schema_mid, id_r2, phi.key_map, id_x2, phi.value_map};
  witness.schema_bridge_leg =
      {witness.schema_mid, m1, phi.ent_map, id_k1, phi.sort_map, id_y1};
  witness.universe_bridge_leg =
      {m2, witness.universe_mid, id_r2, phi.key_map, id_x2, phi.value_map};
  witness.universe_fiber_leg =
      {witness.universe_mid, m1, phi.ent_map, id_k1, phi.sort_map, id_y1};
  return witness;
}

FiberCheck check_fixed_fiber_morphism(const StructureMorphism& phi, FiberMode mode) {
  FiberCheck out;
  try {
    if (!check_structure_morphism(phi).ok()) {
      out.reasons.push_back("morphism fails its component laws");
      return out;
    }
  } catch (const Error& e) {
    out.reasons.push_back(e.what());
    return out;
  }
  if (mode == FiberMode::schema) {
    if (!(phi.source.schema == phi.target.schema))
      out.reasons.push_back("endpoint schemas differ");
    if (!is_identity_on(phi.ent_map, phi.source.ent.types))
      out.reasons.push_back("entity type map is not the identity");
    if (!is_identity_on(phi.sort_map, phi.source.attr.types))
      out.reasons.push_back("sort map is not the identity");
  } else {
    if (!(phi.source.universe == phi.target.universe))
      out.reasons.push_back("endpoint universes differ");
    if (!is_identity_on(phi.key_map, phi.target.ent.instances))
      out.reasons.push_back("key map is not the identity");
    if (!is_identity_on(phi.value_map, phi.target.attr.instances))
      out.reasons.push_back("value map is not the identity");
  }
  out.ok = out.reasons.empty();
  return out;
}

}  // namespace fole
