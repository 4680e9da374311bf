#include "fole/classification.hpp"

#include "fole/error.hpp"

namespace fole {

bool well_formed(const Classification& c) {
  for (const auto& [type, inst] : c.incidence)
    if (!c.types.contains(type) || !c.instances.contains(inst)) return false;
  return true;
}

NameSet extent(const Classification& c, const Name& type) {
  if (!c.types.contains(type))
    fail(Errc::unknown_type, "'" + type + "' is not a type of the classification");
  NameSet out;
  // incidence is ordered by (type, instance): one contiguous range per type
  for (auto it = c.incidence.lower_bound({type, Name()});
       it != c.incidence.end() && it->first == type; ++it)
    out.insert(it->second);
  return out;
}

std::map<Name, NameSet> extent_map(const Classification& c) {
  std::map<Name, NameSet> out;
  for (const Name& type : c.types) out.emplace(type, extent(c, type));
  return out;
}

namespace {

void require_infomorphism_domains(const Infomorphism& m) {
  if (!total_on(m.type_map, m.source.types) || !maps_into(m.type_map, m.target.types))
    fail(Errc::domain_mismatch, "type map is not total types(source) -> types(target)");
  if (!total_on(m.inst_map, m.target.instances) || !maps_into(m.inst_map, m.source.instances))
    fail(Errc::domain_mismatch, "instance map is not total instances(target) -> instances(source)");
}

}  // namespace

InfomorphismReport check_infomorphism(const Infomorphism& m) {
  require_infomorphism_domains(m);
  InfomorphismReport report;
  for (const Name& x2 : m.source.types) {
    const Name& fx2 = map_apply(m.type_map, x2);
    for (const Name& y1 : m.target.instances) {
      const bool lhs = m.source.classifies(x2, map_apply(m.inst_map, y1));
      const bool rhs = m.target.classifies(fx2, y1);
      if (lhs != rhs) report.violations.emplace_back(x2, y1);
    }
  }
  return report;
}

Classification inverse_image_by_types(const NameMap& f, const Classification& target) {
  if (!maps_into(f, target.types))
    fail(Errc::partial_map, "type function lands outside the classification's types");
  Classification out;
  out.types = keys_of(f);
  out.instances = target.instances;
  for (const auto& [x2, x1] : f)
    for (const Name& y : extent(target, x1)) out.incidence.emplace(x2, y);
  return out;
}

Classification inverse_image_by_instances(const NameMap& g, const Classification& source) {
  if (!maps_into(g, source.instances))
    fail(Errc::partial_map, "instance function lands outside the classification's instances");
  Classification out;
  out.types = source.types;
  out.instances = keys_of(g);
  for (const auto& [y1, y2] : g)
    for (const Name& x : source.types)
      if (source.classifies(x, y2)) out.incidence.emplace(x, y1);
  return out;
}

InfomorphismFactorization factorize_infomorphism(const Infomorphism& m) {
  if (!check_infomorphism(m).ok())
    fail(Errc::invalid_infomorphism, "fundamental condition fails; nothing to factorize");
  InfomorphismFactorization out;
  out.midpoint = inverse_image_by_types(m.type_map, m.target);
  out.midpoint_alt = inverse_image_by_instances(m.inst_map, m.source);
  out.source_leg = Infomorphism{m.source, out.midpoint,
                                identity_map(m.source.types), m.inst_map};
  out.target_leg = Infomorphism{out.midpoint, m.target,
                                m.type_map, identity_map(m.target.instances)};
  return out;
}

Infomorphism identity_infomorphism(const Classification& c) {
  return {c, c, identity_map(c.types), identity_map(c.instances)};
}

Infomorphism compose_infomorphisms(const Infomorphism& first, const Infomorphism& then) {
  if (!(first.target == then.source))
    fail(Errc::endpoint_mismatch, "middle classifications differ");
  Infomorphism out;
  out.source = first.source;
  out.target = then.target;
  out.type_map = compose_maps(first.type_map, then.type_map);
  out.inst_map = compose_maps(then.inst_map, first.inst_map);
  return out;
}

Classification parallel_sum(const Classification& ent_side, const Classification& attr_side) {
  Classification out;
  for (const Name& t : ent_side.types) out.types.insert(tag_entity(t));
  for (const Name& t : attr_side.types) out.types.insert(tag_attribute(t));
  for (const Name& i : ent_side.instances) out.instances.insert(tag_entity(i));
  for (const Name& i : attr_side.instances) out.instances.insert(tag_attribute(i));
  for (const auto& [t, i] : ent_side.incidence)
    out.incidence.emplace(tag_entity(t), tag_entity(i));
  for (const auto& [t, i] : attr_side.incidence)
    out.incidence.emplace(tag_attribute(t), tag_attribute(i));
  return out;
}

}  // namespace fole
