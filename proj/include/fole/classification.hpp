#pragma once

#include <map>
#include <vector>

#include "fole/names.hpp"

namespace fole {

// A finite classification: a set of types, a set of instances, and the
// incidence (classification) relation between them. Plays both the entity
// role (types R, keys K) and the attribute role (sorts X, values Y).
// A name may be both a type and an instance of the same classification.
struct Classification {
  NameSet types;
  NameSet instances;
  PairSet incidence;  // (type, instance) pairs

  bool classifies(const Name& type, const Name& instance) const {
    return incidence.contains({type, instance});
  }
  bool operator==(const Classification&) const = default;
};

// Every incidence pair references declared carriers.
bool well_formed(const Classification& c);

// The extent of a type: every instance it classifies. Throws unknown_type.
NameSet extent(const Classification& c, const Name& type);

// The whole extent map, one entry per type (empty extents included).
std::map<Name, NameSet> extent_map(const Classification& c);

// A contravariant pair of maps between classifications: types forward along
// type_map, instances backward along inst_map.
struct Infomorphism {
  Classification source;  // C2
  Classification target;  // C1
  NameMap type_map;       // f : types(C2) -> types(C1)
  NameMap inst_map;       // g : instances(C1) -> instances(C2)
};

struct InfomorphismReport {
  // Counterexamples (x2, y1) to: g(y1) |=_2 x2  iff  y1 |=_1 f(x2).
  std::vector<NamePair> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the fundamental condition over all of types(C2) x instances(C1),
// reporting every counterexample. Throws domain_mismatch when type_map is
// not total types(C2)->types(C1) or inst_map not total instances(C1)->
// instances(C2).
InfomorphismReport check_infomorphism(const Infomorphism& m);

// Pulls the target classification back along a type function f : X2 -> X1.
// Result is over (X2, instances(target)) with y |= x2 iff y |=_target f(x2).
Classification inverse_image_by_types(const NameMap& f, const Classification& target);

// Pulls the source classification back along an instance function
// g : Y1 -> Y2. Result is over (types(source), Y1) with
// y1 |= x iff g(y1) |=_source x.
Classification inverse_image_by_instances(const NameMap& g, const Classification& source);

struct InfomorphismFactorization {
  Classification midpoint;      // f^-1(target)
  Classification midpoint_alt;  // g^-1(source); equal to midpoint
  Infomorphism source_leg;      // <1, g> : source <-> midpoint
  Infomorphism target_leg;      // <f, 1> : midpoint <-> target
};

// Dual factorization of a valid infomorphism through its inverse-image
// midpoint. Throws invalid_infomorphism when check_infomorphism fails.
InfomorphismFactorization factorize_infomorphism(const Infomorphism& m);

Infomorphism identity_infomorphism(const Classification& c);

// Componentwise composite of first : C3 <-> C2 and then : C2 <-> C1.
// Throws endpoint_mismatch when first.target != then.source.
Infomorphism compose_infomorphisms(const Infomorphism& first, const Infomorphism& then);

// Tagged disjoint sum: the left operand's names get the entity tag, the
// right operand's the attribute tag; no cross incidences.
Classification parallel_sum(const Classification& ent_side, const Classification& attr_side);

}  // namespace fole
