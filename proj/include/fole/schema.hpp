#pragma once

#include <map>
#include <vector>

#include "fole/list.hpp"
#include "fole/names.hpp"

namespace fole {

// The type hypergraph: entity types with signatures over sorts.
struct Schema {
  NameSet entity_types;                    // R
  NameSet sorts;                           // X
  std::map<Name, IndexedList> signatures;  // sigma, total on R

  const IndexedList& signature_of(const Name& r) const;  // throws unknown_type
  bool operator==(const Schema&) const = default;
};

// The instance hypergraph: keys with value tuples. Carries no typing of its
// own; typing is only imposed at structure level.
struct Universe {
  NameSet keys;                        // K
  NameSet values;                      // Y
  std::map<Name, IndexedList> tuples;  // tau, total on K

  const IndexedList& tuple_of(const Name& k) const;  // throws unknown_type
  bool operator==(const Universe&) const = default;
};

// sigma total on R, every assigned sort in X.
bool well_formed(const Schema& s);
// tau total on K, every assigned value in Y.
bool well_formed(const Universe& u);

struct SchemaMorphism {
  Schema source;     // S2
  Schema target;     // S1
  NameMap ent_map;   // r : R2 -> R1
  NameMap sort_map;  // f : X2 -> X1
};

// Arrows run backward on instances: key_map and value_map leave the target.
struct UniverseMorphism {
  Universe source;    // U2
  Universe target;    // U1
  NameMap key_map;    // k : K1 -> K2
  NameMap value_map;  // g : Y1 -> Y2
};

struct HypergraphMorphismReport {
  std::vector<Name> violations;  // offending source entity types / target keys
  bool ok() const { return violations.empty(); }
};

// Signature preservation r . sigma1 = sigma2 . Sum_f, checked per r2.
// Throws partial_map when the component maps are not total.
HypergraphMorphismReport check_schema_morphism(const SchemaMorphism& m);

// Tuple preservation k . tau2 = tau1 . Sum_g, checked per k1.
HypergraphMorphismReport check_universe_morphism(const UniverseMorphism& m);

SchemaMorphism identity_schema_morphism(const Schema& s);
UniverseMorphism identity_universe_morphism(const Universe& u);

// S3 => S2 => S1 composed componentwise; throws endpoint_mismatch.
SchemaMorphism compose_schema_morphisms(const SchemaMorphism& m, const SchemaMorphism& n);
// U3 <= U2 <= U1 composed componentwise; throws endpoint_mismatch.
UniverseMorphism compose_universe_morphisms(const UniverseMorphism& m, const UniverseMorphism& n);

}  // namespace fole
