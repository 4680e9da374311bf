#pragma once

#include <compare>
#include <vector>

#include "fole/classification.hpp"
#include "fole/schema.hpp"

namespace fole {

// The full ERA model of one community: an entity classification over (R, K)
// and an attribute classification over (X, Y), joined by the list
// designation <sigma, tau>. Entity/attribute overlap is literal name
// sharing between R/X and K/Y (foreign keys live in the overlap).
struct Structure {
  Classification ent;   // over (R, K)
  Classification attr;  // over (X, Y)
  Schema schema;        // R -> List(X)
  Universe universe;    // K -> List(Y)

  bool operator==(const Structure&) const = default;
};

// One failed designation check: key of the given entity type; index names
// the offending slot and is empty for an arity mismatch.
struct DesignationViolation {
  Name entity_type;
  Name key;
  Name index;

  bool operator==(const DesignationViolation&) const = default;
  auto operator<=>(const DesignationViolation&) const = default;
};

struct StructureReport {
  std::vector<DesignationViolation> violations;  // canonical order
  bool ok() const { return violations.empty(); }
};

// The designation condition over every incidence pair of ent: whenever
// k |=_E r, tau(k) classifies against sigma(r) in attr. Throws
// carrier_mismatch when carriers disagree or a component is malformed.
StructureReport check_structure(const Structure& m);

struct StructureMorphism {
  Structure source;   // M2
  Structure target;   // M1
  NameMap ent_map;    // r : R2 -> R1
  NameMap key_map;    // k : K1 -> K2
  NameMap sort_map;   // f : X2 -> X1
  NameMap value_map;  // g : Y1 -> Y2
};

struct StructureMorphismReport {
  std::vector<Name> schema_violations;         // r2 where r.sigma1 != sigma2.Sum_f
  std::vector<Name> universe_violations;       // k1 where k.tau2 != tau1.Sum_g
  std::vector<NamePair> entity_violations;     // (r2, k1) infomorphism failures
  std::vector<NamePair> attribute_violations;  // (x2, y1) infomorphism failures
  bool ok() const {
    return schema_violations.empty() && universe_violations.empty() &&
           entity_violations.empty() && attribute_violations.empty();
  }
};

// The four component laws, each checked exhaustively. Throws
// invalid_endpoint when either endpoint fails check_structure, partial_map
// when a component map is not total.
StructureMorphismReport check_structure_morphism(const StructureMorphism& phi);

StructureMorphism identity_structure_morphism(const Structure& m);

// Componentwise composite of first : M3 <-> M2 and then : M2 <-> M1.
// Throws endpoint_mismatch.
StructureMorphism compose_structure_morphisms(const StructureMorphism& first,
                                              const StructureMorphism& then);

SchemaMorphism schema_projection(const StructureMorphism& phi);
UniverseMorphism universe_projection(const StructureMorphism& phi);

// Companion key embedding: adjoins each key to its own tuple under the
// reserved self index, over the tagged sum typed domain E+A. The embedded
// signature and tuple maps are injective. Throws invalid_structure when the
// input fails check_structure.
Structure key_embed(const Structure& m);

// Companion key embedding of a morphism: same r and k, tagged sums r+f and
// k+g on the summed carriers. Throws invalid_morphism when the input fails
// check_structure_morphism.
StructureMorphism key_embed_morphism(const StructureMorphism& phi);

struct IntegrityReport {
  bool entity_ok = false;  // universe well-formed (primary key rule)
  bool domain_ok = false;  // schema well-formed + designation condition
  std::vector<NamePair> referential_violations;  // (shared type, instance)
  bool ok() const { return entity_ok && domain_ok && referential_violations.empty(); }
};

// Report-only integrity check; never throws. Referential integrity: for
// every shared name t in R∩X, each y |=_A t is a key with y |=_E t.
IntegrityReport check_integrity(const Structure& m);

struct OverlapReport {
  std::vector<NamePair> violations;  // (shared type, instance outside K∩Y)
  bool ok() const { return violations.empty(); }
};

// Mixed-model coherence: instances of an overlap type lie in the instance
// overlap K∩Y. Report-only; never throws.
OverlapReport check_overlap_coherence(const Structure& m);

// True iff every entity extent equals the full tuple-preimage of its
// interpreted relation: ext(r) = tau^-1(tau(ext(r))). Throws
// invalid_structure when the input fails check_structure.
bool is_extensive(const Structure& m);

}  // namespace fole
