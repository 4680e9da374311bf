#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>

#include "fole/structure.hpp"

namespace fole {

// One flattened fact: entity (r, k) has, at index i, attribute (s_i, t_i).
struct LinQuad {
  Name entity_type;
  Name key;
  Name index;
  Name sort;
  Name value;

  bool operator==(const LinQuad&) const = default;
  auto operator<=>(const LinQuad&) const = default;
};

using QuadSet = std::set<LinQuad>;

// The linearization set of a structure: one quad per incidence pair and
// signature slot. Throws invalid_structure when check_structure fails.
QuadSet linearize(const Structure& m);

// The non-designation remainder of a structure: carriers plus the full
// attribute classification. Together with the schema this is what
// delinearize needs beyond the quads.
struct Skeleton {
  NameSet entity_types;
  NameSet keys;
  NameSet sorts;
  NameSet values;
  Classification attr;
};

Skeleton skeleton_of(const Structure& m);

// What the quads determine: the entity incidence and tau restricted to
// classified keys.
struct Delinearized {
  PairSet ent_incidence;
  std::map<Name, IndexedList> classified_tuples;

  bool operator==(const Delinearized&) const = default;
};

// Rebuilds the designation data from a quad set. Throws inconsistent_quads
// when two quads disagree on a (key, index) value or the quads do not match
// the schema's signatures; invalid_input when a quad references names
// outside the skeleton.
Delinearized delinearize(const QuadSet& quads, const Schema& schema, const Skeleton& skeleton);

struct OlogEdge {
  Name source;     // r
  NamePair label;  // (r, i)
  Name target;     // s_i

  bool operator==(const OlogEdge&) const = default;
  auto operator<=>(const OlogEdge&) const = default;
};

// Nodes are the unified types R = X; one edge per signature slot.
struct OlogGraph {
  NameSet nodes;
  std::set<OlogEdge> edges;

  bool operator==(const OlogGraph&) const = default;
};

// Requires the unified model (R = X as name sets). Throws not_unified_model
// listing the offending sorts/types.
OlogGraph olog_schema(const Structure& m);

// The instance side: node extents and one total function per edge.
struct OlogInstance {
  std::map<Name, NameSet> node_sets;
  std::map<NamePair, NameMap> edge_fns;  // keyed by edge label (r, i)
};

// Requires the unified model plus referential integrity, so every edge
// function lands in the target extent. Throws not_unified_model or
// referential_violation.
OlogInstance olog_instance(const Structure& m);

// Index carried by the singleton self-descriptions unify introduces. Not
// reserved: it only ever appears in fresh one-slot lists, so it cannot
// collide with user indices the way the embedding index could.
inline const Name kUnifySelfIndex = "self";

// Opt-in unified-model transform: promotes every sort to an entity type
// whose keys are its extent values, extending tau by singleton
// self-descriptions. Requires check_structure ok, referential integrity,
// and that no key is attribute-classified by a sort outside R∩X (throws
// invalid_structure / invalid_input).
Structure unify(const Structure& m);

// Tab-separated "entityType key index sort value", one quad per line,
// canonical quad order.
std::string export_eav(const QuadSet& quads);

// N-Triples subset: <key> <entityType#index> "value" . — lines sorted
// bytewise.
std::string export_ntriples(const QuadSet& quads);

}  // namespace fole
