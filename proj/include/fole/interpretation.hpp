#pragma once

#include <map>
#include <set>

#include "fole/structure.hpp"

namespace fole {

// An entity type read as a set of descriptor tuples: no keys, no
// multiplicity.
struct Relation {
  IndexedList signature;
  std::set<IndexedList> tuples;

  bool operator==(const Relation&) const = default;
};

// An entity type read as a keyed table: duplicate descriptors survive here.
struct Table {
  IndexedList signature;
  NameSet keys;
  std::map<Name, IndexedList> rows;  // total on keys

  bool operator==(const Table&) const = default;
};

// The direct image of the entity extent under tau, paired with sigma(r).
// Throws unknown_type when r is not an entity type, invalid_structure when
// the structure fails its check.
Relation traditional_interpretation(const Structure& m, const Name& r);

// The extent keys with the restriction of tau; its row image equals the
// traditional interpretation's tuple set.
Table tabular_interpretation(const Structure& m, const Name& r);

// The tabular interpretation of the key-embedded structure: the key appears
// in the self column of its own row.
Table key_embedded_table(const Structure& m, const Name& r);

struct PreimageCheck {
  NameSet preimage;  // tau^-1 of the traditional interpretation's tuples
  bool closed = false;  // preimage == extent(ent, r)
};

// The morphic-closure comparison behind extensiveness, exposed per type.
PreimageCheck morphic_preimage_check(const Structure& m, const Name& r);

}  // namespace fole
