#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

namespace fole {

// Every carrier element is an opaque name. Names order lexicographically
// (bytewise), which fixes the canonical order used by every report and
// serialization in the library.
using Name = std::string;
using NameSet = std::set<Name>;
using NamePair = std::pair<Name, Name>;
using PairSet = std::set<NamePair>;

// A finite total function between name sets; the domain is the key set.
using NameMap = std::map<Name, Name>;

// Reserved prefixes carried by generated names: tagged disjoint sums tag the
// entity side with "E:" and the attribute side with "A:"; the key-embedding
// index is "⟐self". User input containing any of these is rejected by the
// model parser.
inline const Name kEntityTag = "E:";
inline const Name kAttributeTag = "A:";
inline const Name kSelfIndex = "⟐self";

bool has_reserved_prefix(const Name& n);
Name tag_entity(const Name& n);
Name tag_attribute(const Name& n);
// Strips a leading "E:" or "A:" tag; names without one pass through.
Name strip_tag(const Name& n);

NameSet keys_of(const NameMap& fn);
NameSet values_of(const NameMap& fn);
NameMap identity_map(const NameSet& carrier);

// True when fn has exactly `domain` as its key set.
bool total_on(const NameMap& fn, const NameSet& domain);
// True when every fn value lies in `codomain`.
bool maps_into(const NameMap& fn, const NameSet& codomain);
// True when fn is the identity on `carrier` (same key set, fixed points).
bool is_identity_on(const NameMap& fn, const NameSet& carrier);

// Applies fn; throws partial_map when x has no image.
const Name& map_apply(const NameMap& fn, const Name& x);

// x -> then(first(x)); throws partial_map when a first-image escapes then.
NameMap compose_maps(const NameMap& first, const NameMap& then);

}  // namespace fole
