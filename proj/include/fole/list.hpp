#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "fole/classification.hpp"
#include "fole/names.hpp"

namespace fole {

// A finite indexed list: an arity (set of index names) with a total
// assignment into target names. Signatures assign sorts, tuples values.
struct IndexedList {
  NameMap entries;  // index -> assigned name

  NameSet arity() const;
  bool has_index(const Name& i) const { return entries.contains(i); }
  const Name& at(const Name& i) const;  // throws partial_map
  std::size_t size() const { return entries.size(); }

  bool operator==(const IndexedList&) const = default;
  auto operator<=>(const IndexedList&) const = default;
};

// An arity function between two indexed lists that preserves assignments.
struct SignatureMorphism {
  IndexedList source;  // <I', s'>
  IndexedList target;  // <I, s>
  NameMap arity_map;   // h : I' -> I
};

// Composes the assignment with f: same arity, entries index -> f(value).
// Throws partial_map when some assigned name has no f-image.
IndexedList sum_along(const NameMap& f, const IndexedList& list);

// True iff tuple and signature share the same arity and every shared slot
// is classified: tuple[i] |=_a signature[i]. Never throws; arity mismatch
// is plain false.
bool classify_tuple(const Classification& a, const IndexedList& signature,
                    const IndexedList& tuple);

struct SignatureMorphismReport {
  std::vector<Name> violations;  // source indices where s(h(i')) != s'(i')
  bool ok() const { return violations.empty(); }
};

// Checks h . s = s'. Throws partial_map when h is not total on the source
// arity or lands outside the target arity.
SignatureMorphismReport check_signature_morphism(const SignatureMorphism& m);

// Precomposes a tuple over the target signature with the arity map:
// index i' -> tuple[h(i')]. Throws ill_typed_tuple when the morphism fails
// its check or the tuple's arity differs from the target's.
IndexedList project_tuple(const SignatureMorphism& m, const IndexedList& tuple);

inline constexpr std::size_t kDefaultTupleCap = 1'000'000;

// The full tuple set of a signature: the product of the sort extents.
// Throws unknown_type for a sort outside a's types; cardinality_limit when
// the product would exceed max_tuples.
std::set<IndexedList> tuples_of(const Classification& a, const IndexedList& signature,
                                std::size_t max_tuples = kDefaultTupleCap);

}  // namespace fole
