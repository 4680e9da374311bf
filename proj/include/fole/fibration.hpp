#pragma once

#include <string>
#include <vector>

#include "fole/structure.hpp"

namespace fole {

// Fiber passage along a schema morphism m : S2 => S1: pulls a structure over
// S1 back to its reduct over S2, keeping the universe. Entity and attribute
// classifications are inverse images along the type-side maps. Throws
// invalid_input when the structure or morphism fails its check or the
// morphism's target schema is not the structure's.
Structure reduct_along_schema(const Structure& target, const SchemaMorphism& m);

// The canonical morphism reduct -> target with maps <r, 1_K, f, 1_Y>.
StructureMorphism bridge_schema(const Structure& target, const SchemaMorphism& m);

// Fiber passage along a universe morphism u : U2 <= U1: pushes a structure
// over U2 to its image over U1, keeping the schema. Entity and attribute
// classifications are inverse images along the instance-side maps. Throws
// invalid_input on failed preconditions.
Structure image_along_universe(const Structure& source, const UniverseMorphism& u);

// The canonical morphism source -> image with maps <1_R, k, 1_X, g>.
StructureMorphism bridge_universe(const Structure& source, const UniverseMorphism& u);

// Dual factorization of a structure morphism M2 <-> M1 through the two fiber
// midpoints. Both leg pairs compose back to the original componentwise.
struct FiberedMorphismWitness {
  StructureMorphism original;
  Structure schema_mid;    // reduct of M1 along <r, f>
  Structure universe_mid;  // image of M2 along <k, g>
  StructureMorphism schema_fiber_leg;     // M2 <-> schema_mid    <1, k, 1, g>
  StructureMorphism schema_bridge_leg;    // schema_mid <-> M1    <r, 1, f, 1>
  StructureMorphism universe_bridge_leg;  // M2 <-> universe_mid  <1, k, 1, g>
  StructureMorphism universe_fiber_leg;   // universe_mid <-> M1  <r, 1, f, 1>
};

// Throws invalid_morphism when the input fails check_structure_morphism.
FiberedMorphismWitness factorize_structure_morphism(const StructureMorphism& phi);

enum class FiberMode { schema, universe };

struct FiberCheck {
  bool ok = false;
  std::vector<std::string> reasons;
};

// Whether phi lies in a fixed fiber: valid, and its schema components
// (mode schema: r = 1_R, f = 1_X) or universe components (mode universe:
// k = 1_K, g = 1_Y) are identities. Never throws.
FiberCheck check_fixed_fiber_morphism(const StructureMorphism& phi, FiberMode mode);

}  // namespace fole
