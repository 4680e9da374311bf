#pragma once

#include <string>

#include "fole/interpretation.hpp"
#include "fole/linearization.hpp"
#include "fole/structure.hpp"

namespace fole {

// Model documents are canonical JSON: sorted object keys, sorted name
// arrays, signature/tuple entries sorted by index, two-space indent, one
// trailing newline. parse(emit(s)) == s for every structure and
// emit(parse(d)) == d for every canonical document.

// Throws parse_error (with byte position) on malformed JSON and
// validation_error on document-level defects: missing fields, dangling
// references, non-total signature/tuple maps, duplicate indices, reserved
// name prefixes, control characters in names.
Structure parse_model(const std::string& text);

std::string emit_model(const Structure& m);

// A structure morphism by reference to its endpoint model files.
struct MorphismDocument {
  std::string source_ref;  // path of the source model (M2)
  std::string target_ref;  // path of the target model (M1)
  NameMap r;               // R2 -> R1
  NameMap f;               // X2 -> X1
  NameMap k;               // K1 -> K2
  NameMap g;               // Y1 -> Y2
};

// Throws parse_error / validation_error like parse_model.
MorphismDocument parse_morphism(const std::string& text);

// Assembles the morphism over parsed endpoints. Map totality against the
// endpoint carriers is not enforced here; check_structure_morphism reports
// it.
StructureMorphism assemble_morphism(const MorphismDocument& doc, Structure source,
                                    Structure target);

// RFC-4180-style CSV: header row of index names (self column first for
// embedded tables), one row per key in canonical key order, tags erased
// from embedded values, CRLF line ends.
std::string emit_table_csv(const Table& table);

// Deterministic DOT rendering of an olog graph.
std::string emit_olog_dot(const OlogGraph& graph);

}  // namespace fole
