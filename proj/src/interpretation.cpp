#include "fole/interpretation.hpp"

#include "fole/error.hpp"

namespace fole {

namespace {

void require_interpretable(const Structure& m, const Name& r) {
  try {
    if (!check_structure(m).ok())
      fail(Errc::invalid_structure, "interpretation requires a valid structure");
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_structure) throw;
    fail(Errc::invalid_structure, e.what());
  }
  if (!m.ent.types.contains(r))
    fail(Errc::unknown_type, "'" + r + "' is not an entity type");
}

}  // namespace

Relation traditional_interpretation(const Structure& m, const Name& r) {
  require_interpretable(m, r);
  Relation out;
  out.signature = m.schema.signature_of(r);
  for (const Name& k : extent(m.ent, r)) out.tuples.insert(m.universe.tuple_of(k));
  return out;
}

Table tabular_interpretation(const Structure& m, const Name& r) {
  require_interpretable(m, r);
  Table out;
  out.signature = m.schema.signature_of(r);
  out.keys = extent(m.ent, r);
  for (const Name& k : out.keys) out.rows.emplace(k, m.universe.tuple_of(k));
  return out;
}

Table key_embedded_table(const Structure& m, const Name& r) {
  require_interpretable(m, r);
  return tabular_interpretation(key_embed(m), r);
}

PreimageCheck morphic_preimage_check(const Structure& m, const Name& r) {
  const Relation relation = traditional_interpretation(m, r);
  PreimageCheck out;
  for (const Name& k : m.ent.instances)
    if (relation.tuples.contains(m.universe.tuple_of(k))) out.preimage.insert(k);
  out.closed = out.preimage == extent(m.ent, r);
  return out;
}

}  // namespace fole
