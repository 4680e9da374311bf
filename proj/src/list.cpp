#include "fole/list.hpp"

#include <vector>

#include "fole/error.hpp"

namespace fole {

NameSet IndexedList::arity() const { return keys_of(entries); }

const Name& IndexedList::at(const Name& i) const { return map_apply(entries, i); }

IndexedList sum_along(const NameMap& f, const IndexedList& list) {
  IndexedList out;
  for (const auto& [index, name] : list.entries) out.entries.emplace(index, map_apply(f, name));
  return out;
}

bool classify_tuple(const Classification& a, const IndexedList& signature,
                    const IndexedList& tuple) {
  if (signature.entries.size() != tuple.entries.size()) return false;
  auto sig_it = signature.entries.begin();
  auto tup_it = tuple.entries.begin();
  for (; sig_it != signature.entries.end(); ++sig_it, ++tup_it) {
    if (sig_it->first != tup_it->first) return false;           // arity differs
    if (!a.classifies(sig_it->second, tup_it->second)) return false;
  }
  return true;
}

SignatureMorphismReport check_signature_morphism(const SignatureMorphism& m) {
  if (!total_on(m.arity_map, m.source.arity()) ||
      !maps_into(m.arity_map, m.target.arity()))
    fail(Errc::partial_map, "arity map is not total source arity -> target arity");
  SignatureMorphismReport report;
  for (const auto& [i2, i1] : m.arity_map)
    if (m.target.at(i1) != m.source.at(i2)) report.violations.push_back(i2);
  return report;
}

IndexedList project_tuple(const SignatureMorphism& m, const IndexedList& tuple) {
  bool morphism_ok = false;
  try {
    morphism_ok = check_signature_morphism(m).ok();
  } catch (const Error&) {
    morphism_ok = false;
  }
  if (!morphism_ok)
    fail(Errc::ill_typed_tuple, "signature morphism fails its preservation check");
  if (tuple.arity() != m.target.arity())
    fail(Errc::ill_typed_tuple, "tuple arity differs from the target signature's");
  IndexedList out;
  for (const auto& [i2, i1] : m.arity_map) out.entries.emplace(i2, tuple.at(i1));
  return out;
}

std::set<IndexedList> tuples_of(const Classification& a, const IndexedList& signature,
                                std::size_t max_tuples) {
  std::vector<Name> indices;
  std::vector<std::vector<Name>> domains;
  std::size_t count = 1;
  for (const auto& [index, sort] : signature.entries) {
    NameSet dom = extent(a, sort);  // unknown_type for foreign sorts
    indices.push_back(index);
    domains.emplace_back(dom.begin(), dom.end());
    if (dom.empty()) count = 0;
    else if (count > max_tuples / dom.size()) count = max_tuples + 1;
    else count *= dom.size();
    if (count > max_tuples)
      fail(Errc::cardinality_limit, "tuple set exceeds the cardinality cap");
  }

  std::set<IndexedList> out;
  if (count == 0) return out;

  std::vector<std::size_t> cursor(indices.size(), 0);
  while (true) {
    IndexedList tuple;
    for (std::size_t n = 0; n < indices.size(); ++n)
      tuple.entries.emplace(indices[n], domains[n][cursor[n]]);
    out.insert(std::move(tuple));
    std::size_t n = 0;
    for (; n < cursor.size(); ++n) {
      if (++cursor[n] < domains[n].size()) break;
      cursor[n] = 0;
    }
    if (n == cursor.size()) break;  // wrapped every position (or empty arity)
  }
  return out;
}

}  // namespace fole
