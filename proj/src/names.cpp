#include "fole/names.hpp"

#include "fole/error.hpp"

namespace fole {

bool has_reserved_prefix(const Name& n) {
  return n.starts_with(kEntityTag) || n.starts_with(kAttributeTag) ||
         n.starts_with(kSelfIndex);
}

Name tag_entity(const Name& n) { return kEntityTag + n; }

Name tag_attribute(const Name& n) { return kAttributeTag + n; }

Name strip_tag(const Name& n) {
  if (n.starts_with(kEntityTag)) return n.substr(kEntityTag.size());
  if (n.starts_with(kAttributeTag)) return n.substr(kAttributeTag.size());
  return n;
}

NameSet keys_of(const NameMap& fn) {
  NameSet out;
  for (const auto& [key, value] : fn) out.insert(key);
  return out;
}

NameSet values_of(const NameMap& fn) {
  NameSet out;
  for (const auto& [key, value] : fn) out.insert(value);
  return out;
}

NameMap identity_map(const NameSet& carrier) {
  NameMap out;
  for (const Name& n : carrier) out.emplace(n, n);
  return out;
}

bool total_on(const NameMap& fn, const NameSet& domain) {
  if (fn.size() != domain.size()) return false;
  for (const Name& n : domain)
    if (!fn.contains(n)) return false;
  return true;
}

bool maps_into(const NameMap& fn, const NameSet& codomain) {
  for (const auto& [key, value] : fn)
    if (!codomain.contains(value)) return false;
  return true;
}

bool is_identity_on(const NameMap& fn, const NameSet& carrier) {
  if (!total_on(fn, carrier)) return false;
  for (const auto& [key, value] : fn)
    if (key != value) return false;
  return true;
}

const Name& map_apply(const NameMap& fn, const Name& x) {
  auto it = fn.find(x);
  if (it == fn.end()) fail(Errc::partial_map, "no image for '" + x + "'");
  return it->second;
}

NameMap compose_maps(const NameMap& first, const NameMap& then) {
  NameMap out;
  for (const auto& [key, mid] : first) out.emplace(key, map_apply(then, mid));
  return out;
}

}  // namespace fole
