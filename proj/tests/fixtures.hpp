#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "pgroup/harness.hpp"

namespace fixtures {

using namespace pgroup;

/// Builtin group by name, enumerated once per process.
inline const Group& named(const std::string& name) {
  static std::map<std::string, GroupPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return *it->second;
  for (const auto& p : builtin_corpus())
    if (p.name == name) return *cache.emplace(name, enumerate(p)).first->second;
  throw std::runtime_error("no builtin group " + name);
}

inline GroupPtr from_text(const std::string& text) { return enumerate(parse_presentation(text)); }

inline GroupPtr cyclic(int p, int k) {
  PcPresentation pres = PcPresentation::trivial_relations("C" + std::to_string(p) + "^" + std::to_string(k), p, k);
  for (int i = 0; i + 1 < k; ++i) pres.set_power(i, Word{{i + 1, 1}});
  return enumerate(pres);
}

inline std::vector<GroupPtr> builtin_groups() {
  std::vector<GroupPtr> out;
  for (const auto& p : builtin_corpus()) out.push_back(enumerate(p));
  return out;
}

inline Elem gen(const Group& g, int one_based) { return g.generator(one_based - 1); }

}  // namespace fixtures
