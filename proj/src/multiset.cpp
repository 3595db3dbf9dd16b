#include "hcb/multiset.hpp"

#include <algorithm>

namespace hcb {

std::size_t cardinality(const Multiset& m) {
  std::size_t n = 0;
  for (const auto& [k, c] : m) n += static_cast<std::size_t>(c);
  return n;
}

int multiplicity(const Multiset& m, int key) {
  auto it = m.find(key);
  return it == m.end() ? 0 : it->second;
}

std::vector<int> to_stubs(const Multiset& m) {
  std::vector<int> out;
  out.reserve(cardinality(m));
  for (const auto& [k, c] : m) out.insert(out.end(), c, k);
  return out;
}

Multiset from_stubs(const std::vector<int>& stubs) {
  Multiset out;
  for (int s : stubs) ++out[s];
  return out;
}

Multiset mset_union(const Multiset& a, const Multiset& b) {
  Multiset out = a;
  for (const auto& [k, c] : b) out[k] += c;
  return out;
}

Multiset mset_difference(const Multiset& a, const Multiset& b) {
  Multiset out;
  for (const auto& [k, c] : a) {
    int d = c - multiplicity(b, k);
    if (d > 0) out[k] = d;
  }
  return out;
}

Multiset mset_intersection(const Multiset& a, const Multiset& b) {
  Multiset out;
  for (const auto& [k, c] : a) {
    int d = std::min(c, multiplicity(b, k));
    if (d > 0) out[k] = d;
  }
  return out;
}

}  // namespace hcb
