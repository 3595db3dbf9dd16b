#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace hcb {

// Multiset over dense integer ids. Stored keys always have multiplicity >= 1.
using Multiset = std::map<int, int>;

std::size_t cardinality(const Multiset& m);
int multiplicity(const Multiset& m, int key);

// Expanded element list with repeats, ascending.
std::vector<int> to_stubs(const Multiset& m);
Multiset from_stubs(const std::vector<int>& stubs);

// Multiplicities add.
Multiset mset_union(const Multiset& a, const Multiset& b);
// Saturating difference: max(m_a - m_b, 0).
Multiset mset_difference(const Multiset& a, const Multiset& b);
// min(m_a, m_b).
Multiset mset_intersection(const Multiset& a, const Multiset& b);

}  // namespace hcb
