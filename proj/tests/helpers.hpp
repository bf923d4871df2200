#ifndef OMLAT_TESTS_HELPERS_HPP
#define OMLAT_TESTS_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "omlat/oml.hpp"

namespace omlat::testing {

/// Brute-force ortholattice isomorphism search, feasible for the small
/// fixtures used in tests (bottom and top are pinned, the interior is
/// permuted).
inline bool lattice_isomorphic(const Oml& a, const Oml& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n <= 2) return same_structure(a, b);
  std::vector<ElemId> perm(n);
  std::iota(perm.begin(), perm.end(), ElemId{0});
  std::vector<ElemId> middle(perm.begin() + 1, perm.end() - 1);
  do {
    for (std::size_t i = 0; i < middle.size(); ++i) perm[i + 1] = middle[i];
    bool ok = true;
    for (ElemId x = 0; ok && x < n; ++x) {
      if (perm[a.ortho(x)] != b.ortho(perm[x])) ok = false;
      for (ElemId y = 0; ok && y < n; ++y)
        if (a.leq(x, y) != b.leq(perm[x], perm[y])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return false;
}

} // namespace omlat::testing

#endif
