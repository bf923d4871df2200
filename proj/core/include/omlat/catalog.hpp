#ifndef OMLAT_CATALOG_HPP
#define OMLAT_CATALOG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "omlat/constructions.hpp"

namespace omlat {

/// The two-element Boolean algebra.
OmlPtr chain2();

/// The powerset Boolean algebra on n generators (bit-pattern elements).
OmlPtr powerset(std::size_t n_generators);

/// MO(n): bottom, top and 2n atoms, pairwise incomparable, complement-paired
/// x<i> with x<i>p. Orthomodular for every n; non-distributive for n >= 2.
OmlPtr mo(std::size_t n_atom_pairs);

/// The hexagon ortholattice 0 < a < b < 1, 0 < bp < ap < 1 with a/ap and
/// b/bp complement pairs; the minimal non-orthomodular witness.
OmlPtr benzene();

/// Glue two lattices at shared bottom and top; interiors stay incomparable.
/// Interiors keep their labels with l. / r. prefixes.
OmlPtr horizontal_sum(const OmlPtr& left, const OmlPtr& right);

/// Cartesian product lattice; the biproduct carrier.
OmlPtr product(std::vector<OmlPtr> factors);

struct CatalogEntry {
  std::string name;
  OmlPtr oml;
};

/// The built-in test catalog. Built once; entries are shared immutable
/// objects, so repeated lookups return identical pointers. benzene is the
/// single non-orthomodular entry.
const std::vector<CatalogEntry>& standard_catalog();

/// Throws UnknownName for names outside the catalog.
OmlPtr catalog_lookup(std::string_view name);

std::vector<std::string> catalog_names();

} // namespace omlat

#endif
