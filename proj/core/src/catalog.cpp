#include "omlat/catalog.hpp"

#include <algorithm>

namespace omlat {

namespace {

ElemId eid(std::size_t v) { return static_cast<ElemId>(v); }

std::vector<std::string> default_generator_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name(1, static_cast<char>('a' + i % 26));
    if (i >= 26) name += std::to_string(i / 26);
    names.push_back(std::move(name));
  }
  return names;
}

} // namespace

OmlPtr chain2() {
  LatticeData d;
  d.n = 2;
  d.leq = {{0, 1}};
  d.ortho = {1, 0};
  d.labels = {"0", "1"};
  return build_oml(d);
}

OmlPtr powerset(std::size_t n_generators) {
  return free_oml(default_generator_names(n_generators)).carrier;
}

OmlPtr mo(std::size_t n_atom_pairs) {
  if (n_atom_pairs < 1)
    throw Error(ErrorKind::PreconditionFailed, "mo(n) needs n >= 1");
  const std::size_t n = 2 * n_atom_pairs + 2;
  if (n > kDefaultMaxElements)
    throw Error(ErrorKind::SizeBoundExceeded, "mo(n) carrier too large");
  LatticeData d;
  d.n = n;
  d.ortho.resize(n);
  d.labels.resize(n);
  d.labels[0] = "0";
  d.labels[n - 1] = "1";
  d.ortho[0] = eid(n - 1);
  d.ortho[n - 1] = 0;
  for (std::size_t i = 1; i <= n_atom_pairs; ++i) {
    const std::size_t x = i, xp = n_atom_pairs + i;
    d.labels[x] = "x" + std::to_string(i);
    d.labels[xp] = "x" + std::to_string(i) + "p";
    d.ortho[x] = eid(xp);
    d.ortho[xp] = eid(x);
  }
  for (std::size_t a = 1; a < n - 1; ++a) {
    d.leq.emplace_back(0, eid(a));
    d.leq.emplace_back(eid(a), eid(n - 1));
  }
  d.leq.emplace_back(0, eid(n - 1));
  return build_oml(d);
}

OmlPtr benzene() {
  LatticeData d;
  d.n = 6;
  d.labels = {"0", "a", "b", "bp", "ap", "1"};
  d.leq = {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
  d.ortho = {5, 4, 3, 2, 1, 0};
  return build_oml(d);
}

OmlPtr horizontal_sum(const OmlPtr& left, const OmlPtr& right) {
  if (left->size() < 2 || right->size() < 2)
    throw Error(ErrorKind::PreconditionFailed,
                "horizontal sum needs two bounded lattices with 0 != 1");
  const std::size_t nl = left->size() - 2, nr = right->size() - 2;
  const std::size_t n = nl + nr + 2;

  // id layout: 0, left interior (order preserved), right interior, top
  auto from_left = [&](ElemId x) -> ElemId {
    if (x == left->bottom()) return 0;
    if (x == left->top()) return eid(n - 1);
    return x; // interiors are 1..nl in canonical order
  };
  auto from_right = [&](ElemId x) -> ElemId {
    if (x == right->bottom()) return 0;
    if (x == right->top()) return eid(n - 1);
    return eid(nl + x);
  };

  LatticeData d;
  d.n = n;
  d.ortho.resize(n);
  d.labels.resize(n);
  d.labels[0] = "0";
  d.labels[n - 1] = "1";
  d.ortho[0] = eid(n - 1);
  d.ortho[n - 1] = 0;
  for (ElemId x = 1; x + 1u < left->size(); ++x) {
    d.labels[from_left(x)] = "l." + left->label(x);
    d.ortho[from_left(x)] = from_left(left->ortho(x));
  }
  for (ElemId x = 1; x + 1u < right->size(); ++x) {
    d.labels[from_right(x)] = "r." + right->label(x);
    d.ortho[from_right(x)] = from_right(right->ortho(x));
  }
  for (ElemId x = 0; x < left->size(); ++x)
    for (ElemId y = 0; y < left->size(); ++y)
      if (left->leq(x, y)) d.leq.emplace_back(from_left(x), from_left(y));
  for (ElemId x = 0; x < right->size(); ++x)
    for (ElemId y = 0; y < right->size(); ++y)
      if (right->leq(x, y)) d.leq.emplace_back(from_right(x), from_right(y));
  return build_oml(d);
}

OmlPtr product(std::vector<OmlPtr> factors) {
  return biproduct(std::move(factors)).carrier;
}

const std::vector<CatalogEntry>& standard_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> entries;
    entries.push_back({"chain2", chain2()});
    entries.push_back({"pow2", powerset(2)});
    entries.push_back({"pow3", powerset(3)});
    entries.push_back({"pow4", powerset(4)});
    entries.push_back({"mo2", mo(2)});
    entries.push_back({"mo3", mo(3)});
    entries.push_back({"mo4", mo(4)});
    entries.push_back({"prod_mo2_chain2", product({entries[4].oml, entries[0].oml})});
    entries.push_back({"hsum_pow2_pow2", horizontal_sum(entries[1].oml, entries[1].oml)});
    entries.push_back({"hsum_pow3_pow3", horizontal_sum(entries[2].oml, entries[2].oml)});
    entries.push_back({"benzene", benzene()});
    return entries;
  }();
  return catalog;
}

OmlPtr catalog_lookup(std::string_view name) {
  for (const CatalogEntry& entry : standard_catalog())
    if (entry.name == name) return entry.oml;
  throw Error(ErrorKind::UnknownName,
              "no catalog lattice named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const CatalogEntry& entry : standard_catalog()) names.push_back(entry.name);
  return names;
}

} // namespace omlat
