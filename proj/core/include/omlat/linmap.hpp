#ifndef OMLAT_LINMAP_HPP
#define OMLAT_LINMAP_HPP

#include <span>
#include <vector>

#include "omlat/oml.hpp"

namespace omlat {

/// A join-preserving map between two orthomodular lattices, stored as an
/// image table together with its adjoint table. The adjoint is the unique
/// map with f(x) orthogonal to y iff x orthogonal to adjoint(y); it is
/// computed at construction as ortho(big_join{ x : f(x) <= ortho(y) }).
///
/// Morphism equality (operator==) is pointwise table equality between maps
/// whose dom/cod are the *same objects*; tables_equal compares tables only.
class LinMap {
public:
  const OmlPtr& dom() const noexcept { return dom_; }
  const OmlPtr& cod() const noexcept { return cod_; }

  ElemId operator()(ElemId x) const { return table_[dom_->check(x)]; }
  ElemId adjoint_apply(ElemId y) const { return adjoint_[cod_->check(y)]; }

  const std::vector<ElemId>& table() const noexcept { return table_; }
  const std::vector<ElemId>& adjoint_table() const noexcept { return adjoint_; }

  friend bool operator==(const LinMap& f, const LinMap& g) {
    return f.dom_ == g.dom_ && f.cod_ == g.cod_ && f.table_ == g.table_;
  }

private:
  LinMap(OmlPtr dom, OmlPtr cod, std::vector<ElemId> table, std::vector<ElemId> adj)
      : dom_(std::move(dom)), cod_(std::move(cod)),
        table_(std::move(table)), adjoint_(std::move(adj)) {}

  friend LinMap make_linmap(OmlPtr, OmlPtr, std::vector<ElemId>);
  friend LinMap adjoint(const LinMap&);

  OmlPtr dom_;
  OmlPtr cod_;
  std::vector<ElemId> table_;
  std::vector<ElemId> adjoint_;
};

/// Validates join preservation (empty join plus all pairs, which suffices in
/// a finite lattice), computes the adjoint and checks the orthogonality
/// relation on all pairs. Throws NotJoinPreserving with a witness pair,
/// NotOrthomodular if either side lacks the flag.
LinMap make_linmap(OmlPtr dom, OmlPtr cod, std::vector<ElemId> table);

LinMap identity_map(const OmlPtr& lat);

/// The zero morphism X -> Y (constant bottom); equals the composite of the
/// unique maps through the zero object.
LinMap zero_map(OmlPtr dom, OmlPtr cod);

/// The Sasaki projection to a as an endomorphism of lat.
LinMap sasaki_map(const OmlPtr& lat, ElemId a);

/// f* with dom and cod swapped; adjoint(adjoint(f)) == f.
LinMap adjoint(const LinMap& f);

/// g after f. Requires cod(f) and dom(g) to be the same object.
LinMap compose(const LinMap& g, const LinMap& f);

struct MapPredicates {
  bool self_adjoint = false; // dom == cod and table == adjoint table
  bool dagger_mono = false;  // f* . f = id
  bool dagger_epi = false;   // f . f* = id
  bool dagger_iso = false;
  bool zero_epi = false;     // f(1) = 1
  bool zero_mono = false;    // f*(1) = 1
};

MapPredicates predicates(const LinMap& f);

/// Table comparison ignoring object identity (both maps must have matching
/// dom/cod sizes).
bool tables_equal(const LinMap& f, const LinMap& g);

struct EnumOptions {
  std::size_t bound = 8; // maximum |dom|
};

/// All join-preserving maps dom -> cod, duplicate-free, sorted by table.
/// Enumeration walks assignments to the join-irreducibles of dom depth-first,
/// extends by joins, and prunes as soon as a join-preservation constraint is
/// decided. Throws EnumerationBoundExceeded when |dom| > options.bound.
std::vector<LinMap> enumerate_linmaps(const OmlPtr& dom, const OmlPtr& cod,
                                      const EnumOptions& options = {});

} // namespace omlat

#endif
