#ifndef OMLAT_CONSTRUCTIONS_HPP
#define OMLAT_CONSTRUCTIONS_HPP

#include <span>
#include <string>
#include <vector>

#include "omlat/linmap.hpp"

namespace omlat {

/// The one-element lattice. Both initial and terminal; the same object is
/// returned on every call so morphisms through it compose by identity.
OmlPtr zero_object();

/// The unique morphism zero -> X.
LinMap from_zero(const OmlPtr& x);

/// The unique morphism X -> zero.
LinMap to_zero(const OmlPtr& x);

/// Finite dagger biproduct: the cartesian product with componentwise order
/// and orthocomplement. Elements are mixed-radix encoded over the factor
/// sizes (slot 0 varies slowest), which keeps the canonical numbering stable.
struct Biproduct {
  OmlPtr carrier;
  std::vector<OmlPtr> factors;
  std::vector<LinMap> coprojections; // factor j -> carrier, x at slot j, 0 elsewhere
  std::vector<LinMap> projections;   // carrier -> factor j, = adjoint(coprojection)

  ElemId component(ElemId z, std::size_t slot) const;
  ElemId from_components(std::span<const ElemId> xs) const;

private:
  friend Biproduct biproduct(std::vector<OmlPtr>, std::size_t);
  std::vector<std::size_t> strides_;
};

/// Builds the biproduct of the given factors (the empty biproduct is the
/// zero object). Throws SizeBoundExceeded when the carrier would exceed
/// max_elements.
Biproduct biproduct(std::vector<OmlPtr> factors,
                    std::size_t max_elements = kDefaultMaxElements);

/// The unique mediating morphism out of the biproduct for a cocone of legs
/// legs[j] : factor j -> Y: sends a tuple to the join of the leg images.
/// Satisfies copair(legs) . coprojection[j] = legs[j].
LinMap copair(std::span<const LinMap> legs, const Biproduct& bp);

/// Free object on a set of generator names: the powerset Boolean algebra,
/// with elements encoded as bit patterns over the generator order.
struct FreeObject {
  OmlPtr carrier;
  std::vector<std::string> generators;
  std::vector<ElemId> inject; // generator index -> singleton element
};

FreeObject free_oml(std::vector<std::string> generators,
                    std::size_t max_generators = 12);

/// The unique linear extension of a generator assignment g : A -> Y:
/// a subset maps to the join of its generators' images. The adjoint sends y
/// to the set of generators whose image is not orthogonal to y.
LinMap free_extension(const FreeObject& free, std::span<const ElemId> g,
                      const OmlPtr& y);

} // namespace omlat

#endif
