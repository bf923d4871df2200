#ifndef OMLAT_DAGGER_KERNEL_HPP
#define OMLAT_DAGGER_KERNEL_HPP

#include <optional>
#include <span>
#include <string>

#include "omlat/linmap.hpp"

namespace omlat {

/// The embedding of a principal downset, u -> u, as a morphism
/// downset(lat, a) -> lat. It is a dagger mono; its adjoint acts as the
/// Sasaki projection to a, read inside the downset, and
/// embedding . adjoint(embedding) equals sasaki_map(lat, a).
LinMap downset_embedding(const OmlPtr& lat, ElemId a);

struct KernelData {
  ElemId k_elem = 0;   // ortho(f*(1)); the kernel is its downset
  Downset carrier;
  LinMap embedding;    // carrier.oml -> dom(f)
};

/// Dagger kernel of f: the embedding of the downset of ortho(f*(1)).
/// Satisfies f . embedding = 0 and adjoint(embedding) . embedding = id.
KernelData kernel(const LinMap& f);

/// Cokernel: adjoint(kernel(adjoint(f)).embedding), i.e. the Sasaki
/// projection to ortho(f(1)) corestricted to its downset.
LinMap cokernel(const LinMap& f);

/// Zero-epi / zero-mono-middle / dagger-mono decomposition of f through the
/// downsets of f*(1) and f(1):
///
///   f = image_emb . middle . coimage       (and e = middle . coimage)
///
/// coimage is a dagger epi, middle is zero-epi and zero-mono, image_emb is a
/// dagger mono, e is zero-epi with e(1) the top of the image downset.
struct Factorization {
  LinMap coimage;     // X -> downset of f*(1)
  LinMap middle;      // downset of f*(1) -> downset of f(1)
  LinMap image_emb;   // downset of f(1) -> Y
  LinMap e;           // X -> downset of f(1), = middle . coimage
};

Factorization factorize(const LinMap& f);

struct WeakKernelReport {
  bool passed = true;
  std::size_t candidates_checked = 0;
  std::size_t zero_composites = 0;
  std::string detail; // failure description, empty when passed
};

/// Checks the weak-dagger-kernel property of kd against a population of
/// candidate morphisms m with cod(m) = dom(f): whenever f . m = 0, the
/// mediating identity embedding . adjoint(embedding) . m = m must hold,
/// and adjoint(embedding) . embedding = id.
WeakKernelReport verify_dagger_kernel(const LinMap& f, const KernelData& kd,
                                      std::span<const LinMap> candidates);

/// Convenience overload: enumerates candidates from each probe object.
WeakKernelReport verify_dagger_kernel(const LinMap& f, const KernelData& kd,
                                      std::span<const OmlPtr> probe_objects,
                                      std::size_t enum_bound = 8);

struct SasakiCharReport {
  bool is_sasaki = false;
  // (i) f equals the Sasaki projection to f(1)
  // (ii) self-adjoint, idempotent, range = downset of f(1)
  // (iii) self-adjoint, f(f(1)) = f(1), and x <= f(1) implies f(x) <= x
  // (iv) self-adjoint and x <= f(1) implies f(x) = x
  std::array<bool, 4> conditions{};
};

/// Evaluates the four equivalent characterizations of Sasaki projections on
/// an endomap. They must agree; disagreement throws EquivalenceMismatch.
SasakiCharReport sasaki_characterization(const LinMap& f);

struct Corestriction {
  LinMap corestriction;       // X -> downset of y
  LinMap restricted_adjoint;  // downset of y -> X, u -> f*(u)
};

/// Corestriction of f to the downset of y (requires f(1) <= y, else
/// PreconditionFailed) together with the restriction of f* to that downset.
/// adjoint(corestriction) equals restricted_adjoint as tables.
Corestriction restrict_corestrict(const LinMap& f, ElemId y);

} // namespace omlat

#endif
