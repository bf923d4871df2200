#ifndef OMLAT_GALOIS_HPP
#define OMLAT_GALOIS_HPP

#include <vector>

#include "omlat/linmap.hpp"

namespace omlat {

/// A morphism in the Galois-pair presentation: two antitone maps
/// lower : X -> Y and upper : Y -> X with x <= upper(y) iff y <= lower(x).
/// Antitone maps are stored on the plain carriers; antitonicity is an
/// invariant checked at construction.
class GaloisMorphism {
public:
  const OmlPtr& dom() const noexcept { return dom_; }
  const OmlPtr& cod() const noexcept { return cod_; }
  ElemId lower(ElemId x) const { return lower_[dom_->check(x)]; }
  ElemId upper(ElemId y) const { return upper_[cod_->check(y)]; }
  const std::vector<ElemId>& lower_table() const noexcept { return lower_; }
  const std::vector<ElemId>& upper_table() const noexcept { return upper_; }

  friend bool operator==(const GaloisMorphism& f, const GaloisMorphism& g) {
    return f.dom_ == g.dom_ && f.cod_ == g.cod_ && f.lower_ == g.lower_ &&
           f.upper_ == g.upper_;
  }

private:
  GaloisMorphism(OmlPtr dom, OmlPtr cod, std::vector<ElemId> lower,
                 std::vector<ElemId> upper)
      : dom_(std::move(dom)), cod_(std::move(cod)),
        lower_(std::move(lower)), upper_(std::move(upper)) {}

  friend GaloisMorphism make_galois(OmlPtr, OmlPtr, std::vector<ElemId>,
                                    std::vector<ElemId>);
  friend GaloisMorphism dagger_galois(const GaloisMorphism&);

  OmlPtr dom_;
  OmlPtr cod_;
  std::vector<ElemId> lower_;
  std::vector<ElemId> upper_;
};

/// Validates antitonicity of both tables (NotAntitone with a witness pair)
/// and the Galois condition on all pairs (GaloisConditionFails).
GaloisMorphism make_galois(OmlPtr dom, OmlPtr cod, std::vector<ElemId> lower,
                           std::vector<ElemId> upper);

/// Second construction path: the lower table determines the upper one via
/// upper(y) = big_join{ x : y <= lower(x) }.
GaloisMorphism galois_from_lower(const OmlPtr& dom, const OmlPtr& cod,
                                 std::vector<ElemId> lower);

/// The identity in the Galois presentation: the pair (ortho, ortho).
GaloisMorphism galois_identity(const OmlPtr& lat);

/// From a linear map: (ortho . f, ortho . f*).
GaloisMorphism lambda(const LinMap& f);

/// Back to a linear map: x -> ortho(lower(x)). Inverse to lambda.
LinMap gamma(const GaloisMorphism& gm);

/// Twisted composition: (g . f).lower = g.lower . ortho . f.lower and dually.
GaloisMorphism compose_galois(const GaloisMorphism& g, const GaloisMorphism& f);

/// The dagger: swap the two tables (and the endpoints).
GaloisMorphism dagger_galois(const GaloisMorphism& gm);

bool galois_tables_equal(const GaloisMorphism& f, const GaloisMorphism& g);

} // namespace omlat

#endif
