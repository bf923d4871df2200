#include "omlat/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace omlat {

namespace {

ElemId eid(std::size_t v) { return static_cast<ElemId>(v); }

} // namespace

OmlPtr zero_object() {
  static const OmlPtr zero = [] {
    LatticeData d;
    d.n = 1;
    d.ortho = {0};
    d.labels = {"0"};
    return build_oml(d);
  }();
  return zero;
}

LinMap from_zero(const OmlPtr& x) {
  return make_linmap(zero_object(), x, {x->bottom()});
}

LinMap to_zero(const OmlPtr& x) {
  return make_linmap(x, zero_object(), std::vector<ElemId>(x->size(), 0));
}

ElemId Biproduct::component(ElemId z, std::size_t slot) const {
  carrier->check(z);
  return eid(z / strides_[slot] % factors[slot]->size());
}

ElemId Biproduct::from_components(std::span<const ElemId> xs) const {
  std::size_t z = 0;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    factors[j]->check(xs[j]);
    z += xs[j] * strides_[j];
  }
  return eid(z);
}

Biproduct biproduct(std::vector<OmlPtr> factors, std::size_t max_elements) {
  if (factors.empty()) {
    Biproduct empty;
    empty.carrier = zero_object();
    return empty;
  }

  std::size_t n = 1;
  for (const OmlPtr& f : factors) {
    if (!f->is_orthomodular())
      throw Error(ErrorKind::NotOrthomodular, "biproduct factors must be orthomodular");
    if (f->size() == 0 || n > max_elements / f->size())
      throw Error(ErrorKind::SizeBoundExceeded,
                  "biproduct carrier would exceed " + std::to_string(max_elements) +
                      " elements");
    n *= f->size();
  }

  const std::size_t k = factors.size();
  std::vector<std::size_t> strides(k, 1);
  for (std::size_t j = k; j-- > 1;) strides[j - 1] = strides[j] * factors[j]->size();

  auto digits = [&](std::size_t z, std::size_t j) {
    return eid(z / strides[j] % factors[j]->size());
  };

  LatticeData d;
  d.n = n;
  d.labels.resize(n);
  d.ortho.resize(n);
  for (std::size_t z = 0; z < n; ++z) {
    std::string lab = "(";
    std::size_t o = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const ElemId xj = digits(z, j);
      lab += factors[j]->label(xj);
      if (j + 1 < k) lab += ",";
      o += factors[j]->ortho(xj) * strides[j];
    }
    lab += ")";
    d.labels[z] = k == 1 ? factors[0]->label(digits(z, 0)) : lab;
    d.ortho[z] = eid(o);
    // componentwise covers: raise exactly one slot to a cover
    for (std::size_t j = 0; j < k; ++j) {
      const ElemId xj = digits(z, j);
      for (ElemId y = 0; y < factors[j]->size(); ++y)
        if (y != xj && factors[j]->leq(xj, y))
          d.leq.emplace_back(eid(z), eid(z + (y - xj) * strides[j]));
    }
  }

  Biproduct bp;
  bp.carrier = build_oml(d, max_elements);
  bp.factors = std::move(factors);
  bp.strides_ = std::move(strides);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<ElemId> kappa(bp.factors[j]->size());
    for (ElemId x = 0; x < bp.factors[j]->size(); ++x)
      kappa[x] = eid(x * bp.strides_[j]);
    bp.coprojections.push_back(make_linmap(bp.factors[j], bp.carrier, std::move(kappa)));
    bp.projections.push_back(adjoint(bp.coprojections.back()));
  }
  return bp;
}

LinMap copair(std::span<const LinMap> legs, const Biproduct& bp) {
  if (legs.size() != bp.factors.size())
    throw Error(ErrorKind::DomainMismatch, "one leg per biproduct factor expected");
  for (std::size_t j = 0; j < legs.size(); ++j)
    if (legs[j].dom() != bp.factors[j])
      throw Error(ErrorKind::DomainMismatch,
                  "leg " + std::to_string(j) + " is not defined on factor " +
                      std::to_string(j));
  if (legs.empty())
    throw Error(ErrorKind::DomainMismatch, "copair needs at least one leg");
  const OmlPtr& y = legs[0].cod();
  for (const LinMap& leg : legs)
    if (leg.cod() != y)
      throw Error(ErrorKind::DomainMismatch, "legs must share one codomain");

  std::vector<ElemId> table(bp.carrier->size());
  for (ElemId z = 0; z < bp.carrier->size(); ++z) {
    ElemId acc = y->bottom();
    for (std::size_t j = 0; j < legs.size(); ++j)
      acc = y->join(acc, legs[j](bp.component(z, j)));
    table[z] = acc;
  }
  return make_linmap(bp.carrier, y, std::move(table));
}

FreeObject free_oml(std::vector<std::string> generators, std::size_t max_generators) {
  const std::size_t k = generators.size();
  if (k > max_generators)
    throw Error(ErrorKind::SizeBoundExceeded,
                std::to_string(k) + " generators exceeds the bound of " +
                    std::to_string(max_generators));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (generators[i] == generators[j])
        throw Error(ErrorKind::PreconditionFailed,
                    "duplicate generator name: " + generators[i]);

  const std::size_t n = std::size_t{1} << k;
  LatticeData d;
  d.n = n;
  d.ortho.resize(n);
  d.labels.resize(n);
  const std::size_t full = n - 1;
  for (std::size_t s = 0; s < n; ++s) {
    d.ortho[s] = eid(full & ~s);
    std::string lab = "{";
    bool first = true;
    for (std::size_t i = 0; i < k; ++i)
      if (s >> i & 1) {
        if (!first) lab += ",";
        lab += generators[i];
        first = false;
      }
    lab += "}";
    d.labels[s] = lab;
    for (std::size_t i = 0; i < k; ++i)
      if (!(s >> i & 1)) d.leq.emplace_back(eid(s), eid(s | std::size_t{1} << i));
  }

  FreeObject free;
  free.carrier = build_oml(d);
  free.generators = std::move(generators);
  for (std::size_t i = 0; i < k; ++i) free.inject.push_back(eid(std::size_t{1} << i));
  return free;
}

LinMap free_extension(const FreeObject& free, std::span<const ElemId> g,
                      const OmlPtr& y) {
  if (g.size() != free.generators.size())
    throw Error(ErrorKind::PreconditionFailed,
                "assignment must cover every generator exactly once");
  std::vector<ElemId> table(free.carrier->size());
  for (std::size_t s = 0; s < free.carrier->size(); ++s) {
    ElemId acc = y->bottom();
    for (std::size_t i = 0; i < g.size(); ++i)
      if (s >> i & 1) acc = y->join(acc, g[i]);
    table[s] = acc;
  }
  return make_linmap(free.carrier, y, std::move(table));
}

} // namespace omlat
