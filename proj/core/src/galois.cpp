#include "omlat/galois.hpp"

namespace omlat {

namespace {

void check_antitone(const Oml& dom, const Oml& cod, const std::vector<ElemId>& table,
                    const char* which) {
  for (ElemId x = 0; x < dom.size(); ++x)
    for (ElemId y = 0; y < dom.size(); ++y)
      if (dom.leq(x, y) && !cod.leq(table[y], table[x]))
        throw Error(ErrorKind::NotAntitone,
                    std::string(which) + " table is not antitone at (" + dom.label(x) +
                        ", " + dom.label(y) + ")",
                    {x, y});
}

} // namespace

GaloisMorphism make_galois(OmlPtr dom, OmlPtr cod, std::vector<ElemId> lower,
                           std::vector<ElemId> upper) {
  if (lower.size() != dom->size() || upper.size() != cod->size())
    throw Error(ErrorKind::PreconditionFailed, "table sizes do not match the lattices");
  for (ElemId v : lower) cod->check(v);
  for (ElemId v : upper) dom->check(v);
  check_antitone(*dom, *cod, lower, "lower");
  check_antitone(*cod, *dom, upper, "upper");
  for (ElemId x = 0; x < dom->size(); ++x)
    for (ElemId y = 0; y < cod->size(); ++y)
      if (dom->leq(x, upper[y]) != cod->leq(y, lower[x]))
        throw Error(ErrorKind::GaloisConditionFails,
                    "x <= upper(y) and y <= lower(x) disagree at (" + dom->label(x) +
                        ", " + cod->label(y) + ")",
                    {x, y});
  return GaloisMorphism(std::move(dom), std::move(cod), std::move(lower),
                        std::move(upper));
}

GaloisMorphism galois_from_lower(const OmlPtr& dom, const OmlPtr& cod,
                                 std::vector<ElemId> lower) {
  if (lower.size() != dom->size())
    throw Error(ErrorKind::PreconditionFailed, "lower table size does not match");
  std::vector<ElemId> upper(cod->size());
  for (ElemId y = 0; y < cod->size(); ++y) {
    ElemId acc = dom->bottom();
    for (ElemId x = 0; x < dom->size(); ++x)
      if (cod->leq(y, lower[x])) acc = dom->join(acc, x);
    upper[y] = acc;
  }
  return make_galois(dom, cod, std::move(lower), std::move(upper));
}

GaloisMorphism galois_identity(const OmlPtr& lat) {
  std::vector<ElemId> table(lat->size());
  for (ElemId x = 0; x < lat->size(); ++x) table[x] = lat->ortho(x);
  return make_galois(lat, lat, table, table);
}

GaloisMorphism lambda(const LinMap& f) {
  std::vector<ElemId> lower(f.dom()->size());
  for (ElemId x = 0; x < f.dom()->size(); ++x) lower[x] = f.cod()->ortho(f(x));
  std::vector<ElemId> upper(f.cod()->size());
  for (ElemId y = 0; y < f.cod()->size(); ++y)
    upper[y] = f.dom()->ortho(f.adjoint_apply(y));
  return make_galois(f.dom(), f.cod(), std::move(lower), std::move(upper));
}

LinMap gamma(const GaloisMorphism& gm) {
  std::vector<ElemId> table(gm.dom()->size());
  for (ElemId x = 0; x < gm.dom()->size(); ++x)
    table[x] = gm.cod()->ortho(gm.lower(x));
  return make_linmap(gm.dom(), gm.cod(), std::move(table));
}

GaloisMorphism compose_galois(const GaloisMorphism& g, const GaloisMorphism& f) {
  if (f.cod() != g.dom())
    throw Error(ErrorKind::DomainMismatch,
                "cod of the first Galois morphism is not the dom of the second");
  std::vector<ElemId> lower(f.dom()->size());
  for (ElemId x = 0; x < f.dom()->size(); ++x)
    lower[x] = g.lower(f.cod()->ortho(f.lower(x)));
  std::vector<ElemId> upper(g.cod()->size());
  for (ElemId z = 0; z < g.cod()->size(); ++z)
    upper[z] = f.upper(g.dom()->ortho(g.upper(z)));
  return make_galois(f.dom(), g.cod(), std::move(lower), std::move(upper));
}

GaloisMorphism dagger_galois(const GaloisMorphism& gm) {
  return GaloisMorphism(gm.cod(), gm.dom(), gm.upper_table(), gm.lower_table());
}

bool galois_tables_equal(const GaloisMorphism& f, const GaloisMorphism& g) {
  return f.lower_table() == g.lower_table() && f.upper_table() == g.upper_table();
}

} // namespace omlat
