#include "omlat/dagger_kernel.hpp"

#include <algorithm>

namespace omlat {

namespace {

ElemId eid(std::size_t v) { return static_cast<ElemId>(v); }

// Position of a parent element inside a downset's embed table. The element
// must be a member.
ElemId position_in(const Downset& d, ElemId parent_elem) {
  auto it = std::lower_bound(d.embed.begin(), d.embed.end(), parent_elem);
  if (it == d.embed.end() || *it != parent_elem)
    throw Error(ErrorKind::PreconditionFailed,
                "element is not a member of the downset", {parent_elem});
  return eid(it - d.embed.begin());
}

LinMap embedding_of(const OmlPtr& lat, const Downset& d) {
  std::vector<ElemId> table(d.embed.begin(), d.embed.end());
  return make_linmap(d.oml, lat, std::move(table));
}

} // namespace

LinMap downset_embedding(const OmlPtr& lat, ElemId a) {
  return embedding_of(lat, downset(*lat, a));
}

KernelData kernel(const LinMap& f) {
  const Oml& X = *f.dom();
  const ElemId k_elem = X.ortho(f.adjoint_apply(f.cod()->top()));
  Downset carrier = downset(X, k_elem);
  LinMap embedding = embedding_of(f.dom(), carrier);
  return KernelData{k_elem, std::move(carrier), std::move(embedding)};
}

LinMap cokernel(const LinMap& f) {
  return adjoint(kernel(adjoint(f)).embedding);
}

Factorization factorize(const LinMap& f) {
  const OmlPtr& X = f.dom();
  const OmlPtr& Y = f.cod();
  const ElemId f_top = f(X->top());
  const ElemId fstar_top = f.adjoint_apply(Y->top());

  Downset image_down = downset(*Y, f_top);
  LinMap image_emb = embedding_of(Y, image_down);

  // e = f corestricted to the image downset = adjoint(image_emb) . f
  std::vector<ElemId> e_table(X->size());
  for (ElemId x = 0; x < X->size(); ++x) e_table[x] = position_in(image_down, f(x));
  LinMap e = make_linmap(X, image_down.oml, std::move(e_table));

  LinMap coim_emb = embedding_of(X, downset(*X, fstar_top));
  LinMap coimage = adjoint(coim_emb);
  LinMap middle = compose(e, coim_emb);

  return Factorization{std::move(coimage), std::move(middle), std::move(image_emb),
                       std::move(e)};
}

WeakKernelReport verify_dagger_kernel(const LinMap& f, const KernelData& kd,
                                      std::span<const LinMap> candidates) {
  WeakKernelReport report;
  const LinMap& k = kd.embedding;

  for (ElemId u = 0; u < k.dom()->size(); ++u)
    if (k.adjoint_apply(k(u)) != u) {
      report.passed = false;
      report.detail = "adjoint(k) . k is not the identity at " + k.dom()->label(u);
      return report;
    }

  for (const LinMap& m : candidates) {
    if (m.cod() != f.dom()) continue;
    ++report.candidates_checked;
    bool zero_composite = true;
    for (ElemId z = 0; z < m.dom()->size(); ++z)
      if (f(m(z)) != f.cod()->bottom()) {
        zero_composite = false;
        break;
      }
    if (!zero_composite) continue;
    ++report.zero_composites;
    for (ElemId z = 0; z < m.dom()->size(); ++z)
      if (k(k.adjoint_apply(m(z))) != m(z)) {
        report.passed = false;
        report.detail = "k . k* . m differs from m at " + m.dom()->label(z) +
                        " for a candidate from a " +
                        std::to_string(m.dom()->size()) + "-element object";
        return report;
      }
  }
  return report;
}

WeakKernelReport verify_dagger_kernel(const LinMap& f, const KernelData& kd,
                                      std::span<const OmlPtr> probe_objects,
                                      std::size_t enum_bound) {
  std::vector<LinMap> candidates;
  for (const OmlPtr& probe : probe_objects) {
    auto maps = enumerate_linmaps(probe, f.dom(), EnumOptions{enum_bound});
    candidates.insert(candidates.end(), std::make_move_iterator(maps.begin()),
                      std::make_move_iterator(maps.end()));
  }
  return verify_dagger_kernel(f, kd, candidates);
}

SasakiCharReport sasaki_characterization(const LinMap& f) {
  if (f.dom() != f.cod())
    throw Error(ErrorKind::PreconditionFailed,
                "Sasaki characterization applies to endomaps only");
  const Oml& X = *f.dom();
  const ElemId a = f(X.top());
  const bool self_adjoint = f.table() == f.adjoint_table();

  SasakiCharReport report;

  // (i) table equality with the Sasaki projection to a
  report.conditions[0] = true;
  for (ElemId y = 0; y < X.size(); ++y)
    if (f(y) != sasaki(X, a, y)) {
      report.conditions[0] = false;
      break;
    }

  // (ii) self-adjoint, idempotent, range = downset of a (range as a set)
  bool idempotent = true;
  for (ElemId y = 0; y < X.size(); ++y)
    if (f(f(y)) != f(y)) {
      idempotent = false;
      break;
    }
  Bits range(X.size());
  for (ElemId y = 0; y < X.size(); ++y) range.set(f(y));
  report.conditions[1] = self_adjoint && idempotent && range == X.below(a);

  // (iii) self-adjoint, f(a) = a, and x <= a implies f(x) <= x
  bool shrinks_below = true;
  bool fixes_below = true;
  for (std::size_t x = X.below(a).find_first(); x != Bits::npos;
       x = X.below(a).find_next(x)) {
    if (!X.leq(f(eid(x)), eid(x))) shrinks_below = false;
    if (f(eid(x)) != eid(x)) fixes_below = false;
  }
  report.conditions[2] = self_adjoint && f(a) == a && shrinks_below;

  // (iv) self-adjoint and x <= a implies f(x) = x
  report.conditions[3] = self_adjoint && fixes_below;

  if (report.conditions[0] != report.conditions[1] ||
      report.conditions[1] != report.conditions[2] ||
      report.conditions[2] != report.conditions[3])
    throw Error(ErrorKind::EquivalenceMismatch,
                "the four Sasaki-map characterizations disagree on an endomap of a " +
                    std::to_string(X.size()) + "-element lattice");
  report.is_sasaki = report.conditions[0];
  return report;
}

Corestriction restrict_corestrict(const LinMap& f, ElemId y) {
  const OmlPtr& X = f.dom();
  const OmlPtr& Y = f.cod();
  Y->check(y);
  if (!Y->leq(f(X->top()), y))
    throw Error(ErrorKind::PreconditionFailed,
                "f(1) = " + Y->label(f(X->top())) + " is not below " + Y->label(y),
                {f(X->top()), y});

  Downset dy = downset(*Y, y);
  std::vector<ElemId> co_table(X->size());
  for (ElemId x = 0; x < X->size(); ++x) co_table[x] = position_in(dy, f(x));
  LinMap corestriction = make_linmap(X, dy.oml, std::move(co_table));

  std::vector<ElemId> ra_table(dy.embed.size());
  for (std::size_t u = 0; u < dy.embed.size(); ++u)
    ra_table[u] = f.adjoint_apply(dy.embed[u]);
  LinMap restricted_adjoint = make_linmap(dy.oml, X, std::move(ra_table));

  return Corestriction{std::move(corestriction), std::move(restricted_adjoint)};
}

} // namespace omlat
