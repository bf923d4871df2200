#include "omlat/linmap.hpp"

#include <algorithm>
#include <cassert>

namespace omlat {

namespace {

ElemId eid(std::size_t v) { return static_cast<ElemId>(v); }

void require_orthomodular(const Oml& lat, const char* role) {
  if (!lat.is_orthomodular())
    throw Error(ErrorKind::NotOrthomodular,
                std::string("linear maps need orthomodular lattices; ") + role +
                    " is not orthomodular");
}

std::vector<ElemId> adjoint_table_of(const Oml& dom, const Oml& cod,
                                     const std::vector<ElemId>& table) {
  // f*(y) = ortho( join{ x : f(x) <= ortho(y) } ), the ortho-conjugate of the
  // right order-adjoint. Join preservation guarantees it exists.
  std::vector<ElemId> adj(cod.size());
  for (ElemId y = 0; y < cod.size(); ++y) {
    const ElemId bound = cod.ortho(y);
    ElemId acc = dom.bottom();
    for (ElemId x = 0; x < dom.size(); ++x)
      if (cod.leq(table[x], bound)) acc = dom.join(acc, x);
    adj[y] = dom.ortho(acc);
  }
  return adj;
}

} // namespace

LinMap make_linmap(OmlPtr dom, OmlPtr cod, std::vector<ElemId> table) {
  if (!dom || !cod)
    throw Error(ErrorKind::PreconditionFailed, "null lattice reference");
  require_orthomodular(*dom, "the domain");
  require_orthomodular(*cod, "the codomain");
  if (table.size() != dom->size())
    throw Error(ErrorKind::PreconditionFailed,
                "table has " + std::to_string(table.size()) + " entries, expected " +
                    std::to_string(dom->size()));
  for (ElemId v : table) cod->check(v);

  if (table[0] != cod->bottom())
    throw Error(ErrorKind::NotJoinPreserving,
                "empty join not preserved: f(0) = " + cod->label(table[0]),
                {0, 0});
  const std::size_t n = dom->size();
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = x + 1; y < n; ++y) {
      const ElemId lhs = table[dom->join(x, y)];
      const ElemId rhs = cod->join(table[x], table[y]);
      if (lhs != rhs)
        throw Error(ErrorKind::NotJoinPreserving,
                    "f(" + dom->label(x) + " v " + dom->label(y) + ") = " +
                        cod->label(lhs) + " but f(" + dom->label(x) + ") v f(" +
                        dom->label(y) + ") = " + cod->label(rhs),
                    {x, y});
    }

  std::vector<ElemId> adj = adjoint_table_of(*dom, *cod, table);
  // The defining orthogonality relation, on all pairs.
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < cod->size(); ++y)
      if (cod->leq(table[x], cod->ortho(y)) != dom->leq(x, dom->ortho(adj[y])))
        throw Error(ErrorKind::EquivalenceMismatch,
                    "computed adjoint violates the orthogonality relation at (" +
                        dom->label(x) + ", " + cod->label(y) + ")",
                    {x, y});
  return LinMap(std::move(dom), std::move(cod), std::move(table), std::move(adj));
}

LinMap identity_map(const OmlPtr& lat) {
  std::vector<ElemId> table(lat->size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = eid(x);
  return make_linmap(lat, lat, std::move(table));
}

LinMap zero_map(OmlPtr dom, OmlPtr cod) {
  std::vector<ElemId> table(dom->size(), cod->bottom());
  return make_linmap(std::move(dom), std::move(cod), std::move(table));
}

LinMap sasaki_map(const OmlPtr& lat, ElemId a) {
  std::vector<ElemId> table(lat->size());
  for (ElemId y = 0; y < lat->size(); ++y) table[y] = sasaki(*lat, a, y);
  return make_linmap(lat, lat, std::move(table));
}

LinMap adjoint(const LinMap& f) {
  // Adjointness is symmetric, so the pair (adjoint table, table) is already a
  // validated morphism in the other direction.
  return LinMap(f.cod(), f.dom(), f.adjoint_table(), f.table());
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (f.cod() != g.dom())
    throw Error(ErrorKind::DomainMismatch,
                "cod of the first map is not the dom of the second");
  std::vector<ElemId> table(f.dom()->size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = g(f(eid(x)));
  return make_linmap(f.dom(), g.cod(), std::move(table));
}

MapPredicates predicates(const LinMap& f) {
  MapPredicates p;
  p.self_adjoint = f.dom() == f.cod() && f.table() == f.adjoint_table();
  p.dagger_mono = true;
  for (ElemId x = 0; x < f.dom()->size(); ++x)
    if (f.adjoint_apply(f(x)) != x) {
      p.dagger_mono = false;
      break;
    }
  p.dagger_epi = true;
  for (ElemId y = 0; y < f.cod()->size(); ++y)
    if (f(f.adjoint_apply(y)) != y) {
      p.dagger_epi = false;
      break;
    }
  p.dagger_iso = p.dagger_mono && p.dagger_epi;
  p.zero_epi = f(f.dom()->top()) == f.cod()->top();
  p.zero_mono = f.adjoint_apply(f.cod()->top()) == f.dom()->top();
  return p;
}

bool tables_equal(const LinMap& f, const LinMap& g) {
  return f.dom()->size() == g.dom()->size() && f.cod()->size() == g.cod()->size() &&
         f.table() == g.table();
}

namespace {

struct EnumState {
  const Oml* dom;
  const Oml* cod;
  std::vector<ElemId> jis;
  // upsets[t]: elements above ji[t] in dom, as plain id lists
  std::vector<std::vector<ElemId>> upsets;
  // constraints[t]: incomparable pairs (x, y) whose join-preservation check
  // becomes decidable once ji[0..t] are assigned
  std::vector<std::vector<std::pair<ElemId, ElemId>>> constraints;
  std::vector<std::vector<ElemId>> out;
};

void enum_dfs(EnumState& st, std::size_t t, std::vector<ElemId>& image) {
  if (t == st.jis.size()) {
    st.out.push_back(image);
    return;
  }
  std::vector<ElemId> saved;
  saved.reserve(st.upsets[t].size());
  for (ElemId v = 0; v < st.cod->size(); ++v) {
    saved.clear();
    for (ElemId z : st.upsets[t]) {
      saved.push_back(image[z]);
      image[z] = st.cod->join(image[z], v);
    }
    bool ok = true;
    for (auto [x, y] : st.constraints[t])
      if (image[st.dom->join(x, y)] != st.cod->join(image[x], image[y])) {
        ok = false;
        break;
      }
    if (ok) enum_dfs(st, t + 1, image);
    for (std::size_t i = 0; i < st.upsets[t].size(); ++i)
      image[st.upsets[t][i]] = saved[i];
  }
}

} // namespace

std::vector<LinMap> enumerate_linmaps(const OmlPtr& dom, const OmlPtr& cod,
                                      const EnumOptions& options) {
  if (dom->size() > options.bound)
    throw Error(ErrorKind::EnumerationBoundExceeded,
                "domain has " + std::to_string(dom->size()) +
                    " elements, enumeration bound is " + std::to_string(options.bound));
  require_orthomodular(*dom, "the domain");
  require_orthomodular(*cod, "the codomain");

  EnumState st;
  st.dom = dom.get();
  st.cod = cod.get();
  st.jis = dom->join_irreducibles();
  const std::size_t k = st.jis.size();

  // Position of the largest join-irreducible below each element; -1 for the
  // bottom. An element's image is final once that position has been assigned.
  std::vector<int> last_ji(dom->size(), -1);
  for (std::size_t t = 0; t < k; ++t)
    for (ElemId x = 0; x < dom->size(); ++x)
      if (dom->leq(st.jis[t], x)) last_ji[x] = static_cast<int>(t);

  st.upsets.resize(k);
  for (std::size_t t = 0; t < k; ++t)
    for (ElemId x = 0; x < dom->size(); ++x)
      if (dom->leq(st.jis[t], x)) st.upsets[t].push_back(x);

  st.constraints.resize(k);
  for (ElemId x = 0; x < dom->size(); ++x)
    for (ElemId y = static_cast<ElemId>(x + 1); y < dom->size(); ++y) {
      if (dom->leq(x, y) || dom->leq(y, x)) continue; // monotone by construction
      const int t = last_ji[dom->join(x, y)];
      assert(t >= 0);
      st.constraints[static_cast<std::size_t>(t)].emplace_back(x, y);
    }

  std::vector<ElemId> image(dom->size(), cod->bottom());
  if (k == 0) {
    st.out.push_back(image);
  } else {
    enum_dfs(st, 0, image);
  }

  std::sort(st.out.begin(), st.out.end());
  st.out.erase(std::unique(st.out.begin(), st.out.end()), st.out.end());

  std::vector<LinMap> maps;
  maps.reserve(st.out.size());
  for (auto& table : st.out) maps.push_back(make_linmap(dom, cod, std::move(table)));
  return maps;
}

} // namespace omlat
