#include "omlat/oml.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>

namespace omlat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::MissingMeetOrJoin: return "MissingMeetOrJoin";
    case ErrorKind::OrthoNotInvolutive: return "OrthoNotInvolutive";
    case ErrorKind::OrthoNotAntitone: return "OrthoNotAntitone";
    case ErrorKind::ComplementLawFails: return "ComplementLawFails";
    case ErrorKind::NotOrthomodular: return "NotOrthomodular";
    case ErrorKind::IdOutOfRange: return "IdOutOfRange";
    case ErrorKind::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorKind::NotJoinPreserving: return "NotJoinPreserving";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::EquivalenceMismatch: return "EquivalenceMismatch";
    case ErrorKind::NotAntitone: return "NotAntitone";
    case ErrorKind::GaloisConditionFails: return "GaloisConditionFails";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Error";
}

namespace {

ElemId eid(std::size_t v) { return static_cast<ElemId>(v); }

std::string describe(const std::vector<std::string>& labels, std::size_t x) {
  if (x < labels.size() && !labels[x].empty())
    return labels[x] + " (#" + std::to_string(x) + ")";
  return "#" + std::to_string(x);
}

// Greatest element of `set`, with a dominance check: the result must be above
// every member, otherwise the pair has lower bounds but no greatest one.
std::optional<ElemId> greatest_of(const Bits& set, const std::vector<Bits>& dn) {
  if (set.none()) return std::nullopt;
  std::size_t cand = Bits::npos, i = set.find_first();
  while (i != Bits::npos) {
    cand = i;
    i = set.find_next(i);
  }
  if (!set.is_subset_of(dn[cand])) return std::nullopt;
  return eid(cand);
}

std::optional<ElemId> least_of(const Bits& set, const std::vector<Bits>& up) {
  if (set.none()) return std::nullopt;
  std::size_t cand = set.find_first();
  if (!set.is_subset_of(up[cand])) return std::nullopt;
  return eid(cand);
}

} // namespace

OmlPtr build_oml(const LatticeData& data, std::size_t max_elements) {
  const std::size_t n = data.n;
  if (n == 0)
    throw Error(ErrorKind::PreconditionFailed, "lattice needs at least one element");
  if (n > max_elements || n > 0xFFFF)
    throw Error(ErrorKind::SizeBoundExceeded,
                std::to_string(n) + " elements exceeds the bound of " +
                    std::to_string(std::min<std::size_t>(max_elements, 0xFFFF)));
  if (data.ortho.size() != n)
    throw Error(ErrorKind::PreconditionFailed,
                "ortho table has " + std::to_string(data.ortho.size()) +
                    " entries, expected " + std::to_string(n));
  if (!data.labels.empty() && data.labels.size() != n)
    throw Error(ErrorKind::PreconditionFailed, "label count does not match element count");

  const auto& labels = data.labels;

  // Reflexive-transitive closure of the generating pairs.
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) up[x].set(x);
  for (auto [a, b] : data.leq) {
    if (a >= n || b >= n)
      throw Error(ErrorKind::IdOutOfRange, "order pair references element out of range",
                  {a, b});
    up[a].set(b);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (up[x].test(k)) up[x] |= up[k];

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (up[x].test(y) && up[y].test(x))
        throw Error(ErrorKind::NotAPoset,
                    "antisymmetry fails: " + describe(labels, x) + " <= " +
                        describe(labels, y) + " and conversely",
                    {eid(x), eid(y)});

  // Canonical topological renumbering: repeatedly emit the smallest element
  // whose strict predecessors are all emitted. Stable, so inputs that are
  // already topologically numbered keep their numbering.
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = up[x].find_first(); y != Bits::npos; y = up[x].find_next(y))
      if (y != x) ++indeg[y];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(x);
  std::vector<ElemId> new_id(n);
  std::vector<std::size_t> old_id;
  old_id.reserve(n);
  while (!ready.empty()) {
    std::size_t x = ready.top();
    ready.pop();
    new_id[x] = eid(old_id.size());
    old_id.push_back(x);
    for (std::size_t y = up[x].find_first(); y != Bits::npos; y = up[x].find_next(y))
      if (y != x && --indeg[y] == 0) ready.push(y);
  }
  assert(old_id.size() == n);

  auto lat = std::shared_ptr<Oml>(new Oml());
  lat->n_ = n;
  lat->up_.assign(n, Bits(n));
  lat->dn_.assign(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = up[x].find_first(); y != Bits::npos; y = up[x].find_next(y)) {
      lat->up_[new_id[x]].set(new_id[y]);
      lat->dn_[new_id[y]].set(new_id[x]);
    }
  }

  lat->labels_.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    lat->labels_[new_id[x]] = labels.empty() ? "e" + std::to_string(new_id[x]) : labels[x];

  // Meet and join tables, checking existence pair by pair.
  lat->meet_.assign(n * n, 0);
  lat->join_.assign(n * n, 0);
  Bits scratch(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      scratch = lat->dn_[x];
      scratch &= lat->dn_[y];
      auto m = greatest_of(scratch, lat->dn_);
      if (!m)
        throw Error(ErrorKind::MissingMeetOrJoin,
                    "no meet for " + describe(lat->labels_, x) + ", " +
                        describe(lat->labels_, y),
                    {eid(x), eid(y)});
      scratch = lat->up_[x];
      scratch &= lat->up_[y];
      auto j = least_of(scratch, lat->up_);
      if (!j)
        throw Error(ErrorKind::MissingMeetOrJoin,
                    "no join for " + describe(lat->labels_, x) + ", " +
                        describe(lat->labels_, y),
                    {eid(x), eid(y)});
      lat->meet_[x * n + y] = lat->meet_[y * n + x] = *m;
      lat->join_[x * n + y] = lat->join_[y * n + x] = *j;
    }
  }
  assert(lat->up_[0].count() == n);      // bottom ended up at id 0
  assert(lat->dn_[n - 1].count() == n);  // top ended up at id n-1

  // Orthocomplement: involutive, antitone, complement law.
  lat->ortho_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    ElemId t = data.ortho[x];
    if (t >= n)
      throw Error(ErrorKind::IdOutOfRange, "ortho table references element out of range",
                  {eid(x), t});
    lat->ortho_[new_id[x]] = new_id[t];
  }
  for (std::size_t x = 0; x < n; ++x) {
    ElemId xo = lat->ortho_[x];
    if (lat->ortho_[xo] != x)
      throw Error(ErrorKind::OrthoNotInvolutive,
                  "ortho(ortho(" + describe(lat->labels_, x) + ")) = " +
                      describe(lat->labels_, lat->ortho_[xo]),
                  {eid(x)});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = lat->up_[x].find_first(); y != Bits::npos;
         y = lat->up_[x].find_next(y)) {
      if (!lat->up_[lat->ortho_[y]].test(lat->ortho_[x]))
        throw Error(ErrorKind::OrthoNotAntitone,
                    describe(lat->labels_, x) + " <= " + describe(lat->labels_, y) +
                        " but ortho images are not reversed",
                    {eid(x), eid(y)});
    }
  for (std::size_t x = 0; x < n; ++x) {
    if (lat->meet_[x * n + lat->ortho_[x]] != 0)
      throw Error(ErrorKind::ComplementLawFails,
                  describe(lat->labels_, x) + " ^ its complement is " +
                      describe(lat->labels_, lat->meet_[x * n + lat->ortho_[x]]) +
                      ", not the bottom",
                  {eid(x)});
    if (lat->join_[x * n + lat->ortho_[x]] != n - 1)
      throw Error(ErrorKind::ComplementLawFails,
                  describe(lat->labels_, x) + " v its complement is not the top",
                  {eid(x)});
  }

  // Join-irreducibles: x != 0 and x is not the join of the elements below it.
  for (std::size_t x = 1; x < n; ++x) {
    ElemId acc = 0;
    for (std::size_t u = lat->dn_[x].find_first(); u != Bits::npos;
         u = lat->dn_[x].find_next(u))
      if (u != x) acc = lat->join_[acc * n + u];
    if (acc != x) lat->ji_.push_back(eid(x));
  }

  lat->orthomodular_ = verify_orthomodular(*lat).holds;
  return lat;
}

ElemId Oml::big_join(std::span<const ElemId> xs) const {
  ElemId acc = bottom();
  for (ElemId x : xs) acc = join(acc, x);
  return acc;
}

ElemId Oml::big_meet(std::span<const ElemId> xs) const {
  ElemId acc = top();
  for (ElemId x : xs) acc = meet(acc, x);
  return acc;
}

std::optional<ElemId> Oml::find_label(std::string_view name) const {
  for (std::size_t x = 0; x < n_; ++x)
    if (labels_[x] == name) return eid(x);
  return std::nullopt;
}

std::vector<std::pair<ElemId, ElemId>> Oml::cover_pairs() const {
  std::vector<std::pair<ElemId, ElemId>> covers;
  Bits between(n_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y)) {
      if (y == x) continue;
      between = up_[x];
      between &= dn_[y];
      if (between.count() == 2) covers.emplace_back(eid(x), eid(y));
    }
  std::sort(covers.begin(), covers.end());
  return covers;
}

LatticeData Oml::data() const {
  LatticeData d;
  d.n = n_;
  d.leq = cover_pairs();
  d.ortho = ortho_;
  d.labels = labels_;
  return d;
}

OrthomodularReport verify_orthomodular(const Oml& lat) {
  OrthomodularReport report;
  report.conditions = {true, true, true};
  std::array<std::optional<std::pair<ElemId, ElemId>>, 3> firsts;
  const std::size_t n = lat.size();
  for (ElemId x = 0; x < n; ++x) {
    for (ElemId y = 0; y < n; ++y) {
      if (!lat.leq(x, y)) continue;
      if (lat.join(x, lat.meet(lat.ortho(x), y)) != y && !firsts[0]) {
        report.conditions[0] = false;
        firsts[0] = {x, y};
      }
      if (lat.meet(y, lat.join(lat.ortho(y), x)) != x && !firsts[1]) {
        report.conditions[1] = false;
        firsts[1] = {x, y};
      }
      if (lat.meet(lat.ortho(x), y) == lat.bottom() && x != y && !firsts[2]) {
        report.conditions[2] = false;
        firsts[2] = {x, y};
      }
    }
  }
  if (report.conditions[0] != report.conditions[1] ||
      report.conditions[1] != report.conditions[2])
    throw Error(ErrorKind::EquivalenceMismatch,
                "the three orthomodularity conditions disagree globally");
  report.holds = report.conditions[0];
  if (!report.holds) report.witness = firsts[0] ? firsts[0] : (firsts[1] ? firsts[1] : firsts[2]);
  return report;
}

bool orthomodular_conditions_agree_pairwise(const Oml& lat,
                                            std::pair<ElemId, ElemId>* disagreement) {
  const std::size_t n = lat.size();
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      const bool le = lat.leq(x, y);
      const bool c1 = !le || lat.join(x, lat.meet(lat.ortho(x), y)) == y;
      const bool c2 = !le || lat.meet(y, lat.join(lat.ortho(y), x)) == x;
      const bool c3 = !(le && lat.meet(lat.ortho(x), y) == lat.bottom()) || x == y;
      if (c1 != c2 || c2 != c3) {
        if (disagreement) *disagreement = {x, y};
        return false;
      }
    }
  return true;
}

ElemId sasaki(const Oml& lat, ElemId a, ElemId y) {
  if (!lat.is_orthomodular())
    throw Error(ErrorKind::NotOrthomodular,
                "Sasaki projection requires an orthomodular lattice");
  return lat.meet(a, lat.join(lat.ortho(a), y));
}

bool commutes(const Oml& lat, ElemId x, ElemId y) {
  return lat.join(lat.meet(x, y), lat.meet(x, lat.ortho(y))) == x;
}

Downset downset(const Oml& lat, ElemId a) {
  if (!lat.is_orthomodular())
    throw Error(ErrorKind::NotOrthomodular,
                "downsets carry a relative complement only in orthomodular lattices");
  lat.check(a);
  Downset result;
  result.anchor = a;
  const Bits& members = lat.below(a);
  std::vector<ElemId> pos(lat.size(), 0);
  for (std::size_t u = members.find_first(); u != Bits::npos; u = members.find_next(u)) {
    pos[u] = static_cast<ElemId>(result.embed.size());
    result.embed.push_back(static_cast<ElemId>(u));
  }
  LatticeData d;
  d.n = result.embed.size();
  for (std::size_t i = 0; i < result.embed.size(); ++i) {
    for (std::size_t j = 0; j < result.embed.size(); ++j)
      if (lat.leq(result.embed[i], result.embed[j]))
        d.leq.emplace_back(static_cast<ElemId>(i), static_cast<ElemId>(j));
    d.ortho.push_back(pos[lat.meet(a, lat.ortho(result.embed[i]))]);
    d.labels.push_back(lat.label(result.embed[i]));
  }
  result.oml = build_oml(d);
  return result;
}

bool same_structure(const Oml& a, const Oml& b) {
  if (a.size() != b.size()) return false;
  for (ElemId x = 0; x < a.size(); ++x) {
    if (a.ortho(x) != b.ortho(x)) return false;
    for (ElemId y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(x, y)) return false;
  }
  return true;
}

} // namespace omlat
