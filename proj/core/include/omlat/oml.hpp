#ifndef OMLAT_OML_HPP
#define OMLAT_OML_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "omlat/errors.hpp"

namespace omlat {

/// Index of an element inside one particular lattice. Id 0 is always the
/// bottom element and id n-1 the top element (canonical topological order,
/// established by build_oml).
using ElemId = std::uint16_t;

inline constexpr std::size_t kDefaultMaxElements = 4096;

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Raw input for build_oml: a generating set of order pairs (covers or the
/// full relation both work; the reflexive-transitive closure is taken), an
/// orthocomplement table and optional display labels.
struct LatticeData {
  std::size_t n = 0;
  std::vector<std::pair<ElemId, ElemId>> leq; // pairs (x, y) meaning x <= y
  std::vector<ElemId> ortho;
  std::vector<std::string> labels; // empty or exactly n entries
};

class Oml;
using OmlPtr = std::shared_ptr<const Oml>;

/// A finite ortholattice with precomputed meet/join tables. Finite lattices
/// have all joins, so the type doubles as a complete lattice; the
/// is_orthomodular flag records whether the three orthomodularity conditions
/// hold. Immutable after construction, safe to share across threads.
class Oml {
public:
  std::size_t size() const noexcept { return n_; }
  ElemId bottom() const noexcept { return 0; }
  ElemId top() const noexcept { return static_cast<ElemId>(n_ - 1); }

  bool leq(ElemId x, ElemId y) const { return up_[check(x)].test(check(y)); }
  ElemId meet(ElemId x, ElemId y) const { return meet_[check(x) * n_ + check(y)]; }
  ElemId join(ElemId x, ElemId y) const { return join_[check(x) * n_ + check(y)]; }
  ElemId ortho(ElemId x) const { return ortho_[check(x)]; }
  bool orthogonal(ElemId x, ElemId y) const { return leq(x, ortho(y)); }

  /// Join over an arbitrary element set; the empty join is the bottom.
  ElemId big_join(std::span<const ElemId> xs) const;
  /// Meet over an arbitrary element set; the empty meet is the top.
  ElemId big_meet(std::span<const ElemId> xs) const;

  bool is_orthomodular() const noexcept { return orthomodular_; }

  const std::string& label(ElemId x) const { return labels_[check(x)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<ElemId> find_label(std::string_view name) const;

  /// Elements that are not the join of the elements strictly below them
  /// (excluding the bottom). Every element is the join of these.
  const std::vector<ElemId>& join_irreducibles() const noexcept { return ji_; }

  /// Cover pairs (x, y) with x covered by y, sorted; the minimal generating
  /// set used by the serializer and the DOT export.
  std::vector<std::pair<ElemId, ElemId>> cover_pairs() const;

  /// Down-set of x as a bitset row (elements <= x).
  const Bits& below(ElemId x) const { return dn_[check(x)]; }
  const Bits& above(ElemId x) const { return up_[check(x)]; }

  /// Snapshot of the lattice as raw build input (covers, canonical order).
  LatticeData data() const;

  ElemId check(ElemId x) const {
    if (x >= n_)
      throw Error(ErrorKind::IdOutOfRange,
                  "element id " + std::to_string(x) + " out of range [0, " +
                      std::to_string(n_) + ")",
                  {x});
    return x;
  }

private:
  Oml() = default;
  friend OmlPtr build_oml(const LatticeData&, std::size_t);

  std::size_t n_ = 0;
  std::vector<Bits> up_; // up_[x] = { y : x <= y }
  std::vector<Bits> dn_; // dn_[x] = { y : y <= x }
  std::vector<ElemId> meet_;
  std::vector<ElemId> join_;
  std::vector<ElemId> ortho_;
  std::vector<ElemId> ji_;
  std::vector<std::string> labels_;
  bool orthomodular_ = false;
};

/// Validates the input as an ortholattice and returns it with elements
/// renumbered into canonical topological order (bottom first, top last).
/// Orthomodularity is decided by exhaustive check and recorded in the flag;
/// non-orthomodular ortholattices are accepted so counterexamples can be
/// built. Throws Error with a witness on any axiom violation:
/// NotAPoset, MissingMeetOrJoin, OrthoNotInvolutive, OrthoNotAntitone,
/// ComplementLawFails, IdOutOfRange, SizeBoundExceeded.
OmlPtr build_oml(const LatticeData& data,
                 std::size_t max_elements = kDefaultMaxElements);

struct OrthomodularReport {
  bool holds = false;
  // [0]: x<=y implies y = x v (x' ^ y)
  // [1]: x<=y implies x = y ^ (y' v x)
  // [2]: x<=y and x' ^ y = 0 implies x = y
  std::array<bool, 3> conditions{};
  std::optional<std::pair<ElemId, ElemId>> witness;
};

/// Evaluates the three orthomodularity conditions over all pairs. The three
/// global verdicts must agree; a mismatch is an implementation bug and throws
/// EquivalenceMismatch.
OrthomodularReport verify_orthomodular(const Oml& lat);

/// True iff the three conditions agree on every single pair (stronger than
/// the global equivalence; holds empirically on the whole catalog).
bool orthomodular_conditions_agree_pairwise(
    const Oml& lat, std::pair<ElemId, ElemId>* disagreement = nullptr);

/// Sasaki projection to a: y -> a ^ (a' v y). Requires orthomodularity.
ElemId sasaki(const Oml& lat, ElemId a, ElemId y);

/// x commutes with y: x = (x ^ y) v (x ^ y').
bool commutes(const Oml& lat, ElemId x, ElemId y);

struct Downset {
  OmlPtr oml;                 // the lattice on { u : u <= anchor }
  std::vector<ElemId> embed;  // downset id -> parent id, strictly increasing
  ElemId anchor = 0;
};

/// Principal downset of a as a lattice of its own, with relative
/// orthocomplement u -> a ^ u'. Requires orthomodularity (the relative
/// complement law needs it). The result passes full validation.
Downset downset(const Oml& lat, ElemId a);

/// Structural comparison: same size, same order relation, same ortho table.
/// Labels are ignored. Distinct objects with equal structure stay distinct
/// for morphism composition purposes.
bool same_structure(const Oml& a, const Oml& b);

} // namespace omlat

#endif
