#ifndef OMLAT_IO_HPP
#define OMLAT_IO_HPP

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omlat/linmap.hpp"

namespace omlat {

/// Line-oriented lattice document (.oml). Every line starts with a keyword:
///
///   oml <name>
///   elements <name> <name> ...      (may repeat)
///   cover <a> <b>                   (a covered by b; or `leq a b` lines)
///   ortho <a> <b>                   (complement pair, one direction suffices)
///   meta <key> <value...>
///   end
///
/// '#' starts a comment. Canonical form (what the serializer emits) lists
/// elements in canonical order and uses sorted cover lines.
struct LatticeDocument {
  enum class RelationKind { Covers, Leq };

  std::string name;
  std::vector<std::string> elements;
  RelationKind relation_kind = RelationKind::Covers;
  std::vector<std::pair<std::string, std::string>> relation;
  std::vector<std::pair<std::string, std::string>> ortho;
  std::vector<std::pair<std::string, std::string>> meta;

  friend bool operator==(const LatticeDocument&, const LatticeDocument&) = default;
};

/// Syntax only; throws SyntaxError with the line number.
LatticeDocument parse_oml(std::string_view text);

/// Resolves names and validates via build_oml. Name errors surface as
/// UnknownName; lattice axiom violations are wrapped into ValidationError
/// (the witness ids and the original message are preserved).
OmlPtr build_lattice(const LatticeDocument& doc,
                     std::size_t max_elements = kDefaultMaxElements);

LatticeDocument to_document(const Oml& lat, std::string name);

/// parse_oml + build_lattice.
inline OmlPtr parse_lattice(std::string_view text) {
  return build_lattice(parse_oml(text));
}

std::string serialize_document(const LatticeDocument& doc);
std::string serialize_oml(const Oml& lat, std::string_view name = "lattice");

/// Reference to a lattice from inside a morphism document.
struct LatticeRef {
  enum class Kind { File, Catalog, Inline };
  Kind kind = Kind::Catalog;
  std::string value; // path or catalog name; empty for Inline
  std::optional<LatticeDocument> inline_doc;
};

/// Morphism document (.olm):
///
///   olm <name>
///   dom catalog <name> | dom file <path> | dom inline   (followed by an
///       embedded `oml ... end` block)
///   cod ...
///   map <dom element> <cod element>   (one line per domain element)
///   end
struct MorphismDocument {
  std::string name;
  LatticeRef dom;
  LatticeRef cod;
  std::vector<std::pair<std::string, std::string>> map;
};

MorphismDocument parse_olm(std::string_view text);

using Resolver = std::function<OmlPtr(const LatticeRef&)>;

/// Resolver handling all three reference kinds. File loads are cached by
/// normalized path and inline blocks by canonical serialization, so two
/// references to the same lattice yield the same object (and morphisms over
/// them compose).
Resolver default_resolver(std::filesystem::path base_dir);

LinMap build_morphism(const MorphismDocument& doc, const Resolver& resolve);

/// parse_olm + build_morphism.
LinMap parse_linmap(std::string_view text, const Resolver& resolve);

/// Self-contained serialization with inline dom/cod blocks.
std::string serialize_linmap(const LinMap& f, std::string_view name = "map");

struct DotOptions {
  bool ortho_edges = false;   // render complement pairs as dashed edges
  std::string graph_name = "oml";
};

/// DOT digraph of the cover relation, bottom-up. Deterministic output.
std::string export_dot(const Oml& lat, const DotOptions& options = {});

} // namespace omlat

#endif
