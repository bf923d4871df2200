#include "omlat/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "omlat/catalog.hpp"

namespace omlat {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++number;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + message);
}

// Parses one `oml ... end` document starting at lines[i]; advances i past the
// closing `end`.
LatticeDocument parse_oml_block(const std::vector<Line>& lines, std::size_t& i) {
  if (i >= lines.size() || lines[i].tokens[0] != "oml")
    syntax_error(i < lines.size() ? lines[i].number : 0, "expected 'oml <name>'");
  if (lines[i].tokens.size() != 2)
    syntax_error(lines[i].number, "'oml' takes exactly one name");
  LatticeDocument doc;
  doc.name = lines[i].tokens[1];
  ++i;
  bool saw_cover = false, saw_leq = false, closed = false;
  for (; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& kw = line.tokens[0];
    if (kw == "end") {
      closed = true;
      ++i;
      break;
    } else if (kw == "elements") {
      if (line.tokens.size() < 2) syntax_error(line.number, "'elements' needs names");
      doc.elements.insert(doc.elements.end(), line.tokens.begin() + 1, line.tokens.end());
    } else if (kw == "cover" || kw == "leq") {
      if (line.tokens.size() != 3)
        syntax_error(line.number, "'" + kw + "' takes exactly two element names");
      (kw == "cover" ? saw_cover : saw_leq) = true;
      if (saw_cover && saw_leq)
        syntax_error(line.number, "mixing 'cover' and 'leq' lines in one document");
      doc.relation.emplace_back(line.tokens[1], line.tokens[2]);
      doc.relation_kind = saw_leq ? LatticeDocument::RelationKind::Leq
                                  : LatticeDocument::RelationKind::Covers;
    } else if (kw == "ortho") {
      if (line.tokens.size() != 3)
        syntax_error(line.number, "'ortho' takes exactly two element names");
      doc.ortho.emplace_back(line.tokens[1], line.tokens[2]);
    } else if (kw == "meta") {
      if (line.tokens.size() < 3)
        syntax_error(line.number, "'meta' takes a key and a value");
      std::string value = line.tokens[2];
      for (std::size_t t = 3; t < line.tokens.size(); ++t) value += " " + line.tokens[t];
      doc.meta.emplace_back(line.tokens[1], std::move(value));
    } else {
      syntax_error(line.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!closed) syntax_error(lines.back().number, "missing 'end'");
  return doc;
}

class NameTable {
public:
  explicit NameTable(const std::vector<std::string>& elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!index_.emplace(elements[i], static_cast<ElemId>(i)).second)
        throw Error(ErrorKind::ValidationError,
                    "duplicate element name '" + elements[i] + "'");
    }
  }

  ElemId at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw Error(ErrorKind::UnknownName, "unknown element name '" + name + "'");
    return it->second;
  }

private:
  std::map<std::string, ElemId> index_;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::PreconditionFailed, "cannot open '" + path.string() + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return std::move(out).str();
}

LatticeRef parse_ref(const std::vector<Line>& lines, std::size_t& i) {
  const Line& line = lines[i];
  LatticeRef ref;
  if (line.tokens.size() == 3 && line.tokens[1] == "catalog") {
    ref.kind = LatticeRef::Kind::Catalog;
    ref.value = line.tokens[2];
    ++i;
  } else if (line.tokens.size() == 3 && line.tokens[1] == "file") {
    ref.kind = LatticeRef::Kind::File;
    ref.value = line.tokens[2];
    ++i;
  } else if (line.tokens.size() == 2 && line.tokens[1] == "inline") {
    ref.kind = LatticeRef::Kind::Inline;
    ++i;
    ref.inline_doc = parse_oml_block(lines, i);
  } else {
    syntax_error(line.number,
                 "expected '" + line.tokens[0] + " catalog <name>', '" + line.tokens[0] +
                     " file <path>' or '" + line.tokens[0] + " inline'");
  }
  return ref;
}

} // namespace

LatticeDocument parse_oml(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorKind::SyntaxError, "empty document");
  std::size_t i = 0;
  LatticeDocument doc = parse_oml_block(lines, i);
  if (i < lines.size()) syntax_error(lines[i].number, "trailing content after 'end'");
  return doc;
}

OmlPtr build_lattice(const LatticeDocument& doc, std::size_t max_elements) {
  if (doc.elements.empty())
    throw Error(ErrorKind::ValidationError, "document declares no elements");
  NameTable names(doc.elements);
  LatticeData data;
  data.n = doc.elements.size();
  data.labels = doc.elements;
  for (const auto& [a, b] : doc.relation) data.leq.emplace_back(names.at(a), names.at(b));

  std::vector<std::optional<ElemId>> ortho(data.n);
  auto set_ortho = [&](ElemId x, ElemId y) {
    if (ortho[x] && *ortho[x] != y)
      throw Error(ErrorKind::ValidationError,
                  "conflicting orthocomplements for '" + doc.elements[x] + "'", {x});
    ortho[x] = y;
  };
  for (const auto& [a, b] : doc.ortho) {
    const ElemId x = names.at(a), y = names.at(b);
    set_ortho(x, y);
    set_ortho(y, x);
  }
  for (std::size_t x = 0; x < data.n; ++x) {
    if (!ortho[x])
      throw Error(ErrorKind::ValidationError,
                  "no orthocomplement given for '" + doc.elements[x] + "'",
                  {static_cast<std::uint32_t>(x)});
    data.ortho.push_back(*ortho[x]);
  }

  try {
    return build_oml(data, max_elements);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, e.what(), e.witness());
  }
}

LatticeDocument to_document(const Oml& lat, std::string name) {
  LatticeDocument doc;
  doc.name = std::move(name);
  doc.elements = lat.labels();
  doc.relation_kind = LatticeDocument::RelationKind::Covers;
  for (auto [x, y] : lat.cover_pairs())
    doc.relation.emplace_back(lat.label(x), lat.label(y));
  for (ElemId x = 0; x < lat.size(); ++x)
    if (x <= lat.ortho(x)) doc.ortho.emplace_back(lat.label(x), lat.label(lat.ortho(x)));
  return doc;
}

std::string serialize_document(const LatticeDocument& doc) {
  std::ostringstream out;
  out << "oml " << doc.name << "\n";
  for (std::size_t i = 0; i < doc.elements.size(); i += 12) {
    out << "elements";
    for (std::size_t j = i; j < std::min(i + 12, doc.elements.size()); ++j)
      out << " " << doc.elements[j];
    out << "\n";
  }
  const char* rel =
      doc.relation_kind == LatticeDocument::RelationKind::Covers ? "cover" : "leq";
  for (const auto& [a, b] : doc.relation) out << rel << " " << a << " " << b << "\n";
  for (const auto& [a, b] : doc.ortho) out << "ortho " << a << " " << b << "\n";
  for (const auto& [k, v] : doc.meta) out << "meta " << k << " " << v << "\n";
  out << "end\n";
  return std::move(out).str();
}

std::string serialize_oml(const Oml& lat, std::string_view name) {
  return serialize_document(to_document(lat, std::string(name)));
}

MorphismDocument parse_olm(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorKind::SyntaxError, "empty document");
  std::size_t i = 0;
  if (lines[i].tokens[0] != "olm" || lines[i].tokens.size() != 2)
    syntax_error(lines[i].number, "expected 'olm <name>'");
  MorphismDocument doc;
  doc.name = lines[i].tokens[1];
  ++i;
  bool have_dom = false, have_cod = false, closed = false;
  while (i < lines.size()) {
    const Line& line = lines[i];
    const std::string& kw = line.tokens[0];
    if (kw == "end") {
      closed = true;
      ++i;
      break;
    } else if (kw == "dom") {
      if (have_dom) syntax_error(line.number, "duplicate 'dom'");
      doc.dom = parse_ref(lines, i);
      have_dom = true;
    } else if (kw == "cod") {
      if (have_cod) syntax_error(line.number, "duplicate 'cod'");
      doc.cod = parse_ref(lines, i);
      have_cod = true;
    } else if (kw == "map") {
      if (line.tokens.size() != 3)
        syntax_error(line.number, "'map' takes exactly two element names");
      doc.map.emplace_back(line.tokens[1], line.tokens[2]);
      ++i;
    } else {
      syntax_error(line.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!closed) syntax_error(lines.back().number, "missing 'end'");
  if (!have_dom || !have_cod)
    throw Error(ErrorKind::SyntaxError, "morphism document needs 'dom' and 'cod'");
  if (i < lines.size()) syntax_error(lines[i].number, "trailing content after 'end'");
  return doc;
}

Resolver default_resolver(std::filesystem::path base_dir) {
  auto cache = std::make_shared<std::map<std::string, OmlPtr>>();
  return [base_dir = std::move(base_dir), cache](const LatticeRef& ref) -> OmlPtr {
    switch (ref.kind) {
      case LatticeRef::Kind::Catalog:
        return catalog_lookup(ref.value);
      case LatticeRef::Kind::File: {
        std::filesystem::path path(ref.value);
        if (path.is_relative()) path = base_dir / path;
        const std::string key = "file:" + path.lexically_normal().string();
        if (auto it = cache->find(key); it != cache->end()) return it->second;
        OmlPtr lat = build_lattice(parse_oml(read_file(path)));
        cache->emplace(key, lat);
        return lat;
      }
      case LatticeRef::Kind::Inline: {
        if (!ref.inline_doc)
          throw Error(ErrorKind::ValidationError, "inline reference without a document");
        // key on content, not the document name, so structurally identical
        // inline blocks share one object and their morphisms compose
        LatticeDocument unnamed = *ref.inline_doc;
        unnamed.name.clear();
        const std::string key = "inline:" + serialize_document(unnamed);
        if (auto it = cache->find(key); it != cache->end()) return it->second;
        OmlPtr lat = build_lattice(*ref.inline_doc);
        cache->emplace(key, lat);
        return lat;
      }
    }
    throw Error(ErrorKind::ValidationError, "unhandled lattice reference");
  };
}

LinMap build_morphism(const MorphismDocument& doc, const Resolver& resolve) {
  OmlPtr dom = resolve(doc.dom);
  OmlPtr cod = resolve(doc.cod);
  std::vector<std::optional<ElemId>> table(dom->size());
  for (const auto& [from, to] : doc.map) {
    auto x = dom->find_label(from);
    if (!x) throw Error(ErrorKind::UnknownName, "unknown domain element '" + from + "'");
    auto y = cod->find_label(to);
    if (!y) throw Error(ErrorKind::UnknownName, "unknown codomain element '" + to + "'");
    if (table[*x])
      throw Error(ErrorKind::ValidationError, "element '" + from + "' mapped twice");
    table[*x] = *y;
  }
  std::vector<ElemId> full;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (!table[x])
      throw Error(ErrorKind::ValidationError,
                  "no image given for element '" + dom->label(static_cast<ElemId>(x)) + "'");
    full.push_back(*table[x]);
  }
  try {
    return make_linmap(std::move(dom), std::move(cod), std::move(full));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotJoinPreserving || e.kind() == ErrorKind::NotOrthomodular)
      throw Error(ErrorKind::ValidationError, e.what(), e.witness());
    throw;
  }
}

LinMap parse_linmap(std::string_view text, const Resolver& resolve) {
  return build_morphism(parse_olm(text), resolve);
}

std::string serialize_linmap(const LinMap& f, std::string_view name) {
  std::ostringstream out;
  out << "olm " << name << "\n";
  out << "dom inline\n" << serialize_document(to_document(*f.dom(), "dom"));
  out << "cod inline\n" << serialize_document(to_document(*f.cod(), "cod"));
  for (ElemId x = 0; x < f.dom()->size(); ++x)
    out << "map " << f.dom()->label(x) << " " << f.cod()->label(f(x)) << "\n";
  out << "end\n";
  return std::move(out).str();
}

std::string export_dot(const Oml& lat, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph \"" << options.graph_name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (ElemId x = 0; x < lat.size(); ++x)
    out << "  n" << x << " [label=\"" << lat.label(x) << "\"];\n";
  for (auto [x, y] : lat.cover_pairs())
    out << "  n" << x << " -> n" << y << ";\n";
  if (options.ortho_edges)
    for (ElemId x = 0; x < lat.size(); ++x)
      if (x < lat.ortho(x))
        out << "  n" << x << " -> n" << lat.ortho(x)
            << " [style=dashed,dir=none,constraint=false];\n";
  out << "}\n";
  return std::move(out).str();
}

} // namespace omlat
