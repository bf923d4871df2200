#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "omlat/catalog.hpp"
#include "omlat/io.hpp"
#include "omlat/laws.hpp"

#include "helpers.hpp"

using namespace omlat;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

const std::filesystem::path kDataDir = OMLAT_TEST_DATA_DIR;

} // namespace

TEST_CASE("generator zoo") {
  SUBCASE("mo(2): six elements, orthomodular, non-distributive") {
    OmlPtr m = mo(2);
    CHECK(m->size() == 6);
    CHECK(m->is_orthomodular());
    bool witness = false;
    for (ElemId x = 0; x < 6 && !witness; ++x)
      for (ElemId y = 0; y < 6 && !witness; ++y)
        for (ElemId z = 0; z < 6; ++z)
          if (m->meet(x, m->join(y, z)) != m->join(m->meet(x, y), m->meet(x, z))) {
            witness = true;
            break;
          }
    CHECK(witness);
  }
  SUBCASE("mo(1) is the four-element Boolean algebra") {
    CHECK(testing::lattice_isomorphic(*mo(1), *powerset(2)));
  }
  SUBCASE("horizontal sums of Boolean blocks") {
    OmlPtr h22 = horizontal_sum(powerset(2), powerset(2));
    CHECK(h22->size() == 6);
    CHECK(h22->is_orthomodular());
    CHECK(testing::lattice_isomorphic(*h22, *mo(2)));

    OmlPtr h33 = horizontal_sum(powerset(3), powerset(3));
    CHECK(h33->size() == 14);
    CHECK(h33->is_orthomodular());
  }
  SUBCASE("horizontal sum with a 2-chain adds nothing") {
    CHECK(testing::lattice_isomorphic(*horizontal_sum(chain2(), powerset(2)),
                                      *powerset(2)));
  }
  SUBCASE("product generator matches the biproduct carrier") {
    OmlPtr prod = product({mo(2), chain2()});
    CHECK(prod->size() == 12);
    CHECK(prod->is_orthomodular());
  }
  SUBCASE("the catalog has unique names and one non-orthomodular entry") {
    std::set<std::string> names;
    std::size_t non_om = 0;
    for (const CatalogEntry& entry : standard_catalog()) {
      CHECK(names.insert(entry.name).second);
      if (!entry.oml->is_orthomodular()) {
        ++non_om;
        CHECK(entry.name == "benzene");
      }
    }
    CHECK(non_om == 1);
    CHECK_THROWS_AS((void)catalog_lookup("nonsense"), Error);
  }
}

TEST_CASE("lattice documents round-trip through text") {
  for (const CatalogEntry& entry : standard_catalog()) {
    const std::string text = serialize_oml(*entry.oml, entry.name);
    LatticeDocument doc = parse_oml(text);
    CHECK(serialize_document(doc) == text);
    OmlPtr again = build_lattice(doc);
    CHECK(same_structure(*again, *entry.oml));
    CHECK(again->labels() == entry.oml->labels());
  }
}

TEST_CASE("full order documents build the same lattice as cover documents") {
  OmlPtr m = mo(2);
  LatticeDocument doc = to_document(*m, "mo2");
  doc.relation_kind = LatticeDocument::RelationKind::Leq;
  doc.relation.clear();
  for (ElemId x = 0; x < m->size(); ++x)
    for (ElemId y = 0; y < m->size(); ++y)
      if (m->leq(x, y)) doc.relation.emplace_back(m->label(x), m->label(y));
  OmlPtr again = build_lattice(parse_oml(serialize_document(doc)));
  CHECK(same_structure(*again, *m));
}

TEST_CASE("parse errors carry positions and names") {
  SUBCASE("unknown keyword") {
    try {
      parse_oml("oml x\nelements 0 1\nfrobnicate 0 1\nend\n");
      FAIL("expected SyntaxError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SyntaxError);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("missing end") {
    CHECK_THROWS_AS((void)parse_oml("oml x\nelements 0 1\n"), Error);
  }
  SUBCASE("unknown element name in a cover") {
    LatticeDocument doc = parse_oml("oml x\nelements 0 1\ncover 0 q\northo 0 1\nend\n");
    try {
      build_lattice(doc);
      FAIL("expected UnknownName");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownName);
      CHECK(std::string(e.what()).find("q") != std::string::npos);
    }
  }
  SUBCASE("an element without an orthocomplement") {
    LatticeDocument doc =
        parse_oml("oml x\nelements 0 a 1\ncover 0 a\ncover a 1\northo 0 1\nend\n");
    try {
      build_lattice(doc);
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ValidationError);
      CHECK(std::string(e.what()).find("a") != std::string::npos);
    }
  }
  SUBCASE("axiom violations surface as wrapped validation errors") {
    LatticeDocument doc =
        parse_oml("oml x\nelements 0 1\ncover 0 1\ncover 1 0\northo 0 1\nend\n");
    try {
      build_lattice(doc);
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ValidationError);
      CHECK(std::string(e.what()).find("NotAPoset") != std::string::npos);
      CHECK(e.witness().size() == 2);
    }
  }
}

TEST_CASE("morphism documents") {
  Resolver resolve = default_resolver(kDataDir / "valid");

  SUBCASE("catalog references") {
    const std::string text =
        "olm pi\n"
        "dom catalog mo2\n"
        "cod catalog mo2\n"
        "map 0 0\nmap x1 x1\nmap x2 x1\nmap x1p 0\nmap x2p x1\nmap 1 x1\n"
        "end\n";
    LinMap f = parse_linmap(text, resolve);
    CHECK(f.dom() == catalog_lookup("mo2"));
    CHECK(f.table() == sasaki_map(catalog_lookup("mo2"), 1).table());
  }
  SUBCASE("file and inline references from the conformance corpus") {
    LinMap f = parse_linmap(slurp(kDataDir / "valid" / "embed_chain2.olm"), resolve);
    CHECK(f.dom()->size() == 2);
    CHECK(f.cod()->size() == 4);
    CHECK(predicates(f).dagger_mono);
  }
  SUBCASE("serialize then parse is the identity on tables") {
    OmlPtr m = mo(2);
    LinMap pi = sasaki_map(m, 2);
    LinMap again = parse_linmap(serialize_linmap(pi, "pi"), resolve);
    CHECK(again.table() == pi.table());
    CHECK(again.adjoint_table() == pi.adjoint_table());
  }
  SUBCASE("identical inline blocks resolve to the same object") {
    const std::string text = serialize_linmap(identity_map(powerset(2)), "idp2");
    LinMap f = parse_linmap(text, resolve);
    LinMap g = parse_linmap(text, resolve);
    CHECK(f.dom() == g.dom()); // cached, hence composable
    CHECK_NOTHROW((void)compose(g, f));
  }
  SUBCASE("incomplete maps are rejected") {
    const std::string text =
        "olm f\ndom catalog chain2\ncod catalog chain2\nmap 0 0\nend\n";
    try {
      (void)parse_linmap(text, resolve);
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ValidationError);
    }
  }
  SUBCASE("non-linear tables are reported with the witness") {
    const std::string text =
        "olm f\ndom catalog chain2\ncod catalog chain2\nmap 0 1\nmap 1 1\nend\n";
    try {
      (void)parse_linmap(text, resolve);
      FAIL("expected ValidationError");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ValidationError);
      CHECK(std::string(e.what()).find("NotJoinPreserving") != std::string::npos);
    }
  }
}

TEST_CASE("conformance corpus") {
  for (const auto& entry : std::filesystem::directory_iterator(kDataDir / "valid")) {
    const std::string text = slurp(entry.path());
    if (entry.path().extension() == ".oml") {
      CHECK_NOTHROW((void)build_lattice(parse_oml(text)));
    } else if (entry.path().extension() == ".olm") {
      Resolver resolve = default_resolver(kDataDir / "valid");
      CHECK_NOTHROW((void)parse_linmap(text, resolve));
    }
  }
  for (const auto& entry : std::filesystem::directory_iterator(kDataDir / "invalid")) {
    const std::string text = slurp(entry.path());
    CHECK_THROWS_AS((void)build_lattice(parse_oml(text)), Error);
  }
}

TEST_CASE("DOT export") {
  OmlPtr m = mo(2);
  DotOptions opts;
  opts.graph_name = "mo2";

  SUBCASE("chain2: two nodes, one edge") {
    const std::string dot = export_dot(*chain2());
    CHECK(dot.find("n0 -> n1;") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos)
      ++edges;
    CHECK(edges == 1);
  }
  SUBCASE("mo2: six nodes, eight cover edges, three ortho pairs when enabled") {
    std::string dot = export_dot(*m, opts);
    std::size_t edges = 0;
    for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos)
      ++edges;
    CHECK(edges == 8);
    CHECK(dot.find("label=\"x1\"") != std::string::npos);

    opts.ortho_edges = true;
    std::string with_ortho = export_dot(*m, opts);
    std::size_t dashed = 0;
    for (std::size_t pos = 0; (pos = with_ortho.find("style=dashed", pos)) != std::string::npos;
         ++pos)
      ++dashed;
    CHECK(dashed == 3);
  }
  SUBCASE("byte-identical on repeated export") {
    opts.ortho_edges = true;
    CHECK(export_dot(*m, opts) == export_dot(*m, opts));
  }
}
