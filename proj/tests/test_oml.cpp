#include <doctest.h>

#include "omlat/catalog.hpp"
#include "omlat/oml.hpp"

using namespace omlat;

namespace {

LatticeData chain(std::size_t n) {
  LatticeData d;
  d.n = n;
  for (ElemId x = 0; x + 1u < n; ++x) d.leq.emplace_back(x, static_cast<ElemId>(x + 1));
  for (std::size_t x = 0; x < n; ++x) d.ortho.push_back(static_cast<ElemId>(n - 1 - x));
  return d;
}

} // namespace

TEST_CASE("two-element chain is a Boolean orthomodular lattice") {
  OmlPtr lat = build_oml(chain(2));
  CHECK(lat->size() == 2);
  CHECK(lat->is_orthomodular());
  CHECK(lat->ortho(0) == 1);
  CHECK(lat->meet(0, 1) == 0);
  CHECK(lat->join(0, 1) == 1);
}

TEST_CASE("benzene hexagon is an ortholattice but not orthomodular") {
  OmlPtr hexagon = benzene();
  CHECK(hexagon->size() == 6);
  CHECK_FALSE(hexagon->is_orthomodular());

  OrthomodularReport report = verify_orthomodular(*hexagon);
  CHECK_FALSE(report.holds);
  CHECK_FALSE(report.conditions[0]);
  CHECK_FALSE(report.conditions[1]);
  CHECK_FALSE(report.conditions[2]);
  REQUIRE(report.witness.has_value());
  CHECK(hexagon->label(report.witness->first) == "a");
  CHECK(hexagon->label(report.witness->second) == "b");
}

TEST_CASE("antisymmetry violations are rejected with the offending pair") {
  LatticeData d;
  d.n = 2;
  d.leq = {{0, 1}, {1, 0}};
  d.ortho = {1, 0};
  try {
    build_oml(d);
    FAIL("expected NotAPoset");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPoset);
    CHECK(e.witness() == std::vector<std::uint32_t>{0, 1});
  }
}

TEST_CASE("posets without joins are rejected") {
  LatticeData d; // 0 < a, 0 < b with a, b maximal: join(a, b) missing
  d.n = 3;
  d.leq = {{0, 1}, {0, 2}};
  d.ortho = {0, 1, 2};
  try {
    build_oml(d);
    FAIL("expected MissingMeetOrJoin");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingMeetOrJoin);
    CHECK(e.witness().size() == 2);
  }
}

TEST_CASE("non-involutive ortho tables are rejected") {
  LatticeData d = chain(2);
  d.ortho = {1, 1};
  try {
    build_oml(d);
    FAIL("expected OrthoNotInvolutive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrthoNotInvolutive);
  }
}

TEST_CASE("ortho must reverse the order") {
  LatticeData d = chain(4);
  d.ortho = {1, 0, 3, 2}; // involutive, but pairs neighbours instead of reversing
  try {
    build_oml(d);
    FAIL("expected OrthoNotAntitone");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrthoNotAntitone);
  }
}

TEST_CASE("complement law failures carry the witness element") {
  LatticeData d = chain(4);
  d.ortho = {3, 2, 1, 0}; // antitone involution, but a ^ a' = a != 0 inside the chain
  try {
    build_oml(d);
    FAIL("expected ComplementLawFails");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ComplementLawFails);
    CHECK(e.witness() == std::vector<std::uint32_t>{1});
  }
}

TEST_CASE("elements are renumbered into canonical topological order") {
  LatticeData d; // 2^2 given in scrambled input order: p, top, bottom, q
  d.n = 4;
  d.leq = {{2, 0}, {2, 3}, {0, 1}, {3, 1}};
  d.ortho = {3, 2, 1, 0};
  d.labels = {"p", "top", "bottom", "q"};
  OmlPtr lat = build_oml(d);
  CHECK(lat->label(0) == "bottom");
  CHECK(lat->label(1) == "p");
  CHECK(lat->label(2) == "q");
  CHECK(lat->label(3) == "top");
  CHECK(lat->leq(0, 1));
  CHECK(lat->leq(1, 3));
  CHECK(lat->ortho(1) == 2);
  CHECK(lat->is_orthomodular());
}

TEST_CASE("lattice queries: tables, folds, range checks") {
  OmlPtr p2 = powerset(2);
  const ElemId a = 1, b = 2;
  CHECK(p2->join(a, b) == p2->top());
  CHECK(p2->big_join({}) == p2->bottom());
  CHECK(p2->big_meet({}) == p2->top());
  const std::vector<ElemId> atoms = {a, b};
  CHECK(p2->big_join(atoms) == p2->top());

  OmlPtr m = mo(2);
  CHECK(m->join(1, 2) == m->top()); // two incomparable atoms only meet at the top

  CHECK_THROWS_AS((void)p2->meet(0, 99), Error);
  try {
    (void)p2->ortho(42);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IdOutOfRange);
  }
}

TEST_CASE("orthomodularity report on powerset and MO2") {
  OrthomodularReport pow_report = verify_orthomodular(*powerset(3));
  CHECK(pow_report.holds);
  CHECK(pow_report.conditions == std::array<bool, 3>{true, true, true});

  OrthomodularReport mo_report = verify_orthomodular(*mo(2));
  CHECK(mo_report.holds);
  CHECK_FALSE(mo_report.witness.has_value());
}

TEST_CASE("Sasaki projection") {
  OmlPtr p3 = powerset(3);
  SUBCASE("collapses to the meet on Boolean algebras") {
    for (ElemId a = 0; a < p3->size(); ++a)
      for (ElemId y = 0; y < p3->size(); ++y)
        CHECK(sasaki(*p3, a, y) == p3->meet(a, y));
  }
  SUBCASE("annihilates exactly below the complement") {
    OmlPtr m = mo(2);
    for (ElemId a = 0; a < m->size(); ++a)
      for (ElemId y = 0; y < m->size(); ++y)
        CHECK((sasaki(*m, a, y) == m->bottom()) == m->leq(y, m->ortho(a)));
  }
  SUBCASE("projects other atoms of MO2 onto the anchor") {
    OmlPtr m = mo(2);
    const ElemId x1 = 1, x2 = 2;
    CHECK(sasaki(*m, x1, x2) == x1);
  }
  SUBCASE("requires orthomodularity") {
    CHECK_THROWS_AS((void)sasaki(*benzene(), 1, 2), Error);
  }
}

TEST_CASE("downsets inherit the order and carry the relative complement") {
  OmlPtr p2 = powerset(2);

  SUBCASE("downset of the top is the whole lattice") {
    Downset d = downset(*p2, p2->top());
    CHECK(d.oml->size() == p2->size());
    CHECK(same_structure(*d.oml, *p2));
    for (std::size_t i = 0; i < d.embed.size(); ++i) CHECK(d.embed[i] == i);
  }
  SUBCASE("downset of the bottom is the one-element lattice") {
    Downset d = downset(*p2, 0);
    CHECK(d.oml->size() == 1);
    CHECK(d.oml->is_orthomodular());
  }
  SUBCASE("downset of an atom of 2^2 is the 2-chain with swapped complement") {
    Downset d = downset(*p2, 1);
    REQUIRE(d.oml->size() == 2);
    CHECK(d.oml->ortho(0) == 1); // relative complement a ^ u' swaps 0 and a
    CHECK(d.oml->ortho(1) == 0);
    CHECK(d.embed == std::vector<ElemId>{0, 1});
    CHECK(d.oml->is_orthomodular());
  }
  SUBCASE("needs orthomodularity") {
    CHECK_THROWS_AS((void)downset(*benzene(), 2), Error);
  }
}

TEST_CASE("commutation") {
  OmlPtr p3 = powerset(3);
  for (ElemId x = 0; x < p3->size(); ++x)
    for (ElemId y = 0; y < p3->size(); ++y)
      CHECK(commutes(*p3, x, y)); // Boolean algebras are commutative

  OmlPtr m = mo(2);
  for (ElemId x = 0; x < m->size(); ++x) CHECK(commutes(*m, x, m->ortho(x)));
  CHECK_FALSE(commutes(*m, 1, 2)); // distinct non-complementary atoms
  CHECK_FALSE(commutes(*m, 2, 1));
}

TEST_CASE("De Morgan laws hold in every catalog entry") {
  for (const CatalogEntry& entry : standard_catalog()) {
    const Oml& lat = *entry.oml;
    for (ElemId x = 0; x < lat.size(); ++x)
      for (ElemId y = 0; y < lat.size(); ++y) {
        CHECK(lat.ortho(lat.join(x, y)) == lat.meet(lat.ortho(x), lat.ortho(y)));
        CHECK(lat.ortho(lat.meet(x, y)) == lat.join(lat.ortho(x), lat.ortho(y)));
      }
  }
}

TEST_CASE("size guard") {
  LatticeData d = chain(5);
  CHECK_THROWS_AS((void)build_oml(d, 4), Error);
  try {
    (void)build_oml(d, 4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeBoundExceeded);
  }
}
