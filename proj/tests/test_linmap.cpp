#include <doctest.h>

#include <random>

#include "omlat/catalog.hpp"
#include "omlat/linmap.hpp"

using namespace omlat;

TEST_CASE("identity map is self-adjoint and satisfies every dagger predicate") {
  OmlPtr p2 = powerset(2);
  LinMap id = identity_map(p2);
  MapPredicates p = predicates(id);
  CHECK(p.self_adjoint);
  CHECK(p.dagger_mono);
  CHECK(p.dagger_epi);
  CHECK(p.dagger_iso);
  CHECK(p.zero_epi);
  CHECK(p.zero_mono);
  CHECK(id.adjoint_table() == id.table());
}

TEST_CASE("zero morphism is valid and not zero-epi into larger codomains") {
  OmlPtr m = mo(2);
  LinMap z = zero_map(chain2(), m);
  CHECK_FALSE(predicates(z).zero_epi);
  CHECK(adjoint(z).table() == zero_map(m, chain2()).table());
}

TEST_CASE("join preservation is validated with witnesses") {
  SUBCASE("empty join") {
    try {
      make_linmap(chain2(), chain2(), {1, 1});
      FAIL("expected NotJoinPreserving");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotJoinPreserving);
    }
  }
  SUBCASE("binary join with witness pair") {
    OmlPtr p2 = powerset(2);
    try {
      make_linmap(p2, p2, {0, 1, 2, 1}); // f({a,b}) != f({a}) v f({b})
      FAIL("expected NotJoinPreserving");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotJoinPreserving);
      CHECK(e.witness() == std::vector<std::uint32_t>{1, 2});
    }
  }
  SUBCASE("non-orthomodular endpoints are rejected") {
    OmlPtr hexagon = benzene();
    std::vector<ElemId> id_table(hexagon->size());
    for (std::size_t i = 0; i < id_table.size(); ++i)
      id_table[i] = static_cast<ElemId>(i);
    CHECK_THROWS_AS((void)make_linmap(hexagon, hexagon, id_table), Error);
  }
}

TEST_CASE("adjoints") {
  OmlPtr p2 = powerset(2);
  OmlPtr m = mo(2);

  SUBCASE("of the identity is the identity") {
    CHECK(adjoint(identity_map(m)).table() == identity_map(m).table());
  }
  SUBCASE("of a Sasaki projection is itself") {
    for (ElemId a = 0; a < m->size(); ++a) {
      LinMap pi = sasaki_map(m, a);
      CHECK(pi.adjoint_table() == pi.table());
    }
  }
  SUBCASE("swap dom and cod and invert back") {
    for (const LinMap& f : enumerate_linmaps(p2, m)) {
      LinMap g = adjoint(f);
      CHECK(g.dom() == f.cod());
      CHECK(adjoint(g).table() == f.table());
      // recompute from scratch rather than trusting the stored pair
      LinMap rebuilt = make_linmap(f.cod(), f.dom(), f.adjoint_table());
      CHECK(rebuilt.adjoint_table() == f.table());
    }
  }
  SUBCASE("the adjoint is the unique table satisfying the orthogonality relation") {
    // brute-force oracle over all 256 candidate tables for each map on 2^2
    for (const LinMap& f : enumerate_linmaps(p2, p2)) {
      std::size_t satisfying = 0;
      std::vector<ElemId> h(4, 0);
      for (int count = 0; count < 256; ++count) {
        bool ok = true;
        for (ElemId x = 0; ok && x < 4; ++x)
          for (ElemId y = 0; y < 4; ++y)
            if (p2->orthogonal(f(x), y) != p2->orthogonal(x, h[y])) {
              ok = false;
              break;
            }
        if (ok) {
          ++satisfying;
          CHECK(h == f.adjoint_table());
        }
        for (std::size_t i = h.size(); i-- > 0;) {
          if (++h[i] < 4) break;
          h[i] = 0;
        }
      }
      CHECK(satisfying == 1);
    }
  }
}

TEST_CASE("composition") {
  OmlPtr m = mo(2);
  LinMap pi = sasaki_map(m, 1);

  SUBCASE("identity is neutral") {
    LinMap id = identity_map(m);
    CHECK(compose(id, pi).table() == pi.table());
    CHECK(compose(pi, id).table() == pi.table());
  }
  SUBCASE("Sasaki projections are idempotent") {
    CHECK(compose(pi, pi).table() == pi.table());
  }
  SUBCASE("dagger is contravariant") {
    for (const LinMap& f : enumerate_linmaps(chain2(), m))
      for (const LinMap& g : enumerate_linmaps(m, m)) {
        LinMap gf = compose(g, f);
        LinMap expected = compose(adjoint(f), adjoint(g));
        CHECK(gf.adjoint_table() == expected.table());
      }
  }
  SUBCASE("distinct objects with equal structure do not compose") {
    OmlPtr other = powerset(2);
    OmlPtr p2 = powerset(2);
    REQUIRE(other != p2); // two builds, two objects
    LinMap f = identity_map(p2);
    LinMap g = identity_map(other);
    CHECK_THROWS_AS((void)compose(g, f), Error);
  }
}

TEST_CASE("enumeration of join-preserving maps") {
  SUBCASE("frozen counts cross-checked by the naive oracle elsewhere") {
    CHECK(enumerate_linmaps(chain2(), chain2()).size() == 2);
    CHECK(enumerate_linmaps(powerset(2), powerset(2)).size() == 16);
    CHECK(enumerate_linmaps(mo(2), mo(2)).size() == 234);
    CHECK(enumerate_linmaps(mo(2), mo(3)).size() == 1080);
  }
  SUBCASE("the zero object has exactly one map anywhere") {
    for (const CatalogEntry& entry : standard_catalog()) {
      if (!entry.oml->is_orthomodular()) continue;
      OmlPtr zero = downset(*entry.oml, 0).oml;
      CHECK(enumerate_linmaps(zero, entry.oml).size() == 1);
    }
  }
  SUBCASE("results are sorted and duplicate-free") {
    auto maps = enumerate_linmaps(mo(2), powerset(2));
    for (std::size_t i = 1; i < maps.size(); ++i)
      CHECK(maps[i - 1].table() < maps[i].table());
  }
  SUBCASE("bound is enforced") {
    try {
      (void)enumerate_linmaps(mo(4), chain2()); // 10 elements > default 8
      FAIL("expected EnumerationBoundExceeded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EnumerationBoundExceeded);
    }
    CHECK(enumerate_linmaps(mo(4), chain2(), {10}).size() == 10);
  }
}

TEST_CASE("enumerated maps preserve random subset joins") {
  OmlPtr m = mo(3);
  auto maps = enumerate_linmaps(m, powerset(2));
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const LinMap& f = maps[pick(rng)];
    std::vector<ElemId> subset;
    for (ElemId x = 0; x < m->size(); ++x)
      if (coin(rng)) subset.push_back(x);
    ElemId joined = f.cod()->bottom();
    for (ElemId x : subset) joined = f.cod()->join(joined, f(x));
    CHECK(f(m->big_join(subset)) == joined);
  }
}
