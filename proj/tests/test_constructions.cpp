#include <doctest.h>

#include "omlat/catalog.hpp"
#include "omlat/constructions.hpp"

#include "helpers.hpp"

using namespace omlat;

TEST_CASE("zero object") {
  OmlPtr zero = zero_object();
  CHECK(zero->size() == 1);
  CHECK(zero->is_orthomodular());
  CHECK(zero_object() == zero); // one shared object

  OmlPtr m = mo(2);
  SUBCASE("unique morphisms in and out") {
    CHECK(enumerate_linmaps(zero, m).size() == 1);
    CHECK(enumerate_linmaps(m, zero).size() == 1);
    CHECK(from_zero(m).table() == std::vector<ElemId>{0});
    CHECK(adjoint(from_zero(m)).table() == to_zero(m).table());
  }
  SUBCASE("zero morphisms factor through it") {
    LinMap through = compose(from_zero(m), to_zero(m));
    CHECK(through.table() == zero_map(m, m).table());
    CHECK(zero_map(zero, zero).table() == identity_map(zero).table());
  }
  SUBCASE("the map out of the zero object is a dagger mono") {
    CHECK(predicates(from_zero(m)).dagger_mono);
  }
}

TEST_CASE("biproducts") {
  OmlPtr c2 = chain2();
  OmlPtr m = mo(2);

  SUBCASE("of two 2-chains is the Boolean algebra 2^2") {
    Biproduct bp = biproduct({c2, c2});
    CHECK(bp.carrier->size() == 4);
    CHECK(testing::lattice_isomorphic(*bp.carrier, *powerset(2)));
  }
  SUBCASE("of MO2 and a 2-chain has 12 elements and is orthomodular") {
    Biproduct bp = biproduct({m, c2});
    CHECK(bp.carrier->size() == 12);
    CHECK(bp.carrier->is_orthomodular());
  }
  SUBCASE("of a single factor is the factor itself") {
    Biproduct bp = biproduct({m});
    CHECK(same_structure(*bp.carrier, *m));
    for (ElemId x = 0; x < m->size(); ++x) {
      CHECK(bp.coprojections[0](x) == x);
      CHECK(bp.projections[0](x) == x);
    }
  }
  SUBCASE("of nothing is the zero object") {
    CHECK(biproduct({}).carrier == zero_object());
  }
  SUBCASE("coprojection laws") {
    Biproduct bp = biproduct({m, c2});
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(predicates(bp.coprojections[j]).dagger_mono);
      CHECK(bp.projections[j].table() == bp.coprojections[j].adjoint_table());
    }
    for (ElemId x = 0; x < m->size(); ++x)
      CHECK(bp.projections[1](bp.coprojections[0](x)) == c2->bottom());
    for (ElemId z = 0; z < bp.carrier->size(); ++z) {
      ElemId rebuilt = bp.carrier->join(bp.coprojections[0](bp.projections[0](z)),
                                        bp.coprojections[1](bp.projections[1](z)));
      CHECK(rebuilt == z);
    }
  }
  SUBCASE("orthocomplement and order are componentwise") {
    Biproduct bp = biproduct({m, c2});
    for (ElemId z = 0; z < bp.carrier->size(); ++z) {
      const ElemId o = bp.carrier->ortho(z);
      CHECK(bp.component(o, 0) == m->ortho(bp.component(z, 0)));
      CHECK(bp.component(o, 1) == c2->ortho(bp.component(z, 1)));
    }
  }
  SUBCASE("size bound") {
    OmlPtr p4 = powerset(4);
    CHECK_THROWS_AS((void)biproduct({p4, p4, p4, p4}), Error);
  }
}

TEST_CASE("copair") {
  OmlPtr m = mo(2);
  Biproduct bp = biproduct({m, m});

  SUBCASE("of two identities is the binary join") {
    LinMap h = copair(std::array{identity_map(m), identity_map(m)}, bp);
    for (ElemId z = 0; z < bp.carrier->size(); ++z)
      CHECK(h(z) == m->join(bp.component(z, 0), bp.component(z, 1)));
  }
  SUBCASE("of zero legs is the zero morphism") {
    LinMap h = copair(std::array{zero_map(m, m), zero_map(m, m)}, bp);
    CHECK(h.table() == zero_map(bp.carrier, m).table());
  }
  SUBCASE("recovers each leg through the coprojections") {
    OmlPtr c2 = chain2();
    Biproduct small = biproduct({c2, c2});
    for (const LinMap& f1 : enumerate_linmaps(c2, m))
      for (const LinMap& f2 : enumerate_linmaps(c2, m)) {
        LinMap h = copair(std::array{f1, f2}, small);
        for (ElemId x = 0; x < c2->size(); ++x) {
          CHECK(h(small.coprojections[0](x)) == f1(x));
          CHECK(h(small.coprojections[1](x)) == f2(x));
        }
        // adjoint is the tuple of the leg adjoints
        for (ElemId y = 0; y < m->size(); ++y)
          CHECK(h.adjoint_apply(y) ==
                small.from_components(std::array{f1.adjoint_apply(y),
                                                 f2.adjoint_apply(y)}));
      }
  }
  SUBCASE("legs must live on the factors") {
    OmlPtr c2 = chain2();
    CHECK_THROWS_AS((void)copair(std::array{identity_map(c2), identity_map(c2)}, bp),
                    Error);
  }
}

TEST_CASE("free objects are powerset Boolean algebras") {
  SUBCASE("no generators: the zero object") {
    FreeObject f = free_oml({});
    CHECK(f.carrier->size() == 1);
  }
  SUBCASE("two generators: 2^2 with singleton injections") {
    FreeObject f = free_oml({"a", "b"});
    CHECK(f.carrier->size() == 4);
    CHECK(same_structure(*f.carrier, *powerset(2)));
    CHECK(f.inject == std::vector<ElemId>{1, 2});
    CHECK(f.carrier->label(1) == "{a}");
    CHECK(f.carrier->label(3) == "{a,b}");
  }
  SUBCASE("three generators: orthomodular and distributive") {
    FreeObject f = free_oml({"a", "b", "c"});
    CHECK(f.carrier->is_orthomodular());
    const Oml& lat = *f.carrier;
    for (ElemId x = 0; x < lat.size(); ++x)
      for (ElemId y = 0; y < lat.size(); ++y)
        for (ElemId z = 0; z < lat.size(); ++z)
          CHECK(lat.meet(x, lat.join(y, z)) ==
                lat.join(lat.meet(x, y), lat.meet(x, z)));
  }
  SUBCASE("MO2 is not distributive, powersets are special") {
    OmlPtr m = mo(2);
    const Oml& lat = *m;
    bool distributive = true;
    for (ElemId x = 0; distributive && x < lat.size(); ++x)
      for (ElemId y = 0; y < lat.size(); ++y)
        for (ElemId z = 0; z < lat.size(); ++z)
          if (lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z))) {
            distributive = false;
            break;
          }
    CHECK_FALSE(distributive);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS((void)free_oml({"a", "a"}), Error);
    CHECK_THROWS_AS(
        (void)free_oml({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m"}),
        Error);
  }
}

TEST_CASE("free extension") {
  SUBCASE("single generator to the top of a 2-chain") {
    FreeObject free = free_oml({"a"});
    OmlPtr c2 = chain2();
    LinMap f = free_extension(free, std::array<ElemId, 1>{1}, c2);
    CHECK(f.table() == std::vector<ElemId>{0, 1});
  }
  SUBCASE("two generators onto distinct MO2 atoms join to the top") {
    FreeObject free = free_oml({"a", "b"});
    OmlPtr m = mo(2);
    LinMap f = free_extension(free, std::array<ElemId, 2>{1, 2}, m);
    CHECK(f(free.inject[0]) == 1);
    CHECK(f(free.inject[1]) == 2);
    CHECK(f(3) == m->top()); // f({a,b}) = x1 v x2 = 1
  }
  SUBCASE("adjoint is the set of generators not orthogonal to the argument") {
    FreeObject free = free_oml({"a", "b", "c"});
    OmlPtr m = mo(2);
    const std::array<ElemId, 3> g = {1, 2, 4}; // x1, x2, x2p
    LinMap f = free_extension(free, g, m);
    for (ElemId y = 0; y < m->size(); ++y) {
      std::size_t mask = 0;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (!m->orthogonal(g[i], y)) mask |= std::size_t{1} << i;
      CHECK(f.adjoint_apply(y) == static_cast<ElemId>(mask));
    }
  }
  SUBCASE("extension is unique among enumerated maps") {
    FreeObject free = free_oml({"a", "b"});
    OmlPtr m = mo(2);
    auto all = enumerate_linmaps(free.carrier, m);
    for (ElemId ga = 0; ga < m->size(); ++ga)
      for (ElemId gb = 0; gb < m->size(); ++gb) {
        LinMap f = free_extension(free, std::array{ga, gb}, m);
        std::size_t matching = 0;
        for (const LinMap& h : all)
          if (h(free.inject[0]) == ga && h(free.inject[1]) == gb) {
            ++matching;
            CHECK(h.table() == f.table());
          }
        CHECK(matching == 1);
      }
  }
}

TEST_CASE("biproducts of Boolean algebras are Boolean") {
  OmlPtr carrier = biproduct({powerset(2), powerset(2)}).carrier;
  const Oml& lat = *carrier;
  CHECK(lat.is_orthomodular());
  for (ElemId x = 0; x < lat.size(); ++x)
    for (ElemId y = 0; y < lat.size(); ++y)
      for (ElemId z = 0; z < lat.size(); ++z)
        CHECK(lat.meet(x, lat.join(y, z)) == lat.join(lat.meet(x, y), lat.meet(x, z)));
}
