#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "torusfloer/morphisms.hpp"

using namespace tf;

namespace {

MorphismElement basic(const MorComplex& mc, const std::string& u,
                      const std::string& rho, const std::string& v) {
  MorphismElement f;
  f.toggle({*mc.source().genIndex(u), *parseGenName(rho),
            *mc.target().genIndex(v)});
  return f;
}

}  // namespace

TEST_CASE("Mor basis for the two-curve example has five elements") {
  auto d1 = loadMod("ex35_d1.mod");
  auto d2 = loadMod("ex35_d2.mod");
  MorComplex mc(d1, d2);
  CHECK(mc.basis().size() == 5);
}

TEST_CASE("Mor basis of a one-generator i0 structure with itself") {
  auto d = loadMod("unknot.mod");
  MorComplex mc(d, d);
  CHECK(mc.basis().size() == 2);  // identity via i0, and u -> r12 u
}

TEST_CASE("Mor basis from the empty structure is empty") {
  TypeDStructure empty;
  auto d2 = loadMod("ex35_d2.mod");
  MorComplex mc(empty, d2);
  CHECK(mc.basis().empty());
}

TEST_CASE("Mor differential expands as post- plus pre-composition") {
  auto d1 = loadMod("ex35_d1.mod");
  auto d2 = loadMod("ex35_d2.mod");
  MorComplex mc(d1, d2);
  auto f = basic(mc, "x", "i1", "b");
  auto df = mc.differential(f);
  auto expect = basic(mc, "x", "r23", "b") + basic(mc, "x", "r23", "c");
  CHECK(df == expect);
  CHECK(mc.differential(basic(mc, "x", "r23", "c")).isZero());
}

TEST_CASE("identity morphism is a cycle") {
  for (const char* f : {"trefoil.mod", "nine46.mod", "az.mod"}) {
    auto d = loadMod(f);
    MorComplex mc(d, d);
    CHECK(mc.differential(identityMorphism(d)).isZero());
  }
}

TEST_CASE("Mor homology of the two-curve example is rank one") {
  auto d1 = loadMod("ex35_d1.mod");
  auto d2 = loadMod("ex35_d2.mod");
  MorComplex mc(d1, d2);
  auto h = mc.homology();
  CHECK(h.rank == 1);
  auto rep = basic(mc, "x", "i1", "b") + basic(mc, "x", "i1", "c") +
             basic(mc, "x", "r2", "a");
  CHECK(mc.isCycle(rep));
  CHECK_FALSE(mc.isBoundary(rep));
  REQUIRE(h.representatives.size() == 1);
  CHECK(mc.homotopic(h.representatives[0], rep));
}

TEST_CASE("Mor(D,D) of the unknot structure contains the identity class") {
  auto d = loadMod("unknot.mod");
  MorComplex mc(d, d);
  auto h = mc.homology();
  CHECK(h.rank >= 1);
  CHECK_FALSE(mc.isBoundary(identityMorphism(d)));
}

TEST_CASE("d^2 vanishes on Mor complexes over the corpus") {
  std::vector<std::string> files = {"dinf.mod",    "dinf_var.mod", "unknot.mod",
                                    "ex35_d1.mod", "ex35_d2.mod",  "trefoil.mod",
                                    "fig8.mod",    "az.mod",       "az_nodash.mod"};
  for (auto& f1 : files)
    for (auto& f2 : files) {
      MorComplex mc(loadMod(f1), loadMod(f2));
      INFO(f1 << " -> " << f2);
      for (auto& b : mc.basis()) {
        MorphismElement f;
        f.toggle(b);
        CHECK(mc.differential(mc.differential(f)).isZero());
      }
    }
}

TEST_CASE("composition of basic morphisms multiplies coefficients") {
  auto d = loadMod("ex35_d2.mod");  // used as all three structures
  MorphismElement f, g;
  f.toggle({0, Gen::R1, 1});  // a -> r1 b   (a is i0, b is i1)
  g.toggle({1, Gen::R2, 0});  // b -> r2 a
  auto fg = compose2(f, g);
  REQUIRE(fg.support().size() == 1);
  CHECK(fg.support()[0].coeff == Gen::R12);
  auto gf = compose2(g, f);
  CHECK(gf.isZero());  // r2 r1 = 0
}

TEST_CASE("identity is a two-sided unit for composition") {
  auto d1 = loadMod("trefoil.mod");
  auto d2 = loadMod("fig8.mod");
  MorComplex mc(d1, d2);
  auto id1 = identityMorphism(d1);
  auto id2 = identityMorphism(d2);
  for (auto& b : mc.basis()) {
    MorphismElement f;
    f.toggle(b);
    CHECK(compose2(id1, f) == f);
    CHECK(compose2(f, id2) == f);
  }
}

TEST_CASE("Leibniz rule for composition over the example pair") {
  auto d0 = loadMod("ex35_d1.mod");
  auto d1 = loadMod("ex35_d2.mod");
  MorComplex m01(d0, d1), m11(d1, d1), m01b(d0, d1);
  // f in Mor(d0,d1), g in Mor(d1,d1): d(fg) = (df)g + f(dg)
  for (auto& bf : m01.basis())
    for (auto& bg : m11.basis()) {
      MorphismElement f, g;
      f.toggle(bf);
      g.toggle(bg);
      auto lhs = m01b.differential(compose2(f, g));
      auto rhs = compose2(m01.differential(f), g) +
                 compose2(f, m11.differential(g));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("composition is associative on basic morphisms") {
  auto d = loadMod("az.mod");
  MorComplex mc(d, d);
  auto& basis = mc.basis();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      for (size_t k = 0; k < basis.size(); ++k) {
        MorphismElement f, g, h;
        f.toggle(basis[i]);
        g.toggle(basis[j]);
        h.toggle(basis[k]);
        CHECK(compose2(compose2(f, g), h) == compose2(f, compose2(g, h)));
      }
}

TEST_CASE("cone of zero is the disjoint union") {
  auto d1 = loadMod("dinf.mod");
  auto d2 = loadMod("unknot.mod");
  auto c = cone(d1, d2, MorphismElement(), true);
  CHECK(c.size() == d1.size() + d2.size());
  CHECK(c.edges().size() == d1.edges().size() + d2.edges().size());
  CHECK(c.valid());
}

TEST_CASE("cone of the example representative validates") {
  auto d1 = loadMod("ex35_d1.mod");
  auto d2 = loadMod("ex35_d2.mod");
  MorComplex mc(d1, d2);
  auto rep = basic(mc, "x", "i1", "b") + basic(mc, "x", "i1", "c") +
             basic(mc, "x", "r2", "a");
  auto c = cone(d1, d2, rep, true);
  CHECK(c.size() == 4);
  CHECK(c.valid());
}

TEST_CASE("cone of a non-cycle with the flag set throws") {
  auto d1 = loadMod("ex35_d1.mod");
  auto d2 = loadMod("ex35_d2.mod");
  MorComplex mc(d1, d2);
  auto f = basic(mc, "x", "i1", "b");
  REQUIRE_FALSE(mc.isCycle(f));
  CHECK_THROWS(cone(d1, d2, f, true));
}

TEST_CASE("evaluation of the identity morphism is the identity matrix") {
  TypeAView a(loadMod("dinf.mod"));
  auto d = loadMod("trefoil.mod");
  auto ev = evaluateIdBoxF(a, d, d, identityMorphism(d), 8);
  REQUIRE(ev.convergent);
  REQUIRE(ev.source.size() == ev.target.size());
  for (size_t i = 0; i < ev.source.size(); ++i)
    for (size_t j = 0; j < ev.target.size(); ++j)
      CHECK(ev.matrix[i].get(j) == (i == j));
}

TEST_CASE("evaluation is a chain map for the example cycle") {
  auto d1 = loadMod("ex35_d1.mod");
  auto d2 = loadMod("ex35_d2.mod");
  MorComplex mc(d1, d2);
  auto rep = basic(mc, "x", "i1", "b") + basic(mc, "x", "i1", "c") +
             basic(mc, "x", "r2", "a");
  TypeAView a(loadMod("dinf.mod"));
  auto ev = evaluateIdBoxF(a, d1, d2, rep, 8);
  REQUIRE(ev.convergent);
  auto dS = ev.source.hatMatrix();
  auto dT = ev.target.hatMatrix();
  // F o dS = dT o F
  for (size_t x = 0; x < ev.source.size(); ++x) {
    F2Vec lhs(ev.target.size()), rhs(ev.target.size());
    for (size_t y = 0; y < ev.source.size(); ++y)
      if (dS[x].get(y)) lhs ^= ev.matrix[y];
    for (size_t y = 0; y < ev.target.size(); ++y)
      if (ev.matrix[x].get(y)) rhs ^= dT[y];
    CHECK(lhs == rhs);
  }
}

TEST_CASE("AZ data with dashed edges dropped carries the two classes") {
  auto dv = loadMod("dinf_var.mod");
  auto az = loadMod("az_nodash.mod");
  MorComplex mc(dv, az);
  auto fa = basic(mc, "x", "i1", "a");
  auto fe = basic(mc, "x", "i1", "e");
  CHECK(mc.isCycle(fa));
  CHECK(mc.isCycle(fe));
  CHECK_FALSE(mc.isBoundary(fa));
  CHECK_FALSE(mc.isBoundary(fe));
  CHECK_FALSE(mc.homotopic(fa, fe));
  auto h = mc.homology();
  CHECK(h.rank == 4);  // recorded: includes the r23-shifted classes
}

TEST_CASE("with dashed edges kept, x -> a is not a cycle") {
  auto dv = loadMod("dinf_var.mod");
  auto az = loadMod("az.mod");
  MorComplex mc(dv, az);
  auto fa = basic(mc, "x", "i1", "a");
  CHECK_FALSE(mc.isCycle(fa));
}

TEST_CASE("nullhomotopy certificates verify") {
  auto d1 = loadMod("ex35_d1.mod");
  auto d2 = loadMod("ex35_d2.mod");
  MorComplex mc(d1, d2);
  // d(x -> i1 b) is a boundary by construction; its certificate checks out.
  auto f = basic(mc, "x", "i1", "b");
  auto df = mc.differential(f);
  auto h = mc.nullhomotopy(df);
  REQUIRE(h);
  CHECK(mc.differential(*h) == df);
}
