#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "torusfloer/dmodule.hpp"

using namespace tf;

TEST_CASE("structure relation holds on the bundled corpus") {
  for (const char* f : {"dinf.mod", "dinf_var.mod", "unknot.mod",
                        "ex35_d1.mod", "ex35_d2.mod", "trefoil.mod",
                        "fig8.mod", "nine46.mod", "az.mod", "az_nodash.mod"}) {
    INFO(f);
    CHECK(loadMod(f).valid());
  }
}

TEST_CASE("validate flags r1 r2 composition") {
  TypeDStructure d;
  auto x = d.addGen("x", Idem::Zero);
  auto y = d.addGen("y", Idem::One);
  auto z = d.addGen("z", Idem::Zero);
  d.addEdge(x, EdgeLabel::makeChord(Gen::R1), y);
  d.addEdge(y, EdgeLabel::makeChord(Gen::R2), z);
  auto report = d.validate();
  REQUIRE(report.size() == 1);
  CHECK(report[0].x == x);
  CHECK(report[0].z == z);
  CHECK(report[0].residue == AlgebraElement(Gen::R12));
}

TEST_CASE("idempotent-incompatible edges are rejected") {
  TypeDStructure d;
  d.addGen("x", Idem::Zero);
  d.addGen("y", Idem::Zero);
  CHECK_THROWS(d.addEdge("x", "r1", "y"));  // r1 ends at i1
  CHECK_THROWS(TypeDStructure::parse("gen x i0\ngen y i1\nedge x unit y\n"));
}

TEST_CASE("reduce leaves reduced structures alone") {
  auto d = loadMod("trefoil.mod");
  CHECK(d.reduce() == d);
}

TEST_CASE("reduce cancels an isolated unit pair to nothing") {
  TypeDStructure d;
  auto x = d.addGen("x", Idem::Zero);
  auto y = d.addGen("y", Idem::Zero);
  d.addEdge(x, EdgeLabel::makeUnit(), y);
  auto r = d.reduce();
  CHECK(r.size() == 0);
}

TEST_CASE("reduce of the dashed AZ structure") {
  auto d = loadMod("az.mod");
  auto r = d.reduce();
  CHECK(r.valid());
  CHECK(r.size() == 1);
  // The zig-zag through both dashed pairs leaves c with a r23 loop.
  REQUIRE(r.genIndex("c"));
  auto edges = r.edges();
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].label == EdgeLabel::makeChord(Gen::R23));
}

TEST_CASE("validate passes after reduce whenever it passed before") {
  for (const char* f : {"az.mod", "trefoil.mod", "nine46.mod"}) {
    auto d = loadMod(f);
    REQUIRE(d.valid());
    CHECK(d.reduce().valid());
  }
}

TEST_CASE("type-A operations of the r23 loop follow the dual reading") {
  auto d = loadMod("dinf.mod");
  TypeAView a(d);
  bool truncated = false;
  auto ops = a.operationsFrom(0, 2, &truncated);
  CHECK(truncated);
  REQUIRE(ops.size() == 2);
  CHECK(ops[0].chords == std::vector<Gen>{Gen::R2, Gen::R1});
  CHECK(ops[1].chords == std::vector<Gen>{Gen::R2, Gen::R12, Gen::R1});
}

TEST_CASE("type-A operations of an acyclic structure") {
  auto d = loadMod("ex35_d2.mod");
  TypeAView a(d);
  bool truncated = true;
  auto ops = a.operationsFrom(*d.genIndex("a"), 4, &truncated);
  CHECK_FALSE(truncated);
  // Paths: a->b ("3"->dual "1"), a->c ("1"->dual "3"), a->b->c
  // ("323"->dual "121" -> (r12, r1)... the dual of "323" is "121" which
  // splits as (r12, r1)).
  REQUIRE(ops.size() == 3);
  for (auto& op : ops) {
    if (op.dst == *d.genIndex("b")) {
      CHECK(op.chords == std::vector<Gen>{Gen::R1});
    }
  }
}

TEST_CASE("isolated generator has no operations and no truncation") {
  auto d = loadMod("dinf_var.mod");
  TypeAView a(d);
  bool truncated = true;
  auto ops = a.operationsFrom(0, 5, &truncated);
  CHECK(ops.empty());
  CHECK_FALSE(truncated);
}

TEST_CASE("box tensor: S^3 from the two solid tori") {
  TypeAView a(loadMod("dinf.mod"));
  auto d = loadMod("unknot.mod");
  auto box = boxTensor(a, d, 10);
  CHECK(box.convergent);
  REQUIRE(box.complex.size() == 1);
  CHECK(box.complex.dSquaredZero());
  CHECK(box.complex.hatHomologyRank() == 1);
}

TEST_CASE("box tensor: trefoil knot Floer rank 3") {
  TypeAView a(loadMod("dinf.mod"));
  auto d = loadMod("trefoil.mod");
  auto box = boxTensor(a, d, 10);
  CHECK(box.convergent);
  CHECK(box.complex.size() == 3);
  CHECK(box.complex.hatHomologyRank() == 3);
}

TEST_CASE("box tensor: empty D side gives the empty complex") {
  TypeAView a(loadMod("dinf.mod"));
  TypeDStructure empty;
  auto box = boxTensor(a, empty, 5);
  CHECK(box.convergent);
  CHECK(box.complex.size() == 0);
}

TEST_CASE("box tensor generator count matches the idempotent count formula") {
  TypeAView a(loadMod("ex35_d1.mod"));
  for (const char* f : {"trefoil.mod", "fig8.mod", "nine46.mod"}) {
    auto d = loadMod(f);
    auto box = boxTensor(a, d, 8);
    size_t expect = 0;
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < d.size(); ++j)
        if (a.idem(i) == d.idem(j)) ++expect;
    CHECK(box.complex.size() == expect);
  }
}

TEST_CASE("box tensor d^2 vanishes on corpus pairings") {
  TypeAView a(loadMod("dinf.mod"));
  for (const char* f :
       {"unknot.mod", "trefoil.mod", "fig8.mod", "nine46.mod"}) {
    auto box = boxTensor(a, loadMod(f), 8);
    INFO(f);
    CHECK(box.convergent);
    CHECK(box.complex.dSquaredZero());
  }
}

TEST_CASE("module file format round-trips") {
  for (const char* f : {"trefoil.mod", "az.mod", "nine46.mod"}) {
    auto d = loadMod(f);
    CHECK(TypeDStructure::parse(d.print()) == d);
  }
}

TEST_CASE("parser reports line numbers") {
  try {
    TypeDStructure::parse("gen x i0\nedge x r9 x\n");
    FAIL("expected parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
