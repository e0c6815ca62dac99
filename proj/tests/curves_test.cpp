#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "torusfloer/curves.hpp"

using namespace tf;

namespace {

// Graph isomorphism check up to renaming, matching idempotents and labels.
// Both structures here are loop type with small size, so brute force over
// compatible assignments is fine.
bool isomorphic(const TypeDStructure& a, const TypeDStructure& b) {
  if (a.size() != b.size() || a.edges().size() != b.edges().size())
    return false;
  std::vector<size_t> perm(a.size());
  std::vector<bool> used(b.size(), false);
  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == a.size()) {
      for (auto& e : a.edges()) {
        DEdge f{perm[e.src], e.label, perm[e.dst]};
        bool found = false;
        for (auto& g : b.edges())
          if (g == f) found = true;
        if (!found) return false;
      }
      return true;
    }
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j] || a.idem(i) != b.idem(j)) continue;
      used[j] = true;
      perm[i] = j;
      if (go(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return go(0);
}

}  // namespace

TEST_CASE("plain vertical and horizontal lines read back to the loops") {
  auto vert = lineSlope(0, 1);
  auto rbV = readbackModule(vert);
  CHECK(isomorphic(rbV.module, loadMod("dinf.mod")));
  auto horiz = lineSlope(1, 0);
  auto rbH = readbackModule(horiz);
  CHECK(isomorphic(rbH.module, loadMod("unknot.mod")));
}

TEST_CASE("realize then readback is the identity on the corpus") {
  for (const char* f : {"dinf.mod", "unknot.mod", "ex35_d1.mod", "ex35_d2.mod",
                        "trefoil.mod", "fig8.mod", "nine46.mod"}) {
    INFO(f);
    auto d = loadMod(f);
    auto t = realizeTypeD(d);
    auto rb = readbackModule(t.curve);
    CHECK(isomorphic(rb.module, d));
  }
}

TEST_CASE("structures that need crossover arrows are flagged") {
  // the AZ module has generators of valence one; it is not loop type
  CHECK_THROWS_WITH(realizeTypeD(loadMod("az_nodash.mod")),
                    Catch::Matchers::ContainsSubstring("not loop type"));
}

TEST_CASE("realizations validate and stay valid after tightening") {
  for (const char* f : {"trefoil.mod", "fig8.mod", "nine46.mod"}) {
    auto d = loadMod(f);
    auto t = realizeTypeD(d);
    auto tightened = pullTight(t.curve);
    auto rb = readbackModule(tightened);
    CHECK(isomorphic(rb.module, d));
  }
}

TEST_CASE("type-A realization is the reflected type-D realization") {
  auto d = loadMod("dinf.mod");
  auto a = realizeTypeA(d);
  // the reflected vertical loop is horizontal
  REQUIRE(a.components.size() == 1);
  CHECK(a.components[0].period.y == 0);
  CHECK(a.components[0].period.x != 0);
  // and reads back to the r12 loop after the reflection's letter swap
  auto rb = readbackModule(a);
  CHECK(isomorphic(rb.module, loadMod("unknot.mod")));
}

TEST_CASE("pullTight is idempotent") {
  for (const char* f : {"trefoil.mod", "nine46.mod"}) {
    auto t = realizeTypeD(loadMod(f));
    auto once = pullTight(t.curve);
    auto twice = pullTight(once);
    CHECK(once.print() == twice.print());
  }
}

TEST_CASE("pullTight removes finger wiggles") {
  auto line = lineSlope(0, 1);
  Multicurve wiggled = line;
  // subdivide the single segment and push a zigzag that stays clear of the
  // marked points
  auto& comp = wiggled.components[0];
  comp.verts = {Pt{Rat(1, 2), Rat(0)}, Pt{Rat(7, 16), Rat(1, 4)},
                Pt{Rat(9, 16), Rat(1, 2)}, Pt{Rat(1, 2), Rat(3, 4)}};
  auto tight = pullTight(wiggled);
  CHECK(tight.components[0].verts.size() == 1);
}

TEST_CASE("line slopes intersect by determinant") {
  // |p q' - p' q| transverse points between two lines
  auto count = [](long long p, long long q, long long p2, long long q2) {
    // count crossings in the fundamental domain via the resolved crossings
    // of the first curve against translates handled in the floer layer;
    // here a direct determinant check suffices for primitive vectors
    return std::abs(p * q2 - p2 * q);
  };
  CHECK(count(0, 1, 1, 0) == 1);
  CHECK(count(1, 2, 1, 0) == 2);
}

TEST_CASE("tau of the standard curves") {
  CHECK(tau(realizeTypeD(loadMod("unknot.mod")).curve) == 0);
  CHECK(tau(realizeTypeD(loadMod("trefoil.mod")).curve) == 1);
  CHECK(tau(realizeTypeD(loadMod("fig8.mod")).curve) == 0);
  CHECK(tau(realizeTypeD(loadMod("nine46.mod")).curve) == 0);
}

TEST_CASE("slopeAtAxis of the identity pattern is positive infinity") {
  auto s = slopeAtAxis(lineSlope(0, 1));
  CHECK(s.infinite);
  CHECK(s.positive());
}

TEST_CASE("slopeAtAxis rejects the horizontal test curve") {
  CHECK_THROWS(slopeAtAxis(lineSlope(1, 0)));
}

TEST_CASE("transpose is an involution and swaps the two lines") {
  auto v = lineSlope(0, 1);
  auto h = transposeXY(v);
  CHECK(h.components[0].period.x != 0);
  CHECK(h.components[0].period.y == 0);
  auto vv = transposeXY(h);
  CHECK(vv.print() == v.print());
}

TEST_CASE("azRotate is an involution on curve data") {
  auto t = realizeTypeD(loadMod("fig8.mod"));
  auto r = azRotate(azRotate(t.curve));
  CHECK(r.print() == t.curve.print());
}

TEST_CASE("azRotate preserves the unlabeled readback class") {
  for (const char* f : {"unknot.mod", "trefoil.mod", "fig8.mod"}) {
    auto t = realizeTypeD(loadMod(f));
    auto rb1 = readbackModule(t.curve);
    auto rb2 = readbackModule(azRotate(t.curve));
    INFO(f);
    CHECK(isomorphic(rb1.module, rb2.module));
  }
}

TEST_CASE("curve file format round-trips") {
  auto t = realizeTypeD(loadMod("trefoil.mod"));
  auto printed = t.curve.print();
  auto parsed = Multicurve::parse(printed);
  CHECK(parsed.print() == printed);
}

TEST_CASE("curves through punctures are rejected") {
  Multicurve bad;
  Component c;
  c.period = {0, 1};
  c.verts = {Pt{Rat(0), Rat(1, 2)}};
  bad.components.push_back(c);
  CHECK_THROWS(readbackModule(bad));
}
