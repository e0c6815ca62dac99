// Scratch inspector used during development; not installed.
#include <fstream>
#include <iostream>
#include <sstream>

#include "torusfloer/floer.hpp"

using namespace tf;

static TypeDStructure load(const std::string& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return TypeDStructure::parse(ss.str());
}

int main(int argc, char** argv) {
  std::string which = argc > 1 ? argv[1] : "trefoil";
  auto d = load("data/" + which + ".mod");
  auto t = realizeTypeD(d);
  std::cout << "== curve ==\n" << t.curve.print();
  auto beta = lineSlope(0, 1);
  auto pc = pairComplex(t.curve, beta, Flavor::Full);
  std::cout << "== pairing with the vertical line ==\n";
  std::cout << pc.complex.print();
  CurvePair pair(t.curve, beta);
  for (size_t i = 0; i < pair.points().size(); ++i) {
    auto& tp = pair.points()[i];
    std::cout << "p" << i << " at " << tp.rep.str() << " comps "
              << tp.comp1 << "," << tp.comp2 << "\n";
  }
  std::cout << "== tight ==\n" << pullTight(t.curve).print();
  // verbose re-enumeration with loop dumps
  {
    const auto& pts = pair.points();
    for (size_t xi = 0; xi < pts.size(); ++xi) {
      const TorusPoint& X = pts[xi];
      const Component& comp1 = pair.curve1().components[X.comp1];
      const Component& comp2 = pair.curve2().components[X.comp2];
      Strand s1 = materialize(comp1, X.comp1, {0, 0}, pair.window());
      Strand s2 = materialize(comp2, X.comp2, X.shift2, pair.window());
      auto hits = strandIntersections(s1, s2);
      for (auto& Z : hits) {
        for (int d1 : {+1, -1})
          for (int d2 : {+1, -1}) {
            auto arc1 = strandArc(s1, X.pos1, Z.on1, d1, s1.segCount());
            if (!arc1) continue;
            auto arc2 = strandArc(s2, X.pos2, Z.on2, d2, s2.segCount());
            if (!arc2) continue;
            auto loop = joinLoop(*arc1, *arc2);
            if (loop.size() < 3) continue;
            if (sign(signedArea2(loop)) <= 0) continue;
            if (!isSimpleLoop(loop)) continue;
            if (!convexAt(loop, X.pos1.p) || !convexAt(loop, Z.p)) continue;
            std::cout << "candidate from p" << xi << " dirs " << d1 << ","
                      << d2 << " to " << Z.p.str() << " loop:";
            for (auto& p : loop) std::cout << " " << p.str();
            try {
              auto w = countMarkedPoints(loop);
              std::cout << " nw=" << w.nw << " nz=" << w.nz;
            } catch (const std::exception& e) {
              std::cout << " [" << e.what() << "]";
            }
            std::cout << "\n";
          }
      }
    }
  }
  std::cout << "d^2 = 0: " << pc.complex.dSquaredZero() << "\n";
  std::cout << "hat rank: "
            << pairComplex(t.curve, beta, Flavor::Hat).complex.hatHomologyRank()
            << "\n";
  try {
    auto g = pc.complex;
    assignAlexanderGradings(g);
    std::cout << "== graded ==\n" << g.print();
  } catch (const std::exception& e) {
    std::cout << "grading failed: " << e.what() << "\n";
  }
  return 0;
}
