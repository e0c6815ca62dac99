#pragma once

// Geometric Floer calculus on tight multicurves: transverse intersections,
// embedded bigons with basepoint weights, triangles with designated
// (false) corners, pairing complexes over F2[U,V], and the induced
// evaluation maps.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusfloer/complexes.hpp"
#include "torusfloer/curves.hpp"
#include "torusfloer/f2.hpp"

namespace tf {

enum class Flavor { Hat, Minus, Full };

inline Flavor parseFlavor(const std::string& s) {
  if (s == "hat") return Flavor::Hat;
  if (s == "minus") return Flavor::Minus;
  if (s == "full") return Flavor::Full;
  throw std::invalid_argument("unknown flavor " + s);
}

// A materialized lift of one component over a window: an open polyline for
// wrapping components (repeated periods) or a closed polygon (compact).
struct Strand {
  size_t compIndex;
  IVec translate;        // lattice offset of this lift
  std::vector<Pt> pts;   // for compact: closed (last->first); else open chain
  bool closed = false;
  long long baseOffset = 0;  // index into pts where the base period starts

  size_t segCount() const { return closed ? pts.size() : pts.size() - 1; }
  Pt segA(size_t i) const { return pts[i]; }
  Pt segB(size_t i) const { return pts[(i + 1) % pts.size()]; }
};

inline Strand materialize(const Component& comp, size_t compIndex,
                          IVec translate, long long window) {
  Strand s;
  s.compIndex = compIndex;
  s.translate = translate;
  Pt t{Rat(translate.x), Rat(translate.y)};
  if (comp.compact()) {
    s.closed = true;
    for (auto& v : comp.verts) s.pts.push_back(v + t);
  } else {
    s.closed = false;
    long long K = window;
    for (long long k = -K; k <= K; ++k) {
      for (auto& v : comp.verts) {
        s.pts.push_back({v.x + Rat(k * comp.period.x) + t.x,
                         v.y + Rat(k * comp.period.y) + t.y});
      }
    }
    s.baseOffset = (long long)comp.verts.size() * K;
  }
  return s;
}

// Position along a strand: segment index plus exact point.
struct StrandPos {
  size_t seg;
  Pt p;
};

// An intersection point between two strands.
struct StrandHit {
  StrandPos on1, on2;
  Pt p;
};

inline std::vector<StrandHit> strandIntersections(const Strand& s1,
                                                  const Strand& s2) {
  std::vector<StrandHit> out;
  for (size_t i = 0; i < s1.segCount(); ++i)
    for (size_t j = 0; j < s2.segCount(); ++j) {
      auto h = segIntersect(s1.segA(i), s1.segB(i), s2.segA(j), s2.segB(j));
      if (h.degenerate)
        throw std::invalid_argument(
            "tangential or degenerate configuration; perturb the input");
      if (h.hit) out.push_back({{i, h.p}, {j, h.p}, h.p});
    }
  std::sort(out.begin(), out.end(), [](const StrandHit& a, const StrandHit& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.on1.seg < b.on1.seg;
  });
  return out;
}

inline Pt reduceMod1(const Pt& p) {
  return {p.x - Rat(p.x.floor()), p.y - Rat(p.y.floor())};
}

// ---------------------------------------------------------------------------
// intersections of two multicurves in the torus

struct TorusPoint {
  Pt rep;                 // representative in [0,1)^2
  size_t comp1, comp2;    // component indices
  // canonical lift data: hit of (comp1 base strand, comp2 + shift)
  IVec shift2;
  StrandPos pos1, pos2;
  // local tags
  bool tagVertical = false;  // direction of c2 strand at the point, unused
};

struct PairingConfig {
  long long window = 0;  // 0 = auto
};

class CurvePair {
 public:
  CurvePair(const Multicurve& c1, const Multicurve& c2, PairingConfig cfg = {})
      : c1_(pullTight(c1)), c2_(pullTight(c2)) {
    window_ = cfg.window ? cfg.window : (c1_.wrap() + c2_.wrap() + 2);
    computePoints();
  }

  const Multicurve& curve1() const { return c1_; }
  const Multicurve& curve2() const { return c2_; }
  long long window() const { return window_; }
  const std::vector<TorusPoint>& points() const { return points_; }

  // Parallel wrapping component pairs with no intersections (the pairing of
  // a curve with an isotopic translate): contribute a two-generator summand.
  struct ParallelPair {
    size_t comp1, comp2;
  };
  const std::vector<ParallelPair>& parallelPairs() const { return parallel_; }

 private:
  void computePoints() {
    std::set<std::pair<std::pair<long long, long long>,
                       std::pair<long long, long long>>>
        seen;
    for (size_t i = 0; i < c1_.components.size(); ++i) {
      const Component& a = c1_.components[i];
      Strand sa = materialize(a, i, {0, 0}, window_);
      for (size_t j = 0; j < c2_.components.size(); ++j) {
        const Component& b = c2_.components[j];
        bool any = false;
        for (long long vx = -window_; vx <= window_; ++vx)
          for (long long vy = -window_; vy <= window_; ++vy) {
            IVec v{vx, vy};
            Strand sb = materialize(b, j, v, window_);
            auto hits = strandIntersections(sa, sb);
            for (auto& h : hits) {
              // keep hits whose point lies in the base cell band of sa to
              // cut the deck action
              Pt q = reduceMod1(h.p);
              auto key = std::make_pair(
                  std::make_pair(q.x.n * 1000000 + q.x.d, q.y.n * 1000000 + q.y.d),
                  std::make_pair((long long)i, (long long)j));
              if (seen.count(key)) continue;
              seen.insert(key);
              TorusPoint tp;
              tp.rep = q;
              tp.comp1 = i;
              tp.comp2 = j;
              tp.shift2 = v;
              tp.pos1 = h.on1;
              tp.pos2 = h.on2;
              points_.push_back(tp);
              any = true;
            }
          }
        if (!any && !a.compact() && !b.compact()) {
          long long det = a.period.x * b.period.y - a.period.y * b.period.x;
          if (det == 0) parallel_.push_back({i, j});
        }
      }
    }
    std::sort(points_.begin(), points_.end(),
              [](const TorusPoint& a, const TorusPoint& b) {
                if (a.comp1 != b.comp1) return a.comp1 < b.comp1;
                if (a.comp2 != b.comp2) return a.comp2 < b.comp2;
                return a.rep < b.rep;
              });
  }

  Multicurve c1_, c2_;
  long long window_;
  std::vector<TorusPoint> points_;
  std::vector<ParallelPair> parallel_;
};

// ---------------------------------------------------------------------------
// embedded disks

struct DiskWeights {
  long long nw = 0, nz = 0;
};

// Counts punctures (z) and w-basepoints inside a simple closed loop.
inline DiskWeights countMarkedPoints(const std::vector<Pt>& loop) {
  DiskWeights out;
  Rat xlo = loop[0].x, xhi = loop[0].x, ylo = loop[0].y, yhi = loop[0].y;
  for (auto& p : loop) {
    if (p.x < xlo) xlo = p.x;
    if (xhi < p.x) xhi = p.x;
    if (p.y < ylo) ylo = p.y;
    if (yhi < p.y) yhi = p.y;
  }
  for (long long x = xlo.floor() - 1; Rat(x) <= xhi + Rat(1); ++x)
    for (long long y = ylo.floor() - 1; Rat(y) <= yhi + Rat(1); ++y) {
      Pt z{Rat(x), Rat(y)};
      Pt w{Rat(x) + kBasepointOffset.x, Rat(y) + kBasepointOffset.y};
      if (onPolyline(loop, z) || onPolyline(loop, w))
        throw std::invalid_argument("marked point on a disk boundary");
      if (windingNumber(loop, z) != 0) ++out.nz;
      if (windingNumber(loop, w) != 0) ++out.nw;
    }
  return out;
}

// Builds the arc of a strand from position a to position b in the given
// direction (+1 along increasing segment index).  Returns the arc vertex
// list including both endpoints, or nullopt if the walk runs off an open
// chain or exceeds maxSegs.
inline std::optional<std::vector<Pt>> strandArc(const Strand& s,
                                                const StrandPos& a,
                                                const StrandPos& b, int dir,
                                                size_t maxSegs) {
  auto along = [&](size_t i, const Pt& q) -> Rat {
    Pt sv = s.segB(i) - s.segA(i);
    if (sign(sv.x) != 0) return (q.x - s.segA(i).x) / sv.x;
    return (q.y - s.segA(i).y) / sv.y;
  };
  std::vector<Pt> out{a.p};
  size_t seg = a.seg;
  Rat t = along(seg, a.p);
  size_t n = s.segCount();
  for (size_t steps = 0; steps <= maxSegs; ++steps) {
    if (seg == b.seg) {
      Rat tb = along(seg, b.p);
      if ((dir > 0 && t < tb) || (dir < 0 && tb < t)) {
        out.push_back(b.p);
        return out;
      }
    }
    if (dir > 0) {
      out.push_back(s.segB(seg));
      if (s.closed) seg = (seg + 1) % n;
      else if (seg + 1 < n) ++seg;
      else return std::nullopt;
      t = Rat(0);
    } else {
      out.push_back(s.segA(seg));
      if (s.closed) seg = (seg + n - 1) % n;
      else if (seg > 0) --seg;
      else return std::nullopt;
      t = Rat(1);
    }
  }
  return std::nullopt;
}

// Joins two arcs sharing endpoints into a closed loop (arc1 from X to Y,
// arc2 from X to Y; the loop runs arc1 then arc2 reversed).
inline std::vector<Pt> joinLoop(const std::vector<Pt>& arc1,
                                const std::vector<Pt>& arc2) {
  std::vector<Pt> loop = arc1;
  for (size_t i = arc2.size() - 1; i-- > 1;) loop.push_back(arc2[i]);
  // strip consecutive duplicates
  std::vector<Pt> clean;
  for (auto& p : loop)
    if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
  while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
  return clean;
}

// Convexity of the disk at a corner of the loop: the interior angle there
// is less than pi.  The loop must be oriented counterclockwise.
inline bool convexAt(const std::vector<Pt>& loop, const Pt& corner) {
  size_t n = loop.size();
  for (size_t i = 0; i < n; ++i) {
    if (!(loop[i] == corner)) continue;
    const Pt& prev = loop[(i + n - 1) % n];
    const Pt& next = loop[(i + 1) % n];
    return sign(cross(prev, corner, next)) > 0;
  }
  return false;
}

// ---------------------------------------------------------------------------
// bigon enumeration and the pairing complex

struct Bigon {
  size_t from, to;  // indices into CurvePair::points()
  DiskWeights weights;
};

// All embedded bigons between the two curves; each contributes to the
// differential from its convex-corner source.  The loop traversed
// (c1: from -> to) then (c2: to -> from) is counterclockwise.
inline std::vector<Bigon> enumerateBigons(const CurvePair& pair) {
  std::vector<Bigon> out;
  const auto& pts = pair.points();
  for (size_t xi = 0; xi < pts.size(); ++xi) {
    const TorusPoint& X = pts[xi];
    const Component& comp1 = pair.curve1().components[X.comp1];
    const Component& comp2 = pair.curve2().components[X.comp2];
    Strand s1 = materialize(comp1, X.comp1, {0, 0}, pair.window());
    Strand s2 = materialize(comp2, X.comp2, X.shift2, pair.window());
    auto hits = strandIntersections(s1, s2);
    // locate X among the hits
    for (auto& Z : hits) {
      // candidate target corner (may equal X's point only at a translate)
      for (int d1 : {+1, -1})
        for (int d2 : {+1, -1}) {
          if (Z.p == X.pos1.p && d1 == +1 && d2 == +1) continue;
          auto arc1 = strandArc(s1, X.pos1, Z.on1, d1, s1.segCount());
          if (!arc1) continue;
          auto arc2 = strandArc(s2, X.pos2, Z.on2, d2, s2.segCount());
          if (!arc2) continue;
          auto loop = joinLoop(*arc1, *arc2);
          if (loop.size() < 3) continue;
          if (sign(signedArea2(loop)) <= 0) continue;  // orientation rule
          if (!isSimpleLoop(loop)) continue;
          if (!convexAt(loop, X.pos1.p) || !convexAt(loop, Z.p)) continue;
          DiskWeights w;
          try {
            w = countMarkedPoints(loop);
          } catch (const std::exception&) {
            continue;  // marked point on the boundary: not a disk we count
          }
          // identify the target torus point
          Pt q = reduceMod1(Z.p);
          std::optional<size_t> target;
          for (size_t yi = 0; yi < pts.size(); ++yi)
            if (pts[yi].comp1 == X.comp1 && pts[yi].comp2 == X.comp2 &&
                pts[yi].rep == q) {
              target = yi;
              break;
            }
          if (!target) continue;
          out.push_back({xi, *target, w});
        }
    }
  }
  std::sort(out.begin(), out.end(), [](const Bigon& a, const Bigon& b) {
    return std::tie(a.from, a.to, a.weights.nw, a.weights.nz) <
           std::tie(b.from, b.to, b.weights.nw, b.weights.nz);
  });
  return out;
}

struct PairComplexResult {
  WeightedComplex complex;
  std::vector<std::string> pointNames;  // per intersection point
};

inline PairComplexResult pairComplex(const Multicurve& c1, const Multicurve& c2,
                                     Flavor flavor, PairingConfig cfg = {}) {
  CurvePair pair(c1, c2, cfg);
  PairComplexResult out;
  const auto& pts = pair.points();
  for (size_t i = 0; i < pts.size(); ++i) {
    // Quadrant tag: i0 when the second curve's strand is the more vertical
    // of the two at the point (matches the axis-crossing convention).
    out.complex.addGen("p" + std::to_string(i), Idem::Zero);
    out.pointNames.push_back("p" + std::to_string(i));
  }
  size_t parIdx = 0;
  for (auto& pp : pair.parallelPairs()) {
    (void)pp;
    out.complex.addGen("q" + std::to_string(parIdx) + "a", Idem::Zero);
    out.complex.addGen("q" + std::to_string(parIdx) + "b", Idem::Zero);
    ++parIdx;
  }
  for (auto& b : enumerateBigons(pair)) {
    if (flavor == Flavor::Hat && (b.weights.nw || b.weights.nz)) continue;
    if (flavor == Flavor::Minus && b.weights.nz) continue;
    MonomialSum m = MonomialSum::monomial(
        flavor == Flavor::Hat ? 0 : (int)b.weights.nw,
        flavor == Flavor::Full ? (int)b.weights.nz : 0);
    out.complex.addDiff(b.from, b.to, m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// triangles with a designated corner set

struct Triangle {
  size_t corner;   // index into the (c0,c1) point list
  size_t from;     // index into the (c0,c2) point list
  size_t to;       // index into the (c1,c2) point list
  DiskWeights weights;
};

// Embedded triangles with one corner at a designated point of c0 cap c1,
// the input corner on c0 cap c2 and the output corner on c1 cap c2.  At the
// designated corner the disk must occupy the quadrant spanned by the two
// curve orientations or its opposite.
class TriplePairing {
 public:
  TriplePairing(const Multicurve& c0, const Multicurve& c1,
                const Multicurve& c2, PairingConfig cfg = {})
      : c0_(pullTight(c0)),
        c1_(pullTight(c1)),
        c2_(pullTight(c2)),
        p01_(c0_, c1_, cfg),
        p02_(c0_, c2_, cfg),
        p12_(c1_, c2_, cfg) {
    window_ = std::max({p01_.window(), p02_.window(), p12_.window()});
  }

  const CurvePair& pair01() const { return p01_; }
  const CurvePair& pair02() const { return p02_; }
  const CurvePair& pair12() const { return p12_; }

  std::vector<Triangle> enumerate(const std::vector<size_t>& corners) const {
    std::vector<Triangle> out;
    const auto& pts01 = p01_.points();
    const auto& pts02 = p02_.points();
    const auto& pts12 = p12_.points();
    for (size_t xi = 0; xi < pts02.size(); ++xi) {
      const TorusPoint& X = pts02[xi];
      const Component& comp0 = c0_.components[X.comp1];
      const Component& comp2 = c2_.components[X.comp2];
      Strand s0 = materialize(comp0, X.comp1, {0, 0}, window_);
      Strand s2 = materialize(comp2, X.comp2, X.shift2, window_);
      for (size_t bi : corners) {
        const TorusPoint& B = pts01[bi];
        if (B.comp1 != X.comp1) continue;
        const Component& comp1 = c1_.components[B.comp2];
        long long kmax = comp0.compact() ? 0 : window_;
        for (long long k = -kmax; k <= kmax; ++k) {
          IVec kp{k * comp0.period.x, k * comp0.period.y};
          Pt bLift{B.pos1.p.x + Rat(kp.x), B.pos1.p.y + Rat(kp.y)};
          StrandPos bOn0{B.pos1.seg + (size_t)((k + window_) * 0), bLift};
          // segment index on the replicated chain shifts by k periods
          if (!comp0.compact()) {
            long long per = (long long)comp0.verts.size();
            long long seg = (long long)B.pos1.seg + k * per;
            long long base = 0;
            (void)base;
            if (seg < 0 || seg >= (long long)s0.segCount()) continue;
            bOn0.seg = (size_t)seg;
          }
          IVec shift1{B.shift2.x + kp.x, B.shift2.y + kp.y};
          Strand s1 = materialize(comp1, B.comp2, shift1, window_);
          StrandPos bOn1{B.pos2.seg, bLift};
          // orientations of the two branches at the corner
          Pt t0 = s0.segB(bOn0.seg) - s0.segA(bOn0.seg);
          Pt t1 = s1.segB(bOn1.seg) - s1.segA(bOn1.seg);
          auto hitsY = strandIntersections(s1, s2);
          for (auto& Y : hitsY) {
            Pt qy = reduceMod1(Y.p);
            std::optional<size_t> yIdx;
            for (size_t yi = 0; yi < pts12.size(); ++yi)
              if (pts12[yi].comp1 == B.comp2 && pts12[yi].comp2 == X.comp2 &&
                  pts12[yi].rep == qy) {
                yIdx = yi;
                break;
              }
            if (!yIdx) continue;
            for (int d0 : {+1, -1})
              for (int d1 : {+1, -1})
                for (int d2 : {+1, -1}) {
                  auto arc0 = strandArc(s0, X.pos1, bOn0, d0, s0.segCount());
                  if (!arc0) continue;
                  auto arc1 = strandArc(s1, bOn1, Y.on1, d1, s1.segCount());
                  if (!arc1) continue;
                  auto arc2 = strandArc(s2, Y.on2, X.pos2, d2, s2.segCount());
                  if (!arc2) continue;
                  // loop X -> b -> Y -> X
                  std::vector<Pt> loop = *arc0;
                  for (size_t ii = 1; ii < arc1->size(); ++ii)
                    loop.push_back((*arc1)[ii]);
                  for (size_t ii = 1; ii + 1 < arc2->size(); ++ii)
                    loop.push_back((*arc2)[ii]);
                  std::vector<Pt> clean;
                  for (auto& p : loop)
                    if (clean.empty() || !(clean.back() == p))
                      clean.push_back(p);
                  while (clean.size() > 1 && clean.front() == clean.back())
                    clean.pop_back();
                  if (clean.size() < 3) continue;
                  if (sign(signedArea2(clean)) <= 0) continue;
                  if (!isSimpleLoop(clean)) continue;
                  if (!convexAt(clean, X.pos1.p) || !convexAt(clean, bLift) ||
                      !convexAt(clean, Y.p))
                    continue;
                  // quadrant rule at the designated corner
                  Rat mu(1, 16384);
                  Pt bis{(t0.x + t1.x) * mu, (t0.y + t1.y) * mu};
                  Pt probeA = bLift + bis;
                  Pt probeB = bLift - bis;
                  bool okA = !onPolyline(clean, probeA) &&
                             windingNumber(clean, probeA) != 0;
                  bool okB = !onPolyline(clean, probeB) &&
                             windingNumber(clean, probeB) != 0;
                  if (!okA && !okB) continue;
                  DiskWeights w;
                  try {
                    w = countMarkedPoints(clean);
                  } catch (const std::exception&) {
                    continue;
                  }
                  out.push_back({bi, xi, *yIdx, w});
                }
          }
        }
      }
    }
    std::sort(out.begin(), out.end(), [](const Triangle& a, const Triangle& b) {
      return std::tie(a.corner, a.from, a.to, a.weights.nw, a.weights.nz) <
             std::tie(b.corner, b.from, b.to, b.weights.nw, b.weights.nz);
    });
    return out;
  }

 private:
  Multicurve c0_, c1_, c2_;
  CurvePair p01_, p02_, p12_;
  long long window_;
};

// ---------------------------------------------------------------------------
// the geometric evaluation map

struct GeometricEval {
  PairComplexResult source;  // pair(c0, c2)
  PairComplexResult target;  // pair(c1, c2)
  std::vector<std::vector<MonomialSum>> matrix;  // [source][target]
  std::vector<Triangle> triangles;
};

// Checks that the designated corner set is a cycle in the hat pairing of
// (c0, c1); then counts triangles against c2 with the requested flavor.
inline GeometricEval evaluateMorphismGeometric(
    const Multicurve& c0, const Multicurve& c1,
    const std::vector<size_t>& corners, const Multicurve& c2, Flavor flavor,
    PairingConfig cfg = {}) {
  // cycle check
  {
    auto p01 = pairComplex(c0, c1, Flavor::Hat, cfg);
    F2Vec v(p01.complex.size());
    for (size_t c : corners) v.flip(c);
    auto cols = p01.complex.hatMatrix();
    F2Vec dv(p01.complex.size());
    for (size_t i = 0; i < cols.size(); ++i)
      if (v.get(i)) dv ^= cols[i];
    if (!dv.isZero())
      throw std::invalid_argument("corner set is not a cycle");
  }
  TriplePairing tp(c0, c1, c2, cfg);
  GeometricEval out;
  out.source = pairComplex(c0, c2, flavor, cfg);
  out.target = pairComplex(c1, c2, flavor, cfg);
  out.matrix.assign(out.source.complex.size(),
                    std::vector<MonomialSum>(out.target.complex.size()));
  out.triangles = tp.enumerate(corners);
  for (auto& t : out.triangles) {
    if (flavor == Flavor::Hat && (t.weights.nw || t.weights.nz)) continue;
    if (flavor == Flavor::Minus && t.weights.nz) continue;
    MonomialSum m = MonomialSum::monomial(
        flavor == Flavor::Hat ? 0 : (int)t.weights.nw,
        flavor == Flavor::Full ? (int)t.weights.nz : 0);
    out.matrix[t.from][t.to] += m;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alexander gradings

// Assigns integer gradings from the relative rule A(x) - A(y) = nz - nw
// across each differential arrow, normalizing each connected component of
// the arrow graph so its grading multiset is symmetric about zero.
inline void assignAlexanderGradings(WeightedComplex& c) {
  size_t n = c.size();
  std::vector<std::vector<std::pair<size_t, int>>> adj(n);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) {
      const MonomialSum& m = c.diff(x, y);
      if (m.isZero()) continue;
      std::optional<int> delta;
      for (auto& t : m.terms()) {
        int d = t.second - t.first;  // nz - nw
        if (delta && *delta != d)
          throw std::invalid_argument("inconsistent relative gradings");
        delta = d;
      }
      adj[x].push_back({y, -*delta});
      adj[y].push_back({x, *delta});
    }
  std::vector<std::optional<int>> rel(n);
  for (size_t start = 0; start < n; ++start) {
    if (rel[start]) continue;
    std::vector<size_t> compIdx;
    rel[start] = 0;
    std::vector<size_t> stack{start};
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      compIdx.push_back(v);
      for (auto& [u, d] : adj[v]) {
        int val = *rel[v] + d;
        if (!rel[u]) {
          rel[u] = val;
          stack.push_back(u);
        } else if (*rel[u] != val) {
          throw std::invalid_argument("inconsistent relative gradings");
        }
      }
    }
    // symmetrize this component about zero
    std::vector<int> vals;
    for (size_t v : compIdx) vals.push_back(*rel[v]);
    int mn = *std::min_element(vals.begin(), vals.end());
    int mx = *std::max_element(vals.begin(), vals.end());
    if ((mn + mx) % 2 != 0)
      throw std::invalid_argument("gradings cannot be symmetrized");
    int shift = (mn + mx) / 2;
    std::vector<int> shifted;
    for (int v : vals) shifted.push_back(v - shift);
    std::vector<int> neg;
    for (int v : shifted) neg.push_back(-v);
    std::sort(shifted.begin(), shifted.end());
    std::sort(neg.begin(), neg.end());
    if (shifted != neg)
      throw std::invalid_argument("grading multiset is not symmetric");
    for (size_t v : compIdx) c.gen(v).alexander = *rel[v] - shift;
  }
}

// ---------------------------------------------------------------------------
// V-torsion order at U = 0

// Polynomials over F2 in one variable as bitmasks.
using Poly = uint64_t;
inline int polyDeg(Poly p) { return p ? 63 - __builtin_clzll(p) : -1; }
inline Poly polyMulV(Poly p, int k) { return p << k; }
inline std::pair<Poly, Poly> polyDivMod(Poly a, Poly b) {
  if (!b) throw std::invalid_argument("division by zero polynomial");
  Poly q = 0;
  int db = polyDeg(b);
  while (polyDeg(a) >= db) {
    int shift = polyDeg(a) - db;
    q ^= Poly(1) << shift;
    a ^= b << shift;
  }
  return {q, a};
}
inline Poly polyGcd(Poly a, Poly b) {
  while (b) {
    auto [q, r] = polyDivMod(a, b);
    (void)q;
    a = b;
    b = r;
  }
  return a;
}
inline int polyValuation(Poly p) {  // V-adic valuation, -1 for zero
  if (!p) return -1;
  return __builtin_ctzll(p);
}

// Minimal k with V^k [cls] = 0 in homology over F2[V] of the U=0
// specialization; -1 encodes infinity.  cls must be a cycle.
inline long long vTorsionOrder(const WeightedComplex& cIn,
                               const std::vector<size_t>& cls) {
  WeightedComplex c = cIn.applySetU0();
  size_t n = c.size();
  // matrix over F2[V]: columns are differentials of generators
  std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n, 0));
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      for (auto& t : c.diff(x, y).terms()) {
        if (t.first != 0) continue;  // U power must be gone
        M[y][x] ^= Poly(1) << t.second;  // row y, column x
      }
  std::vector<Poly> b(n, 0);
  for (size_t g : cls) b[g] ^= 1;
  // check cycle: M applied to... columns are d(gen); d(cls) = sum of columns
  {
    std::vector<Poly> d(n, 0);
    for (size_t g : cls)
      for (size_t y = 0; y < n; ++y) d[y] ^= M[y][g];
    for (auto p : d)
      if (p) throw std::invalid_argument("class is not a cycle at U=0");
  }
  bool bzero = true;
  for (auto p : b)
    if (p) bzero = false;
  if (bzero) return 0;
  auto polyMul = [](Poly a, Poly bb) {
    Poly prod = 0;
    while (a) {
      int s = polyValuation(a);
      prod ^= bb << s;
      a ^= Poly(1) << s;
    }
    return prod;
  };
  // Triangular (Hermite-style) pivot basis of the column module over
  // F2[V]: one pivot per leading row, built by Euclid on leading entries.
  std::vector<std::optional<std::vector<Poly>>> pivot(n);
  std::function<void(std::vector<Poly>)> insert = [&](std::vector<Poly> v) {
    for (size_t r = 0; r < n; ++r) {
      if (!v[r]) continue;
      if (!pivot[r]) {
        pivot[r] = v;
        return;
      }
      std::vector<Poly> u = *pivot[r];
      // Euclid on the leading entries; keep the gcd as the new pivot.
      while (v[r]) {
        if (polyDeg(v[r]) >= polyDeg(u[r])) {
          auto [q, rem] = polyDivMod(v[r], u[r]);
          (void)rem;
          for (size_t y = 0; y < n; ++y) v[y] ^= polyMul(q, u[y]);
        } else {
          std::swap(u, v);
        }
      }
      pivot[r] = u;
      // v now vanishes at r; continue with lower rows
    }
  };
  for (size_t x = 0; x < n; ++x) {
    std::vector<Poly> col(n);
    bool nz = false;
    for (size_t y = 0; y < n; ++y) {
      col[y] = M[y][x];
      if (col[y]) nz = true;
    }
    if (nz) insert(col);
  }
  auto inSpan = [&](std::vector<Poly> v) {
    for (size_t r = 0; r < n; ++r) {
      if (!v[r]) continue;
      if (!pivot[r]) return false;
      auto [q, rem] = polyDivMod(v[r], (*pivot[r])[r]);
      if (rem) return false;
      for (size_t y = 0; y < n; ++y) v[y] ^= polyMul(q, (*pivot[r])[y]);
    }
    return true;
  };
  for (int k = 0; k <= 40; ++k) {
    std::vector<Poly> v(n);
    for (size_t y = 0; y < n; ++y) v[y] = b[y] << k;
    if (inSpan(v)) return k;
  }
  return -1;  // infinity
}

}  // namespace tf
