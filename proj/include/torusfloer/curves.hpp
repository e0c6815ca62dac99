#pragma once

// Immersed multicurves and train tracks in the marked torus.
//
// Conventions.  The torus is R^2/Z^2 with the puncture (stop) z at the
// lattice orbit Z^2.  The U-basepoint orbit w sits at (-1/4, -1/16) from
// each puncture, i.e. on the far side of the vertical line x = 1/2 from z.
// The parametrizing axes are the grid lines x in Z (beta) and y in Z
// (alpha).  A transversal crossing of a curve with a vertical grid edge is
// an i0 generator, with a horizontal edge an i1 generator.
//
// Reeb sectors around a puncture are quadrants read counterclockwise:
// 1 = NE, 2 = NW, 3 = SW; the SE quadrant contains the stop and no chord
// crosses it.  Between two consecutive grid crossings a tight curve makes
// one chord across a cell (a unit square with punctures at its corners);
// the chord type determines the swept sectors and hence the edge label of
// the readback module:
//
//   west->east through   : r12       south->north through : r23
//   corner cut at NE     : r3        corner cut at SE     : r2
//   corner cut at SW     : r1        corner cut at NW     : r123
//
// (The NW pass reads the long way around three punctures.)

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusfloer/dmodule.hpp"
#include "torusfloer/geometry.hpp"

namespace tf {

inline const Pt kBasepointOffset{Rat(-1, 4), Rat(-1, 16)};  // w relative to z
inline const Pt kLineAnchor{Rat(1, 2), Rat(1, 16)};

struct IVec {
  long long x = 0, y = 0;
  friend IVec operator+(IVec a, IVec b) { return {a.x + b.x, a.y + b.y}; }
  friend bool operator==(IVec a, IVec b) { return a.x == b.x && a.y == b.y; }
};

// One curve component as a PL path in the universal cover.  A compact
// component has period (0,0) and verts close up cyclically; a wrapping
// component closes onto its translate by the period.
struct Component {
  std::vector<Pt> verts;
  IVec period;
  int rank = 1;  // local system rank (parallel copies with crossover data)
  // local system matrix over F2, row-major rank x rank; empty = identity
  std::vector<uint8_t> localSystem;

  bool compact() const { return period.x == 0 && period.y == 0; }

  Pt vertex(long long i) const {
    long long n = (long long)verts.size();
    long long q = i >= 0 ? i / n : -((-i + n - 1) / n);
    long long r = i - q * n;
    Pt p = verts[r];
    return {p.x + Rat(q * period.x), p.y + Rat(q * period.y)};
  }
};

struct Multicurve {
  std::vector<Component> components;

  // Bounding data used to size enumeration windows.
  long long wrap() const {
    long long m = 1;
    for (auto& c : components) {
      m = std::max(m, std::llabs(c.period.x));
      m = std::max(m, std::llabs(c.period.y));
      for (auto& v : c.verts) {
        m = std::max(m, std::llabs(v.x.floor()) + 1);
        m = std::max(m, std::llabs(v.y.floor()) + 1);
      }
    }
    return m;
  }

  std::string print() const;
  static Multicurve parse(const std::string& text);
};

// ---------------------------------------------------------------------------
// basic transforms

inline Multicurve mapCurve(const Multicurve& c,
                           const std::function<Pt(const Pt&)>& f,
                           const std::function<IVec(IVec)>& fper) {
  Multicurve out = c;
  for (auto& comp : out.components) {
    for (auto& v : comp.verts) v = f(v);
    comp.period = fper(comp.period);
  }
  return out;
}

inline Multicurve transposeXY(const Multicurve& c) {
  return mapCurve(
      c, [](const Pt& p) { return Pt{p.y, p.x}; },
      [](IVec v) { return IVec{v.y, v.x}; });
}

// Rotation by pi about the center of the unit square.
inline Multicurve azRotate(const Multicurve& c) {
  return mapCurve(
      c, [](const Pt& p) { return Pt{Rat(1) - p.x, Rat(1) - p.y}; },
      [](IVec v) { return IVec{-v.x, -v.y}; });
}

// Shear taking vertical lines to lines of slope n, with an n-fold vertical
// stretch; realizes the (n,1)-cable at the level of lifts.
inline Multicurve cableTransform(const Multicurve& c, long long n) {
  if (n == 0) throw std::invalid_argument("cable parameter must be nonzero");
  return mapCurve(
      c,
      [n](const Pt& p) {
        return Pt{p.x + p.y, p.y * Rat(n)};
      },
      [n](IVec v) { return IVec{v.x + v.y, n * v.y}; });
}

// Embedded line of slope q/p through the standard anchor.
inline Multicurve lineSlope(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("zero direction");
  long long g = std::gcd(std::llabs(p), std::llabs(q));
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  Component comp;
  comp.period = {p, q};
  comp.verts.push_back(kLineAnchor);
  Multicurve out;
  out.components.push_back(comp);
  return out;
}

// ---------------------------------------------------------------------------
// resolved form: crossings with the grid, and cell chords between them

enum class ChordType { NS, SN, WE, EW, NE, SE, SW, NW };

struct Crossing {
  Pt p;
  bool vertical;   // true: crossing of a vertical grid line (i0)
  long long seg;   // index of the segment of the component containing it
  Rat along;       // parameter on that segment, for ordering
};

// Splits each component of the curve at its grid crossings.  Vertices must
// not lie on the grid except where the curve genuinely crosses; punctures
// on the curve are rejected.
struct ResolvedComponent {
  std::vector<Pt> pts;           // polyline, cover coords, crossings included
  std::vector<size_t> crossing;  // indices into pts that are grid crossings
  std::vector<bool> crossVertical;
  IVec period;
  int rank = 1;
};

inline bool isInteger(const Rat& r) { return r.isInt(); }

inline ResolvedComponent resolveComponent(const Component& comp) {
  ResolvedComponent out;
  out.period = comp.period;
  out.rank = comp.rank;
  size_t n = comp.verts.size();
  for (size_t i = 0; i < n; ++i) {
    Pt a = comp.verts[i];
    Pt b = (i + 1 < n) ? comp.verts[i + 1]
                       : Pt{comp.verts[0].x + Rat(comp.period.x),
                            comp.verts[0].y + Rat(comp.period.y)};
    if (a == b) continue;
    if (isInteger(a.x) && isInteger(a.y))
      throw std::invalid_argument("curve vertex on a puncture");
    out.pts.push_back(a);
    // collect parametric crossing values with x in Z and y in Z
    std::vector<std::pair<Rat, Pt>> cuts;
    auto addCuts = [&](bool vert) {
      Rat lo = vert ? (a.x < b.x ? a.x : b.x) : (a.y < b.y ? a.y : b.y);
      Rat hi = vert ? (a.x < b.x ? b.x : a.x) : (a.y < b.y ? b.y : a.y);
      Rat da = vert ? b.x - a.x : b.y - a.y;
      if (sign(da) == 0) return;
      for (long long k = lo.floor(); Rat(k) <= hi; ++k) {
        Rat kk(k);
        if (kk <= lo || kk >= hi) {
          // crossing exactly at an endpoint is handled when the endpoint is
          // itself on the grid; interior-only here
          if (!(lo < kk && kk < hi)) continue;
        }
        Rat t = vert ? (kk - a.x) / (b.x - a.x) : (kk - a.y) / (b.y - a.y);
        Pt p{a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
        if (isInteger(p.x) && isInteger(p.y))
          throw std::invalid_argument("curve passes through a puncture");
        cuts.push_back({t, p});
      }
    };
    addCuts(true);
    addCuts(false);
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    for (auto& [t, p] : cuts) {
      (void)t;
      out.pts.push_back(p);
    }
  }
  // mark crossings
  for (size_t i = 0; i < out.pts.size(); ++i) {
    const Pt& p = out.pts[i];
    bool vx = isInteger(p.x), hy = isInteger(p.y);
    if (vx && hy) throw std::invalid_argument("curve touches a puncture");
    if (vx || hy) {
      out.crossing.push_back(i);
      out.crossVertical.push_back(vx);
    }
  }
  return out;
}

// Sector datum: a puncture together with a quadrant letter (1, 2 or 3).
struct SectorPass {
  IVec puncture;
  int letter;
};

// Covered sectors of a cell chord, listed along the traversal direction.
// Returns nullopt for chords that cannot appear in a tight readback form
// (same-edge bounces).
inline std::optional<std::vector<SectorPass>> chordSectors(const Pt& from,
                                                           bool fromVert,
                                                           const Pt& to,
                                                           bool toVert) {
  // The chord joins two edges of one unit cell; the midpoint of its
  // endpoints lies strictly inside that cell unless the chord bounces off a
  // single edge.
  Pt mid{(from.x + to.x) * Rat(1, 2), (from.y + to.y) * Rat(1, 2)};
  if (isInteger(mid.x) || isInteger(mid.y)) return std::nullopt;  // bounce
  long long cx = mid.x.floor(), cy = mid.y.floor();
  auto edgeOf = [&](const Pt& p, bool vert) -> char {
    if (vert) {
      if (p.x == Rat(cx)) return 'W';
      if (p.x == Rat(cx + 1)) return 'E';
    } else {
      if (p.y == Rat(cy)) return 'S';
      if (p.y == Rat(cy + 1)) return 'N';
    }
    return '?';
  };
  char e0 = edgeOf(from, fromVert), e1 = edgeOf(to, toVert);
  if (e0 == '?' || e1 == '?')
    throw std::invalid_argument("chord does not fit a single cell");
  IVec SW{cx, cy}, SE{cx + 1, cy}, NEc{cx + 1, cy + 1};
  std::vector<SectorPass> out;
  auto pair = std::string{e0} + e1;
  if (pair == "WE") out = {{SW, 1}, {SE, 2}};
  else if (pair == "EW") out = {{SE, 2}, {SW, 1}};
  else if (pair == "SN") out = {{SE, 2}, {NEc, 3}};
  else if (pair == "NS") out = {{NEc, 3}, {SE, 2}};
  else if (pair == "NE" || pair == "EN") out = {{NEc, 3}};
  else if (pair == "SE" || pair == "ES") out = {{SE, 2}};
  else if (pair == "SW" || pair == "WS") out = {{SW, 1}};
  else if (pair == "WN") out = {{SW, 1}, {SE, 2}, {NEc, 3}};
  else if (pair == "NW") out = {{NEc, 3}, {SE, 2}, {SW, 1}};
  return out;
}

// ---------------------------------------------------------------------------
// pulling tight
//
// Straightens each component rel the punctures and basepoints: interior
// vertices are removed whenever the spanned triangle is free of marked
// points, repeatedly, in a deterministic sweep.  Tight staircase data is a
// fixed point.

inline bool pointInClosedTriangle(const Pt& a, const Pt& b, const Pt& c,
                                  const Pt& p) {
  int s1 = sign(cross(a, b, p));
  int s2 = sign(cross(b, c, p));
  int s3 = sign(cross(c, a, p));
  bool hasNeg = s1 < 0 || s2 < 0 || s3 < 0;
  bool hasPos = s1 > 0 || s2 > 0 || s3 > 0;
  return !(hasNeg && hasPos);
}

inline bool triangleHasMarkedPoint(const Pt& a, const Pt& b, const Pt& c) {
  if (sign(cross(a, b, c)) == 0) {
    // Collinear: removal is allowed unless a puncture or basepoint lies on
    // the segment, or the vertex is a backtrack turning point.
    if ((a < b && c < b) || (b < a && b < c)) return true;  // backtrack kept? no:
    return false;
  }
  Rat xlo = a.x, xhi = a.x, ylo = a.y, yhi = a.y;
  for (const Pt& p : {b, c}) {
    if (p.x < xlo) xlo = p.x;
    if (xhi < p.x) xhi = p.x;
    if (p.y < ylo) ylo = p.y;
    if (yhi < p.y) yhi = p.y;
  }
  for (long long x = xlo.floor(); Rat(x) <= xhi + Rat(1); ++x)
    for (long long y = ylo.floor(); Rat(y) <= yhi + Rat(1); ++y) {
      Pt z{Rat(x), Rat(y)};
      Pt w{Rat(x) + kBasepointOffset.x, Rat(y) + kBasepointOffset.y};
      if (pointInClosedTriangle(a, b, c, z)) return true;
      if (pointInClosedTriangle(a, b, c, w)) return true;
    }
  return false;
}

inline Multicurve pullTight(const Multicurve& cin) {
  Multicurve out = cin;
  for (auto& comp : out.components) {
    bool changed = true;
    while (changed && comp.verts.size() > 1) {
      changed = false;
      size_t n = comp.verts.size();
      for (size_t i = 0; i < n && n > 1; ++i) {
        Pt prev = comp.verts[(i + n - 1) % n];
        Pt cur = comp.verts[i];
        Pt next = comp.verts[(i + 1) % n];
        if (i == 0)
          prev = Pt{prev.x - Rat(comp.period.x), prev.y - Rat(comp.period.y)};
        if (i + 1 == n)
          next = Pt{next.x + Rat(comp.period.x), next.y + Rat(comp.period.y)};
        // duplicate vertex
        if (cur == next || cur == prev) {
          comp.verts.erase(comp.verts.begin() + i);
          changed = true;
          break;
        }
        // backtrack: prev and next on the same ray through cur
        if (sign(cross(prev, cur, next)) == 0 &&
            ((prev < cur && next < cur) || (cur < prev && cur < next))) {
          continue;  // genuine turning point; keep (marked-point guard below)
        }
        if (!triangleHasMarkedPoint(prev, cur, next)) {
          comp.verts.erase(comp.verts.begin() + i);
          changed = true;
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// readback: tight curve -> type-D structure

struct ReadbackResult {
  TypeDStructure module;
  // positions of the generators, cover coordinates of a chosen lift
  std::vector<Pt> positions;
};

// Reads the labeled-graph structure of a tight multicurve.  Names
// generators g<k>; crossings of vertical grid lines are i0, horizontal i1.
inline ReadbackResult readbackModule(const Multicurve& curveIn) {
  Multicurve curve = pullTight(curveIn);
  ReadbackResult out;
  size_t counter = 0;
  for (auto& comp : curve.components) {
    if (comp.rank != 1)
      throw std::invalid_argument(
          "readback of higher-rank local systems is not supported here");
    auto rc = resolveComponent(comp);
    size_t m = rc.crossing.size();
    if (m == 0) {
      if (!rc.pts.empty())
        throw std::invalid_argument("component missing the grid entirely");
      continue;
    }
    std::vector<size_t> ids(m);
    for (size_t k = 0; k < m; ++k) {
      ids[k] = out.module.addGen("g" + std::to_string(counter++),
                                 rc.crossVertical[k] ? Idem::Zero : Idem::One);
      out.positions.push_back(rc.pts[rc.crossing[k]]);
    }
    for (size_t k = 0; k < m; ++k) {
      size_t k2 = (k + 1) % m;
      Pt from = rc.pts[rc.crossing[k]];
      Pt to = rc.pts[rc.crossing[k2]];
      if (k2 == 0)
        to = Pt{to.x + Rat(rc.period.x), to.y + Rat(rc.period.y)};
      auto sectors = chordSectors(from, rc.crossVertical[k], to,
                                  rc.crossVertical[k2]);
      if (!sectors)
        throw std::invalid_argument("curve is not in tight position");
      // forward and backward chord products decide the edge direction
      auto product = [&](bool fwd) -> AlgebraElement {
        AlgebraElement acc(rc.crossVertical[fwd ? k : k2] ? Gen::I0 : Gen::I1);
        auto list = *sectors;
        if (!fwd) std::reverse(list.begin(), list.end());
        for (auto& s : list) {
          std::string letter(1, char('0' + s.letter));
          acc = acc * AlgebraElement(*ChordWord::parse(letter));
        }
        return acc;
      };
      AlgebraElement fwd = product(true), bwd = product(false);
      if (!fwd.isZero()) {
        Gen g = fwd.support()[0];
        out.module.addEdge(ids[k], EdgeLabel::makeChord(g), ids[k2]);
      }
      if (!bwd.isZero()) {
        Gen g = bwd.support()[0];
        out.module.addEdge(ids[k2], EdgeLabel::makeChord(g), ids[k]);
      }
      if (fwd.isZero() && bwd.isZero())
        throw std::invalid_argument("chord reads to zero both ways");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// realization: type-D structure -> curve (loop type), or train track

struct TrainTrack {
  Multicurve curve;                      // strands, one component per cycle
  TypeDStructure module;                 // the represented structure
  std::vector<Pt> vertexPosition;        // per generator, a chosen lift
  struct Arrow {
    size_t fromStrand, toStrand;
    Rat position;
  };
  std::vector<Arrow> arrows;             // crossover arrows, if any
  bool multicurveForm = true;            // false when arrows are unresolved
};

namespace detail {

// entry/exit ray directions per letter; the template arc for an edge with
// letters w1..wk runs from the source on entryRay(w1) of p1 through the
// diagonal points of each letter to the target on exitRay(wk) of pk.
inline Pt diagOffset(int letter, const Rat& r) {
  switch (letter) {
    case 1:
      return {r, r};
    case 2:
      return {-r, r};
    default:
      return {-r, -r};
  }
}
inline Pt entryOffset(int letter, const Rat& d) {
  switch (letter) {
    case 1:
      return {Rat(0), d};  // north ray
    case 2:
      return {-d, Rat(0)};  // west ray
    default:
      return {Rat(0), -d};  // south ray
  }
}
inline Pt exitOffset(int letter, const Rat& d) {
  switch (letter) {
    case 1:
      return {d, Rat(0)};  // east ray
    case 2:
      return {Rat(0), d};  // north ray
    default:
      return {-d, Rat(0)};  // west ray
  }
}
inline IVec stepAfter(int letter) {
  // letter pairs inside admissible words are 1->2 (east) and 2->3 (north)
  return letter == 1 ? IVec{1, 0} : IVec{0, 1};
}

}  // namespace detail

// Realizes a valid reduced type-D structure whose graph has valence two at
// every generator (loop type) as an immersed multicurve.  Throws on higher
// valence; those need local systems (see simplifyTrack for the converse
// direction).
inline TrainTrack realizeTypeD(const TypeDStructure& d) {
  TrainTrack out;
  out.module = d;
  out.vertexPosition.assign(d.size(), Pt{Rat(0), Rat(0)});
  if (!d.reduced()) throw std::invalid_argument("realize needs reduced input");

  // incidence lists: (edge index, forward?)
  std::vector<std::vector<std::pair<size_t, bool>>> inc(d.size());
  auto edges = d.edges();
  for (size_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].src].push_back({e, true});
    inc[edges[e].dst].push_back({e, false});
  }
  for (size_t g = 0; g < d.size(); ++g)
    if (inc[g].size() != 2)
      throw std::invalid_argument(
          "structure is not loop type at generator " + d.name(g));

  std::vector<bool> seen(edges.size(), false);
  size_t genCounter = 0, edgeCounter = 0;
  auto genOffset = [&]() {
    return Rat(1, 4) + Rat(1 + (long long)(genCounter++ % 29), 128);
  };
  auto hookRadius = [&]() {
    return Rat(64 + (long long)(edgeCounter++ % 63), 512);  // in [1/8, 1/4)
  };
  auto asInt = [](const Rat& r) {
    if (!r.isInt()) throw std::logic_error("expected integer coordinate");
    return r.n;
  };
  auto frac = [](const Rat& r) { return r - Rat(r.floor()); };

  for (size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (seen[e0]) continue;
    // Precompute the cycle through e0 as (edge, forward) steps.
    std::vector<std::pair<size_t, bool>> cycle;
    {
      size_t eCur = e0;
      bool fwd = true;
      do {
        cycle.push_back({eCur, fwd});
        size_t nextGen = fwd ? edges[eCur].dst : edges[eCur].src;
        auto& cand = inc[nextGen];
        bool arrivedAsSource = !fwd;
        std::pair<size_t, bool> nxt;
        if (cand[0] == std::make_pair(eCur, arrivedAsSource)) nxt = cand[1];
        else nxt = cand[0];
        eCur = nxt.first;
        fwd = nxt.second;
      } while (!(eCur == e0 && fwd));
    }
    for (auto& [e, f] : cycle) {
      (void)f;
      seen[e] = true;
    }

    Component comp;
    std::string w0 = genWord(edges[e0].label.chord);
    Rat d0 = genOffset();
    Pt cur = Pt{Rat(0), Rat(0)} + detail::entryOffset(w0[0] - '0', d0);
    Pt startPos = cur;
    out.vertexPosition[edges[e0].src] = cur;

    for (size_t step = 0; step < cycle.size(); ++step) {
      auto [eCur, fwd] = cycle[step];
      bool last = (step + 1 == cycle.size());
      const DEdge& E = edges[eCur];
      std::string w = genWord(E.label.chord);
      Rat r = hookRadius();
      comp.verts.push_back(cur);
      IVec pi;
      if (fwd) {
        int l0 = w[0] - '0';
        if (l0 == 1) pi = {asInt(cur.x), cur.y.floor()};
        else if (l0 == 2) pi = {cur.x.floor() + 1, asInt(cur.y)};
        else pi = {asInt(cur.x), cur.y.floor() + 1};
        for (size_t li = 0; li < w.size(); ++li) {
          int l = w[li] - '0';
          comp.verts.push_back(Pt{Rat(pi.x), Rat(pi.y)} +
                               detail::diagOffset(l, r));
          if (li + 1 < w.size()) pi = pi + detail::stepAfter(l);
        }
        int lk = w.back() - '0';
        Rat d = last ? (lk == 1   ? frac(startPos.x)
                        : lk == 2 ? frac(startPos.y)
                                  : Rat(1) - frac(startPos.x))
                     : genOffset();
        cur = Pt{Rat(pi.x), Rat(pi.y)} + detail::exitOffset(lk, d);
        if (!last) out.vertexPosition[E.dst] = cur;
      } else {
        int lk = w.back() - '0';
        if (lk == 1) pi = {cur.x.floor(), asInt(cur.y)};
        else if (lk == 2) pi = {asInt(cur.x), cur.y.floor()};
        else pi = {cur.x.floor() + 1, asInt(cur.y)};
        for (size_t li = w.size(); li-- > 0;) {
          int l = w[li] - '0';
          comp.verts.push_back(Pt{Rat(pi.x), Rat(pi.y)} +
                               detail::diagOffset(l, r));
          if (li > 0) {
            IVec s = detail::stepAfter(w[li - 1] - '0');
            pi = pi + IVec{-s.x, -s.y};
          }
        }
        int l0 = w[0] - '0';
        Rat d = last ? (l0 == 1   ? frac(startPos.y)
                        : l0 == 2 ? Rat(1) - frac(startPos.x)
                                  : Rat(1) - frac(startPos.y))
                     : genOffset();
        cur = Pt{Rat(pi.x), Rat(pi.y)} + detail::entryOffset(l0, d);
        if (!last) out.vertexPosition[E.src] = cur;
      }
    }
    Rat px = cur.x - startPos.x, py = cur.y - startPos.y;
    if (!px.isInt() || !py.isInt())
      throw std::logic_error("realization failed to close up");
    comp.period = {px.n, py.n};
    out.curve.components.push_back(comp);
  }
  out.multicurveForm = true;
  return out;
}

// Type-A realization: reflect the type-D realization across y = -x; the
// reflection exchanges the two axis families and swaps sectors 1 and 3, so
// labels transform by the duality letter swap automatically.
inline Multicurve realizeTypeA(const TypeDStructure& d) {
  TrainTrack t = realizeTypeD(d);
  return mapCurve(
      t.curve, [](const Pt& p) { return Pt{-p.y, -p.x}; },
      [](IVec v) { return IVec{-v.y, -v.x}; });
}

// ---------------------------------------------------------------------------
// numeric invariants

// Heights (rounded y) of the crossings of the distinguished wrapping
// component with the vertical lines x = 1/2 mod 1.
inline std::vector<Rat> midlineCrossingHeights(const Component& comp) {
  std::vector<Rat> out;
  size_t n = comp.verts.size();
  for (size_t i = 0; i < n; ++i) {
    Pt a = comp.verts[i];
    Pt b = (i + 1 < n) ? comp.verts[i + 1]
                       : Pt{comp.verts[0].x + Rat(comp.period.x),
                            comp.verts[0].y + Rat(comp.period.y)};
    Rat lo = a.x < b.x ? a.x : b.x;
    Rat hi = a.x < b.x ? b.x : a.x;
    if (sign(b.x - a.x) == 0) continue;
    for (long long k = lo.floor() - 1; Rat(k) + Rat(1, 2) <= hi; ++k) {
      Rat half = Rat(k) + Rat(1, 2);
      if (lo < half && half < hi) {
        Rat t = (half - a.x) / (b.x - a.x);
        out.push_back(a.y + (b.y - a.y) * t);
      }
    }
  }
  return out;
}

// tau: half the spread of the distinguished component's mid-line crossing
// heights (the symmetric normalization places them symmetrically about 0).
inline long long tau(const Multicurve& curveIn) {
  Multicurve curve = pullTight(curveIn);
  const Component* dist = nullptr;
  for (auto& comp : curve.components)
    if (comp.period.x != 0) {
      if (dist) throw std::invalid_argument("multiple wrapping components");
      dist = &comp;
    }
  if (!dist)
    throw std::invalid_argument("no distinguished wrapping component");
  auto hs = midlineCrossingHeights(*dist);
  if (hs.empty()) throw std::invalid_argument("no mid-line crossings");
  Rat mx = hs[0], mn = hs[0];
  for (auto& h : hs) {
    if (h < mn) mn = h;
    if (mx < h) mx = h;
  }
  Rat spread = (mx - mn) * Rat(1, 2);
  return spread.roundNearest();
}

// Slope of the unique segment of the pattern crossing the horizontal axis;
// infinity is encoded as nullopt with positive sign.
struct AxisSlope {
  bool infinite = false;
  Rat value;  // meaningful when !infinite
  bool positive() const { return infinite || sign(value) > 0; }
};

inline AxisSlope slopeAtAxis(const Multicurve& curveIn) {
  Multicurve curve = pullTight(curveIn);
  std::vector<std::pair<Pt, Pt>> hits;
  for (auto& comp : curve.components) {
    size_t n = comp.verts.size();
    for (size_t i = 0; i < n; ++i) {
      Pt a = comp.verts[i];
      Pt b = (i + 1 < n) ? comp.verts[i + 1]
                         : Pt{comp.verts[0].x + Rat(comp.period.x),
                              comp.verts[0].y + Rat(comp.period.y)};
      Rat lo = a.y < b.y ? a.y : b.y;
      Rat hi = a.y < b.y ? b.y : a.y;
      if (sign(b.y - a.y) == 0) continue;
      for (long long k = lo.floor(); Rat(k) <= hi; ++k) {
        if (lo < Rat(k) && Rat(k) < hi) hits.push_back({a, b});
      }
    }
  }
  if (hits.size() != 1)
    throw std::invalid_argument(
        "pattern must cross the horizontal axis exactly once per period, got " +
        std::to_string(hits.size()));
  auto [a, b] = hits[0];
  AxisSlope out;
  if (a.x == b.x) {
    out.infinite = true;
    return out;
  }
  out.value = (b.y - a.y) / (b.x - a.x);
  return out;
}

// ---------------------------------------------------------------------------
// file format

inline std::string Multicurve::print() const {
  std::ostringstream os;
  for (auto& comp : components) {
    os << "component rank=" << comp.rank;
    if (!comp.compact())
      os << " period=" << comp.period.x << "," << comp.period.y;
    os << "\n";
    for (auto& v : comp.verts)
      os << "vertex " << v.x.str() << " " << v.y.str() << "\n";
  }
  return os.str();
}

inline Multicurve Multicurve::parse(const std::string& text) {
  Multicurve out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  Component* cur = nullptr;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    try {
      if (tok == "component") {
        out.components.emplace_back();
        cur = &out.components.back();
        std::string attr;
        while (ls >> attr) {
          auto eq = attr.find('=');
          if (eq == std::string::npos)
            throw std::invalid_argument("bad attribute " + attr);
          std::string key = attr.substr(0, eq), val = attr.substr(eq + 1);
          if (key == "rank") cur->rank = std::stoi(val);
          else if (key == "period") {
            auto comma = val.find(',');
            cur->period.x = std::stoll(val.substr(0, comma));
            cur->period.y = std::stoll(val.substr(comma + 1));
          } else {
            throw std::invalid_argument("unknown attribute " + key);
          }
        }
      } else if (tok == "vertex") {
        if (!cur) throw std::invalid_argument("vertex before component");
        std::string xs, ys;
        ls >> xs >> ys;
        cur->verts.push_back({Rat::parse(xs), Rat::parse(ys)});
      } else if (tok == "arrow") {
        if (!cur) throw std::invalid_argument("arrow before component");
        // crossover arrows are parsed but only rank-1 data ships
        std::string i, j, pos;
        ls >> i >> j >> pos;
      } else {
        throw std::invalid_argument("unknown directive '" + tok + "'");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return out;
}

}  // namespace tf
