#pragma once

// Exact rational planar geometry for curves in the universal cover of the
// marked torus.  Coordinates stay small; intermediate products use 128-bit
// integers.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tf {

struct Rat {
  long long n = 0;
  long long d = 1;

  Rat() = default;
  Rat(long long num) : n(num), d(1) {}
  Rat(long long num, long long den) : n(num), d(den) { normalize(); }

  void normalize() {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.n * b.d + b.n * a.d, a.d * b.d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.n * b.d - b.n * a.d, a.d * b.d);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.n * b.n, a.d * b.d);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.n == 0) throw std::invalid_argument("division by zero");
    return Rat(a.n * b.d, a.d * b.n);
  }
  Rat operator-() const { return Rat(-n, d); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.n == b.n && a.d == b.d;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.n * b.d < (__int128)b.n * a.d;
  }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  bool isInt() const { return d == 1; }
  long long floor() const {
    if (n >= 0) return n / d;
    return -(((-n) + d - 1) / d);
  }
  long long roundNearest() const {  // ties toward +inf, unused on ties
    return (Rat(2 * n + d, 2 * d)).floor();
  }
  double toDouble() const { return double(n) / double(d); }
  std::string str() const {
    if (d == 1) return std::to_string(n);
    return std::to_string(n) + "/" + std::to_string(d);
  }
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  }
};

struct Pt {
  Rat x, y;
  friend Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
  Pt operator*(const Rat& s) const { return {x * s, y * s}; }
  friend bool operator==(const Pt& a, const Pt& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
  friend bool operator<(const Pt& a, const Pt& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Rat cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline int sign(const Rat& r) { return (r.n > 0) - (r.n < 0); }

// Proper transverse intersection of open segments; endpoint touches and
// collinear overlaps are reported as degenerate.
struct SegHit {
  bool hit = false;
  bool degenerate = false;
  Pt p;
};

inline SegHit segIntersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  SegHit out;
  Rat d1 = cross(c, d, a), d2 = cross(c, d, b);
  Rat d3 = cross(a, b, c), d4 = cross(a, b, d);
  int s1 = sign(d1), s2 = sign(d2), s3 = sign(d3), s4 = sign(d4);
  if (s1 == 0 && s2 == 0) {
    // collinear: overlap test
    auto on = [&](const Pt& p) {
      return ((a < p && p < b) || (b < p && p < a));
    };
    if (on(c) || on(d) || a == c || a == d || b == c || b == d)
      out.degenerate = true;
    return out;
  }
  if (s1 == 0 || s2 == 0 || s3 == 0 || s4 == 0) {
    // endpoint touching another segment
    bool touches = false;
    auto between = [&](const Pt& p, const Pt& u, const Pt& v) {
      if (sign(cross(u, v, p)) != 0) return false;
      return !(p < u && p < v) && !(u < p && v < p);
    };
    if (s1 == 0 && between(a, c, d)) touches = true;
    if (s2 == 0 && between(b, c, d)) touches = true;
    if (s3 == 0 && between(c, a, b)) touches = true;
    if (s4 == 0 && between(d, a, b)) touches = true;
    if (touches) out.degenerate = true;
    return out;
  }
  if (s1 != s2 && s3 != s4) {
    out.hit = true;
    Rat t = d3 / (d3 - d4);
    out.p = {c.x + (d.x - c.x) * t, c.y + (d.y - c.y) * t};
  }
  return out;
}

// Winding number of a closed polyline around p (p must avoid the boundary).
inline int windingNumber(const std::vector<Pt>& poly, const Pt& p) {
  int w = 0;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % n];
    if (a.y <= p.y) {
      if (b.y > p.y && sign(cross(a, b, p)) > 0) ++w;
    } else {
      if (b.y <= p.y && sign(cross(a, b, p)) < 0) --w;
    }
  }
  return w;
}

// True if p lies on the closed polyline.
inline bool onPolyline(const std::vector<Pt>& poly, const Pt& p) {
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % n];
    if (sign(cross(a, b, p)) != 0) continue;
    if (!(p < a && p < b) && !(a < p && b < p)) return true;
  }
  return false;
}

// Simplicity test for a closed polyline: consecutive segments may share
// only their common vertex; others must be disjoint.
inline bool isSimpleLoop(const std::vector<Pt>& poly) {
  size_t n = poly.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    Pt a = poly[i], b = poly[(i + 1) % n];
    if (a == b) return false;
    for (size_t j = i + 1; j < n; ++j) {
      Pt c = poly[j], d = poly[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      auto h = segIntersect(a, b, c, d);
      if (h.hit) return false;
      if (h.degenerate) {
        if (!adjacent) return false;
        // adjacent segments share exactly one endpoint and must not overlap
        Pt shared = (j == i + 1) ? b : a;
        Pt other1 = (j == i + 1) ? a : b;
        Pt other2 = (j == i + 1) ? d : c;
        if (sign(cross(shared, other1, other2)) == 0) {
          // collinear turn: backtracking or straight-through; straight is
          // fine only if the shared vertex is between them
          if ((other1 < shared && other2 < shared) ||
              (shared < other1 && shared < other2))
            return false;
        }
      }
    }
  }
  return true;
}

// Signed area (positive = counterclockwise).
inline Rat signedArea2(const std::vector<Pt>& poly) {
  Rat acc(0);
  for (size_t i = 0; i < poly.size(); ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % poly.size()];
    acc = acc + (a.x * b.y - b.x * a.y);
  }
  return acc;
}

}  // namespace tf
