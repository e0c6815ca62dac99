#pragma once

// Morphism complexes between type-D structures: the space of F2-linear
// maps spanned by basic morphisms u -> rho.v, with differential
// df = d_target o f + f o d_source, composition, mapping cones, and the
// algebraic evaluation map Id (x) f between box tensor complexes.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusfloer/dmodule.hpp"
#include "torusfloer/f2.hpp"

namespace tf {

// A basic morphism u |-> rho.v, supported on a single source generator.
// rho ranges over all eight basis elements (idempotents included).
struct BasicMorphism {
  size_t src;  // generator of the source structure
  Gen coeff;
  size_t dst;  // generator of the target structure
  bool operator<(const BasicMorphism& o) const {
    return std::tie(src, coeff, dst) < std::tie(o.src, o.coeff, o.dst);
  }
  bool operator==(const BasicMorphism& o) const {
    return src == o.src && coeff == o.coeff && dst == o.dst;
  }
};

// F2 set of basic morphisms between a fixed pair of structures.
class MorphismElement {
 public:
  MorphismElement() = default;

  void toggle(const BasicMorphism& b) {
    auto it = std::lower_bound(support_.begin(), support_.end(), b);
    if (it != support_.end() && *it == b) support_.erase(it);
    else support_.insert(it, b);
  }
  bool isZero() const { return support_.empty(); }
  const std::vector<BasicMorphism>& support() const { return support_; }

  MorphismElement& operator+=(const MorphismElement& o) {
    for (auto& b : o.support_) toggle(b);
    return *this;
  }
  friend MorphismElement operator+(MorphismElement a, const MorphismElement& b) {
    return a += b;
  }
  bool operator==(const MorphismElement& o) const {
    return support_ == o.support_;
  }

 private:
  std::vector<BasicMorphism> support_;  // sorted
};

class MorComplex {
 public:
  MorComplex(const TypeDStructure& d1, const TypeDStructure& d2)
      : d1_(d1), d2_(d2), basis_(computeBasis(d1, d2)) {}

  const TypeDStructure& source() const { return d1_; }
  const TypeDStructure& target() const { return d2_; }
  const std::vector<BasicMorphism>& basis() const { return basis_; }

  size_t basisIndex(const BasicMorphism& b) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), b);
    if (it == basis_.end() || !(*it == b))
      throw std::invalid_argument("morphism not in basis");
    return size_t(it - basis_.begin());
  }

  // All idempotent-compatible triples (u, rho, v).
  static std::vector<BasicMorphism> computeBasis(const TypeDStructure& d1,
                                                 const TypeDStructure& d2) {
    std::vector<BasicMorphism> out;
    for (size_t u = 0; u < d1.size(); ++u)
      for (size_t v = 0; v < d2.size(); ++v)
        for (int g = 0; g < kNumGens; ++g) {
          Gen gg = static_cast<Gen>(g);
          if (leftIdem(gg) == d1.idem(u) && rightIdem(gg) == d2.idem(v))
            out.push_back({u, gg, v});
        }
    std::sort(out.begin(), out.end());
    return out;
  }

  // df = d2 o f + f o d1, with unit edges acting as idempotents.
  MorphismElement differential(const MorphismElement& f) const {
    MorphismElement out;
    for (auto& b : f.support()) {
      AlgebraElement rho((b.coeff));
      // post-compose with the target differential
      for (auto& e : d2_.edgesFrom(b.dst)) {
        AlgebraElement p = rho * d2_.labelElement(e.label, e.src);
        for (Gen g : p.support()) out.toggle({b.src, g, e.dst});
      }
      // pre-compose with the source differential
      for (auto& e : d1_.edgesTo(b.src)) {
        AlgebraElement p = d1_.labelElement(e.label, e.src) * rho;
        for (Gen g : p.support()) out.toggle({e.src, g, b.dst});
      }
    }
    return out;
  }

  F2Vec toVec(const MorphismElement& f) const {
    F2Vec v(basis_.size());
    for (auto& b : f.support()) v.flip(basisIndex(b));
    return v;
  }
  MorphismElement fromVec(const F2Vec& v) const {
    MorphismElement f;
    for (size_t i = 0; i < basis_.size(); ++i)
      if (v.get(i)) f.toggle(basis_[i]);
    return f;
  }

  std::vector<F2Vec> differentialMatrix() const {
    std::vector<F2Vec> cols;
    cols.reserve(basis_.size());
    for (auto& b : basis_) {
      MorphismElement f;
      f.toggle(b);
      cols.push_back(toVec(differential(f)));
    }
    return cols;
  }

  struct Homology {
    size_t rank = 0;
    std::vector<MorphismElement> representatives;
    std::vector<MorphismElement> boundaryBasis;
  };

  Homology homology() const {
    auto cols = differentialMatrix();
    size_t n = basis_.size();
    Homology h;
    // Kernel basis via elimination with combination tracking.
    struct Row {
      F2Vec v;
      F2Vec combo;
    };
    std::vector<Row> rows;
    std::vector<F2Vec> kernelBasis;
    for (size_t c = 0; c < n; ++c) {
      F2Vec v = cols[c];
      F2Vec combo(n);
      combo.set(c, true);
      for (;;) {
        auto l = v.lowestSet();
        if (!l) break;
        bool hit = false;
        for (auto& r : rows)
          if (r.v.lowestSet() == l) {
            v ^= r.v;
            combo ^= r.combo;
            hit = true;
            break;
          }
        if (!hit) break;
      }
      if (v.isZero()) kernelBasis.push_back(combo);
      else rows.push_back({v, combo});
    }
    // Image basis.
    F2Span image(n);
    for (auto& c : cols)
      if (image.add(c)) h.boundaryBasis.push_back(fromVec(c));
    size_t imageRank = image.rank();
    // Representatives: kernel vectors independent modulo the image.
    F2Span quot(n);
    for (auto& c : cols) quot.add(c);
    for (auto& k : kernelBasis)
      if (quot.add(k)) h.representatives.push_back(fromVec(k));
    h.rank = quot.rank() - imageRank;
    return h;
  }

  // True when f is a cycle and a boundary.
  bool isBoundary(const MorphismElement& f) const {
    auto cols = differentialMatrix();
    return solveF2(cols, toVec(f)).has_value();
  }
  bool isCycle(const MorphismElement& f) const {
    return differential(f).isZero();
  }
  // Homotopic = difference is a boundary.
  bool homotopic(const MorphismElement& f, const MorphismElement& g) const {
    MorphismElement d = f;
    d += g;
    return isBoundary(d);
  }
  // Nullhomotopy certificate: H with dH = f, if one exists.
  std::optional<MorphismElement> nullhomotopy(const MorphismElement& f) const {
    auto cols = differentialMatrix();
    auto sol = solveF2(cols, toVec(f));
    if (!sol) return std::nullopt;
    MorphismElement h;
    for (size_t c : *sol) h.toggle(basis_[c]);
    return h;
  }

  std::string printElement(const MorphismElement& f) const {
    if (f.isZero()) return "0";
    std::string out;
    for (auto& b : f.support()) {
      if (!out.empty()) out += " + ";
      out += d1_.name(b.src);
      out += " ";
      out += genName(b.coeff);
      out += " ";
      out += d2_.name(b.dst);
    }
    return out;
  }

  // Parses lines of the form `mor <src> <label> <dst>`.
  MorphismElement parseElement(const std::string& text) const {
    MorphismElement f;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      std::istringstream ls(line);
      std::string tok;
      if (!(ls >> tok) || tok[0] == '#') continue;
      if (tok != "mor")
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected 'mor'");
      std::string s, l, t;
      ls >> s >> l >> t;
      auto u = d1_.genIndex(s), v = d2_.genIndex(t);
      auto g = parseGenName(l);
      if (!u || !v || !g)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": unknown generator or label");
      BasicMorphism b{*u, *g, *v};
      if (leftIdem(*g) != d1_.idem(*u) || rightIdem(*g) != d2_.idem(*v))
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": idempotent-incompatible morphism");
      f.toggle(b);
    }
    return f;
  }

 private:
  TypeDStructure d1_, d2_;
  std::vector<BasicMorphism> basis_;
};

// Composition Mor(D0,D1) x Mor(D1,D2) -> Mor(D0,D2): basic pieces
// u -> rho.v and v -> sigma.w give u -> (rho sigma).w.
inline MorphismElement compose2(const MorphismElement& f,
                                const MorphismElement& g) {
  MorphismElement out;
  for (auto& bf : f.support())
    for (auto& bg : g.support()) {
      if (bf.dst != bg.src) continue;
      AlgebraElement p = AlgebraElement(bf.coeff) * AlgebraElement(bg.coeff);
      for (Gen h : p.support()) out.toggle({bf.src, h, bg.dst});
    }
  return out;
}

// Identity morphism of a structure.
inline MorphismElement identityMorphism(const TypeDStructure& d) {
  MorphismElement id;
  for (size_t i = 0; i < d.size(); ++i)
    id.toggle({i, d.idem(i) == Idem::Zero ? Gen::I0 : Gen::I1, i});
  return id;
}

// Mapping cone: disjoint union with connecting edges labeled by the
// morphism coefficients.  Source generators get suffix '0', target '1'
// when names collide.
inline TypeDStructure cone(const TypeDStructure& d1, const TypeDStructure& d2,
                           const MorphismElement& f, bool requireCycle) {
  if (requireCycle) {
    MorComplex mc(d1, d2);
    if (!mc.isCycle(f)) throw std::invalid_argument("cone of a non-cycle");
  }
  TypeDStructure out;
  std::vector<std::string> n1(d1.size()), n2(d2.size());
  auto fresh = [&](std::string base) {
    while (out.genIndex(base)) base += "'";
    return base;
  };
  for (size_t i = 0; i < d1.size(); ++i) {
    n1[i] = fresh(d1.name(i));
    out.addGen(n1[i], d1.idem(i));
  }
  for (size_t i = 0; i < d2.size(); ++i) {
    n2[i] = fresh(d2.name(i));
    out.addGen(n2[i], d2.idem(i));
  }
  for (auto& e : d1.edges()) out.addEdge(*out.genIndex(n1[e.src]), e.label, *out.genIndex(n1[e.dst]));
  for (auto& e : d2.edges()) out.addEdge(*out.genIndex(n2[e.src]), e.label, *out.genIndex(n2[e.dst]));
  for (auto& b : f.support()) {
    EdgeLabel l = (b.coeff == Gen::I0 || b.coeff == Gen::I1)
                      ? EdgeLabel::makeUnit()
                      : EdgeLabel::makeChord(b.coeff);
    out.addEdge(*out.genIndex(n1[b.src]), l, *out.genIndex(n2[b.dst]));
  }
  return out;
}

// The evaluation map Id (x) f between box tensor complexes, computed from
// the factorization recipe: a D0-side delta path, one insertion of a basic
// piece of f, a D1-side delta path, matched against a single A-side
// operation.  Returns the matrix as columns over the source box generators.
struct EvalResult {
  WeightedComplex source, target;  // box complexes
  std::vector<F2Vec> matrix;       // column x = image of source gen x
  bool convergent = true;
};

inline EvalResult evaluateIdBoxF(const TypeAView& a, const TypeDStructure& d1,
                                 const TypeDStructure& d2,
                                 const MorphismElement& f, size_t bound) {
  EvalResult out;
  BoxResult b1 = boxTensor(a, d1, bound);
  BoxResult b2 = boxTensor(a, d2, bound);
  out.source = b1.complex;
  out.target = b2.complex;
  out.convergent = b1.convergent && b2.convergent;

  auto compute = [&](size_t pathBound) {
    std::vector<std::map<size_t, int>> cols(out.source.size());
    // delta paths in a structure, including the empty path.
    auto paths = [&](const TypeDStructure& d) {
      struct DPath {
        size_t from, to;
        std::vector<Gen> labels;
      };
      std::vector<DPath> ps;
      for (size_t j = 0; j < d.size(); ++j) {
        struct Frame {
          size_t at;
          std::vector<Gen> labels;
        };
        std::vector<Frame> stack{{j, {}}};
        while (!stack.empty()) {
          Frame fr = stack.back();
          stack.pop_back();
          ps.push_back({j, fr.at, fr.labels});
          if (fr.labels.size() == pathBound) continue;
          for (auto& e : d.edgesFrom(fr.at)) {
            auto l = fr.labels;
            l.push_back(e.label.chord);
            stack.push_back({e.dst, l});
          }
        }
      }
      return ps;
    };
    auto p1 = paths(d1);
    auto p2 = paths(d2);
    std::map<size_t, std::vector<AOperation>> aops;
    for (size_t i = 0; i < a.size(); ++i)
      aops[i] = a.operationsFrom(i, 3 * (pathBound + 1));
    for (size_t k = 0; k < out.source.size(); ++k) {
      // decode source generator name "aname*dname"
      const std::string& nm = out.source.gen(k).name;
      size_t star = nm.find('*');
      size_t ai = *a.backing().genIndex(nm.substr(0, star));
      size_t xi = *d1.genIndex(nm.substr(star + 1));
      for (auto& q1 : p1) {
        if (q1.from != xi) continue;
        for (auto& bf : f.support()) {
          if (bf.src != q1.to) continue;
          for (auto& q2 : p2) {
            if (q2.from != bf.dst) continue;
            // Assemble the algebra input sequence.  Strict unitality: an
            // idempotent coefficient contributes only through the plain
            // m_2(a, iota) = a term, with both delta paths empty.
            bool idemCoeff = (bf.coeff == Gen::I0 || bf.coeff == Gen::I1);
            if (idemCoeff) {
              if (!q1.labels.empty() || !q2.labels.empty()) continue;
              auto target = out.target.genIndex(a.name(ai) + "*" +
                                                d2.name(q2.to));
              if (target) cols[k][*target] ^= 1;
              continue;
            }
            std::vector<Gen> seq = q1.labels;
            seq.push_back(bf.coeff);
            for (Gen g : q2.labels) seq.push_back(g);
            if (seq.size() > pathBound + 1) continue;
            for (auto& op : aops[ai]) {
              if (op.chords != seq) continue;
              auto target = out.target.genIndex(a.name(op.dst) + "*" +
                                                d2.name(q2.to));
              if (target) cols[k][*target] ^= 1;
            }
          }
        }
      }
    }
    return cols;
  };

  auto base = compute(bound);
  auto probe = compute(bound + 2);
  if (base != probe) out.convergent = false;
  out.matrix.assign(out.source.size(), F2Vec(out.target.size()));
  for (size_t k = 0; k < base.size(); ++k)
    for (auto& [t, c] : base[k])
      if (c) out.matrix[k].set(t, true);
  return out;
}

}  // namespace tf
