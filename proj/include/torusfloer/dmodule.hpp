#pragma once

// Type-D structures over the torus algebra: directed labeled graphs with
// chord-word or unit ("dashed") edge labels, the structure relation check,
// cancellation of unit edges, the dual type-A reading of a reduced graph,
// and the box tensor product.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusfloer/algebra.hpp"
#include "torusfloer/complexes.hpp"

namespace tf {

// Edge label: a chord generator, or the coefficient-1 dashed label.
struct EdgeLabel {
  bool unit = false;
  Gen chord = Gen::R1;  // meaningful only when !unit

  static EdgeLabel makeUnit() { return {true, Gen::R1}; }
  static EdgeLabel makeChord(Gen g) { return {false, g}; }

  std::string str() const { return unit ? "unit" : genName(chord); }
  bool operator==(const EdgeLabel& o) const {
    return unit == o.unit && (unit || chord == o.chord);
  }
  bool operator<(const EdgeLabel& o) const {
    if (unit != o.unit) return unit < o.unit;
    return chord < o.chord;
  }
};

struct DEdge {
  size_t src;
  EdgeLabel label;
  size_t dst;
  bool operator<(const DEdge& o) const {
    return std::tie(src, dst, label) < std::tie(o.src, o.dst, o.label);
  }
  bool operator==(const DEdge& o) const {
    return src == o.src && dst == o.dst && label == o.label;
  }
};

class TypeDStructure {
 public:
  size_t addGen(const std::string& name, Idem idem) {
    if (genIndex(name)) throw std::invalid_argument("duplicate generator " + name);
    names_.push_back(name);
    idems_.push_back(idem);
    return names_.size() - 1;
  }

  // Edges must be idempotent compatible; adding the same edge twice cancels.
  void addEdge(size_t src, EdgeLabel label, size_t dst) {
    if (label.unit) {
      if (idems_[src] != idems_[dst])
        throw std::invalid_argument("unit edge between different idempotents");
    } else {
      if (leftIdem(label.chord) != idems_[src] ||
          rightIdem(label.chord) != idems_[dst])
        throw std::invalid_argument("edge label " + label.str() +
                                    " incompatible with idempotents of " +
                                    names_[src] + " -> " + names_[dst]);
    }
    DEdge e{src, label, dst};
    auto it = std::find(edges_.begin(), edges_.end(), e);
    if (it != edges_.end()) edges_.erase(it);
    else edges_.push_back(e);
  }
  void addEdge(const std::string& src, const std::string& label,
               const std::string& dst) {
    EdgeLabel l;
    if (label == "unit") l = EdgeLabel::makeUnit();
    else {
      auto g = parseGenName(label);
      if (!g || *g == Gen::I0 || *g == Gen::I1)
        throw std::invalid_argument("bad edge label " + label);
      l = EdgeLabel::makeChord(*g);
    }
    auto s = genIndex(src), d = genIndex(dst);
    if (!s || !d) throw std::invalid_argument("unknown generator in edge");
    addEdge(*s, l, *d);
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  Idem idem(size_t i) const { return idems_[i]; }
  const std::vector<DEdge>& edges() const { return edges_; }

  std::optional<size_t> genIndex(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  std::vector<DEdge> edgesFrom(size_t src) const {
    std::vector<DEdge> out;
    for (auto& e : edges_)
      if (e.src == src) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<DEdge> edgesTo(size_t dst) const {
    std::vector<DEdge> out;
    for (auto& e : edges_)
      if (e.dst == dst) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool reduced() const {
    for (auto& e : edges_)
      if (e.label.unit) return false;
    return true;
  }

  AlgebraElement labelElement(const EdgeLabel& l, size_t src) const {
    if (l.unit)
      return AlgebraElement(idems_[src] == Idem::Zero ? Gen::I0 : Gen::I1);
    return AlgebraElement(l.chord);
  }

  // Structure relation: for every ordered pair (x,z) the F2 sum over
  // two-step paths of the label product vanishes.
  struct Violation {
    size_t x, z;
    AlgebraElement residue;
  };
  std::vector<Violation> validate() const {
    std::vector<Violation> out;
    for (size_t x = 0; x < size(); ++x) {
      std::map<size_t, AlgebraElement> acc;
      for (auto& e1 : edgesFrom(x))
        for (auto& e2 : edgesFrom(e1.dst)) {
          AlgebraElement p =
              labelElement(e1.label, e1.src) * labelElement(e2.label, e2.src);
          if (!p.isZero()) acc[e2.dst] += p;
        }
      for (auto& [z, el] : acc)
        if (!el.isZero()) out.push_back({x, z, el});
    }
    return out;
  }
  bool valid() const { return validate().empty(); }

  // Cancels unit edges until none remain.  Surviving generators keep their
  // names.  Throws on a unit loop (such a structure never validates).
  TypeDStructure reduce() const {
    TypeDStructure cur = *this;
    for (;;) {
      std::optional<DEdge> unit;
      std::vector<DEdge> sorted = cur.edges_;
      std::sort(sorted.begin(), sorted.end(), [&](const DEdge& a, const DEdge& b) {
        return std::make_pair(cur.names_[a.src], cur.names_[a.dst]) <
               std::make_pair(cur.names_[b.src], cur.names_[b.dst]);
      });
      for (auto& e : sorted)
        if (e.label.unit) {
          unit = e;
          break;
        }
      if (!unit) return cur;
      if (unit->src == unit->dst)
        throw std::invalid_argument("unit loop cannot be cancelled");
      cur = cur.cancel(unit->src, unit->dst);
    }
  }

  // Box tensor with a type-A view of another structure lives in
  // boxTensor(); see below.

  std::string print() const {
    std::ostringstream os;
    for (size_t i = 0; i < size(); ++i)
      os << "gen " << names_[i] << " " << idemName(idems_[i]) << "\n";
    std::vector<DEdge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    for (auto& e : sorted)
      os << "edge " << names_[e.src] << " " << e.label.str() << " "
         << names_[e.dst] << "\n";
    return os.str();
  }

  static TypeDStructure parse(const std::string& text);

  // Graph isomorphism as labeled graphs under the identity on names.
  bool operator==(const TypeDStructure& o) const {
    if (names_ != o.names_ || idems_ != o.idems_) return false;
    auto a = edges_, b = o.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

 private:
  TypeDStructure cancel(size_t x, size_t y) const {
    // Cancels the unit edge x -> y.  Zig-zag: for w -b-> y and x -a-> v the
    // composite edge w -(b*a)-> v appears.
    TypeDStructure out;
    std::vector<size_t> keep;
    std::map<size_t, size_t> remap;
    for (size_t i = 0; i < size(); ++i) {
      if (i == x || i == y) continue;
      remap[i] = out.addGen(names_[i], idems_[i]);
      keep.push_back(i);
    }
    for (auto& e : edges_) {
      if (e.src == x || e.src == y || e.dst == x || e.dst == y) continue;
      out.addEdge(remap[e.src], e.label, remap[e.dst]);
    }
    for (auto& in : edgesTo(y)) {
      if (in.src == x && in.label.unit) continue;
      if (in.src == x || in.src == y) continue;
      for (auto& outE : edgesFrom(x)) {
        if (outE.dst == y && outE.label.unit) continue;
        if (outE.dst == x || outE.dst == y) continue;
        AlgebraElement p =
            labelElement(in.label, in.src) * labelElement(outE.label, outE.src);
        for (Gen g : p.support()) {
          EdgeLabel l = (g == Gen::I0 || g == Gen::I1)
                            ? EdgeLabel::makeUnit()
                            : EdgeLabel::makeChord(g);
          out.addEdge(remap[in.src], l, remap[outE.dst]);
        }
      }
    }
    return out;
  }

  std::vector<std::string> names_;
  std::vector<Idem> idems_;
  std::vector<DEdge> edges_;
};

inline TypeDStructure TypeDStructure::parse(const std::string& text) {
  TypeDStructure d;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    try {
      if (tok == "gen") {
        std::string name, idem;
        ls >> name >> idem;
        if (idem != "i0" && idem != "i1")
          throw std::invalid_argument("idempotent must be i0 or i1");
        d.addGen(name, idem == "i0" ? Idem::Zero : Idem::One);
      } else if (tok == "edge") {
        std::string s, l, t;
        ls >> s >> l >> t;
        d.addEdge(s, l, t);
      } else {
        throw std::invalid_argument("unknown directive '" + tok + "'");
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Type-A view of a reduced structure.

// An A-infinity operation read from the graph: m_{k+1}(x, chords...) = y.
struct AOperation {
  size_t src;
  std::vector<Gen> chords;
  size_t dst;
  bool operator<(const AOperation& o) const {
    return std::tie(src, chords, dst) < std::tie(o.src, o.chords, o.dst);
  }
  bool operator==(const AOperation& o) const {
    return src == o.src && chords == o.chords && dst == o.dst;
  }
};

class TypeAView {
 public:
  explicit TypeAView(const TypeDStructure& d) : d_(d) {
    if (!d.reduced())
      throw std::invalid_argument("type-A view requires a reduced structure");
  }

  const TypeDStructure& backing() const { return d_; }
  size_t size() const { return d_.size(); }
  // The dual module swaps idempotents.
  Idem idem(size_t i) const { return otherIdem(d_.idem(i)); }
  const std::string& name(size_t i) const { return d_.name(i); }

  // All operations from x with path length <= maxLen.  Two distinct paths
  // with the same chord sequence cancel over F2; only odd-multiplicity
  // operations are returned, in lexicographic order.  Sets *truncated when a
  // length-maxLen path still extends.
  std::vector<AOperation> operationsFrom(size_t x, size_t maxLen,
                                         bool* truncated = nullptr) const {
    std::map<AOperation, int> counts;
    if (truncated) *truncated = false;
    struct Frame {
      size_t at;
      std::string word;
      size_t len;
    };
    std::vector<Frame> stack{{x, "", 0}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      if (f.len > 0) {
        auto ops = splitDual(f.word);
        if (ops) counts[{x, *ops, f.at}] ^= 1;
      }
      if (f.len == maxLen) {
        if (truncated && !d_.edgesFrom(f.at).empty()) *truncated = true;
        continue;
      }
      for (auto& e : d_.edgesFrom(f.at)) {
        const std::string& lw = genWord(e.label.chord);
        // The successor rule for path words is 1<->3 symmetric, so pruning
        // on the raw word also prunes the dual.
        if (!f.word.empty() && !letterMayFollow(f.word.back(), lw.front()))
          continue;
        stack.push_back({e.dst, f.word + lw, f.len + 1});
      }
    }
    std::vector<AOperation> out;
    for (auto& [op, c] : counts)
      if (c) out.push_back(op);
    return out;
  }

  // Dual reading of a path word: swap 1<->3, then split into chords.
  static std::optional<std::vector<Gen>> splitDual(const std::string& word) {
    try {
      auto chords = splitWord(dualLetters(word));
      std::vector<Gen> gens;
      for (auto& c : chords) gens.push_back(c.gen());
      return gens;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

 private:
  TypeDStructure d_;
};

// ---------------------------------------------------------------------------
// Box tensor product (hat flavor, all weights 1).

struct BoxResult {
  WeightedComplex complex;
  bool convergent = true;
};

// Pairs idempotent-matched generators (A-view idempotent equals D-side
// idempotent) and sums differential contributions over D-side delta-paths
// matched against A-side operations.  A contribution excluded only by the
// bound makes the result non-convergent.
inline BoxResult boxTensor(const TypeAView& a, const TypeDStructure& d,
                           size_t bound) {
  auto compute = [&](size_t pathBound) {
    WeightedComplex c;
    std::vector<std::pair<size_t, size_t>> gens;
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < d.size(); ++j)
        if (a.idem(i) == d.idem(j)) {
          gens.push_back({i, j});
          c.addGen(a.name(i) + "*" + d.name(j),
                   d.idem(j));
        }
    // D-side delta paths up to pathBound, grouped by source.
    struct DPath {
      size_t from, to;
      std::vector<Gen> labels;
    };
    std::vector<DPath> paths;
    for (size_t j = 0; j < d.size(); ++j) {
      struct Frame {
        size_t at;
        std::vector<Gen> labels;
      };
      std::vector<Frame> stack{{j, {}}};
      while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (!f.labels.empty()) paths.push_back({j, f.at, f.labels});
        if (f.labels.size() == pathBound) continue;
        for (auto& e : d.edgesFrom(f.at)) {
          auto l = f.labels;
          l.push_back(e.label.chord);
          stack.push_back({e.dst, l});
        }
      }
    }
    // A-side operations with chord count <= pathBound (paths up to
    // 3*pathBound letters suffice since every edge contributes a letter).
    std::map<size_t, std::vector<AOperation>> aops;
    for (size_t i = 0; i < a.size(); ++i)
      aops[i] = a.operationsFrom(i, 3 * pathBound);
    auto genIdx = [&](size_t i, size_t j) -> std::optional<size_t> {
      for (size_t k = 0; k < gens.size(); ++k)
        if (gens[k] == std::make_pair(i, j)) return k;
      return std::nullopt;
    };
    for (size_t k = 0; k < gens.size(); ++k) {
      auto [i, j] = gens[k];
      for (auto& p : paths) {
        if (p.from != j) continue;
        for (auto& op : aops[i]) {
          if (op.chords != p.labels) continue;
          auto to = genIdx(op.dst, p.to);
          if (!to) continue;  // idempotent mismatch cannot happen for real ops
          c.addDiff(k, *to, MonomialSum::one());
        }
      }
    }
    return c;
  };
  WeightedComplex base = compute(bound);
  WeightedComplex probe = compute(bound + 3);
  BoxResult r;
  r.complex = base;
  r.convergent = true;
  if (base.size() != probe.size()) r.convergent = false;
  else {
    for (size_t x = 0; x < base.size() && r.convergent; ++x)
      for (size_t y = 0; y < base.size(); ++y)
        if (!(base.diff(x, y) == probe.diff(x, y))) {
          r.convergent = false;
          break;
        }
  }
  return r;
}

}  // namespace tf
