#pragma once

// Dense F2 row vectors and Gaussian elimination, sized for complexes with a
// few hundred generators at most.

#include <cstdint>
#include <optional>
#include <vector>

namespace tf {

class F2Vec {
 public:
  F2Vec() = default;
  explicit F2Vec(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool v) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (v) w_[i >> 6] |= m;
    else w_[i >> 6] &= ~m;
  }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

  F2Vec& operator^=(const F2Vec& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend F2Vec operator^(F2Vec a, const F2Vec& b) { return a ^= b; }

  bool isZero() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool operator==(const F2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }

  std::optional<size_t> lowestSet() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) {
        uint64_t w = w_[i];
        size_t b = 0;
        while (!(w & 1)) {
          w >>= 1;
          ++b;
        }
        return (i << 6) + b;
      }
    return std::nullopt;
  }

 private:
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

// Row-echelon basis keyed by pivot column; supports membership tests and
// reduction of new vectors against the span.
class F2Span {
 public:
  explicit F2Span(size_t dim) : dim_(dim) {}

  // Reduces v against the basis; returns the residue.
  F2Vec reduce(F2Vec v) const {
    while (auto l = v.lowestSet()) {
      const F2Vec* r = rowFor(*l);
      if (!r) break;
      v ^= *r;
    }
    return v;
  }

  bool contains(const F2Vec& v) const { return reduce(v).isZero(); }

  // Adds v to the span if independent; returns true if the span grew.
  bool add(F2Vec v) {
    v = reduce(v);
    auto l = v.lowestSet();
    if (!l) return false;
    rows_.emplace_back(*l, v);
    return true;
  }

  size_t rank() const { return rows_.size(); }
  size_t dim() const { return dim_; }

 private:
  const F2Vec* rowFor(size_t pivot) const {
    for (const auto& [p, row] : rows_)
      if (p == pivot) return &row;
    return nullptr;
  }
  size_t dim_;
  std::vector<std::pair<size_t, F2Vec>> rows_;
};

// Solves M x = b over F2 where M is given by columns.  Returns a solution
// as a set of column indices, or nullopt.
inline std::optional<std::vector<size_t>> solveF2(
    const std::vector<F2Vec>& cols, const F2Vec& b) {
  if (cols.empty()) {
    if (b.isZero()) return std::vector<size_t>{};
    return std::nullopt;
  }
  size_t dim = cols[0].size();
  // Augmented elimination tracking combinations.
  struct Row {
    F2Vec v;
    F2Vec combo;
  };
  std::vector<Row> basis;
  auto reduceTracked = [&](F2Vec v, F2Vec combo) {
    for (;;) {
      auto l = v.lowestSet();
      if (!l) break;
      bool hit = false;
      for (auto& r : basis) {
        if (r.v.lowestSet() == l) {
          v ^= r.v;
          combo ^= r.combo;
          hit = true;
          break;
        }
      }
      if (!hit) break;
    }
    return Row{v, combo};
  };
  for (size_t c = 0; c < cols.size(); ++c) {
    F2Vec combo(cols.size());
    combo.set(c, true);
    Row r = reduceTracked(cols[c], combo);
    if (!r.v.isZero()) basis.push_back(r);
  }
  F2Vec zc(cols.size());
  Row rb = reduceTracked(b, zc);
  if (!rb.v.isZero()) return std::nullopt;
  std::vector<size_t> out;
  for (size_t i = 0; i < cols.size(); ++i)
    if (rb.combo.get(i)) out.push_back(i);
  (void)dim;
  return out;
}

}  // namespace tf
