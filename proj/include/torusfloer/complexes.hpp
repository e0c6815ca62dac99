#pragma once

// Chain complexes over F2[U,V] with differential entries that are finite
// sums of monomials U^a V^b.  The hat flavor is the specialization U=V=0.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torusfloer/algebra.hpp"
#include "torusfloer/f2.hpp"

namespace tf {

// F2 sum of monomials U^a V^b, kept sorted and duplicate-free.
class MonomialSum {
 public:
  MonomialSum() = default;
  static MonomialSum one() { return monomial(0, 0); }
  static MonomialSum monomial(int a, int b) {
    MonomialSum m;
    m.terms_.push_back({a, b});
    return m;
  }

  bool isZero() const { return terms_.empty(); }

  MonomialSum& operator+=(const MonomialSum& o) {
    for (auto& t : o.terms_) toggle(t);
    return *this;
  }
  friend MonomialSum operator+(MonomialSum a, const MonomialSum& b) {
    return a += b;
  }
  friend MonomialSum operator*(const MonomialSum& a, const MonomialSum& b) {
    MonomialSum out;
    for (auto& s : a.terms_)
      for (auto& t : b.terms_)
        out.toggle({s.first + t.first, s.second + t.second});
    return out;
  }

  bool operator==(const MonomialSum& o) const { return terms_ == o.terms_; }

  // Coefficient of U^0 V^0.
  bool constantTerm() const {
    for (auto& t : terms_)
      if (t.first == 0 && t.second == 0) return true;
    return false;
  }

  MonomialSum setU0() const {  // kill all terms with a U power
    MonomialSum out;
    for (auto& t : terms_)
      if (t.first == 0) out.toggle(t);
    return out;
  }
  MonomialSum setV0() const {
    MonomialSum out;
    for (auto& t : terms_)
      if (t.second == 0) out.toggle(t);
    return out;
  }

  const std::vector<std::pair<int, int>>& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& t : terms_) {
      if (!out.empty()) out += "+";
      if (t.first == 0 && t.second == 0) out += "1";
      else {
        if (t.first > 0) {
          out += "U";
          if (t.first > 1) out += "^" + std::to_string(t.first);
        }
        if (t.second > 0) {
          out += "V";
          if (t.second > 1) out += "^" + std::to_string(t.second);
        }
      }
    }
    return out;
  }

  static MonomialSum parse(const std::string& text);

 private:
  void toggle(std::pair<int, int> t) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
    if (it != terms_.end() && *it == t) terms_.erase(it);
    else terms_.insert(it, t);
  }
  std::vector<std::pair<int, int>> terms_;  // (U power, V power)
};

inline MonomialSum MonomialSum::parse(const std::string& text) {
  MonomialSum out;
  if (text == "0") return out;
  size_t pos = 0;
  auto readExp = [&](size_t& p) {
    int e = 1;
    if (p < text.size() && text[p] == '^') {
      ++p;
      size_t q = p;
      while (q < text.size() && isdigit(text[q])) ++q;
      e = std::stoi(text.substr(p, q - p));
      p = q;
    }
    return e;
  };
  while (pos < text.size()) {
    size_t plus = text.find('+', pos);
    size_t end = (plus == std::string::npos) ? text.size() : plus;
    size_t p = pos;
    int a = 0, b = 0;
    if (text[p] == '1' && p + 1 == end) {
      ++p;
    } else {
      if (p < end && text[p] == 'U') {
        ++p;
        a = readExp(p);
      }
      if (p < end && text[p] == 'V') {
        ++p;
        b = readExp(p);
      }
    }
    if (p != end) throw std::invalid_argument("bad monomial: " + text);
    out += monomial(a, b);
    pos = (plus == std::string::npos) ? text.size() : plus + 1;
  }
  return out;
}

// Generators carry a name, an idempotent tag and an optional integer
// Alexander grading.
struct ComplexGen {
  std::string name;
  Idem idem = Idem::Zero;
  std::optional<int> alexander;
};

class WeightedComplex {
 public:
  WeightedComplex() = default;

  size_t addGen(const std::string& name, Idem idem,
                std::optional<int> alex = std::nullopt) {
    gens_.push_back({name, idem, alex});
    for (auto& row : diff_) row.emplace_back();
    diff_.emplace_back(gens_.size());
    return gens_.size() - 1;
  }

  size_t size() const { return gens_.size(); }
  const ComplexGen& gen(size_t i) const { return gens_[i]; }
  ComplexGen& gen(size_t i) { return gens_[i]; }

  std::optional<size_t> genIndex(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i].name == name) return i;
    return std::nullopt;
  }

  // d(from) += coeff * to
  void addDiff(size_t from, size_t to, const MonomialSum& coeff) {
    diff_[from][to] += coeff;
  }
  const MonomialSum& diff(size_t from, size_t to) const {
    return diff_[from][to];
  }

  // d^2 over F2[U,V].
  bool dSquaredZero() const {
    size_t n = gens_.size();
    for (size_t x = 0; x < n; ++x)
      for (size_t z = 0; z < n; ++z) {
        MonomialSum acc;
        for (size_t y = 0; y < n; ++y) acc += diff_[x][y] * diff_[y][z];
        if (!acc.isZero()) return false;
      }
    return true;
  }

  // Specialization U=V=0 as an F2 matrix (columns indexed by source).
  std::vector<F2Vec> hatMatrix() const {
    size_t n = gens_.size();
    std::vector<F2Vec> cols(n, F2Vec(n));
    for (size_t x = 0; x < n; ++x)
      for (size_t y = 0; y < n; ++y)
        if (diff_[x][y].constantTerm()) cols[x].set(y, true);
    return cols;
  }

  WeightedComplex applySetV0() const {
    WeightedComplex out = *this;
    for (auto& row : out.diff_)
      for (auto& e : row) e = e.setV0();
    return out;
  }
  WeightedComplex applySetU0() const {
    WeightedComplex out = *this;
    for (auto& row : out.diff_)
      for (auto& e : row) e = e.setU0();
    return out;
  }

  // Rank of homology of the hat specialization: dim ker - dim im.
  size_t hatHomologyRank() const {
    auto cols = hatMatrix();
    if (cols.empty()) return 0;
    F2Span image(size());
    for (auto& c : cols) image.add(c);
    size_t kernel = size() - image.rank();
    return kernel - image.rank();
  }

  std::string print() const {
    std::ostringstream os;
    for (size_t i = 0; i < gens_.size(); ++i) {
      os << "gen " << gens_[i].name << " " << idemName(gens_[i].idem);
      if (gens_[i].alexander) os << " " << *gens_[i].alexander;
      os << "\n";
    }
    for (size_t x = 0; x < gens_.size(); ++x)
      for (size_t y = 0; y < gens_.size(); ++y)
        if (!diff_[x][y].isZero())
          os << "d " << gens_[x].name << " " << gens_[y].name << " "
             << diff_[x][y].str() << "\n";
    return os.str();
  }

 private:
  std::vector<ComplexGen> gens_;
  std::vector<std::vector<MonomialSum>> diff_;  // diff_[from][to]
};

// Homology rank of an F2 differential given by columns d(x) = cols[x].
inline size_t f2HomologyRank(const std::vector<F2Vec>& cols) {
  if (cols.empty()) return 0;
  size_t n = cols.size();
  F2Span image(cols[0].size());
  for (auto& c : cols) image.add(c);
  size_t rank = image.rank();
  size_t kernel = n - rank;
  return kernel - rank;
}

}  // namespace tf
