#pragma once

// The torus algebra over F2: idempotents i0, i1 and the six chord words
// 1, 2, 3, 12, 23, 123.  Elements are F2 sums of the eight basis elements.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tf {

// Basis indices. 0,1 are the idempotents; the rest are the chord generators.
enum class Gen : uint8_t {
  I0 = 0,
  I1 = 1,
  R1 = 2,
  R2 = 3,
  R3 = 4,
  R12 = 5,
  R23 = 6,
  R123 = 7,
};

constexpr int kNumGens = 8;

inline const char* genName(Gen g) {
  static const char* names[kNumGens] = {"i0", "i1",  "r1",  "r2",
                                        "r3", "r12", "r23", "r123"};
  return names[static_cast<int>(g)];
}

// Idempotents as a 2-valued tag.
enum class Idem : uint8_t { Zero = 0, One = 1 };

inline const char* idemName(Idem i) { return i == Idem::Zero ? "i0" : "i1"; }
inline Idem otherIdem(Idem i) {
  return i == Idem::Zero ? Idem::One : Idem::Zero;
}

// Letter string of a basis element ("" for idempotents).
inline const std::string& genWord(Gen g) {
  static const std::array<std::string, kNumGens> words = {
      "", "", "1", "2", "3", "12", "23", "123"};
  return words[static_cast<int>(g)];
}

// A chord starting with letter 1 or 3 starts at i0, with 2 at i1;
// ending with 1 or 3 means the right idempotent is i1, with 2 it is i0.
inline Idem leftIdem(Gen g) {
  switch (g) {
    case Gen::I0:
      return Idem::Zero;
    case Gen::I1:
      return Idem::One;
    default: {
      char c = genWord(g).front();
      return (c == '2') ? Idem::One : Idem::Zero;
    }
  }
}

inline Idem rightIdem(Gen g) {
  switch (g) {
    case Gen::I0:
      return Idem::Zero;
    case Gen::I1:
      return Idem::One;
    default: {
      char c = genWord(g).back();
      return (c == '2') ? Idem::Zero : Idem::One;
    }
  }
}

// Chord word wrapper.  Construction rejects anything outside the six words.
class ChordWord {
 public:
  explicit ChordWord(const std::string& w) : gen_(parse(w)) {
    if (!gen_) throw std::invalid_argument("not an admissible chord word: " + w);
  }
  explicit ChordWord(Gen g) : gen_(g) {
    if (g == Gen::I0 || g == Gen::I1)
      throw std::invalid_argument("idempotent is not a chord word");
  }

  Gen gen() const { return *gen_; }
  const std::string& word() const { return genWord(*gen_); }
  Idem left() const { return leftIdem(*gen_); }
  Idem right() const { return rightIdem(*gen_); }

  static std::optional<Gen> parse(const std::string& w) {
    for (int i = 2; i < kNumGens; ++i)
      if (genWord(static_cast<Gen>(i)) == w) return static_cast<Gen>(i);
    return std::nullopt;
  }

  bool operator==(const ChordWord& o) const { return gen_ == o.gen_; }

 private:
  std::optional<Gen> gen_;
};

// Product of basis elements.  Idempotents act as units on their block;
// two chords multiply to the concatenated word when the letters keep
// increasing consecutively and the result is admissible, else zero.
inline std::optional<Gen> mulGen(Gen a, Gen b) {
  if (a == Gen::I0 || a == Gen::I1) {
    Idem ia = (a == Gen::I0) ? Idem::Zero : Idem::One;
    return (leftIdem(b) == ia) ? std::optional<Gen>(b) : std::nullopt;
  }
  if (b == Gen::I0 || b == Gen::I1) {
    Idem ib = (b == Gen::I0) ? Idem::Zero : Idem::One;
    return (rightIdem(a) == ib) ? std::optional<Gen>(a) : std::nullopt;
  }
  const std::string& wa = genWord(a);
  const std::string& wb = genWord(b);
  if (wb.front() != wa.back() + 1) return std::nullopt;
  return ChordWord::parse(wa + wb);
}

// F2 linear combination of the eight basis elements, stored as a bitmask.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(Gen g) : bits_(uint8_t(1) << static_cast<int>(g)) {}

  static AlgebraElement zero() { return AlgebraElement(); }
  static AlgebraElement unit() {
    AlgebraElement e;
    e.bits_ = (1 << static_cast<int>(Gen::I0)) | (1 << static_cast<int>(Gen::I1));
    return e;
  }

  bool isZero() const { return bits_ == 0; }
  bool has(Gen g) const { return bits_ & (uint8_t(1) << static_cast<int>(g)); }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }

  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b) {
    AlgebraElement out;
    for (int i = 0; i < kNumGens; ++i) {
      if (!(a.bits_ & (1 << i))) continue;
      for (int j = 0; j < kNumGens; ++j) {
        if (!(b.bits_ & (1 << j))) continue;
        auto p = mulGen(static_cast<Gen>(i), static_cast<Gen>(j));
        if (p) out.bits_ ^= uint8_t(1) << static_cast<int>(*p);
      }
    }
    return out;
  }

  bool operator==(const AlgebraElement& o) const { return bits_ == o.bits_; }

  std::vector<Gen> support() const {
    std::vector<Gen> s;
    for (int i = 0; i < kNumGens; ++i)
      if (bits_ & (1 << i)) s.push_back(static_cast<Gen>(i));
    return s;
  }

  std::string str() const {
    if (isZero()) return "0";
    std::string out;
    for (Gen g : support()) {
      if (!out.empty()) out += "+";
      out += genName(g);
    }
    return out;
  }

  // Accepts the same grammar str() emits: terms joined by '+'.
  static AlgebraElement parse(const std::string& text);

 private:
  uint8_t bits_ = 0;
};

inline std::optional<Gen> parseGenName(const std::string& t) {
  for (int i = 0; i < kNumGens; ++i)
    if (t == genName(static_cast<Gen>(i))) return static_cast<Gen>(i);
  return std::nullopt;
}

inline AlgebraElement AlgebraElement::parse(const std::string& text) {
  AlgebraElement out;
  if (text == "0") return out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t plus = text.find('+', pos);
    std::string term = text.substr(pos, plus == std::string::npos ? plus : plus - pos);
    // trim spaces
    while (!term.empty() && term.front() == ' ') term.erase(term.begin());
    while (!term.empty() && term.back() == ' ') term.pop_back();
    auto g = parseGenName(term);
    if (!g) throw std::invalid_argument("bad algebra term: '" + term + "'");
    out += AlgebraElement(*g);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return out;
}

// True when letter b may follow letter a in the letter string of a path
// label sequence: chords end in 1 or 3 only before a 2, and a 2 is followed
// by 1 or 3 (inside a chord, by 3).
inline bool letterMayFollow(char a, char b) {
  if (a == '1' || a == '3') return b == '2';
  if (a == '2') return b == '1' || b == '3';
  return false;
}

// Splits the letter string of a path label sequence into the unique
// shortest sequence of admissible chord words; greedy longest-prefix match
// realizes it.  Strings that are not path words (repeated letters, or pairs
// like "31" that no label sequence produces) are rejected.
inline std::vector<ChordWord> splitWord(const std::string& letters) {
  if (letters.empty()) throw std::invalid_argument("empty letter string");
  for (char c : letters)
    if (c != '1' && c != '2' && c != '3')
      throw std::invalid_argument("bad letter in word: " + letters);
  for (size_t i = 0; i + 1 < letters.size(); ++i)
    if (!letterMayFollow(letters[i], letters[i + 1]))
      throw std::invalid_argument("not a path word: " + letters);
  std::vector<ChordWord> out;
  size_t pos = 0;
  while (pos < letters.size()) {
    size_t best = 0;
    for (size_t len = 3; len >= 1; --len) {
      if (pos + len > letters.size()) continue;
      if (ChordWord::parse(letters.substr(pos, len))) {
        best = len;
        break;
      }
    }
    if (best == 0)
      throw std::invalid_argument("no admissible decomposition: " + letters);
    out.emplace_back(letters.substr(pos, best));
    pos += best;
  }
  return out;
}

// Letterwise 1 <-> 3 swap on a raw letter string.
inline std::string dualLetters(const std::string& letters) {
  std::string out = letters;
  for (char& c : out) {
    if (c == '1') c = '3';
    else if (c == '3') c = '1';
  }
  return out;
}

// Duality on a single chord: swap letters, then revalidate.  r123 maps to
// itself under the path convention (swap happens before splitting); single
// chords whose letterwise swap is inadmissible are rejected.
inline ChordWord dualWord(const ChordWord& w) {
  std::string d = dualLetters(w.word());
  auto g = ChordWord::parse(d);
  if (g) return ChordWord(*g);
  // Raw swap of "123" is "321"; the path convention reverses nothing, so
  // the only admissible reading keeps the word itself.
  std::string rev(d.rbegin(), d.rend());
  auto gr = ChordWord::parse(rev);
  if (gr && rev == w.word()) return w;
  throw std::invalid_argument("dual of " + w.word() + " is not a single chord");
}

}  // namespace tf
