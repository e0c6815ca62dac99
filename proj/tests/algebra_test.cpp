#include <catch2/catch_amalgamated.hpp>

#include "torusfloer/algebra.hpp"

using namespace tf;

namespace {

AlgebraElement el(Gen g) { return AlgebraElement(g); }

// Brute-force shortest decomposition into admissible chord words, for the
// splitWord oracle.  Returns the number of words in a shortest
// decomposition, or -1 if none exists, plus whether it is unique.
int bruteShortest(const std::string& s, int* count = nullptr) {
  if (s.empty()) {
    if (count) *count = 1;
    return 0;
  }
  int best = -1, ways = 0;
  for (size_t len = 1; len <= 3 && len <= s.size(); ++len) {
    if (!ChordWord::parse(s.substr(0, len))) continue;
    int sub = bruteShortest(s.substr(len));
    if (sub < 0) continue;
    if (best < 0 || sub + 1 < best) {
      best = sub + 1;
      ways = 1;
    } else if (sub + 1 == best) {
      ++ways;
    }
  }
  if (count) *count = ways;
  return best;
}

void allPathWords(std::string& cur, size_t maxLen,
                  std::vector<std::string>& out) {
  if (!cur.empty()) out.push_back(cur);
  if (cur.size() == maxLen) return;
  for (char c : {'1', '2', '3'}) {
    if (!cur.empty() && !letterMayFollow(cur.back(), c)) continue;
    cur.push_back(c);
    allPathWords(cur, maxLen, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("basis multiplication follows the chord concatenation rule") {
  CHECK(el(Gen::R1) * el(Gen::R2) == el(Gen::R12));
  CHECK((el(Gen::R2) * el(Gen::R1)).isZero());
  CHECK(el(Gen::I0) * el(Gen::R3) == el(Gen::R3));
  CHECK((el(Gen::R3) * el(Gen::I0)).isZero());
  CHECK(el(Gen::R1) * el(Gen::R23) == el(Gen::R123));
  CHECK(el(Gen::R12) * el(Gen::R3) == el(Gen::R123));
  CHECK(el(Gen::R2) * el(Gen::R3) == el(Gen::R23));
  for (int i = 2; i < kNumGens; ++i) {
    Gen g = static_cast<Gen>(i);
    CHECK((el(g) * el(g)).isZero());
  }
  CHECK((el(Gen::R2) * el(Gen::R12)).isZero());
  CHECK((el(Gen::R3) * el(Gen::R2)).isZero());
  CHECK((el(Gen::R1) * el(Gen::R3)).isZero());
}

TEST_CASE("idempotent block decomposition") {
  // i0.A.i1 = {r1, r3, r123}, i1.A.i0 = {r2}, i0.A.i0 = {i0, r12},
  // i1.A.i1 = {i1, r23}
  auto inBlock = [](Gen g, Idem l, Idem r) {
    return leftIdem(g) == l && rightIdem(g) == r;
  };
  CHECK(inBlock(Gen::R1, Idem::Zero, Idem::One));
  CHECK(inBlock(Gen::R3, Idem::Zero, Idem::One));
  CHECK(inBlock(Gen::R123, Idem::Zero, Idem::One));
  CHECK(inBlock(Gen::R2, Idem::One, Idem::Zero));
  CHECK(inBlock(Gen::R12, Idem::Zero, Idem::Zero));
  CHECK(inBlock(Gen::R23, Idem::One, Idem::One));
  CHECK(inBlock(Gen::I0, Idem::Zero, Idem::Zero));
  CHECK(inBlock(Gen::I1, Idem::One, Idem::One));
}

TEST_CASE("associativity on all basis triples") {
  for (int i = 0; i < kNumGens; ++i)
    for (int j = 0; j < kNumGens; ++j)
      for (int k = 0; k < kNumGens; ++k) {
        AlgebraElement a = el(static_cast<Gen>(i));
        AlgebraElement b = el(static_cast<Gen>(j));
        AlgebraElement c = el(static_cast<Gen>(k));
        CHECK((a * b) * c == a * (b * c));
      }
}

TEST_CASE("i0 + i1 is a two-sided unit") {
  AlgebraElement unit = AlgebraElement::unit();
  for (int i = 0; i < kNumGens; ++i) {
    AlgebraElement a = el(static_cast<Gen>(i));
    CHECK(unit * a == a);
    CHECK(a * unit == a);
  }
}

TEST_CASE("block purity of multiplication") {
  for (int i = 2; i < kNumGens; ++i)
    for (int j = 2; j < kNumGens; ++j) {
      Gen a = static_cast<Gen>(i), b = static_cast<Gen>(j);
      AlgebraElement p = el(a) * el(b);
      if (rightIdem(a) != leftIdem(b)) {
        CHECK(p.isZero());
      } else if (!p.isZero()) {
        Gen g = p.support()[0];
        CHECK(leftIdem(g) == leftIdem(a));
        CHECK(rightIdem(g) == rightIdem(b));
      }
    }
}

TEST_CASE("splitWord matches the spec examples") {
  auto w = splitWord("123");
  REQUIRE(w.size() == 1);
  CHECK(w[0].word() == "123");
  CHECK_THROWS(splitWord("13"));
  CHECK_THROWS(splitWord("11"));
  CHECK_THROWS(splitWord("31"));
}

TEST_CASE("splitWord is the unique shortest decomposition on path words") {
  std::vector<std::string> words;
  std::string cur;
  allPathWords(cur, 8, words);
  for (auto& s : words) {
    int ways = 0;
    int best = bruteShortest(s, &ways);
    REQUIRE(best >= 1);
    auto greedy = splitWord(s);
    CHECK(int(greedy.size()) == best);
    CHECK(ways == 1);
    std::string cat;
    for (auto& c : greedy) cat += c.word();
    CHECK(cat == s);  // split then concatenate is the identity
  }
}

TEST_CASE("LOT-style dual reading of loop words") {
  // "23" dualizes to "21" = (r2, r1); two turns give (r2, r12, r1).
  auto s1 = splitWord(dualLetters("23"));
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].word() == "2");
  CHECK(s1[1].word() == "1");
  auto s2 = splitWord(dualLetters("2323"));
  REQUIRE(s2.size() == 3);
  CHECK(s2[0].word() == "2");
  CHECK(s2[1].word() == "12");
  CHECK(s2[2].word() == "1");
}

TEST_CASE("dualWord on single chords") {
  CHECK(dualWord(ChordWord("1")).word() == "3");
  CHECK(dualWord(ChordWord("3")).word() == "1");
  CHECK(dualWord(ChordWord("2")).word() == "2");
  CHECK(dualWord(ChordWord("123")).word() == "123");
  CHECK_THROWS(dualWord(ChordWord("12")));
}

TEST_CASE("element parsing and printing round-trip") {
  AlgebraElement a = el(Gen::R1) + el(Gen::R23) + el(Gen::I0);
  CHECK(AlgebraElement::parse(a.str()) == a);
  CHECK(AlgebraElement::parse("0").isZero());
  CHECK(AlgebraElement::parse("r12+r12").isZero());
  CHECK_THROWS(AlgebraElement::parse("r4"));
}
