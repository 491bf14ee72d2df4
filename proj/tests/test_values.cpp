#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lunim/values.hpp"

using namespace lunim;

namespace {

GameValue randomValue(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<unsigned> small(0, 8);
  switch (kind(rng)) {
    case 0: return GameValue::nimber(small(rng));
    case 1: return GameValue::moon();
    case 2: return GameValue::specialMoon(small(rng));
    default: {
      NimSet a;
      std::uniform_int_distribution<unsigned> mask(0, 255);
      unsigned m = mask(rng);
      for (unsigned i = 0; i < 8; ++i)
        if (m & (1u << i)) a.insert(i);
      return GameValue::inf(std::move(a));
    }
  }
}

}  // namespace

TEST_CASE("mex") {
  CHECK(mex({}) == 0);
  CHECK(mex({0, 1, 3}) == 2);
  CHECK(mex({1, 2}) == 0);
  CHECK(mex({0, 1, 2, 3}) == 4);
}

TEST_CASE("nim addition") {
  CHECK(nimSum(3, 1) == 2);
  CHECK(nimSum(7, 7) == 0);
  CHECK(nimSum(4, 5) == 1);
}

TEST_CASE("addValues follows the sum table") {
  CHECK(addValues(GameValue::specialMoon(3), GameValue::inf({0, 2, 3})) ==
        GameValue::inf({0, 1, 3}));
  CHECK(addValues(GameValue::moon(), GameValue::inf({0})) == GameValue::moon());
  CHECK(addValues(GameValue::inf({0, 1}), GameValue::inf({5})) == GameValue::inf({}));
  CHECK(addValues(GameValue::nimber(2), GameValue::nimber(3)) == GameValue::nimber(1));
  CHECK(addValues(GameValue::nimber(2), GameValue::specialMoon(1)) ==
        GameValue::specialMoon(3));
  CHECK(addValues(GameValue::nimber(1), GameValue::inf({0, 2})) ==
        GameValue::inf({1, 3}));
  CHECK(addValues(GameValue::specialMoon(1), GameValue::specialMoon(2)) ==
        GameValue::specialMoon(3));

  // *0 is the identity on every variant
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    GameValue v = randomValue(rng);
    CHECK(addValues(GameValue::nimber(0), v) == v);
    CHECK(addValues(v, GameValue::nimber(0)) == v);
  }
}

TEST_CASE("sumValue folds left") {
  std::vector<GameValue> worked{GameValue::nimber(3),      GameValue::nimber(1),
                                GameValue::nimber(0),      GameValue::inf({0, 1, 2}),
                                GameValue::specialMoon(3), GameValue::nimber(1)};
  CHECK(sumValue(worked) == GameValue::inf({0, 1, 2}));
  CHECK(sumValue({}) == GameValue::nimber(0));
  CHECK(sumValue({GameValue::specialMoon(3), GameValue::nimber(3)}) ==
        GameValue::specialMoon(0));
}

TEST_CASE("addValues is commutative and associative") {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    GameValue a = randomValue(rng), b = randomValue(rng), c = randomValue(rng);
    CHECK(addValues(a, b) == addValues(b, a));
    CHECK(addValues(addValues(a, b), c) == addValues(a, addValues(b, c)));
  }
}

TEST_CASE("outcomeOfSum cases") {
  SumValue worked;
  worked.nimbers = {3, 1, 0, 1};
  worked.specialMoons = {3};
  worked.infSets = {{0, 1, 2}};
  CHECK(outcomeOfSum(worked) == Outcome::N);

  SumValue oneInf;
  oneInf.infSets = {{1, 2}};
  CHECK(outcomeOfSum(oneInf) == Outcome::D);

  SumValue pair;
  pair.nimbers = {5, 5};
  CHECK(outcomeOfSum(pair) == Outcome::P);

  SumValue moonWins;
  moonWins.moonCount = 1;
  moonWins.infSets = {{}, {}};
  CHECK(outcomeOfSum(moonWins) == Outcome::N);

  SumValue twoInf;
  twoInf.infSets = {{0}, {0}};
  CHECK(outcomeOfSum(twoInf) == Outcome::D);

  SumValue spOnly;
  spOnly.specialMoons = {2};
  CHECK(outcomeOfSum(spOnly) == Outcome::N);
}

TEST_CASE("single-value outcomes") {
  CHECK(outcomeOfValue(GameValue::nimber(0)) == Outcome::P);
  CHECK(outcomeOfValue(GameValue::nimber(4)) == Outcome::N);
  CHECK(outcomeOfValue(GameValue::moon()) == Outcome::N);
  CHECK(outcomeOfValue(GameValue::specialMoon(0)) == Outcome::N);
  CHECK(outcomeOfValue(GameValue::inf({0, 2})) == Outcome::N);
  CHECK(outcomeOfValue(GameValue::inf({1, 2})) == Outcome::D);
  CHECK(outcomeOfValue(GameValue::inf({})) == Outcome::D);
}

TEST_CASE("outcome of the decomposition matches outcome of the folded value") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> len(0, 5);
  for (int i = 0; i < 4000; ++i) {
    std::vector<GameValue> vs;
    int n = len(rng);
    for (int j = 0; j < n; ++j) vs.push_back(randomValue(rng));
    SumValue s = decompose(vs);
    Outcome whole = outcomeOfSum(s);
    Outcome folded = outcomeOfValue(sumValue(vs));
    CHECK(whole == folded);
    if (s.moonCount >= 1) CHECK(whole == Outcome::N);
  }
}

TEST_CASE("nimber-only sums follow the xor rule") {
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = 0; b < 16; ++b)
      for (unsigned c = 0; c < 16; ++c)
        for (unsigned d = 0; d < 16; ++d) {
          SumValue s;
          s.nimbers = {a, b, c, d};
          CHECK(outcomeOfSum(s) == ((a ^ b ^ c ^ d) == 0 ? Outcome::P : Outcome::N));
        }
  for (unsigned a = 0; a < 16; ++a) {
    SumValue s;
    s.nimbers = {a};
    CHECK(outcomeOfSum(s) == (a == 0 ? Outcome::P : Outcome::N));
  }
}
