#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lunim/entailing.hpp"
#include "lunim/notation.hpp"

using namespace lunim;

namespace {

TreeId randomTree(TreeArena& arena, std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 5);
  if (depth == 0 || pick(rng) == 0)
    return pick(rng) % 2 ? arena.infinity() : arena.coInfinity();
  std::vector<TreeId> l, r;
  std::uniform_int_distribution<int> width(0, 2);
  for (int i = width(rng); i > 0; --i) l.push_back(randomTree(arena, rng, depth - 1));
  for (int i = width(rng); i > 0; --i) r.push_back(randomTree(arena, rng, depth - 1));
  if (l.empty() && r.empty()) l.push_back(arena.infinity());
  return arena.node(std::move(l), std::move(r));
}

}  // namespace

TEST_CASE("conjugate") {
  TreeArena arena;
  CHECK(arena.conjugate(arena.infinity()) == arena.coInfinity());
  CHECK(arena.conjugate(arena.coInfinity()) == arena.infinity());
  CHECK(arena.conjugate(arena.nimTree(0)) == arena.nimTree(0));
  CHECK(arena.conjugate(arena.moonTree()) == arena.moonTree());

  TreeId check = arena.node({arena.infinity()}, {arena.nimTree(2)});
  TreeId counter = arena.node({arena.nimTree(2)}, {arena.coInfinity()});
  CHECK(arena.conjugate(check) == counter);

  std::mt19937 rng(41);
  for (int i = 0; i < 500; ++i) {
    TreeId t = randomTree(arena, rng, 3);
    CHECK(arena.conjugate(arena.conjugate(t)) == t);
  }
}

TEST_CASE("checks and quiet positions") {
  TreeArena arena;
  TreeId moon = arena.moonTree();
  CHECK(arena.isLeftCheck(moon));
  CHECK(arena.isRightCheck(moon));
  CHECK(!arena.isQuiet(moon));

  TreeId zero = arena.nimTree(0);
  CHECK(!arena.isLeftCheck(zero));
  CHECK(!arena.isRightCheck(zero));
  CHECK(arena.isQuiet(zero));

  TreeId leftOnly = arena.node({arena.infinity()}, {arena.nimTree(0)});
  CHECK(arena.isLeftCheck(leftOnly));
  CHECK(!arena.isRightCheck(leftOnly));

  // the infinities themselves are neither checks nor quiet
  CHECK(!arena.isLeftCheck(arena.infinity()));
  CHECK(!arena.isQuiet(arena.infinity()));
  CHECK(!arena.isQuiet(arena.coInfinity()));
}

TEST_CASE("symmetry and the impartial entailing test") {
  TreeArena arena;
  CHECK(arena.isSymmetric(arena.moonTree()));
  CHECK(arena.isSymmetric(arena.nimTree(3)));
  CHECK(!arena.isSymmetric(arena.node({arena.infinity()}, {arena.infinity()})));
  CHECK(!arena.isSymmetric(arena.infinity()));

  // the J position: {*2, {inf|*2} | *2, {*2|~inf}}
  TreeId sp2 = arena.specialMoonTree(2);
  CHECK(arena.isImpartialEntailing(sp2));
  CHECK(arena.isImpartialEntailing(arena.moonTree()));
  CHECK(arena.isImpartialEntailing(arena.nimTree(4)));

  // symmetric root with an asymmetric quiet follower is rejected
  TreeId lop = arena.node({arena.nimTree(0)}, {arena.nimTree(1)});  // quiet, asymmetric
  TreeId bad = arena.node({lop}, {arena.conjugate(lop)});
  CHECK(arena.isSymmetric(bad));
  CHECK(!arena.isImpartialEntailing(bad));
}

TEST_CASE("outcomeWithNimber") {
  TreeArena arena;
  EntailingSolver solver(arena);

  CHECK(solver.outcomeWithNimber(arena.nimTree(0), 0) == Outcome::P);
  CHECK(solver.outcomeWithNimber(arena.nimTree(2), 2) == Outcome::P);
  CHECK(solver.outcomeWithNimber(arena.nimTree(2), 1) == Outcome::N);
  for (unsigned k = 0; k <= 8; ++k)
    CHECK(solver.outcomeWithNimber(arena.moonTree(), k) == Outcome::N);

  // {inf | *2} + *k: Left first takes her infinity. Right first must step to
  // *2 + *k, handing Left the move; Left loses that exactly when k = 2.
  TreeId check = arena.node({arena.infinity()}, {arena.nimTree(2)});
  for (unsigned k = 0; k <= 8; ++k)
    CHECK(solver.outcomeWithNimber(check, k) == (k == 2 ? Outcome::N : Outcome::L));

  // conjugate view of the same position
  TreeId counter = arena.conjugate(check);
  for (unsigned k = 0; k <= 8; ++k)
    CHECK(solver.outcomeWithNimber(counter, k) == (k == 2 ? Outcome::N : Outcome::R));
}

TEST_CASE("immediate nimbers") {
  TreeArena arena;
  EntailingSolver solver(arena);
  CHECK(solver.immediateNimbers(arena.moonTree()).empty());
  CHECK(solver.immediateNimbers(arena.specialMoonTree(3)) == std::set<unsigned>{3});
  CHECK(solver.immediateNimbers(arena.nimTree(2)) == std::set<unsigned>{0, 1});
}

TEST_CASE("protected nimbers") {
  TreeArena arena;
  EntailingSolver solver(arena);

  auto moon = solver.protectedNimbers(arena.moonTree(), 8);
  CHECK(moon.allNimbers);

  auto quiet = solver.protectedNimbers(arena.nimTree(3), 8);
  CHECK(!quiet.allNimbers);
  CHECK(quiet.values.empty());

  auto sp3 = solver.protectedNimbers(arena.specialMoonTree(3), 8);
  CHECK(!sp3.allNimbers);
  std::set<unsigned> expected;
  for (unsigned n = 0; n <= 8; ++n)
    if (n != 3) expected.insert(n);
  CHECK(sp3.values == expected);
}

TEST_CASE("covering value rule") {
  TreeArena arena;
  EntailingSolver solver(arena);
  CHECK(solver.coveringValue(arena.moonTree()) == GameValue::moon());
  CHECK(solver.coveringValue(arena.nimTree(0)) == GameValue::nimber(0));
  CHECK(solver.coveringValue(arena.nimTree(2)) == GameValue::nimber(2));
  CHECK(solver.coveringValue(arena.specialMoonTree(1)) == GameValue::moon());
  for (unsigned k = 0; k <= 6; ++k)
    CHECK(solver.coveringValue(arena.nimTree(k)) == GameValue::nimber(k));
}

TEST_CASE("classification") {
  TreeArena arena;
  EntailingSolver solver(arena);

  CHECK(solver.classify(arena.specialMoonTree(2)) == ImsClass::specialMoon(2));
  CHECK(solver.classify(arena.moonTree()) == ImsClass::moon());
  CHECK(solver.classify(arena.nimTree(0)) == ImsClass::nimber(0));
  CHECK(solver.classify(arena.nimTree(5)) == ImsClass::nimber(5));

  TreeId n2 = arena.nimTree(2), n3 = arena.nimTree(3);
  TreeId wideCheck = arena.node({arena.infinity()}, {n2, n3});
  TreeId g = arena.node({n2, n3, wideCheck},
                        {n2, n3, arena.conjugate(wideCheck)});
  CHECK(solver.classify(g) == ImsClass::outsideFragment());

  TreeId c2 = arena.node({arena.infinity()}, {n2});
  TreeId c3 = arena.node({arena.infinity()}, {n3});
  TreeId h = arena.node({n2, n3, c2, c3},
                        {n2, n3, arena.conjugate(c2), arena.conjugate(c3)});
  CHECK(solver.classify(h) == ImsClass::outsideFragment());

  // a moon-like position that is not literally the moon or a special moon
  TreeId loud = arena.node({arena.infinity(), arena.nimTree(0)},
                           {arena.coInfinity(), arena.nimTree(0)});
  CHECK(solver.classify(loud) == ImsClass::outsideFragment());

  CHECK_THROWS_AS(solver.classify(arena.node({arena.infinity()}, {arena.infinity()})),
                  std::invalid_argument);
}

TEST_CASE("special moons with every small witness set classify exactly") {
  TreeArena arena;
  EntailingSolver solver(arena);

  // members available for A: nimbers *0..*4 and plain special moons sp(0)..sp(4)
  std::vector<TreeId> members;
  for (unsigned k = 0; k <= 4; ++k) members.push_back(arena.nimTree(k));
  for (unsigned m = 0; m <= 4; ++m) members.push_back(arena.specialMoonTree(m));

  for (unsigned n = 0; n <= 4; ++n) {
    for (std::size_t i = 0; i <= members.size(); ++i) {
      for (std::size_t j = i; j <= members.size(); ++j) {
        std::vector<TreeId> extra;
        if (i < members.size()) extra.push_back(members[i]);
        if (j < members.size()) extra.push_back(members[j]);
        TreeId sp = arena.specialMoonTree(n, extra);
        CHECK(solver.classify(sp) == ImsClass::specialMoon(n));
      }
    }
  }
}

TEST_CASE("strict shape matching wants literal nim trees") {
  TreeArena arena;
  EntailingSolver solver(arena);

  TreeId literal = arena.specialMoonTree(2);
  CHECK(solver.classify(literal, true) == ImsClass::specialMoon(2));

  // {*1 | *1} is worth *0 but is not the literal zero tree
  TreeId zeroish = arena.node({arena.nimTree(1)}, {arena.nimTree(1)});
  CHECK(solver.classify(zeroish) == ImsClass::nimber(0));
  TreeId check = arena.node({arena.infinity()}, {zeroish});
  TreeId sp = arena.node({check, zeroish, arena.nimTree(0)},
                         {arena.conjugate(check), zeroish, arena.nimTree(0)});
  CHECK(solver.classify(sp, false) == ImsClass::specialMoon(0));
  CHECK(solver.classify(sp, true) == ImsClass::outsideFragment());
}

TEST_CASE("sums with a heap stay in N or P for classifiable positions") {
  TreeArena arena;
  EntailingSolver solver(arena);
  std::vector<TreeId> corpus{arena.moonTree(),        arena.nimTree(0),
                             arena.nimTree(3),        arena.specialMoonTree(0),
                             arena.specialMoonTree(2),
                             arena.specialMoonTree(1, {arena.nimTree(2)})};
  for (TreeId t : corpus)
    for (unsigned k = 0; k <= 6; ++k) {
      Outcome o = solver.outcomeWithNimber(t, k);
      CHECK((o == Outcome::N || o == Outcome::P));
    }
}

TEST_CASE("moon-valued positions beat every heap") {
  TreeArena arena;
  EntailingSolver solver(arena);
  std::vector<TreeId> moons{arena.moonTree(), arena.specialMoonTree(0),
                            arena.specialMoonTree(3),
                            arena.specialMoonTree(1, {arena.specialMoonTree(0)})};
  for (TreeId t : moons) {
    unsigned bound = solver.nimberBound(t);
    for (unsigned k = 0; k <= bound; ++k)
      CHECK(solver.outcomeWithNimber(t, k) == Outcome::N);
  }
}

TEST_CASE("nim encodings carry their heap size") {
  TreeArena arena;
  EntailingSolver solver(arena);
  for (unsigned k = 0; k <= 6; ++k)
    CHECK(solver.classify(arena.nimTree(k)) == ImsClass::nimber(k));
}

TEST_CASE("nimTreeIndex recognizes canonical heaps only") {
  TreeArena arena;
  CHECK(arena.nimTreeIndex(arena.nimTree(0)) == 0u);
  CHECK(arena.nimTreeIndex(arena.nimTree(4)) == 4u);
  CHECK(!arena.nimTreeIndex(arena.moonTree()).has_value());
  TreeId zeroish = arena.node({arena.nimTree(1)}, {arena.nimTree(1)});
  CHECK(!arena.nimTreeIndex(zeroish).has_value());
}
