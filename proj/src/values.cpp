#include "lunim/values.hpp"

namespace lunim {

unsigned mex(const NimSet& s) {
  unsigned m = 0;
  for (unsigned v : s) {
    if (v == m)
      ++m;
    else if (v > m)
      break;
  }
  return m;
}

NimSet xorSet(unsigned k, const NimSet& s) {
  NimSet out;
  for (unsigned a : s) out.insert(k ^ a);
  return out;
}

char outcomeChar(Outcome o) {
  switch (o) {
    case Outcome::L: return 'L';
    case Outcome::R: return 'R';
    case Outcome::N: return 'N';
    case Outcome::P: return 'P';
    case Outcome::D: return 'D';
  }
  return '?';
}

GameValue addValues(const GameValue& a, const GameValue& b) {
  using K = GameValue::Kind;
  if (a.kind == K::Moon || b.kind == K::Moon) return GameValue::moon();
  if (a.kind == K::Inf && b.kind == K::Inf) return GameValue::inf({});
  if (a.kind == K::Inf) return GameValue::inf(xorSet(b.number, a.set));
  if (b.kind == K::Inf) return GameValue::inf(xorSet(a.number, b.set));
  unsigned x = a.number ^ b.number;
  if (a.kind == K::SpecialMoon || b.kind == K::SpecialMoon)
    return GameValue::specialMoon(x);
  return GameValue::nimber(x);
}

GameValue sumValue(const std::vector<GameValue>& values) {
  GameValue total = GameValue::nimber(0);
  for (const GameValue& v : values) total = addValues(total, v);
  return total;
}

SumValue decompose(const std::vector<GameValue>& values) {
  SumValue s;
  for (const GameValue& v : values) {
    switch (v.kind) {
      case GameValue::Kind::Nimber: s.nimbers.push_back(v.number); break;
      case GameValue::Kind::Moon: ++s.moonCount; break;
      case GameValue::Kind::SpecialMoon: s.specialMoons.push_back(v.number); break;
      case GameValue::Kind::Inf: s.infSets.push_back(v.set); break;
    }
  }
  return s;
}

Outcome outcomeOfSum(const SumValue& s) {
  if (s.moonCount >= 1) return Outcome::N;
  if (s.infSets.size() >= 2) return Outcome::D;
  unsigned x = 0;
  for (unsigned k : s.nimbers) x ^= k;
  if (s.infSets.size() == 1) {
    for (unsigned n : s.specialMoons) x ^= n;
    return s.infSets.front().count(x) ? Outcome::N : Outcome::D;
  }
  if (!s.specialMoons.empty()) return Outcome::N;
  return x == 0 ? Outcome::P : Outcome::N;
}

Outcome outcomeOfValue(const GameValue& v) {
  return outcomeOfSum(decompose({v}));
}

}  // namespace lunim
