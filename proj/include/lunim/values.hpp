#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace lunim {

using NimSet = std::set<unsigned>;

// Smallest nonnegative integer not in s.
unsigned mex(const NimSet& s);

// Nim addition (bitwise XOR).
inline unsigned nimSum(unsigned a, unsigned b) { return a ^ b; }

// {k ^ a | a in s}
NimSet xorSet(unsigned k, const NimSet& s);

/// Canonical value of a position in the sum algebra of impartial loopy and
/// impartial entailing games: a nimber *k, the moon, a special moon sp(n),
/// or inf(A) with a finite set A.
struct GameValue {
  enum class Kind { Nimber, Moon, SpecialMoon, Inf };

  Kind kind = Kind::Nimber;
  unsigned number = 0;  // payload of Nimber and SpecialMoon
  NimSet set;           // payload of Inf

  static GameValue nimber(unsigned k) { return {Kind::Nimber, k, {}}; }
  static GameValue moon() { return {Kind::Moon, 0, {}}; }
  static GameValue specialMoon(unsigned n) { return {Kind::SpecialMoon, n, {}}; }
  static GameValue inf(NimSet a) { return {Kind::Inf, 0, std::move(a)}; }

  bool operator==(const GameValue&) const = default;
};

enum class Outcome { L, R, N, P, D };

char outcomeChar(Outcome o);

/// Sum of two canonical values.
///   moon + x         = moon
///   *a + *b          = *(a^b)
///   *k + sp(n)       = sp(n^k)
///   *k + inf(A)      = inf(k^A)
///   sp(a) + sp(b)    = sp(a^b)
///   sp(n) + inf(A)   = inf(n^A)
///   inf(A) + inf(B)  = inf({})
GameValue addValues(const GameValue& a, const GameValue& b);

/// Left fold of addValues. The empty sum is *0.
GameValue sumValue(const std::vector<GameValue>& values);

/// A disjunctive sum of canonical values, split into its constituents.
struct SumValue {
  unsigned moonCount = 0;
  std::vector<unsigned> nimbers;
  std::vector<unsigned> specialMoons;
  std::vector<NimSet> infSets;
};

SumValue decompose(const std::vector<GameValue>& values);

/// Outcome of a sum of canonical values:
///   (i)   any moon present                       -> N
///   (ii)  no moon, two or more inf components    -> D
///   (iii) no moon, exactly one inf(B)            -> N iff xor of all nimbers
///         and special-moon indices lies in B, else D
///   (iv)  no moon, no inf, a special moon        -> N
///   (v)   nimbers only                           -> P iff xor is 0, else N
Outcome outcomeOfSum(const SumValue& s);

/// Outcome of a single canonical value.
Outcome outcomeOfValue(const GameValue& v);

}  // namespace lunim
