#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lunim/entailing.hpp"
#include "lunim/loopy.hpp"
#include "lunim/values.hpp"

namespace lunim {

/// One summand handed to the oracle: a loopy graph played from a given node,
/// or an impartial entailing tree.
struct Component {
  enum class Kind { Loopy, Tree };

  Kind kind = Kind::Loopy;
  LoopyGraph graph;        // Kind::Loopy
  std::uint32_t node = 0;
  TreeId tree = 0;         // Kind::Tree

  static Component loopyAt(LoopyGraph g, std::uint32_t startNode);
  static Component entailingTree(TreeId t);
};

/// The product state space would exceed the configured limit. An error, never
/// a wrong answer.
struct StateLimitError : std::runtime_error {
  std::size_t required;
  StateLimitError(std::size_t required, std::size_t limit)
      : std::runtime_error("state limit exceeded: need " + std::to_string(required) +
                           " states, limit " + std::to_string(limit)),
        required(required) {}
};

/// Tree components must be impartial entailing positions; the mover-relative
/// product reduction is only sound for them.
struct AsymmetricTreeError : std::invalid_argument {
  AsymmetricTreeError()
      : std::invalid_argument("tree component is not an impartial entailing position") {}
};

/// Plays the value on the board: a nimber becomes a nim-heap graph, moon and
/// special moons become their defining trees (sp(n) with witness set {*n}),
/// and inf(A) becomes a graph gadget whose Smith value is re-verified to be
/// inf(A) before use.
Component realize(const GameValue& v, TreeArena& arena);

std::vector<Component> realizeAll(const std::vector<GameValue>& values, TreeArena& arena);

struct OracleResult {
  Outcome outcome = Outcome::P;
  std::size_t stateCount = 0;
};

/// Brute-force outcome of the disjunctive sum by retrograde analysis over the
/// mover-relative product state space. A move changes one component; moving a
/// tree to the mover's own infinity wins immediately; a mover without moves
/// loses; states never decided are draws.
OracleResult oracleOutcome(const std::vector<Component>& components, TreeArena& arena,
                           std::size_t stateLimit = 1'000'000);

struct EquivalenceReport {
  bool equivalent = true;
  std::optional<std::size_t> distinguishingContext;  // index into contexts
  Outcome outcomeA = Outcome::P;  // outcomes at the distinguishing context
  Outcome outcomeB = Outcome::P;
  bool zeroSumSufficient = false;  // o(a+b) = P and o(b+b) = P
};

/// a and b are indistinguishable by every context sum in the corpus. Also
/// runs the sufficient test via o(a+b) and o(b+b).
EquivalenceReport checkEquivalence(const std::vector<Component>& a,
                                   const std::vector<Component>& b,
                                   const std::vector<std::vector<Component>>& contexts,
                                   TreeArena& arena,
                                   std::size_t stateLimit = 1'000'000);

/// The fixed context corpus used by the equivalence tests and the CLI:
/// nimbers, special moons, the moon, inf sets, and two small mixtures.
std::vector<std::vector<GameValue>> defaultContextCorpus();

}  // namespace lunim
