#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "lunim/values.hpp"

namespace lunim {

/// Handle into a TreeArena. Structurally identical positions share one id,
/// so equality of positions is equality of ids.
using TreeId = std::uint32_t;

inline constexpr TreeId kInfinityTree = 0;    // the position that wins for Left
inline constexpr TreeId kCoInfinityTree = 1;  // the position that wins for Right

/// Interning store for entailing game positions. A position is either one of
/// the two infinity leaves or an inner node with finite Left/Right option
/// sets (sorted, deduplicated id vectors). All positions are immutable once
/// created; conjugates and classification caches live here so that shared
/// subtrees are processed once.
class TreeArena {
 public:
  TreeArena();

  TreeId infinity() const { return kInfinityTree; }
  TreeId coInfinity() const { return kCoInfinityTree; }

  /// Interns {left | right}; the child lists are sorted and deduplicated.
  TreeId node(std::vector<TreeId> left, std::vector<TreeId> right);

  bool isLeaf(TreeId t) const { return t <= kCoInfinityTree; }
  const std::vector<TreeId>& leftOptions(TreeId t) const;
  const std::vector<TreeId>& rightOptions(TreeId t) const;
  std::size_t size() const { return nodes_.size(); }

  /// Recursive Left/Right swap with the infinities exchanged. Involution.
  TreeId conjugate(TreeId t);

  bool isLeftCheck(TreeId t) const;   // Left can move to her own infinity
  bool isRightCheck(TreeId t) const;  // Right can move to his own infinity
  bool isQuiet(TreeId t) const;       // neither a check nor a leaf

  /// t is not a leaf and its Right options are the conjugates of its Left options.
  bool isSymmetric(TreeId t);

  /// t is symmetric and every quiet follower of t is symmetric.
  bool isImpartialEntailing(TreeId t);

  /// Entailing encoding of the nim heap *k. The base case *0 is {~inf | inf},
  /// which plays the role of the empty position.
  TreeId nimTree(unsigned k);

  /// {inf | ~inf}
  TreeId moonTree();

  /// { {inf | *n}, A | A, {*n | ~inf} } with A = {*n} plus extraMembers.
  /// extraMembers must be symmetric positions (nimbers or special moons).
  TreeId specialMoonTree(unsigned n, const std::vector<TreeId>& extraMembers = {});

  /// Heap size when t is exactly the canonical nim tree of that size.
  std::optional<unsigned> nimTreeIndex(TreeId t);

  /// Number of distinct positions in t's game tree, including t and leaves.
  std::size_t subpositionCount(TreeId t) const;

 private:
  struct Node {
    std::vector<TreeId> left;
    std::vector<TreeId> right;
  };

  TreeId intern(Node n);
  bool followersOk(TreeId t);

  std::vector<Node> nodes_;  // [0], [1] are the leaves with empty lists
  std::unordered_map<std::uint64_t, std::vector<TreeId>> buckets_;
  std::vector<TreeId> conj_;
  std::vector<std::int8_t> impartial_;    // -1 unknown, else bool
  std::vector<std::int8_t> followerOk_;   // -1 unknown, else bool
  std::vector<TreeId> nimLadder_;
  std::unordered_map<TreeId, std::optional<unsigned>> nimIndex_;
};

/// Classification of an impartial entailing position within the fragment the
/// sum algebra covers. OutsideFragment is a verdict, not an error.
struct ImsClass {
  enum class Kind { Nimber, Moon, SpecialMoon, OutsideFragment };

  Kind kind = Kind::OutsideFragment;
  unsigned number = 0;

  static ImsClass nimber(unsigned k) { return {Kind::Nimber, k}; }
  static ImsClass moon() { return {Kind::Moon, 0}; }
  static ImsClass specialMoon(unsigned n) { return {Kind::SpecialMoon, n}; }
  static ImsClass outsideFragment() { return {Kind::OutsideFragment, 0}; }

  bool operator==(const ImsClass&) const = default;
};

/// Evaluates impartial entailing positions: exact minimax for tree-plus-heap
/// sums, immediate/protected nimbers, the covering-value rule, and structural
/// special-moon detection. Memo tables are per instance.
class EntailingSolver {
 public:
  explicit EntailingSolver(TreeArena& arena) : arena_(arena) {}

  /// Outcome of t + *heap by full minimax. The position t may be asymmetric
  /// (check options are), so L and R are possible verdicts.
  Outcome outcomeWithNimber(TreeId t, unsigned heap);

  /// Grundy numbers of the Left options that are nimber-equivalent.
  std::set<unsigned> immediateNimbers(TreeId t);

  struct ProtectedNimbers {
    std::set<unsigned> values;  // heap sizes n with some check option + *n in L
    bool allNimbers = false;    // inf is itself a Left option
  };
  ProtectedNimbers protectedNimbers(TreeId t, unsigned maxNimber);

  /// Bound used for the "covers every nimber" test: distinct subpositions + 2.
  unsigned nimberBound(TreeId t) const;

  /// Moon when immediate and protected nimbers cover everything up to the
  /// bound, otherwise the nimber given by their mex.
  GameValue coveringValue(TreeId t);
  GameValue coveringValue(TreeId t, unsigned maxNimber);

  /// Full classification. With strictShape the special-moon match accepts
  /// only literal canonical nim trees in the defining shape; by default
  /// option subtrees may be any position that classifies as the right nimber.
  ImsClass classify(TreeId t, bool strictShape = false);

  TreeArena& arena() { return arena_; }

 private:
  bool winsMovingFirst(TreeId t, unsigned heap, bool leftToMove);
  std::optional<unsigned> matchSpecialMoon(TreeId t, bool strictShape);

  TreeArena& arena_;
  std::unordered_map<std::uint64_t, bool> winMemo_;
  std::unordered_map<TreeId, GameValue> coveringMemo_;
  std::unordered_map<std::uint64_t, ImsClass> classifyMemo_;
};

}  // namespace lunim
