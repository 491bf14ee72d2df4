#include "lunim/entailing.hpp"

#include <algorithm>
#include <stdexcept>

namespace lunim {

namespace {

bool containsId(const std::vector<TreeId>& v, TreeId t) {
  return std::binary_search(v.begin(), v.end(), t);
}

void normalize(std::vector<TreeId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::uint64_t hashIds(const std::vector<TreeId>& left,
                      const std::vector<TreeId>& right) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(left.size());
  for (TreeId t : left) mix(t + 2);
  mix(0x7c);  // separator
  for (TreeId t : right) mix(t + 2);
  return h;
}

constexpr TreeId kNoConj = 0xffffffffu;

}  // namespace

TreeArena::TreeArena() {
  nodes_.resize(2);            // the two infinity leaves
  conj_ = {kCoInfinityTree, kInfinityTree};
  impartial_ = {0, 0};         // leaves are not symmetric
  followerOk_ = {1, 1};
}

TreeId TreeArena::intern(Node n) {
  std::uint64_t h = hashIds(n.left, n.right);
  auto& bucket = buckets_[h];
  for (TreeId id : bucket) {
    if (nodes_[id].left == n.left && nodes_[id].right == n.right) return id;
  }
  TreeId id = static_cast<TreeId>(nodes_.size());
  nodes_.push_back(std::move(n));
  conj_.push_back(kNoConj);
  impartial_.push_back(-1);
  followerOk_.push_back(-1);
  bucket.push_back(id);
  return id;
}

TreeId TreeArena::node(std::vector<TreeId> left, std::vector<TreeId> right) {
  for (TreeId t : left)
    if (t >= nodes_.size()) throw std::invalid_argument("unknown tree id");
  for (TreeId t : right)
    if (t >= nodes_.size()) throw std::invalid_argument("unknown tree id");
  normalize(left);
  normalize(right);
  return intern(Node{std::move(left), std::move(right)});
}

const std::vector<TreeId>& TreeArena::leftOptions(TreeId t) const {
  return nodes_.at(t).left;
}

const std::vector<TreeId>& TreeArena::rightOptions(TreeId t) const {
  return nodes_.at(t).right;
}

TreeId TreeArena::conjugate(TreeId t) {
  if (t >= nodes_.size()) throw std::invalid_argument("unknown tree id");
  if (conj_[t] != kNoConj) return conj_[t];
  std::vector<TreeId> left, right;
  left.reserve(nodes_[t].right.size());
  right.reserve(nodes_[t].left.size());
  for (TreeId o : nodes_[t].right) left.push_back(conjugate(o));
  for (TreeId o : nodes_[t].left) right.push_back(conjugate(o));
  normalize(left);
  normalize(right);
  TreeId c = intern(Node{std::move(left), std::move(right)});
  conj_[t] = c;
  conj_[c] = t;
  return c;
}

bool TreeArena::isLeftCheck(TreeId t) const {
  return !isLeaf(t) && containsId(nodes_[t].left, kInfinityTree);
}

bool TreeArena::isRightCheck(TreeId t) const {
  return !isLeaf(t) && containsId(nodes_[t].right, kCoInfinityTree);
}

bool TreeArena::isQuiet(TreeId t) const {
  return !isLeaf(t) && !isLeftCheck(t) && !isRightCheck(t);
}

bool TreeArena::isSymmetric(TreeId t) {
  if (isLeaf(t)) return false;
  std::vector<TreeId> image;
  image.reserve(nodes_[t].left.size());
  for (TreeId o : nodes_[t].left) image.push_back(conjugate(o));
  normalize(image);
  return image == nodes_[t].right;
}

bool TreeArena::followersOk(TreeId t) {
  if (followerOk_[t] >= 0) return followerOk_[t] != 0;
  bool ok = !isQuiet(t) || isSymmetric(t);
  if (ok) {
    for (TreeId o : nodes_[t].left)
      if (!followersOk(o)) {
        ok = false;
        break;
      }
  }
  if (ok) {
    for (TreeId o : nodes_[t].right)
      if (!followersOk(o)) {
        ok = false;
        break;
      }
  }
  followerOk_[t] = ok ? 1 : 0;
  return ok;
}

bool TreeArena::isImpartialEntailing(TreeId t) {
  if (impartial_[t] >= 0) return impartial_[t] != 0;
  bool ok = isSymmetric(t) && followersOk(t);
  impartial_[t] = ok ? 1 : 0;
  return ok;
}

TreeId TreeArena::nimTree(unsigned k) {
  while (nimLadder_.size() <= k) {
    TreeId id;
    if (nimLadder_.empty()) {
      id = node({kCoInfinityTree}, {kInfinityTree});
    } else {
      std::vector<TreeId> opts(nimLadder_);
      id = node(opts, opts);
    }
    nimLadder_.push_back(id);
    nimIndex_[id] = static_cast<unsigned>(nimLadder_.size() - 1);
  }
  return nimLadder_[k];
}

TreeId TreeArena::moonTree() { return node({kInfinityTree}, {kCoInfinityTree}); }

TreeId TreeArena::specialMoonTree(unsigned n, const std::vector<TreeId>& extraMembers) {
  TreeId heap = nimTree(n);
  TreeId check = node({kInfinityTree}, {heap});
  TreeId counterCheck = node({heap}, {kCoInfinityTree});
  std::vector<TreeId> left{check, heap};
  std::vector<TreeId> right{counterCheck, heap};
  for (TreeId m : extraMembers) {
    if (!isSymmetric(m)) throw std::invalid_argument("special moon member must be symmetric");
    left.push_back(m);
    right.push_back(m);
  }
  return node(std::move(left), std::move(right));
}

std::optional<unsigned> TreeArena::nimTreeIndex(TreeId t) {
  if (isLeaf(t)) return std::nullopt;
  auto it = nimIndex_.find(t);
  if (it != nimIndex_.end()) return it->second;
  std::optional<unsigned> out;
  const Node& n = nodes_[t];
  if (n.left == std::vector<TreeId>{kCoInfinityTree} &&
      n.right == std::vector<TreeId>{kInfinityTree}) {
    out = 0;
  } else if (n.left == n.right) {
    // options must be exactly the canonical heaps 0..k-1
    std::vector<bool> present(n.left.size(), false);
    bool ok = true;
    for (TreeId o : n.left) {
      auto j = nimTreeIndex(o);
      if (!j || *j >= present.size() || present[*j]) {
        ok = false;
        break;
      }
      present[*j] = true;
    }
    if (ok) out = static_cast<unsigned>(n.left.size());
  }
  nimIndex_[t] = out;
  return out;
}

std::size_t TreeArena::subpositionCount(TreeId t) const {
  std::vector<TreeId> stack{t};
  std::set<TreeId> seen{t};
  while (!stack.empty()) {
    TreeId cur = stack.back();
    stack.pop_back();
    if (isLeaf(cur)) continue;
    for (const auto* side : {&nodes_[cur].left, &nodes_[cur].right}) {
      for (TreeId o : *side)
        if (seen.insert(o).second) stack.push_back(o);
    }
  }
  return seen.size();
}

// ---------------------------------------------------------------------------

Outcome EntailingSolver::outcomeWithNimber(TreeId t, unsigned heap) {
  bool leftFirst = winsMovingFirst(t, heap, true);
  bool rightFirst = winsMovingFirst(t, heap, false);
  if (leftFirst && rightFirst) return Outcome::N;
  if (!leftFirst && !rightFirst) return Outcome::P;
  return leftFirst ? Outcome::L : Outcome::R;
}

bool EntailingSolver::winsMovingFirst(TreeId t, unsigned heap, bool leftToMove) {
  // Reaching an infinity ends play at once, whoever would be on the move.
  if (t == kInfinityTree) return leftToMove;
  if (t == kCoInfinityTree) return !leftToMove;
  if (heap >= (1u << 21)) throw std::invalid_argument("heap too large to memoize");

  std::uint64_t key = (static_cast<std::uint64_t>(t) << 22) |
                      (static_cast<std::uint64_t>(heap) << 1) |
                      (leftToMove ? 1u : 0u);
  auto it = winMemo_.find(key);
  if (it != winMemo_.end()) return it->second;

  bool win = false;
  const auto& opts = leftToMove ? arena_.leftOptions(t) : arena_.rightOptions(t);
  for (TreeId o : opts) {
    if (!winsMovingFirst(o, heap, !leftToMove)) {
      win = true;
      break;
    }
  }
  if (!win) {
    for (unsigned h = 0; h < heap && !win; ++h)
      if (!winsMovingFirst(t, h, !leftToMove)) win = true;
  }
  winMemo_.emplace(key, win);
  return win;
}

std::set<unsigned> EntailingSolver::immediateNimbers(TreeId t) {
  std::set<unsigned> out;
  for (TreeId o : arena_.leftOptions(t)) {
    if (arena_.isLeaf(o) || !arena_.isImpartialEntailing(o)) continue;
    ImsClass c = classify(o);
    if (c.kind == ImsClass::Kind::Nimber) out.insert(c.number);
  }
  return out;
}

EntailingSolver::ProtectedNimbers EntailingSolver::protectedNimbers(TreeId t,
                                                                    unsigned maxNimber) {
  ProtectedNimbers out;
  if (containsId(arena_.leftOptions(t), kInfinityTree)) {
    out.allNimbers = true;
    return out;
  }
  for (TreeId o : arena_.leftOptions(t)) {
    if (arena_.isLeaf(o) || !arena_.isLeftCheck(o)) continue;
    for (unsigned n = 0; n <= maxNimber; ++n) {
      if (out.values.count(n)) continue;
      if (outcomeWithNimber(o, n) == Outcome::L) out.values.insert(n);
    }
  }
  return out;
}

unsigned EntailingSolver::nimberBound(TreeId t) const {
  return static_cast<unsigned>(arena_.subpositionCount(t)) + 2;
}

GameValue EntailingSolver::coveringValue(TreeId t) {
  auto it = coveringMemo_.find(t);
  if (it != coveringMemo_.end()) return it->second;
  GameValue v = coveringValue(t, nimberBound(t));
  coveringMemo_.emplace(t, v);
  return v;
}

GameValue EntailingSolver::coveringValue(TreeId t, unsigned maxNimber) {
  ProtectedNimbers prot = protectedNimbers(t, maxNimber);
  if (prot.allNimbers) return GameValue::moon();
  std::set<unsigned> covered = immediateNimbers(t);
  covered.insert(prot.values.begin(), prot.values.end());
  unsigned gap = 0;
  while (gap <= maxNimber && covered.count(gap)) ++gap;
  if (gap > maxNimber) return GameValue::moon();
  NimSet s(covered.begin(), covered.end());
  return GameValue::nimber(mex(s));
}

ImsClass EntailingSolver::classify(TreeId t, bool strictShape) {
  if (!arena_.isImpartialEntailing(t))
    throw std::invalid_argument("classify: not an impartial entailing position");
  std::uint64_t key = (static_cast<std::uint64_t>(t) << 1) | (strictShape ? 1u : 0u);
  auto it = classifyMemo_.find(key);
  if (it != classifyMemo_.end()) return it->second;

  ImsClass out;
  GameValue v = coveringValue(t);
  if (v.kind == GameValue::Kind::Nimber) {
    out = ImsClass::nimber(v.number);
  } else if (auto n = matchSpecialMoon(t, strictShape)) {
    out = ImsClass::specialMoon(*n);
  } else if (t == arena_.moonTree()) {
    out = ImsClass::moon();
  } else {
    out = ImsClass::outsideFragment();
  }
  classifyMemo_.emplace(key, out);
  return out;
}

std::optional<unsigned> EntailingSolver::matchSpecialMoon(TreeId t, bool strictShape) {
  // Split the Left options into check options and the witness set A. Every
  // check must have the defining shape {inf | X} with all X the same nimber;
  // symmetry supplies the mirrored Right side for free.
  std::vector<TreeId> checks, witness;
  for (TreeId o : arena_.leftOptions(t)) {
    if (!arena_.isLeaf(o) && arena_.isLeftCheck(o))
      checks.push_back(o);
    else
      witness.push_back(o);
  }
  if (checks.empty()) return std::nullopt;
  if (strictShape && checks.size() != 1) return std::nullopt;

  std::optional<unsigned> n;
  for (TreeId c : checks) {
    if (arena_.leftOptions(c) != std::vector<TreeId>{kInfinityTree}) return std::nullopt;
    if (arena_.rightOptions(c).size() != 1) return std::nullopt;
    TreeId x = arena_.rightOptions(c).front();
    std::optional<unsigned> k;
    if (strictShape) {
      k = arena_.nimTreeIndex(x);
    } else if (!arena_.isLeaf(x) && arena_.isImpartialEntailing(x)) {
      ImsClass cx = classify(x, strictShape);
      if (cx.kind == ImsClass::Kind::Nimber) k = cx.number;
    }
    if (!k) return std::nullopt;
    if (n && *n != *k) return std::nullopt;
    n = *k;
  }

  bool hasDefender = false;  // A must contain *n itself
  for (TreeId a : witness) {
    if (arena_.isLeaf(a)) return std::nullopt;
    if (strictShape) {
      if (auto j = arena_.nimTreeIndex(a)) {
        if (*j == *n) hasDefender = true;
        continue;
      }
      if (arena_.isImpartialEntailing(a) &&
          classify(a, true).kind == ImsClass::Kind::SpecialMoon)
        continue;
      return std::nullopt;
    }
    if (!arena_.isImpartialEntailing(a)) return std::nullopt;
    ImsClass ca = classify(a, strictShape);
    if (ca.kind == ImsClass::Kind::Nimber) {
      if (ca.number == *n) hasDefender = true;
      continue;
    }
    if (ca.kind == ImsClass::Kind::SpecialMoon) continue;
    return std::nullopt;
  }
  if (!hasDefender) return std::nullopt;
  return n;
}

}  // namespace lunim
