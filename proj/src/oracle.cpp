#include "lunim/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "lunim/rulesets.hpp"

namespace lunim {

Component Component::loopyAt(LoopyGraph g, std::uint32_t startNode) {
  if (startNode >= g.size()) throw std::invalid_argument("start node out of range");
  Component c;
  c.kind = Kind::Loopy;
  c.graph = std::move(g);
  c.node = startNode;
  return c;
}

Component Component::entailingTree(TreeId t) {
  Component c;
  c.kind = Kind::Tree;
  c.tree = t;
  return c;
}

Component realize(const GameValue& v, TreeArena& arena) {
  switch (v.kind) {
    case GameValue::Kind::Nimber: {
      LoopyGraph g = nimHeapGraph(v.number);
      return Component::loopyAt(std::move(g), v.number);
    }
    case GameValue::Kind::Moon:
      return Component::entailingTree(arena.moonTree());
    case GameValue::Kind::SpecialMoon:
      return Component::entailingTree(arena.specialMoonTree(v.number));
    case GameValue::Kind::Inf: {
      // inf{} is a plain two-node cycle. Otherwise u gets one nim heap per
      // member of A (shared chain) plus an escape into a valueless
      // two-cycle; a heapless escape would pick up a finite value itself
      // whenever 0 is in A. The Smith value of u is verified before the
      // gadget is trusted.
      std::vector<std::vector<std::uint32_t>> options;
      if (v.set.empty()) {
        options = {{1}, {0}};
      } else {
        unsigned maxA = *v.set.rbegin();
        std::uint32_t chainBase = 3;
        options.resize(3 + maxA + 1);
        options[0].push_back(1);  // u -> cycle
        options[1].push_back(2);
        options[2].push_back(1);
        for (unsigned a : v.set) options[0].push_back(chainBase + a);
        for (unsigned j = 0; j <= maxA; ++j)
          for (unsigned i = 0; i < j; ++i)
            options[chainBase + j].push_back(chainBase + i);
      }
      LoopyGraph g = LoopyGraph::make(std::move(options), 0);
      LoopyValue got = smithValues(g)[0];
      std::vector<std::uint32_t> want(v.set.begin(), v.set.end());
      if (got != LoopyValue::infiniteValue(want))
        throw std::logic_error("realized inf gadget has the wrong Smith value");
      return Component::loopyAt(std::move(g), 0);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Component> realizeAll(const std::vector<GameValue>& values, TreeArena& arena) {
  std::vector<Component> out;
  out.reserve(values.size());
  for (const GameValue& v : values) out.push_back(realize(v, arena));
  return out;
}

namespace {

constexpr std::uint32_t kNoState = 0xffffffffu;

// Local state space of one component, viewed from the player to move. Loopy
// components are impartial so their view never changes; tree components store
// the subtree as the mover sees it, and every transition flips all tree
// coordinates to the opponent's view via conj.
struct LocalSpace {
  std::vector<std::vector<std::uint32_t>> moves;   // real successor states
  std::vector<std::vector<std::uint32_t>> rmoves;
  std::vector<std::uint32_t> conj;                 // involution on states
  std::vector<std::uint32_t> immediateWins;        // moves to the mover's own inf
  std::uint32_t start = 0;
  std::uint32_t wonMarker = kNoState;  // state meaning "mover already won"
};

LocalSpace buildLoopyLocal(const LoopyGraph& g, std::uint32_t node) {
  LocalSpace ls;
  ls.moves = g.options;
  ls.conj.resize(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) ls.conj[i] = i;
  ls.immediateWins.assign(g.size(), 0);
  ls.start = node;
  ls.rmoves.resize(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i)
    for (std::uint32_t o : ls.moves[i]) ls.rmoves[o].push_back(i);
  return ls;
}

LocalSpace buildTreeLocal(TreeArena& arena, TreeId root) {
  if (arena.isLeaf(root) || !arena.isImpartialEntailing(root))
    throw AsymmetricTreeError();

  // Collect the mover-relative positions reachable from the root, closed
  // under conjugation (a coordinate flips whenever another component moves).
  std::unordered_map<TreeId, std::uint32_t> index;
  std::vector<TreeId> ids;
  auto add = [&](TreeId t) {
    auto [it, inserted] = index.emplace(t, static_cast<std::uint32_t>(ids.size()));
    if (inserted) ids.push_back(t);
    return it->second;
  };
  add(root);
  bool sawLoss = false;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    TreeId t = ids[i];
    add(arena.conjugate(t));
    for (TreeId o : arena.leftOptions(t)) {
      if (o == kInfinityTree || o == kCoInfinityTree) continue;
      add(arena.conjugate(o));
    }
  }

  for (TreeId t : ids)
    for (TreeId o : arena.leftOptions(t))
      if (o == kCoInfinityTree) sawLoss = true;

  LocalSpace ls;
  std::uint32_t count = static_cast<std::uint32_t>(ids.size());
  if (sawLoss) ls.wonMarker = count++;  // the new mover sees conj(~inf) = inf

  ls.moves.resize(count);
  ls.conj.resize(count);
  ls.immediateWins.assign(count, 0);
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    TreeId t = ids[i];
    ls.conj[i] = index.at(arena.conjugate(t));
    for (TreeId o : arena.leftOptions(t)) {
      if (o == kInfinityTree) {
        ++ls.immediateWins[i];
      } else if (o == kCoInfinityTree) {
        ls.moves[i].push_back(ls.wonMarker);
      } else {
        ls.moves[i].push_back(index.at(arena.conjugate(o)));
      }
    }
  }
  if (ls.wonMarker != kNoState) ls.conj[ls.wonMarker] = ls.wonMarker;
  ls.start = index.at(root);
  ls.rmoves.resize(count);
  for (std::uint32_t i = 0; i < count; ++i)
    for (std::uint32_t o : ls.moves[i]) ls.rmoves[o].push_back(i);
  return ls;
}

}  // namespace

OracleResult oracleOutcome(const std::vector<Component>& components, TreeArena& arena,
                           std::size_t stateLimit) {
  std::vector<LocalSpace> locals;
  locals.reserve(components.size());
  for (const Component& c : components) {
    if (c.kind == Component::Kind::Loopy) {
      locals.push_back(buildLoopyLocal(c.graph, c.node));
    } else {
      if (arena.isLeaf(c.tree))
        throw std::invalid_argument("bare infinity leaves are not summable components");
      locals.push_back(buildTreeLocal(arena, c.tree));
    }
  }

  const std::size_t n = locals.size();
  unsigned __int128 need = 1;
  for (const LocalSpace& ls : locals) {
    need *= ls.moves.size();
    if (need > stateLimit) {
      std::size_t required = need > static_cast<unsigned __int128>(SIZE_MAX)
                                 ? SIZE_MAX
                                 : static_cast<std::size_t>(need);
      throw StateLimitError(required, stateLimit);
    }
  }
  std::size_t total = static_cast<std::size_t>(need);
  std::vector<std::size_t> stride(n);
  {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < n; ++i) {
      stride[i] = acc;
      acc *= locals[i].moves.size();
    }
  }

  enum : std::uint8_t { Undecided, Win, Loss };
  std::vector<std::uint8_t> label(total, Undecided);
  std::vector<std::uint32_t> remaining(total, 0);
  std::vector<std::size_t> worklist;

  // Init pass: states holding a won marker or an immediate-win move are wins,
  // states without any move are losses.
  std::vector<std::uint32_t> coord(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    bool win = false;
    std::uint32_t moveCount = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t s = coord[i];
      if (s == locals[i].wonMarker || locals[i].immediateWins[s] > 0) win = true;
      moveCount += static_cast<std::uint32_t>(locals[i].moves[s].size());
    }
    if (win) {
      label[idx] = Win;
      worklist.push_back(idx);
    } else if (moveCount == 0) {
      label[idx] = Loss;
      worklist.push_back(idx);
    } else {
      remaining[idx] = moveCount;
    }
    for (std::size_t i = 0; i < n; ++i) {  // odometer
      if (++coord[i] < locals[i].moves.size()) break;
      coord[i] = 0;
    }
  }

  // Retrograde propagation from decided states.
  std::vector<std::uint32_t> cur(n);
  while (!worklist.empty()) {
    std::size_t idx = worklist.back();
    worklist.pop_back();
    std::uint8_t verdict = label[idx];
    std::size_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      cur[i] = static_cast<std::uint32_t>(rest % locals[i].moves.size());
      rest /= locals[i].moves.size();
    }
    // Predecessor T made a move in component i: T_i is a local predecessor of
    // cur[i], and every other coordinate was flipped, so T_j = conj(cur[j]).
    std::size_t conjBase = 0;
    for (std::size_t i = 0; i < n; ++i) conjBase += locals[i].conj[cur[i]] * stride[i];
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t base = conjBase - locals[i].conj[cur[i]] * stride[i];
      for (std::uint32_t p : locals[i].rmoves[cur[i]]) {
        std::size_t t = base + p * stride[i];
        if (label[t] != Undecided) continue;
        if (verdict == Loss) {
          label[t] = Win;
          worklist.push_back(t);
        } else if (--remaining[t] == 0) {
          label[t] = Loss;
          worklist.push_back(t);
        }
      }
    }
  }

  std::size_t startIdx = 0;
  for (std::size_t i = 0; i < n; ++i) startIdx += locals[i].start * stride[i];
  OracleResult res;
  res.stateCount = total;
  switch (label[startIdx]) {
    case Win: res.outcome = Outcome::N; break;
    case Loss: res.outcome = Outcome::P; break;
    default: res.outcome = Outcome::D; break;
  }
  return res;
}

EquivalenceReport checkEquivalence(const std::vector<Component>& a,
                                   const std::vector<Component>& b,
                                   const std::vector<std::vector<Component>>& contexts,
                                   TreeArena& arena, std::size_t stateLimit) {
  EquivalenceReport report;
  auto concat = [](const std::vector<Component>& x, const std::vector<Component>& y) {
    std::vector<Component> out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
  };
  report.zeroSumSufficient =
      oracleOutcome(concat(a, b), arena, stateLimit).outcome == Outcome::P &&
      oracleOutcome(concat(b, b), arena, stateLimit).outcome == Outcome::P;
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    Outcome oa = oracleOutcome(concat(a, contexts[i]), arena, stateLimit).outcome;
    Outcome ob = oracleOutcome(concat(b, contexts[i]), arena, stateLimit).outcome;
    if (oa != ob) {
      report.equivalent = false;
      report.distinguishingContext = i;
      report.outcomeA = oa;
      report.outcomeB = ob;
      return report;
    }
  }
  return report;
}

std::vector<std::vector<GameValue>> defaultContextCorpus() {
  using V = GameValue;
  return {
      {},
      {V::nimber(1)},
      {V::nimber(2)},
      {V::nimber(3)},
      {V::nimber(1), V::nimber(2)},
      {V::specialMoon(1)},
      {V::specialMoon(3)},
      {V::moon()},
      {V::inf({})},
      {V::inf({0})},
      {V::inf({1, 2})},
      {V::inf({0, 1, 2}), V::nimber(1)},
  };
}

}  // namespace lunim
