#include "lunim/loopy.hpp"

#include <algorithm>

namespace lunim {

std::string LoopyGraph::nodeName(std::uint32_t node) const {
  if (node < names.size() && !names[node].empty()) return names[node];
  return "n" + std::to_string(node);
}

LoopyGraph LoopyGraph::make(std::vector<std::vector<std::uint32_t>> options,
                            std::uint32_t start,
                            std::vector<std::string> names) {
  if (options.empty()) throw std::invalid_argument("graph needs at least one node");
  const std::uint32_t n = static_cast<std::uint32_t>(options.size());
  if (start >= n) throw std::invalid_argument("start node out of range");
  for (auto& opts : options) {
    for (std::uint32_t t : opts)
      if (t >= n) throw std::invalid_argument("option target out of range");
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
  }
  LoopyGraph g;
  g.options = std::move(options);
  g.start = start;
  g.names = std::move(names);
  return g;
}

std::vector<Outcome> outcomesNPD(const LoopyGraph& g) {
  enum : std::uint8_t { Unlabeled, LabelP, LabelN };
  const std::size_t n = g.size();
  std::vector<std::uint8_t> label(n, Unlabeled);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (label[i] != Unlabeled) continue;
      bool allN = true;
      bool someP = false;
      for (std::uint32_t o : g.options[i]) {
        if (label[o] == LabelP) someP = true;
        if (label[o] != LabelN) allN = false;
      }
      if (someP) {
        label[i] = LabelN;
        changed = true;
      } else if (allN) {
        label[i] = LabelP;
        changed = true;
      }
    }
  }
  std::vector<Outcome> out(n, Outcome::D);
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] == LabelP) out[i] = Outcome::P;
    if (label[i] == LabelN) out[i] = Outcome::N;
  }
  return out;
}

namespace {

constexpr std::uint32_t kInf = LoopyValue::kInfinite;

// mex over the finite entries of the option values; infinity never blocks it.
std::uint32_t mexOfOptions(const std::vector<std::uint32_t>& optionNodes,
                           const std::vector<std::uint32_t>& value,
                           std::vector<bool>& seen) {
  std::fill(seen.begin(), seen.end(), false);
  const std::uint32_t bound = static_cast<std::uint32_t>(seen.size());
  for (std::uint32_t o : optionNodes) {
    std::uint32_t v = value[o];
    if (v != kInf && v < bound) seen[v] = true;
  }
  std::uint32_t m = 0;
  while (m < bound && seen[m]) ++m;
  return m;
}

}  // namespace

std::vector<LoopyValue> smithValues(const LoopyGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> cur(n), next(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = g.options[i].empty() ? 0 : kInf;

  std::vector<bool> seen(n + 1);
  const std::size_t maxPasses = n * (n + 2);
  bool converged = false;
  for (std::size_t pass = 0; pass <= maxPasses; ++pass) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& opts = g.options[i];
      std::uint32_t m = mexOfOptions(opts, cur, seen);
      // m is attainable only if every option exceeding it can be answered by
      // a counter-move back to value m.
      bool ok = true;
      for (std::uint32_t o : opts) {
        if (cur[o] != kInf && cur[o] <= m) continue;
        bool counter = false;
        for (std::uint32_t oo : g.options[o]) {
          if (cur[oo] == m) {
            counter = true;
            break;
          }
        }
        if (!counter) {
          ok = false;
          break;
        }
      }
      next[i] = ok ? m : kInf;
    }
    if (next == cur) {
      converged = true;
      break;
    }
    cur.swap(next);
  }
  if (!converged)
    throw NonConvergenceError("smithValues: no fixpoint within " +
                              std::to_string(maxPasses) + " passes");

  std::vector<LoopyValue> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (cur[i] != kInf) {
      out[i] = LoopyValue::finiteValue(cur[i]);
    } else {
      std::vector<std::uint32_t> a;
      for (std::uint32_t o : g.options[i])
        if (cur[o] != kInf) a.push_back(cur[o]);
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      out[i] = LoopyValue::infiniteValue(std::move(a));
    }
  }
  return out;
}

GameValue valueOf(const LoopyValue& v) {
  if (v.finite()) return GameValue::nimber(v.value);
  NimSet a(v.optionValues.begin(), v.optionValues.end());
  return GameValue::inf(std::move(a));
}

GameValue valueOf(const LoopyGraph& g, std::uint32_t node) {
  if (node >= g.size()) throw std::invalid_argument("node out of range");
  return valueOf(smithValues(g)[node]);
}

}  // namespace lunim
