#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lunim/values.hpp"

namespace lunim {

/// Finite directed game graph, cycles allowed. Nodes are 0..n-1, option lists
/// are kept sorted and deduplicated, and a terminal node is exactly a node
/// with an empty option list.
struct LoopyGraph {
  std::vector<std::vector<std::uint32_t>> options;
  std::uint32_t start = 0;
  std::vector<std::string> names;  // optional; empty means numeric names

  std::size_t size() const { return options.size(); }
  std::string nodeName(std::uint32_t node) const;

  /// Validates targets, sorts and deduplicates option lists.
  static LoopyGraph make(std::vector<std::vector<std::uint32_t>> options,
                         std::uint32_t start,
                         std::vector<std::string> names = {});
};

/// Generalized Grundy value of a graph node: either a finite value m, or
/// infinite together with the set of finite values among the node's options.
struct LoopyValue {
  static constexpr std::uint32_t kInfinite = 0xffffffffu;

  std::uint32_t value = kInfinite;
  std::vector<std::uint32_t> optionValues;  // sorted; meaningful when infinite

  bool finite() const { return value != kInfinite; }
  static LoopyValue finiteValue(std::uint32_t m) { return {m, {}}; }
  static LoopyValue infiniteValue(std::vector<std::uint32_t> a) {
    return {kInfinite, std::move(a)};
  }
  bool operator==(const LoopyValue&) const = default;
};

/// The value iteration is guaranteed to reach a fixpoint; failing to do so
/// within |V|*(|V|+2) passes signals an implementation bug.
struct NonConvergenceError : std::logic_error {
  explicit NonConvergenceError(const std::string& what) : std::logic_error(what) {}
};

/// Win/lose/draw labels for every node. Least fixpoint: a node whose options
/// are all labeled N becomes P (terminals vacuously), a node with a P option
/// becomes N, everything unlabeled at the fixpoint is D.
std::vector<Outcome> outcomesNPD(const LoopyGraph& g);

/// Generalized Grundy values for every node (Smith's iteration). Full passes
/// over the node set until two consecutive value maps agree.
std::vector<LoopyValue> smithValues(const LoopyGraph& g);

GameValue valueOf(const LoopyValue& v);

/// Solves the graph and converts the node's value.
GameValue valueOf(const LoopyGraph& g, std::uint32_t node);

}  // namespace lunim
