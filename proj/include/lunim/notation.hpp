#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lunim/entailing.hpp"
#include "lunim/loopy.hpp"
#include "lunim/values.hpp"

namespace lunim {

/// Syntax error with the byte offset of the offending input position.
struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(const std::string& message, std::size_t at)
      : std::runtime_error(message + " (at byte " + std::to_string(at) + ")"),
        offset(at) {}
};

/// One term of a sum expression: a value literal, a reference into a named
/// graph, or an entailing tree literal.
struct SumExpr {
  struct Term {
    enum class Kind { Value, Graph, Tree };
    Kind kind = Kind::Value;
    GameValue value;        // Kind::Value
    std::string graphName;  // Kind::Graph
    std::string graphNode;
    TreeId tree = 0;        // Kind::Tree, interned in the arena given at parse
  };
  std::vector<Term> terms;
};

/// `0 | * | *INT | moon | sp(INT) | inf{INT,...} | inf{}`, whitespace-insensitive.
GameValue parseValue(std::string_view text);

/// Terms joined by `+`; a term is a value literal, `tree:{...}`, or
/// `graph:NAME@NODE`. The empty string is the empty sum.
SumExpr parseSum(std::string_view text, TreeArena& arena);

/// `inf | ~inf | { list | list }` with comma-separated, possibly empty lists.
/// `{|}` is rejected: the base position of the entailing framework is written
/// `{~inf | inf}`.
TreeId parseTree(std::string_view text, TreeArena& arena);

/// Line-oriented graph file: `NODE: NODE*` definitions (empty list = terminal
/// position), one `start: NODE` line, `#` comments.
LoopyGraph parseGraphFile(std::string_view text);

// Printers are the inverses of the parsers: output re-parses to an equal
// object. Sets print sorted, nim trees print fully expanded.
std::string printValue(const GameValue& v);
std::string printSum(const std::vector<GameValue>& values);
std::string printSum(const SumExpr& sum, const TreeArena& arena);
std::string printTree(const TreeArena& arena, TreeId t);
std::string printGraph(const LoopyGraph& g);
std::string printImsClass(const ImsClass& c);

}  // namespace lunim
