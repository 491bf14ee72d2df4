#include "lunim/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace lunim {

namespace {

constexpr unsigned kMaxInt = 2147483647u;  // 2^31 - 1

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }
  bool tryConsume(char c) {
    if (!eof() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool tryConsume(std::string_view word) {
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!tryConsume(c)) fail(std::string("expected '") + c + "' in " + what);
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos);
  }

  unsigned parseUInt() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    unsigned long long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long long>(text[pos] - '0');
      if (v > kMaxInt) fail("integer overflow (limit 2147483647)");
      ++pos;
    }
    return static_cast<unsigned>(v);
  }
};

bool isNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

std::string parseName(Cursor& cur, const char* what) {
  std::size_t begin = cur.pos;
  while (!cur.eof() && isNameChar(cur.peek())) ++cur.pos;
  if (cur.pos == begin) cur.fail(std::string("expected ") + what);
  return std::string(cur.text.substr(begin, cur.pos - begin));
}

GameValue parseValueAt(Cursor& cur) {
  cur.skipWs();
  if (cur.tryConsume('0')) return GameValue::nimber(0);
  if (cur.tryConsume('*')) {
    if (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
      return GameValue::nimber(cur.parseUInt());
    return GameValue::nimber(1);
  }
  if (cur.tryConsume("moon")) return GameValue::moon();
  if (cur.tryConsume("sp")) {
    cur.skipWs();
    cur.expect('(', "sp(n)");
    cur.skipWs();
    unsigned n = cur.parseUInt();
    cur.skipWs();
    cur.expect(')', "sp(n)");
    return GameValue::specialMoon(n);
  }
  if (cur.tryConsume("inf")) {
    cur.skipWs();
    cur.expect('{', "inf{...}");
    NimSet a;
    cur.skipWs();
    if (!cur.tryConsume('}')) {
      while (true) {
        cur.skipWs();
        a.insert(cur.parseUInt());
        cur.skipWs();
        if (cur.tryConsume('}')) break;
        cur.expect(',', "inf{...}");
      }
    }
    return GameValue::inf(std::move(a));
  }
  cur.fail("expected a value literal");
}

TreeId parseTreeAt(Cursor& cur, TreeArena& arena) {
  cur.skipWs();
  if (cur.tryConsume("~inf")) return arena.coInfinity();
  if (cur.tryConsume("inf")) return arena.infinity();
  std::size_t braceAt = cur.pos;
  if (!cur.tryConsume('{')) cur.fail("expected a tree: inf, ~inf or {...|...}");

  auto parseList = [&](char stop) {
    std::vector<TreeId> out;
    cur.skipWs();
    if (cur.peek() == stop) return out;
    while (true) {
      out.push_back(parseTreeAt(cur, arena));
      cur.skipWs();
      if (cur.peek() == stop) return out;
      cur.expect(',', "tree option list");
    }
  };

  std::vector<TreeId> left = parseList('|');
  cur.expect('|', "tree literal");
  std::vector<TreeId> right = parseList('}');
  cur.expect('}', "tree literal");
  if (left.empty() && right.empty())
    throw ParseError(
        "{|} is not a position here; the entailing base is written {~inf | inf}",
        braceAt);
  return arena.node(std::move(left), std::move(right));
}

}  // namespace

GameValue parseValue(std::string_view text) {
  Cursor cur{text};
  GameValue v = parseValueAt(cur);
  cur.skipWs();
  if (!cur.eof()) cur.fail("trailing input after value");
  return v;
}

TreeId parseTree(std::string_view text, TreeArena& arena) {
  Cursor cur{text};
  TreeId t = parseTreeAt(cur, arena);
  cur.skipWs();
  if (!cur.eof()) cur.fail("trailing input after tree");
  return t;
}

SumExpr parseSum(std::string_view text, TreeArena& arena) {
  SumExpr sum;
  Cursor cur{text};
  cur.skipWs();
  if (cur.eof()) return sum;
  while (true) {
    cur.skipWs();
    SumExpr::Term term;
    if (cur.tryConsume("tree:")) {
      term.kind = SumExpr::Term::Kind::Tree;
      term.tree = parseTreeAt(cur, arena);
    } else if (cur.tryConsume("graph:")) {
      term.kind = SumExpr::Term::Kind::Graph;
      term.graphName = parseName(cur, "graph name");
      cur.expect('@', "graph:NAME@NODE");
      term.graphNode = parseName(cur, "graph node");
    } else {
      term.kind = SumExpr::Term::Kind::Value;
      term.value = parseValueAt(cur);
    }
    sum.terms.push_back(std::move(term));
    cur.skipWs();
    if (cur.eof()) break;
    cur.expect('+', "sum expression");
  }
  return sum;
}

LoopyGraph parseGraphFile(std::string_view text) {
  struct Def {
    std::vector<std::pair<std::string, std::size_t>> targets;  // name, offset
  };
  std::vector<std::string> order;
  std::map<std::string, Def> defs;
  std::string startName;
  bool haveStart = false;

  std::size_t lineBegin = 0;
  while (lineBegin <= text.size()) {
    std::size_t lineEnd = text.find('\n', lineBegin);
    if (lineEnd == std::string_view::npos) lineEnd = text.size();
    std::string_view line = text.substr(lineBegin, lineEnd - lineBegin);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    Cursor cur{line};
    cur.skipWs();
    if (!cur.eof()) {
      std::size_t nameAt = lineBegin + cur.pos;
      std::string name = parseName(cur, "node name");
      cur.skipWs();
      if (!cur.tryConsume(':'))
        throw ParseError("expected ':' after node name", lineBegin + cur.pos);
      std::vector<std::pair<std::string, std::size_t>> targets;
      while (true) {
        cur.skipWs();
        if (cur.eof()) break;
        std::size_t at = lineBegin + cur.pos;
        targets.emplace_back(parseName(cur, "node name"), at);
      }
      if (name == "start") {
        if (haveStart) throw ParseError("duplicate start line", nameAt);
        if (targets.size() != 1)
          throw ParseError("start line needs exactly one node", nameAt);
        startName = targets.front().first;
        haveStart = true;
      } else {
        if (defs.count(name))
          throw ParseError("duplicate definition of node '" + name + "'", nameAt);
        defs[name] = Def{std::move(targets)};
        order.push_back(name);
      }
    }
    if (lineEnd == text.size()) break;
    lineBegin = lineEnd + 1;
  }

  if (!haveStart) throw ParseError("missing start line", text.size());
  std::map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < order.size(); ++i)
    index[order[i]] = static_cast<std::uint32_t>(i);

  std::vector<std::vector<std::uint32_t>> options(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [target, at] : defs[order[i]].targets) {
      auto it = index.find(target);
      if (it == index.end())
        throw ParseError("undefined node '" + target + "'", at);
      options[i].push_back(it->second);
    }
  }
  auto startIt = index.find(startName);
  if (startIt == index.end())
    throw ParseError("undefined start node '" + startName + "'", text.size());
  return LoopyGraph::make(std::move(options), startIt->second, std::move(order));
}

std::string printValue(const GameValue& v) {
  switch (v.kind) {
    case GameValue::Kind::Nimber:
      if (v.number == 0) return "0";
      if (v.number == 1) return "*";
      return "*" + std::to_string(v.number);
    case GameValue::Kind::Moon:
      return "moon";
    case GameValue::Kind::SpecialMoon:
      return "sp(" + std::to_string(v.number) + ")";
    case GameValue::Kind::Inf: {
      std::string out = "inf{";
      bool first = true;
      for (unsigned a : v.set) {
        if (!first) out += ',';
        out += std::to_string(a);
        first = false;
      }
      return out + "}";
    }
  }
  return "?";
}

std::string printSum(const std::vector<GameValue>& values) {
  std::string out;
  for (const GameValue& v : values) {
    if (!out.empty()) out += " + ";
    out += printValue(v);
  }
  return out;
}

std::string printSum(const SumExpr& sum, const TreeArena& arena) {
  std::string out;
  for (const SumExpr::Term& term : sum.terms) {
    if (!out.empty()) out += " + ";
    switch (term.kind) {
      case SumExpr::Term::Kind::Value: out += printValue(term.value); break;
      case SumExpr::Term::Kind::Graph:
        out += "graph:" + term.graphName + "@" + term.graphNode;
        break;
      case SumExpr::Term::Kind::Tree:
        out += "tree:" + printTree(arena, term.tree);
        break;
    }
  }
  return out;
}

std::string printTree(const TreeArena& arena, TreeId t) {
  if (t == kInfinityTree) return "inf";
  if (t == kCoInfinityTree) return "~inf";
  auto side = [&](const std::vector<TreeId>& opts) {
    std::string out;
    for (TreeId o : opts) {
      if (!out.empty()) out += ", ";
      out += printTree(arena, o);
    }
    return out;
  };
  return "{" + side(arena.leftOptions(t)) + " | " + side(arena.rightOptions(t)) + "}";
}

std::string printGraph(const LoopyGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << g.nodeName(static_cast<std::uint32_t>(i)) << ":";
    for (std::uint32_t o : g.options[i]) out << ' ' << g.nodeName(o);
    out << '\n';
  }
  out << "start: " << g.nodeName(g.start) << '\n';
  return out.str();
}

std::string printImsClass(const ImsClass& c) {
  switch (c.kind) {
    case ImsClass::Kind::Nimber: return printValue(GameValue::nimber(c.number));
    case ImsClass::Kind::Moon: return "moon";
    case ImsClass::Kind::SpecialMoon: return "sp(" + std::to_string(c.number) + ")";
    case ImsClass::Kind::OutsideFragment: return "outside-fragment";
  }
  return "?";
}

}  // namespace lunim
