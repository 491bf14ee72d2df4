#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lunim/entailing.hpp"
#include "lunim/loopy.hpp"
#include "lunim/notation.hpp"
#include "lunim/oracle.hpp"
#include "lunim/rulesets.hpp"
#include "lunim/values.hpp"

using namespace lunim;
using nlohmann::json;

namespace {

// Domain-rule failures exit with code 1, parse failures with code 2.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Session {
  TreeArena arena;
  EntailingSolver solver{arena};
  std::map<std::string, LoopyGraph> graphs;
  std::size_t stateLimit = 1'000'000;
  bool asJson = false;
  int exitCode = 0;

  void loadGraphs(const std::vector<std::string>& specs) {
    for (const std::string& entry : specs) {
      std::size_t eq = entry.find('=');
      if (eq == std::string::npos)
        throw DomainError("--graph expects NAME=FILE, got '" + entry + "'");
      std::string name = entry.substr(0, eq);
      graphs.emplace(name, parseGraphFile(readFile(entry.substr(eq + 1))));
    }
  }

  const LoopyGraph& graph(const std::string& name) const {
    auto it = graphs.find(name);
    if (it == graphs.end()) throw DomainError("graph '" + name + "' is not loaded");
    return it->second;
  }

  static std::uint32_t nodeIndex(const LoopyGraph& g, const std::string& node) {
    for (std::uint32_t i = 0; i < g.size(); ++i)
      if (g.nodeName(i) == node) return i;
    throw DomainError("graph has no node '" + node + "'");
  }

  GameValue termValue(const SumExpr::Term& term) {
    switch (term.kind) {
      case SumExpr::Term::Kind::Value:
        return term.value;
      case SumExpr::Term::Kind::Graph: {
        const LoopyGraph& g = graph(term.graphName);
        return valueOf(g, nodeIndex(g, term.graphNode));
      }
      case SumExpr::Term::Kind::Tree: {
        if (arena.isLeaf(term.tree))
          throw DomainError("a bare infinity has no canonical value");
        if (!arena.isImpartialEntailing(term.tree))
          throw DomainError("tree is not an impartial entailing position");
        ImsClass c = solver.classify(term.tree);
        switch (c.kind) {
          case ImsClass::Kind::Nimber: return GameValue::nimber(c.number);
          case ImsClass::Kind::Moon: return GameValue::moon();
          case ImsClass::Kind::SpecialMoon: return GameValue::specialMoon(c.number);
          case ImsClass::Kind::OutsideFragment:
            throw DomainError(
                "position is outside the solved fragment; no canonical value");
        }
        throw DomainError("unreachable");
      }
    }
    throw DomainError("unreachable");
  }

  std::vector<GameValue> termValues(const SumExpr& sum) {
    std::vector<GameValue> out;
    for (const auto& term : sum.terms) out.push_back(termValue(term));
    return out;
  }

  std::vector<Component> components(const SumExpr& sum) {
    std::vector<Component> out;
    for (const auto& term : sum.terms) {
      switch (term.kind) {
        case SumExpr::Term::Kind::Value:
          out.push_back(realize(term.value, arena));
          break;
        case SumExpr::Term::Kind::Graph: {
          const LoopyGraph& g = graph(term.graphName);
          out.push_back(Component::loopyAt(g, nodeIndex(g, term.graphNode)));
          break;
        }
        case SumExpr::Term::Kind::Tree:
          if (arena.isLeaf(term.tree))
            throw DomainError("bare infinities are not summable components");
          out.push_back(Component::entailingTree(term.tree));
          break;
      }
    }
    return out;
  }
};

KeepNimMode parseMode(const std::string& mode) {
  return mode == "replace" ? KeepNimMode::Replace : KeepNimMode::Augment;
}

void cmdEval(Session& s, const std::string& text) {
  SumExpr sum = parseSum(text, s.arena);
  GameValue value = sumValue(s.termValues(sum));
  if (s.asJson) {
    json j{{"command", "eval"}, {"input", text}, {"value", printValue(value)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << printValue(value) << "\n";
  }
}

void cmdOutcome(Session& s, const std::string& text) {
  SumExpr sum = parseSum(text, s.arena);
  // Bare infinities decide the sum outright.
  bool hasInf = false, hasCoInf = false;
  for (const auto& term : sum.terms) {
    if (term.kind != SumExpr::Term::Kind::Tree) continue;
    if (term.tree == s.arena.infinity()) hasInf = true;
    if (term.tree == s.arena.coInfinity()) hasCoInf = true;
  }
  Outcome o;
  if (hasInf && hasCoInf) throw DomainError("inf + ~inf is not defined");
  if (hasInf) {
    o = Outcome::L;
  } else if (hasCoInf) {
    o = Outcome::R;
  } else {
    o = outcomeOfSum(decompose(s.termValues(sum)));
  }
  if (s.asJson) {
    json j{{"command", "outcome"}, {"input", text},
           {"outcome", std::string(1, outcomeChar(o))}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << outcomeChar(o) << "\n";
  }
}

void cmdOracle(Session& s, const std::string& text) {
  SumExpr sum = parseSum(text, s.arena);
  OracleResult r = oracleOutcome(s.components(sum), s.arena, s.stateLimit);
  if (s.asJson) {
    json j{{"command", "oracle"}, {"input", text},
           {"outcome", std::string(1, outcomeChar(r.outcome))},
           {"states", r.stateCount}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << outcomeChar(r.outcome) << "\n";
    std::cout << "states: " << r.stateCount << "\n";
  }
}

void cmdClassify(Session& s, const std::string& text, bool strict) {
  TreeId t = parseTree(text, s.arena);
  if (s.arena.isLeaf(t)) throw DomainError("bare infinities are not classified");
  if (!s.arena.isImpartialEntailing(t))
    throw DomainError("tree is not an impartial entailing position");
  ImsClass c = s.solver.classify(t, strict);
  if (s.asJson) {
    json j{{"command", "classify"}, {"input", text}, {"class", printImsClass(c)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << printImsClass(c) << "\n";
  }
  if (c.kind == ImsClass::Kind::OutsideFragment) s.exitCode = 1;
}

void cmdSmith(Session& s, const std::string& file) {
  LoopyGraph g = parseGraphFile(readFile(file));
  auto values = smithValues(g);
  auto outcomes = outcomesNPD(g);
  if (s.asJson) {
    json nodes = json::array();
    for (std::uint32_t i = 0; i < g.size(); ++i) {
      nodes.push_back({{"node", g.nodeName(i)},
                       {"value", printValue(valueOf(values[i]))},
                       {"outcome", std::string(1, outcomeChar(outcomes[i]))}});
    }
    json j{{"command", "smith"}, {"start", g.nodeName(g.start)}, {"nodes", nodes}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "start: " << g.nodeName(g.start) << "\n";
    for (std::uint32_t i = 0; i < g.size(); ++i)
      std::cout << g.nodeName(i) << ": " << printValue(valueOf(values[i])) << " "
                << outcomeChar(outcomes[i]) << "\n";
  }
}

void cmdTable(Session& s, const std::string& ruleset, unsigned maxX, unsigned maxY,
              const std::string& mode) {
  std::vector<std::vector<std::string>> cells(maxX + 1,
                                              std::vector<std::string>(maxY + 1));
  for (unsigned x = 0; x <= maxX; ++x) {
    for (unsigned y = 0; y <= maxY; ++y) {
      if (ruleset == "nim") {
        cells[x][y] = printValue(roundValue(x, y));
      } else if (ruleset == "keep-nim") {
        LoopyGraph g = keepNimGraph(x, y, maxX + 1, maxY + 1, parseMode(mode));
        cells[x][y] = printValue(valueOf(g, g.start));
      } else if (ruleset == "turn-keep-nim") {
        cells[x][y] = printImsClass(s.solver.classify(turnKeepNimTree(x, y, s.arena)));
      } else {
        throw DomainError("unknown ruleset '" + ruleset +
                          "' (nim, keep-nim, turn-keep-nim)");
      }
    }
  }
  if (s.asJson) {
    json rows = json::array();
    for (const auto& row : cells) rows.push_back(row);
    json j{{"command", "table"}, {"ruleset", ruleset}, {"maxX", maxX},
           {"maxY", maxY}, {"mode", mode}, {"rows", rows}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::size_t width = 3;  // "x\y"
  for (unsigned y = 0; y <= maxY; ++y)
    width = std::max(width, std::to_string(y).size());
  for (const auto& row : cells)
    for (const auto& cell : row) width = std::max(width, cell.size());
  width += 2;
  auto pad = [width](const std::string& text) {
    return std::string(width - text.size(), ' ') + text;
  };
  std::string header = pad("x\\y");
  for (unsigned y = 0; y <= maxY; ++y) header += pad(std::to_string(y));
  std::cout << header << "\n";
  for (unsigned x = 0; x <= maxX; ++x) {
    std::string line = pad(std::to_string(x));
    for (unsigned y = 0; y <= maxY; ++y) line += pad(cells[x][y]);
    std::cout << line << "\n";
  }
}

void cmdTripiece(Session& s, const std::string& file, const std::string& mode) {
  Board board = parseBoardFile(readFile(file));
  BoardEvaluation eval = evaluateBoard(board, parseMode(mode));

  auto pieceName = [](PieceKind k) {
    switch (k) {
      case PieceKind::Round: return "round";
      case PieceKind::Triangle: return "triangle";
      case PieceKind::Square: return "square";
    }
    return "?";
  };

  // reduction chain: fold the leftmost two terms until one remains
  std::vector<std::vector<GameValue>> chain;
  std::vector<GameValue> terms = eval.pieceValues;
  while (terms.size() > 1) {
    GameValue merged = addValues(terms[0], terms[1]);
    terms.erase(terms.begin());
    terms[0] = merged;
    chain.push_back(terms);
  }

  if (s.asJson) {
    json pieces = json::array();
    for (std::size_t i = 0; i < board.pieces.size(); ++i) {
      pieces.push_back({{"kind", pieceName(board.pieces[i].kind)},
                        {"x", board.pieces[i].x},
                        {"y", board.pieces[i].y},
                        {"value", printValue(eval.pieceValues[i])}});
    }
    json steps = json::array();
    for (const auto& step : chain) steps.push_back(printSum(step));
    json j{{"command", "tripiece"},
           {"board", file},
           {"mode", mode},
           {"pieces", pieces},
           {"chain", steps},
           {"total", printValue(eval.total)},
           {"outcome", std::string(1, outcomeChar(eval.outcome))}};
    std::cout << j.dump(2) << "\n";
    return;
  }

  for (std::size_t i = 0; i < board.pieces.size(); ++i) {
    const Piece& p = board.pieces[i];
    std::cout << pieceName(p.kind) << " (" << p.x << "," << p.y
              << "): " << printValue(eval.pieceValues[i]) << "\n";
  }
  if (eval.pieceValues.empty()) {
    std::cout << "sum: 0\n";
  } else {
    std::cout << "sum: " << printSum(eval.pieceValues) << "\n";
    for (const auto& step : chain) std::cout << "   = " << printSum(step) << "\n";
  }
  std::cout << "total: " << printValue(eval.total) << "\n";
  std::cout << "outcome: " << outcomeChar(eval.outcome) << "\n";
}

void cmdEquiv(Session& s, const std::string& textA, const std::string& textB,
              const std::string& corpusFile) {
  std::vector<Component> a = s.components(parseSum(textA, s.arena));
  std::vector<Component> b = s.components(parseSum(textB, s.arena));

  std::vector<std::string> contextTexts;
  std::vector<std::vector<Component>> contexts;
  if (corpusFile.empty()) {
    for (const auto& ctx : defaultContextCorpus()) {
      contextTexts.push_back(printSum(ctx));
      contexts.push_back(realizeAll(ctx, s.arena));
    }
  } else {
    std::istringstream in(readFile(corpusFile));
    std::string line;
    while (std::getline(in, line)) {
      std::string_view sv(line);
      std::size_t hash = sv.find('#');
      if (hash != std::string_view::npos) sv = sv.substr(0, hash);
      bool blank = true;
      for (char c : sv)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) continue;
      contextTexts.emplace_back(sv);
      contexts.push_back(s.components(parseSum(sv, s.arena)));
    }
  }

  EquivalenceReport rep = checkEquivalence(a, b, contexts, s.arena, s.stateLimit);
  if (s.asJson) {
    json j{{"command", "equiv"},
           {"a", textA},
           {"b", textB},
           {"equivalent", rep.equivalent},
           {"zero-sum-check", rep.zeroSumSufficient}};
    if (!rep.equivalent) {
      j["context"] = contextTexts[*rep.distinguishingContext];
      j["outcome-a"] = std::string(1, outcomeChar(rep.outcomeA));
      j["outcome-b"] = std::string(1, outcomeChar(rep.outcomeB));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (rep.equivalent ? "true" : "false") << "\n";
    if (!rep.equivalent) {
      std::cout << "context: " << contextTexts[*rep.distinguishingContext] << "\n";
      std::cout << "outcome-a: " << outcomeChar(rep.outcomeA) << "\n";
      std::cout << "outcome-b: " << outcomeChar(rep.outcomeB) << "\n";
    }
    std::cout << "zero-sum-check: "
              << (rep.zeroSumSufficient ? "sufficient" : "inconclusive") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lunim - values and outcomes for sums of impartial loopy and entailing games"};
  app.require_subcommand(1);

  Session session;
  std::vector<std::string> graphSpecs;
  std::string sumText, sumTextB, treeText, file, corpusFile;
  std::string ruleset, mode = "augment";
  unsigned maxX = 7, maxY = 7;
  bool strict = false;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_flag("--json", session.asJson, "emit one JSON document");
  };
  auto addGraphOpt = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graphSpecs, "load a graph file as NAME=FILE")
        ->type_name("NAME=FILE");
  };

  CLI::App* eval = app.add_subcommand("eval", "canonical value of a sum");
  eval->add_option("sum", sumText, "sum expression")->required();
  addCommon(eval);
  addGraphOpt(eval);
  eval->callback([&] {
    session.loadGraphs(graphSpecs);
    cmdEval(session, sumText);
  });

  CLI::App* outcome = app.add_subcommand("outcome", "outcome of a sum (N/P/D, L/R)");
  outcome->add_option("sum", sumText, "sum expression")->required();
  addCommon(outcome);
  addGraphOpt(outcome);
  outcome->callback([&] {
    session.loadGraphs(graphSpecs);
    cmdOutcome(session, sumText);
  });

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force outcome of a sum");
  oracle->add_option("sum", sumText, "sum expression")->required();
  oracle->add_option("--state-limit", session.stateLimit, "product state limit");
  addCommon(oracle);
  addGraphOpt(oracle);
  oracle->callback([&] {
    session.loadGraphs(graphSpecs);
    cmdOracle(session, sumText);
  });

  CLI::App* classify = app.add_subcommand("classify", "classify an entailing tree");
  classify->add_option("tree", treeText, "tree literal")->required();
  classify->add_flag("--strict", strict, "literal special-moon shapes only");
  addCommon(classify);
  classify->callback([&] { cmdClassify(session, treeText, strict); });

  CLI::App* smith = app.add_subcommand("smith", "per-node values of a graph file");
  smith->add_option("file", file, "graph file")->required();
  addCommon(smith);
  smith->callback([&] { cmdSmith(session, file); });

  CLI::App* table = app.add_subcommand("table", "value table of a ruleset");
  table->add_option("ruleset", ruleset, "nim | keep-nim | turn-keep-nim")->required();
  table->add_option("maxX", maxX, "largest row")->required();
  table->add_option("maxY", maxY, "largest column")->required();
  table->add_option("--mode", mode, "replace | augment (keep-nim only)")
      ->check(CLI::IsMember({"replace", "augment"}));
  addCommon(table);
  table->callback([&] { cmdTable(session, ruleset, maxX, maxY, mode); });

  CLI::App* tripiece = app.add_subcommand("tripiece", "evaluate a board file");
  tripiece->add_option("file", file, "board file")->required();
  tripiece->add_option("--mode", mode, "replace | augment triangle rules")
      ->check(CLI::IsMember({"replace", "augment"}));
  addCommon(tripiece);
  tripiece->callback([&] { cmdTripiece(session, file, mode); });

  CLI::App* equiv = app.add_subcommand("equiv", "compare two sums over a context corpus");
  equiv->add_option("sumA", sumText, "first sum")->required();
  equiv->add_option("sumB", sumTextB, "second sum")->required();
  equiv->add_option("--corpus", corpusFile, "file with one context sum per line");
  equiv->add_option("--state-limit", session.stateLimit, "product state limit");
  addCommon(equiv);
  addGraphOpt(equiv);
  equiv->callback([&] {
    session.loadGraphs(graphSpecs);
    cmdEquiv(session, sumText, sumTextB, corpusFile);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are parse errors
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return session.exitCode;
}
