#include "lunim/rulesets.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "lunim/notation.hpp"

namespace lunim {

LoopyGraph nimHeapGraph(unsigned k) {
  std::vector<std::vector<std::uint32_t>> options(k + 1);
  for (unsigned i = 0; i <= k; ++i)
    for (unsigned j = 0; j < i; ++j) options[i].push_back(j);
  return LoopyGraph::make(std::move(options), k);
}

GameValue roundValue(unsigned x, unsigned y) { return GameValue::nimber(x ^ y); }

GameValue keepNimValue(unsigned x, unsigned y) {
  unsigned g = x ^ y;
  if (g <= 2) return GameValue::nimber(g);
  return GameValue::inf({0, 1, 2});
}

namespace {

struct Cell {
  unsigned x, y;
  bool operator<(const Cell& o) const { return x < o.x || (x == o.x && y < o.y); }
};

std::vector<Cell> keepNimMoves(Cell c, unsigned height, unsigned width,
                               KeepNimMode mode) {
  std::vector<Cell> out;
  bool special = (c.x + c.y == 3);
  if (!special || mode == KeepNimMode::Augment) {
    for (unsigned x = 0; x < c.x; ++x) out.push_back({x, c.y});
    for (unsigned y = 0; y < c.y; ++y) out.push_back({c.x, y});
  }
  if (special) {
    if (c.x + 1 < height && c.y >= 1) out.push_back({c.x + 1, c.y - 1});
    if (c.x >= 1 && c.y + 1 < width) out.push_back({c.x - 1, c.y + 1});
  }
  return out;
}

}  // namespace

LoopyGraph keepNimGraph(unsigned x, unsigned y, unsigned height, unsigned width,
                        KeepNimMode mode) {
  if (x >= height || y >= width) throw std::domain_error("cell out of bounds");
  std::map<Cell, std::uint32_t> index;
  std::vector<Cell> cells;
  std::vector<Cell> todo{{x, y}};
  index[{x, y}] = 0;
  cells.push_back({x, y});
  while (!todo.empty()) {
    Cell c = todo.back();
    todo.pop_back();
    for (Cell m : keepNimMoves(c, height, width, mode)) {
      if (index.emplace(m, static_cast<std::uint32_t>(cells.size())).second) {
        cells.push_back(m);
        todo.push_back(m);
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> options(cells.size());
  std::vector<std::string> names(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    names[i] = "r" + std::to_string(cells[i].x) + "c" + std::to_string(cells[i].y);
    for (Cell m : keepNimMoves(cells[i], height, width, mode))
      options[i].push_back(index.at(m));
  }
  return LoopyGraph::make(std::move(options), 0, std::move(names));
}

GameValue turnKeepNimValue(unsigned x, unsigned y) {
  if (x + y <= 3) return GameValue::nimber(x ^ y);
  if (std::min(x, y) <= 3) return GameValue::specialMoon(3);
  return GameValue::nimber((x - 4) ^ (y - 4));
}

namespace {

TreeId buildTurnKeepNim(unsigned x, unsigned y, TreeArena& arena,
                        std::map<std::pair<unsigned, unsigned>, TreeId>& memo) {
  auto key = std::make_pair(x, y);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  TreeId id;
  if (x == 0 && y == 0) {
    id = arena.node({arena.coInfinity()}, {arena.infinity()});
  } else {
    std::vector<TreeId> left, right;
    auto addTarget = [&](unsigned tx, unsigned ty) {
      TreeId child = buildTurnKeepNim(tx, ty, arena, memo);
      left.push_back(child);
      right.push_back(child);
      if (tx + ty == 3) {
        left.push_back(arena.node({arena.infinity()}, {child}));
        right.push_back(arena.node({child}, {arena.coInfinity()}));
      }
    };
    for (unsigned tx = 0; tx < x; ++tx) addTarget(tx, y);
    for (unsigned ty = 0; ty < y; ++ty) addTarget(x, ty);
    id = arena.node(std::move(left), std::move(right));
  }
  memo.emplace(key, id);
  return id;
}

}  // namespace

TreeId turnKeepNimTree(unsigned x, unsigned y, TreeArena& arena) {
  std::map<std::pair<unsigned, unsigned>, TreeId> memo;
  return buildTurnKeepNim(x, y, arena, memo);
}

Board parseBoardFile(std::string_view text) {
  Board board;
  bool haveHeader = false;
  std::size_t lineBegin = 0;
  while (lineBegin <= text.size()) {
    std::size_t lineEnd = text.find('\n', lineBegin);
    if (lineEnd == std::string_view::npos) lineEnd = text.size();
    std::string_view line = text.substr(lineBegin, lineEnd - lineBegin);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string> tokens;
    std::string tok;
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!tok.empty()) tokens.push_back(std::move(tok));
        tok.clear();
      } else {
        tok += c;
      }
    }
    if (!tok.empty()) tokens.push_back(std::move(tok));

    auto number = [&](const std::string& s) -> unsigned {
      unsigned long long v = 0;
      if (s.empty()) throw ParseError("expected a number", lineBegin);
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("expected a number, got '" + s + "'", lineBegin);
        v = v * 10 + static_cast<unsigned long long>(c - '0');
        if (v > 2147483647ull) throw ParseError("integer overflow", lineBegin);
      }
      return static_cast<unsigned>(v);
    };

    if (!tokens.empty()) {
      if (!haveHeader) {
        std::size_t xPos = tokens[0].find('x');
        if (tokens.size() != 1 || xPos == std::string::npos)
          throw ParseError("expected board header WxH", lineBegin);
        board.width = number(tokens[0].substr(0, xPos));
        board.height = number(tokens[0].substr(xPos + 1));
        if (board.width == 0 || board.height == 0)
          throw ParseError("board dimensions must be positive", lineBegin);
        haveHeader = true;
      } else {
        if (tokens.size() != 3)
          throw ParseError("expected piece line: KIND X Y", lineBegin);
        Piece p;
        if (tokens[0] == "round")
          p.kind = PieceKind::Round;
        else if (tokens[0] == "triangle")
          p.kind = PieceKind::Triangle;
        else if (tokens[0] == "square")
          p.kind = PieceKind::Square;
        else
          throw ParseError("unknown piece kind '" + tokens[0] + "'", lineBegin);
        p.x = number(tokens[1]);
        p.y = number(tokens[2]);
        if (p.x >= board.height || p.y >= board.width)
          throw ParseError("piece out of bounds", lineBegin);
        board.pieces.push_back(p);
      }
    }
    if (lineEnd == text.size()) break;
    lineBegin = lineEnd + 1;
  }
  if (!haveHeader) throw ParseError("missing board header WxH", text.size());
  return board;
}

BoardEvaluation evaluateBoard(const Board& board, KeepNimMode mode) {
  BoardEvaluation eval;
  for (const Piece& p : board.pieces) {
    if (p.x >= board.height || p.y >= board.width)
      throw std::domain_error("piece out of bounds");
    switch (p.kind) {
      case PieceKind::Round:
        eval.pieceValues.push_back(roundValue(p.x, p.y));
        break;
      case PieceKind::Triangle: {
        LoopyGraph g = keepNimGraph(p.x, p.y, board.height, board.width, mode);
        eval.pieceValues.push_back(valueOf(g, g.start));
        break;
      }
      case PieceKind::Square:
        eval.pieceValues.push_back(turnKeepNimValue(p.x, p.y));
        break;
    }
  }
  eval.total = sumValue(eval.pieceValues);
  eval.outcome = outcomeOfSum(decompose(eval.pieceValues));
  return eval;
}

}  // namespace lunim
