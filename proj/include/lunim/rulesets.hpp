#pragma once

#include <string_view>
#include <vector>

#include "lunim/entailing.hpp"
#include "lunim/loopy.hpp"
#include "lunim/values.hpp"

namespace lunim {

/// Acyclic graph of a nim heap of size k: node i's options are 0..i-1,
/// start is node k.
LoopyGraph nimHeapGraph(unsigned k);

/// Two-heap nim: *(x^y).
GameValue roundValue(unsigned x, unsigned y);

/// 3-keep-nim closed form: *(x^y) when x^y <= 2, otherwise inf{0,1,2}.
GameValue keepNimValue(unsigned x, unsigned y);

/// On cells with x+y=3 the piece moves diagonally to (x+1,y-1) / (x-1,y+1)
/// within bounds. Replace: diagonal moves replace the normal ones there
/// (literal rule text); Augment: they are added to the normal moves (the
/// reading that reproduces the closed form).
enum class KeepNimMode { Replace, Augment };

/// Position graph of a triangular piece at (x,y) on a height x width board;
/// nodes are the cells reachable under the chosen mode.
LoopyGraph keepNimGraph(unsigned x, unsigned y, unsigned height, unsigned width,
                        KeepNimMode mode);

/// 3-turn-keep-nim closed form: *(x^y) when x+y <= 3; sp(3) when x+y > 3 and
/// min(x,y) <= 3; *((x-4)^(y-4)) otherwise.
GameValue turnKeepNimValue(unsigned x, unsigned y);

/// Entailing tree of a 3-turn-keep-nim position. Moves decrease one
/// coordinate; for every move target on x'+y'=3 the mover additionally gets
/// the carry-on option {inf | target} (conjugated on the Right side).
/// Shared subtrees are memoized, so whole tables build quickly.
TreeId turnKeepNimTree(unsigned x, unsigned y, TreeArena& arena);

enum class PieceKind { Round, Triangle, Square };

struct Piece {
  PieceKind kind = PieceKind::Round;
  unsigned x = 0;  // row; moving up decreases x
  unsigned y = 0;  // column; moving left decreases y
};

struct Board {
  unsigned height = 0;
  unsigned width = 0;
  std::vector<Piece> pieces;  // several pieces may share a cell
};

/// Board file: header `WxH`, then `round X Y` / `triangle X Y` / `square X Y`
/// lines; `#` starts a comment.
Board parseBoardFile(std::string_view text);

struct BoardEvaluation {
  std::vector<GameValue> pieceValues;  // in board order
  GameValue total;
  Outcome outcome = Outcome::P;
};

/// Round and square pieces use the closed forms; triangular pieces are solved
/// from their position graph in the given mode (equal to the closed form in
/// augment mode).
BoardEvaluation evaluateBoard(const Board& board, KeepNimMode mode);

}  // namespace lunim
