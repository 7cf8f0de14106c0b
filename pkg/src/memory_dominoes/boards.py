"""Riordan boards, 2 x k grid graphs and their rook/matching polynomials.

Grid vertices are ``(row, col)`` with ``row in {1, 2}`` and ``col in 1..k``.
Board cells are ``(board_row, board_col)``: board columns are the black
vertices of the checkerboard colouring (``row + col`` even), board rows the
white ones, and column ``c`` of the grid contributes board index ``c - 1`` to
both.  Vertical edges land on the central diagonal, horizontal edges on the
diagonals just above and below it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .algebra import IntPoly, MultiSeries, series_reciprocal

Vertex = Tuple[int, int]
Edge = FrozenSet[Vertex]
Cell = Tuple[int, int]

MAX_GRAPH_VERTICES = 24
MAX_BOARD_CELLS = 16


class SizeLimitError(ValueError):
    """Raised when a brute-force oracle is asked for more than it can enumerate."""


# --------------------------------------------------------------------------
# Graphs
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    vertices: FrozenSet
    edges: FrozenSet[Edge]

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2 or not e <= self.vertices:
                raise ValueError(f"bad edge {set(e)}")

    def remove(self, vertices: Iterable) -> "Graph":
        drop = frozenset(vertices)
        return Graph(
            self.vertices - drop, frozenset(e for e in self.edges if not e & drop)
        )


def grid_graph(k: int, removed: Iterable[Vertex] = ()) -> Graph:
    """The 2 x k grid graph with the given vertices deleted."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    present = frozenset((r, c) for r in (1, 2) for c in range(1, k + 1)) - frozenset(removed)
    edges = set()
    for r, c in present:
        if r == 1 and (2, c) in present:
            edges.add(frozenset({(1, c), (2, c)}))
        if (r, c + 1) in present:
            edges.add(frozenset({(r, c), (r, c + 1)}))
    return Graph(present, frozenset(edges))


def matching_polynomial(graph: Graph, max_vertices: int = MAX_GRAPH_VERTICES) -> IntPoly:
    """Sum over matchings of x^(number of edges).

    Uses M(G) = M(G - v) + x * sum_{u ~ v} M(G - v - u) on the lowest vertex,
    memoised on the remaining vertex set.
    """
    if len(graph.vertices) > max_vertices:
        raise SizeLimitError(
            f"{len(graph.vertices)} vertices exceeds the brute-force limit {max_vertices}"
        )
    order = {v: i for i, v in enumerate(sorted(graph.vertices, key=repr))}
    nbrs: Dict[int, List[int]] = {i: [] for i in order.values()}
    for e in graph.edges:
        a, b = (order[v] for v in e)
        nbrs[a].append(b)
        nbrs[b].append(a)

    @lru_cache(maxsize=None)
    def count(mask: int) -> Tuple[int, ...]:
        if not mask:
            return (1,)
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        out = list(count(rest))
        for u in nbrs[v]:
            if rest >> u & 1:
                sub = count(rest & ~(1 << u))
                if len(sub) + 1 > len(out):
                    out.extend([0] * (len(sub) + 1 - len(out)))
                for j, c in enumerate(sub):
                    out[j + 1] += c
        return tuple(out)

    return IntPoly(count((1 << len(order)) - 1))


# --------------------------------------------------------------------------
# Boards
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Board:
    cells: FrozenSet[Cell]

    def __post_init__(self):
        object.__setattr__(self, "cells", frozenset(self.cells))
        for r, c in self.cells:
            if r < 0 or c < 0:
                raise ValueError(f"negative cell coordinate {(r, c)}")

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return cell in self.cells

    def without(self, cells: Iterable[Cell]) -> "Board":
        return Board(self.cells - frozenset(cells))

    def without_lines(self, row: int, col: int) -> "Board":
        return Board(frozenset((r, c) for r, c in self.cells if r != row and c != col))


def is_black(v: Vertex) -> bool:
    return (v[0] + v[1]) % 2 == 0


def edge_to_cell(edge: Iterable[Vertex]) -> Cell:
    """Board cell of a grid edge: (index of white endpoint, index of black endpoint)."""
    a, b = tuple(edge)
    if is_black(a) == is_black(b):
        raise ValueError(f"{a} and {b} have the same colour")
    black, white = (a, b) if is_black(a) else (b, a)
    return (white[1] - 1, black[1] - 1)


def cell_to_edge(cell: Cell) -> Edge:
    """Inverse of :func:`edge_to_cell`."""
    r, c = cell
    if abs(r - c) > 1:
        raise ValueError(f"{cell} is not on the three central diagonals")
    white_col, black_col = r + 1, c + 1
    black = (1, black_col) if is_black((1, black_col)) else (2, black_col)
    white = (1, white_col) if not is_black((1, white_col)) else (2, white_col)
    if white_col != black_col and white[0] != black[0]:
        raise ValueError(f"{cell} does not correspond to a grid edge")
    return frozenset({black, white})


def graph_board(graph: Graph) -> Board:
    """Board of a (possibly vertex-deleted) 2 x k grid graph."""
    return Board(frozenset(edge_to_cell(e) for e in graph.edges))


def grid_board(k: int, removed: Iterable[Vertex] = ()) -> Board:
    return graph_board(grid_graph(k, removed))


def board_rook_polynomial(board: Board, max_cells: int = MAX_BOARD_CELLS) -> IntPoly:
    """Count non-attacking rook placements by exhaustive enumeration of cell subsets."""
    cells = sorted(board.cells)
    if len(cells) > max_cells:
        raise SizeLimitError(f"{len(cells)} cells exceeds the brute-force limit {max_cells}")
    counts = [1]
    for j in range(1, len(cells) + 1):
        n = 0
        for combo in combinations(cells, j):
            rows = {r for r, _ in combo}
            cols = {c for _, c in combo}
            if len(rows) == j and len(cols) == j:
                n += 1
        if n == 0:
            break
        counts.append(n)
    return IntPoly(counts)


def develop(board: Board, cell: Cell) -> Tuple[Board, Board]:
    """Split on ``cell``: (board without the cell, board without its row and column).

    rook(board) == rook(first) + x * rook(second).
    """
    if cell not in board:
        raise KeyError(f"{cell} is not a cell of the board")
    return board.without([cell]), board.without_lines(*cell)


def board_regions(board: Board) -> List[Board]:
    """Split a board into maximal regions sharing no row or column with each other."""
    parent: Dict[Tuple[str, int], Tuple[str, int]] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r, c in board.cells:
        parent[find(("r", r))] = find(("c", c))
    groups: Dict[Tuple[str, int], set] = {}
    for cell in board.cells:
        groups.setdefault(find(("r", cell[0])), set()).add(cell)
    return [Board(frozenset(g)) for _, g in sorted(groups.items(), key=lambda kv: min(kv[1]))]


def rook_polynomial_by_regions(board: Board, max_cells: int = MAX_BOARD_CELLS) -> IntPoly:
    out = IntPoly((1,))
    for region in board_regions(board):
        out = out * board_rook_polynomial(region, max_cells)
    return out


# --------------------------------------------------------------------------
# Riordan's generating functions for the 2 x k grid and related boards
# --------------------------------------------------------------------------

FAMILIES = ("T", "s", "r", "R", "S")


@lru_cache(maxsize=32)
def riordan_family(name: str, x_cap: int, y_cap: int) -> MultiSeries:
    """Truncated expansion in (x, y) of T, s, r, R or S."""
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; expected one of {FAMILIES}")
    x, y = MultiSeries.gens("xy", (x_cap, y_cap))
    T = (1 - x * y) * series_reciprocal(1 - y - 2 * x * y - x * y**2 + x**3 * y**3)
    if name == "T":
        return T
    s = T * series_reciprocal((1 - x * y) ** 2)
    if name == "s":
        return s
    if name == "S":
        return (1 - 2 * x * y - x * y**2 + x**3 * y**3) * s
    r = (1 - x * y) * s
    return r if name == "r" else y * r


def family_poly(name: str, k: int) -> IntPoly:
    """[y^k] of a family, as a polynomial in x."""
    # Every family's y^k coefficient has x-degree at most k + 1.
    return riordan_family(name, k + 1, k).poly("x", y=k)
