"""Deciding infinite Staller-start games on ``G|x``.

Three routes, used to cross-check one another:

* :func:`x_isolation_winner` solves the auxiliary game in which a player tries
  to get every vertex at distance 1 or 2 from ``x`` dominated before anybody
  plays a vertex of ``N[x]``;
* :func:`sgame_infinite_by_characterization` combines that game with the
  cut-vertex structure of ``G``;
* :func:`tree_sgame_infinite` is the closed-form test for trees.
"""

from __future__ import annotations

import enum

from .game import Turn
from .graph import (
    Graph,
    GraphError,
    bits,
    components_after_removal,
    distances_from,
    is_cut_vertex,
    is_tree,
)


class IsolationConvention(enum.Enum):
    PLAIN = "plain"
    PREDOMINATED = "predominated"


DEFAULT_CONVENTION = IsolationConvention.PREDOMINATED


class _IsolationGame:
    def __init__(self, g: Graph, x: int, for_player: Turn, convention: IsolationConvention) -> None:
        self.g = g
        self.forbidden = g.closed[x]
        dist = distances_from(g, x)
        self.target = sum(1 << v for v, d in enumerate(dist) if d in (1, 2))
        self.pre = 1 << x if convention is IsolationConvention.PREDOMINATED else 0
        self.for_player = for_player
        self.memo: dict[int, bool] = {}

    def moves(self, F: int) -> list[int]:
        closed = self.g.closed
        und = self.g.all_vertices & ~(F | self.pre)
        return [v for v in bits(F if F else self.g.all_vertices) if closed[v] & und]

    def wins(self, F: int, turn: Turn) -> bool:
        if self.target & ~(F | self.pre) == 0:
            return True
        key = F << 1 | (turn is Turn.DOMINATOR)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        moves = self.moves(F)
        if not moves:
            result = False
        else:
            closed = self.g.closed
            outcomes = (
                not self.forbidden >> v & 1 and self.wins(F | closed[v], turn.other)
                for v in moves
            )
            result = any(outcomes) if turn is self.for_player else all(outcomes)
        self.memo[key] = result
        return result

    def line(self, first: Turn) -> list[int]:
        """One winning line: the winner's lowest-index winning move, opponent's lowest-index reply."""
        F, turn, out = 0, first, []
        closed = self.g.closed
        while self.target & ~(F | self.pre):
            moves = self.moves(F)
            if turn is self.for_player:
                v = next(v for v in moves if not self.forbidden >> v & 1 and self.wins(F | closed[v], turn.other))
            else:
                v = moves[0]
            out.append(v)
            F |= closed[v]
            turn = turn.other
        return out


def x_isolation_winner(
    g: Graph,
    x: int,
    first: Turn,
    for_player: Turn,
    convention: IsolationConvention = DEFAULT_CONVENTION,
) -> bool:
    """Whether ``for_player`` can dominate every vertex at distance 1 or 2 from ``x`` before ``N[x]`` is touched.

    ``for_player`` loses as soon as anybody plays into ``N[x]`` and also when
    the game stops before the goal is reached.  With the ``PREDOMINATED``
    convention ``x`` counts as already dominated in this auxiliary game.
    """
    if g.n < 2:
        raise GraphError("isolation game needs at least two vertices")
    return _IsolationGame(g, x, for_player, convention).wins(0, first)


def x_isolation_line(
    g: Graph,
    x: int,
    first: Turn,
    for_player: Turn,
    convention: IsolationConvention = DEFAULT_CONVENTION,
) -> list[int] | None:
    game = _IsolationGame(g, x, for_player, convention)
    if not game.wins(0, first):
        return None
    return game.line(first)


def sgame_infinite_by_characterization(
    g: Graph, x: int, convention: IsolationConvention = DEFAULT_CONVENTION
) -> bool:
    """``x`` is a cut vertex and Staller wins the isolation game on some ``G[V(H) + x]``."""
    if not is_cut_vertex(g, x):
        return False
    for comp in components_after_removal(g, x):
        sub, old = g.induced(comp | 1 << x)
        if x_isolation_winner(sub, old.index(x), Turn.STALLER, Turn.STALLER, convention):
            return True
    return False


def tree_sgame_infinite(t: Graph, x: int) -> bool:
    if not is_tree(t):
        raise GraphError("input is not a tree")
    return t.degree(x) >= 2 and any(t.degree(u) == 2 for u in bits(t.adj[x]))
