"""Exact solver for the connected domination game.

The search state is ``(frontier, turn)`` where ``frontier`` is the closed
neighborhood of the set of vertices played so far.  A vertex is legal iff it
lies in the frontier (so it is adjacent to, or equal to, a played vertex) and
its closed neighborhood still contains an undominated vertex.  Played
vertices fail the second test automatically, so the played set itself never
has to be stored.

Game values are ``int`` for a finite number of remaining moves and
``math.inf`` when Staller can force a position with no legal move while some
vertex is still undominated.
"""

from __future__ import annotations

import enum
import math
import os
from collections import OrderedDict
from dataclasses import dataclass
from typing import Union

from .graph import Graph, VertexSet, bits, closed_neighborhood_set, is_connected

GameValue = Union[int, float]
INFINITE: GameValue = math.inf

MEMO_ENV = "CONDOGAME_MEMO_BYTES"
# rough per-entry cost of a dict slot holding an int key and small int value
MEMO_ENTRY_BYTES = 120


class Turn(enum.Enum):
    DOMINATOR = "dominator"
    STALLER = "staller"

    @property
    def other(self) -> "Turn":
        return Turn.STALLER if self is Turn.DOMINATOR else Turn.DOMINATOR


class GameError(ValueError):
    pass


class IllegalMove(GameError):
    pass


class BudgetExceeded(RuntimeError):
    """The solver expanded more nodes than its budget allows."""

    def __init__(self, nodes: int) -> None:
        super().__init__(f"node budget exceeded after {nodes} expansions")
        self.nodes = nodes


def format_value(v: GameValue) -> int | str:
    return "infinity" if v == INFINITE else int(v)


@dataclass(frozen=True)
class GameState:
    frontier: VertexSet = 0
    turn: Turn = Turn.DOMINATOR


class BoundedMemo(OrderedDict):
    """Transposition table with a hard entry cap.

    When full, the oldest entry is replaced.  Entries are exact values, so
    eviction only costs recomputation.
    """

    def __init__(self, max_entries: int) -> None:
        super().__init__()
        self.max_entries = max(1, max_entries)

    def __setitem__(self, key, value) -> None:
        if key not in self and len(self) >= self.max_entries:
            self.popitem(last=False)
        super().__setitem__(key, value)


def default_memo() -> dict:
    cap = os.environ.get(MEMO_ENV)
    if cap:
        return BoundedMemo(int(cap) // MEMO_ENTRY_BYTES)
    return {}


class SolveContext:
    """Everything fixed during one solve: graph, predominated set, memo, budget.

    ``use_memo=False`` gives the plain recursive solver; ``prune=True``
    discards moves that are dominated in the sense of the continuation
    principle: a move whose contribution to the frontier is contained in
    that of another legal move is never better for Dominator and never worse
    for Staller.  That principle only holds without predominated vertices
    (a larger frontier can strand a connector vertex whose remaining
    neighbors are all predominated), so pruning is skipped when
    ``predominated`` is nonempty.
    """

    def __init__(
        self,
        graph: Graph,
        predominated: VertexSet = 0,
        *,
        node_budget: int | None = None,
        use_memo: bool = True,
        prune: bool = False,
        memo: dict | None = None,
    ) -> None:
        if predominated & ~graph.all_vertices:
            raise GameError("predominated set contains vertices outside the graph")
        self.graph = graph
        self.predominated = predominated
        self.node_budget = node_budget
        self.use_memo = use_memo
        self.prune = prune and not predominated
        self.memo = default_memo() if memo is None else memo
        self.nodes = 0

    def dominated(self, st: GameState) -> VertexSet:
        return self.predominated | st.frontier

    def legal_moves(self, st: GameState) -> VertexSet:
        return legal_moves(self, st)

    def value(self, frontier: VertexSet, dominator_to_move: bool) -> GameValue:
        """Remaining moves under optimal play from a raw frontier."""
        g = self.graph
        closed = g.closed
        full = g.all_vertices
        S = self.predominated
        memo = self.memo if self.use_memo else None
        budget = self.node_budget
        prune = self.prune

        def rec(F: int, dom: bool) -> GameValue:
            if memo is not None:
                key = F << 1 | dom
                r = memo.get(key)
                if r is not None:
                    return r
            self.nodes += 1
            if budget is not None and self.nodes > budget:
                raise BudgetExceeded(self.nodes)
            dominated = F | S
            if dominated == full:
                r = 0
            else:
                und = full & ~dominated
                moves = [v for v in bits(F if F else full) if closed[v] & und]
                if not moves:
                    r = INFINITE
                else:
                    if prune and len(moves) > 1:
                        moves = _undominated_moves(moves, closed, ~F, dom)
                    if dom:
                        best = INFINITE
                        for v in moves:
                            val = rec(F | closed[v], False)
                            if val < best:
                                best = val
                                if best == 0:
                                    break
                    else:
                        best = -1
                        for v in moves:
                            val = rec(F | closed[v], True)
                            if val > best:
                                best = val
                                if best == INFINITE:
                                    break
                    r = best + 1
            if memo is not None:
                memo[key] = r
            return r

        return rec(frontier, dominator_to_move)

    def solve(self, st: GameState) -> GameValue:
        return self.value(st.frontier, st.turn is Turn.DOMINATOR)


def _undominated_moves(moves: list[int], closed, fresh: int, dom: bool) -> list[int]:
    # compare what each move adds to the frontier, predominated vertices included
    gain = {v: closed[v] & fresh for v in moves}
    kept = []
    for v in moves:
        gv = gain[v]
        beaten = False
        for w in moves:
            if w == v:
                continue
            gw = gain[w]
            if gv == gw:
                beaten = w < v
            elif dom:
                beaten = gv & ~gw == 0
            else:
                beaten = gw & ~gv == 0
            if beaten:
                break
        if not beaten:
            kept.append(v)
    return kept


def legal_moves(ctx: SolveContext, st: GameState) -> VertexSet:
    g = ctx.graph
    und = g.all_vertices & ~(ctx.predominated | st.frontier)
    cand = st.frontier if st.frontier else g.all_vertices
    out = 0
    for v in bits(cand):
        if g.closed[v] & und:
            out |= 1 << v
    return out


def apply_move(st: GameState, g: Graph, v: int, predominated: VertexSet = 0) -> GameState:
    if not 0 <= v < g.n:
        raise IllegalMove(f"vertex {v} is not in the graph")
    if st.frontier and not st.frontier >> v & 1:
        raise IllegalMove(f"vertex {v} is not adjacent to a played vertex")
    if not g.closed[v] & ~(st.frontier | predominated):
        raise IllegalMove(f"vertex {v} dominates no new vertex")
    return GameState(st.frontier | g.closed[v], st.turn.other)


def solve(ctx: SolveContext, st: GameState) -> GameValue:
    return ctx.solve(st)


def _require_connected(g: Graph) -> None:
    if not is_connected(g, g.all_vertices):
        raise GameError("the connected domination game needs a connected graph")


def game_connected_domination(
    g: Graph,
    predominated: VertexSet = 0,
    first: Turn = Turn.DOMINATOR,
    **ctx_options,
) -> GameValue:
    """Value of the game on ``G|predominated`` from the empty position."""
    _require_connected(g)
    ctx = SolveContext(g, predominated, **ctx_options)
    return ctx.solve(GameState(0, first))


def continuation_value(
    g: Graph,
    predominated: VertexSet,
    d: VertexSet,
    next_turn: Turn,
    **ctx_options,
) -> GameValue:
    """Further moves needed once a legal subset of the connected set ``d`` has been played."""
    if not d:
        raise GameError("continuation needs a nonempty played set")
    if not is_connected(g, d):
        raise GameError("continuation needs a connected played set")
    ctx = SolveContext(g, predominated, **ctx_options)
    return ctx.solve(GameState(closed_neighborhood_set(g, d), next_turn))


def legal_ordering(g: Graph, s: VertexSet, v: int) -> list[int]:
    """Greedy legal opening sequence inside ``s`` starting at ``v`` with ``N[seq] = N[s]``."""
    if not s >> v & 1:
        raise GameError(f"start vertex {v} is not in the set")
    if not is_connected(g, s):
        raise GameError("set does not induce a connected subgraph")
    closed = g.closed
    seq = [v]
    frontier = closed[v]
    remaining = s & ~(1 << v)
    while True:
        for u in bits(remaining & frontier):
            if closed[u] & ~frontier:
                seq.append(u)
                frontier |= closed[u]
                remaining &= ~(1 << u)
                break
        else:
            return seq
