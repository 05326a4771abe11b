"""Deterministic strategies and a playout engine.

A strategy is any callable ``(ctx, state, history) -> vertex`` that is only
invoked when at least one legal move exists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .game import INFINITE, GameState, GameValue, SolveContext, Turn, legal_moves
from .graph import LabeledGraph, bits

Strategy = Callable[[SolveContext, GameState, Sequence[int]], int]


class StrategyError(RuntimeError):
    """A strategy proposed a move that is not legal."""


@dataclass
class Playout:
    moves: list[int] = field(default_factory=list)
    finished: bool = True

    @property
    def outcome(self) -> GameValue:
        return len(self.moves) if self.finished else INFINITE


def play_out(
    ctx: SolveContext,
    dom: Strategy,
    sta: Strategy,
    first: Turn = Turn.DOMINATOR,
    start: GameState | None = None,
) -> Playout:
    """Run the game to its end: everything dominated, or no legal move left."""
    st = start or GameState(0, first)
    full = ctx.graph.all_vertices
    closed = ctx.graph.closed
    out = Playout()
    while (st.frontier | ctx.predominated) != full:
        legal = legal_moves(ctx, st)
        if not legal:
            out.finished = False
            break
        player = dom if st.turn is Turn.DOMINATOR else sta
        v = player(ctx, st, out.moves)
        if not legal >> v & 1:
            raise StrategyError(f"{st.turn.value} chose illegal vertex {v}")
        out.moves.append(v)
        st = GameState(st.frontier | closed[v], st.turn.other)
    return out


def _h_order(h: LabeledGraph) -> int:
    return sum(1 for name in h.labels if name.startswith("u_")) - 2


def fast_strategy(h: LabeledGraph) -> Strategy:
    """Dominator on H_n: open on ``u_n``; every later move is forced."""
    opening = h[f"u_{_h_order(h)}"]

    def play(ctx: SolveContext, st: GameState, history: Sequence[int]) -> int:
        if not st.frontier:
            return opening
        legal = legal_moves(ctx, st)
        if legal & (legal - 1):
            raise AssertionError(f"continuation not unique: {h.names(legal)}")
        return legal.bit_length() - 1

    return play


def slow_strategy(h: LabeledGraph) -> Strategy:
    """Staller on H_n: open on ``u_0``, then take an ``x_i`` whenever one is legal."""
    n = _h_order(h)
    gadgets = [h[f"x_{i}"] for i in range(1, n)]
    opening = h["u_0"]

    def play(ctx: SolveContext, st: GameState, history: Sequence[int]) -> int:
        if not st.frontier:
            return opening
        legal = legal_moves(ctx, st)
        for v in gadgets:
            if legal >> v & 1:
                return v
        return (legal & -legal).bit_length() - 1

    return play


def optimal_strategy(ctx: SolveContext) -> Strategy:
    """Lowest-index move that attains the solved value of the position."""

    def play(c: SolveContext, st: GameState, history: Sequence[int]) -> int:
        target = ctx.solve(st)
        closed = ctx.graph.closed
        dom = st.turn is Turn.DOMINATOR
        for v in bits(legal_moves(ctx, st)):
            if ctx.value(st.frontier | closed[v], not dom) + 1 == target:
                return v
        raise AssertionError("no move attains the solved value")

    return play


def random_strategy(seed: int) -> Strategy:
    rng = random.Random(seed)

    def play(ctx: SolveContext, st: GameState, history: Sequence[int]) -> int:
        return rng.choice(list(bits(legal_moves(ctx, st))))

    return play


def scripted(moves: Sequence[int], fallback: Strategy) -> Strategy:
    """Play ``moves`` in order on this player's turns, then defer to ``fallback``."""
    queue = list(moves)

    def play(ctx: SolveContext, st: GameState, history: Sequence[int]) -> int:
        if queue:
            return queue.pop(0)
        return fallback(ctx, st, history)

    return play


def lowest_legal(ctx: SolveContext, st: GameState, history: Sequence[int]) -> int:
    legal = legal_moves(ctx, st)
    return (legal & -legal).bit_length() - 1
