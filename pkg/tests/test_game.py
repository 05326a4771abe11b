import math

import pytest
from hypothesis import given, settings

from condogame.families import make_family
from condogame.game import (
    INFINITE,
    MEMO_ENV,
    MEMO_ENTRY_BYTES,
    BoundedMemo,
    BudgetExceeded,
    GameError,
    GameState,
    IllegalMove,
    SolveContext,
    Turn,
    apply_move,
    continuation_value,
    default_memo,
    format_value,
    game_connected_domination,
    legal_moves,
    legal_ordering,
)
from condogame.graph import Graph, bits, closed_neighborhood_set, is_connected
from condogame.io import decode_graph6

from oracles import graphs, naive_game_value

D, S = Turn.DOMINATOR, Turn.STALLER


def fam(spec, *labels):
    lg = make_family(spec)
    return lg.graph, lg.vset(*labels) if labels else 0


def test_solve_examples():
    k5, _ = fam("complete:5")
    assert game_connected_domination(k5) == 1
    assert game_connected_domination(*fam("H:6")) == 6
    assert game_connected_domination(*fam("H:3"), first=S) == 6
    assert game_connected_domination(*fam("path:4", "v2"), first=S) == INFINITE


@pytest.mark.parametrize(
    "spec,label,expected",
    [
        ("Hprime:6", None, 6),
        ("Hprime:6", "u_1", 9),
        ("C2:1,3", None, 14),
        ("C2:1,3", "w", 16),
        ("Gnr:2,2", None, 3),
        ("Gnr:2,2", "v_3", 2),
    ],
)
def test_game_values(spec, label, expected):
    g, pre = fam(spec, label) if label else fam(spec)
    assert game_connected_domination(g, pre) == expected


def test_degenerate_inputs():
    k1 = Graph.from_edges(1, [])
    assert game_connected_domination(k1) == 1
    assert game_connected_domination(k1, 1) == 0
    p3, _ = fam("path:3")
    assert game_connected_domination(p3, p3.all_vertices, first=S) == 0
    with pytest.raises(GameError):
        game_connected_domination(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(GameError):
        SolveContext(p3, 1 << 5)


def test_legal_moves_examples():
    g, pre = fam("path:4", "v2")
    ctx = SolveContext(g, pre)
    st = apply_move(GameState(0, S), g, 3, pre)
    assert st.frontier == 0b1100
    assert legal_moves(ctx, st) == 0
    k4, _ = fam("complete:4")
    assert legal_moves(SolveContext(k4), GameState()) == 0b1111
    h = make_family("H:6")
    ctx = SolveContext(h.graph)
    st = apply_move(GameState(), h.graph, h["u_6"])
    assert h.names(legal_moves(ctx, st)) == ["u_5"]


def test_apply_move():
    g, _ = fam("path:4")
    for v in range(4):
        assert apply_move(GameState(), g, v).frontier == g.closed[v]
    st = apply_move(GameState(), g, 1)
    assert st.frontier == 0b0111 and st.turn is S
    assert apply_move(st, g, 2).frontier == 0b1111
    with pytest.raises(IllegalMove):
        apply_move(st, g, 3)  # not adjacent to anything played
    with pytest.raises(IllegalMove):
        apply_move(st, g, 0)  # dominates nothing new
    with pytest.raises(IllegalMove):
        apply_move(st, g, 9)
    p, pre = fam("path:4", "v2")
    with pytest.raises(IllegalMove):
        apply_move(apply_move(GameState(), p, 3, pre), p, 2, pre)


def test_continuation_examples():
    g, _ = fam("path:4")
    assert continuation_value(g, 0, 0b0010, D) == 1
    assert continuation_value(g, 0, 0b0110, D) == 0
    assert continuation_value(g, 0, 0b0110, S) == 0
    with pytest.raises(GameError):
        continuation_value(g, 0, 0, D)
    with pytest.raises(GameError):
        continuation_value(g, 0, 0b1001, D)


def test_continuation_on_connected_dominating_sets(connected6):
    for inst in list(connected6)[::7]:
        g = inst.graph.graph
        for d in range(1, 1 << g.n):
            if is_connected(g, d) and closed_neighborhood_set(g, d) == g.all_vertices:
                assert continuation_value(g, 0, d, D) == continuation_value(g, 0, d, S) == 0


def test_legal_ordering():
    g, _ = fam("path:4")
    assert legal_ordering(g, 0b0100, 2) == [2]
    assert legal_ordering(g, 0b0110, 1) == [1, 2]
    with pytest.raises(GameError):
        legal_ordering(g, 0b0110, 0)
    with pytest.raises(GameError):
        legal_ordering(g, 0b1001, 0)


def check_legal_ordering(g, s, v):
    seq = legal_ordering(g, s, v)
    assert seq[0] == v and len(set(seq)) == len(seq)
    assert all(s >> u & 1 for u in seq)
    st = GameState()
    for u in seq:
        st = apply_move(st, g, u)  # raises if any prefix step is illegal
    assert st.frontier == closed_neighborhood_set(g, s)
    prefix = 0
    for u in seq:
        prefix |= 1 << u
        assert is_connected(g, prefix)


def test_legal_ordering_p5():
    g, _ = fam("path:5")
    check_legal_ordering(g, 0b01110, 2)
    assert len(legal_ordering(g, 0b01110, 2)) <= 3


@given(graphs(min_n=2, max_n=7, connected=True))
def test_legal_ordering_property(g):
    for s in range(1, 1 << g.n, 5):
        if is_connected(g, s):
            for v in bits(s):
                check_legal_ordering(g, s, v)


def test_memo_matches_naive_solver(connected6):
    # the oracle tracks played vertices explicitly and never memoizes
    for inst in connected6:
        g = inst.graph.graph
        if g.n > 5:
            continue
        for pre in [0] + [1 << x for x in range(g.n)]:
            for first in (D, S):
                want = naive_game_value(g, list(bits(pre)), first is D)
                assert SolveContext(g, pre).solve(GameState(0, first)) == want, inst.id
                assert SolveContext(g, pre, use_memo=False).solve(GameState(0, first)) == want


@settings(max_examples=40)
@given(graphs(min_n=6, max_n=6, connected=True))
def test_memo_matches_naive_solver_sampled(g):
    for first in (D, S):
        assert game_connected_domination(g, 1, first) == naive_game_value(g, [0], first is D)
        assert game_connected_domination(g, 0, first, prune=True) == naive_game_value(g, [], first is D)


def test_dgame_is_finite_without_predomination(connected7):
    for inst in list(connected7)[::11]:
        assert game_connected_domination(inst.graph.graph) < INFINITE


def test_pruning_counterexample_under_predomination():
    # N[v1] is inside N[v3], yet after v3 the game is stuck and after v1 it is not
    g = decode_graph6("EB}?")
    pre = 1
    ctx = SolveContext(g, pre)
    st = GameState(0, S)
    after1 = ctx.solve(apply_move(st, g, 1, pre))
    after3 = ctx.solve(apply_move(st, g, 3, pre))
    assert g.closed[1] & ~g.closed[3] == 0
    assert after3 == INFINITE and after1 < INFINITE
    # pruning is therefore switched off whenever something is predominated
    assert not SolveContext(g, pre, prune=True).prune
    assert game_connected_domination(g, pre, S, prune=True) == game_connected_domination(g, pre, S) == INFINITE


def test_pruning_keeps_dead_end_on_p4():
    g, pre = fam("path:4", "v2")
    assert game_connected_domination(g, pre, S, prune=True) == INFINITE


def test_budget():
    g, pre = fam("C2:3,6", "w")
    ctx = SolveContext(g, pre, node_budget=100)
    with pytest.raises(BudgetExceeded) as exc:
        ctx.solve(GameState())
    assert exc.value.nodes == 101
    assert game_connected_domination(*fam("H:4"), node_budget=10_000) == 4


def test_bounded_memo_evicts_but_stays_exact():
    memo = BoundedMemo(3)
    for i in range(5):
        memo[i] = i
    assert list(memo) == [2, 3, 4]
    g, pre = fam("C2:1,3", "w")
    tiny = SolveContext(g, pre, memo=BoundedMemo(50))
    assert tiny.solve(GameState()) == 16
    assert len(tiny.memo) <= 50


def test_memo_env_cap(monkeypatch):
    monkeypatch.delenv(MEMO_ENV, raising=False)
    assert type(default_memo()) is dict
    monkeypatch.setenv(MEMO_ENV, str(200 * MEMO_ENTRY_BYTES))
    memo = default_memo()
    assert isinstance(memo, BoundedMemo) and memo.max_entries == 200
    assert game_connected_domination(*fam("C2:1,3")) == 14


def test_format_value():
    assert format_value(3) == 3
    assert format_value(INFINITE) == "infinity"
    assert INFINITE + 1 == INFINITE and math.isinf(INFINITE)
