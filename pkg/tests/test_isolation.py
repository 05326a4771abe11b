import pytest

from condogame.families import make_family
from condogame.game import INFINITE, Turn, game_connected_domination
from condogame.graph import GraphError
from condogame.isolation import (
    DEFAULT_CONVENTION,
    IsolationConvention,
    sgame_infinite_by_characterization,
    tree_sgame_infinite,
    x_isolation_line,
    x_isolation_winner,
)

D, S = Turn.DOMINATOR, Turn.STALLER


@pytest.mark.parametrize("n", range(3, 9))
def test_path_endpoint_staller_wins(n):
    p = make_family(f"path:{n}").graph
    assert x_isolation_winner(p, 0, S, S)
    line = x_isolation_line(p, 0, S, S)
    assert line and line[0] == 2


@pytest.mark.parametrize("first", [D, S])
@pytest.mark.parametrize("player", [D, S])
def test_triangle_nobody_wins(first, player):
    k3 = make_family("complete:3").graph
    for x in range(3):
        assert not x_isolation_winner(k3, x, first, player)


def test_star_center():
    star = make_family("star:3")
    assert not x_isolation_winner(star.graph, star["center"], S, S)


def test_characterization_examples():
    p4 = make_family("path:4")
    assert sgame_infinite_by_characterization(p4.graph, p4["v2"])
    assert not sgame_infinite_by_characterization(p4.graph, p4["v1"])
    for n in range(3, 8):
        c = make_family(f"cycle:{n}").graph
        assert not any(sgame_infinite_by_characterization(c, x) for x in range(n))


def test_leaf_never_infinite(connected7):
    for inst in connected7:
        g = inst.graph.graph
        for x in range(g.n):
            if g.degree(x) == 1:
                assert not sgame_infinite_by_characterization(g, x)


def test_tree_examples():
    p4 = make_family("path:4")
    assert tree_sgame_infinite(p4.graph, p4["v2"])
    assert not tree_sgame_infinite(p4.graph, p4["v1"])
    star = make_family("star:4")
    assert not tree_sgame_infinite(star.graph, star["center"])
    with pytest.raises(GraphError):
        tree_sgame_infinite(make_family("cycle:4").graph, 0)


def test_default_convention_agrees_and_plain_does_not(connected7):
    assert DEFAULT_CONVENTION is IsolationConvention.PREDOMINATED
    disagreements = {c: 0 for c in IsolationConvention}
    for inst in connected7:
        g = inst.graph.graph
        for x in range(g.n):
            direct = game_connected_domination(g, 1 << x, S) == INFINITE
            for c in IsolationConvention:
                disagreements[c] += sgame_infinite_by_characterization(g, x, c) != direct
    assert disagreements[IsolationConvention.PREDOMINATED] == 0
    assert disagreements[IsolationConvention.PLAIN] > 0
