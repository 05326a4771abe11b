"""The thirteen acceptance criteria, each with its own time limit.

Every test records a one-line verdict that the terminal summary prints.
"""

import time
from contextlib import contextmanager

import pytest

from condogame.game import INFINITE, MEMO_ENTRY_BYTES, BoundedMemo, GameState, SolveContext, Turn
from condogame.families import make_family
from condogame.strategies import fast_strategy, optimal_strategy, play_out, slow_strategy
from condogame.verify import run_suite

from conftest import ACCEPTANCE_LINES


@contextmanager
def criterion(number, title, limit):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        verdict = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES.append(f"[{verdict}] criterion {number:>2}: {title} ({elapsed:.2f}s)")


def value(spec, label=None, first=Turn.DOMINATOR, **opts):
    lg = make_family(spec)
    pre = lg.vset(label) if label else 0
    return SolveContext(lg.graph, pre, **opts).solve(GameState(0, first))


def timed_value(limit, *args, **kwargs):
    t0 = time.perf_counter()
    v = value(*args, **kwargs)
    assert time.perf_counter() - t0 < limit
    return v


def suite_clean(name):
    report = run_suite(name, jobs=None)
    assert not report.skipped, report.skipped
    assert report.passed, report.violations[:3]
    return report


def test_criterion_01_H_values():
    with criterion(1, "H_n: n in the D-game, 2n in the S-game, n = 2..5", 4 * 2 * 10):
        for n in range(2, 6):
            assert timed_value(10, f"H:{n}") == n
            assert timed_value(10, f"H:{n}", first=Turn.STALLER) == 2 * n


def test_criterion_02_upper_sharpness():
    with criterion(2, "H'_n = n and H'_n|u_1 = 2n-3, n = 3..5", 3 * 2 * 30):
        for n in range(3, 6):
            assert timed_value(30, f"Hprime:{n}") == n
            assert timed_value(30, f"Hprime:{n}", "u_1") == 2 * n - 3


@pytest.mark.slow
def test_criterion_03_computer_values():
    memo_cap = 2 * 1024**3 // MEMO_ENTRY_BYTES
    with criterion(3, "C_{1,3} = 14 and C_{1,3}|w = 16 under a 2 GB memo cap", 30 * 60):
        assert value("C2:1,3", memo=BoundedMemo(memo_cap)) == 14
        assert value("C2:1,3", "w", memo=BoundedMemo(memo_cap)) == 16


def test_criterion_04_two_connected_gap():
    with criterion(4, "C_{1,2}|w - C_{1,2} >= 0, C_{1,3}|w - C_{1,3} = 2", 60):
        assert value("C2:1,2", "w") - value("C2:1,2") >= 0
        gap = value("C2:1,3", "w") - value("C2:1,3")
        assert gap == 2 and gap >= 3 - 2


def test_criterion_05_drop_of_two():
    with criterion(5, "D_n|c_2 = D_n - 2, n = 3, 4", 2 * 2 * 300):
        for n in (3, 4):
            assert timed_value(300, f"D:{n}", "c_2") == timed_value(300, f"D:{n}") - 2


def test_criterion_06_lower_sharpness():
    with criterion(6, "G_{n,r} = 2n-1 and G_{n,r}|v_{n+1} = n", 4 * 2 * 300):
        for n, r in [(1, 1), (2, 2), (2, 3), (3, 3)]:
            assert timed_value(300, f"Gnr:{n},{r}") == 2 * n - 1
            assert timed_value(300, f"Gnr:{n},{r}", f"v_{n + 1}") == n


def test_criterion_07_infinite_sgame():
    with criterion(7, "P_4|v_2 with Staller first is Infinite", 1):
        assert value("path:4", "v2", first=Turn.STALLER) == INFINITE


def test_criterion_08_bound_suites():
    with criterion(8, "bound suites on all connected graphs <= 7 vertices, every x", 30 * 60):
        for name in ("sandwich", "staller-start", "upper-bound", "lower-bound", "dgame-finite"):
            report = suite_clean(name)
            assert report.instances_checked == 996


def test_criterion_09_continuation():
    with criterion(9, "continuation monotonicity, connected graphs <= 6 vertices", 30 * 60):
        report = suite_clean("continuation")
        assert report.instances_checked == 143


def test_criterion_10_pruning():
    with criterion(10, "pruned solver = unpruned solver, connected graphs <= 6 vertices", 30 * 60):
        suite_clean("pruning")


def test_criterion_11_characterization():
    with criterion(11, "Infinite detection agrees with the cut-vertex and tree tests", 30 * 60):
        suite_clean("isolation")
        assert suite_clean("trees").instances_checked == 201


def test_criterion_12_strategy_playouts():
    with criterion(12, "Fast on H_6 and Slow on H_3 against optimal opponents", 10):
        h6 = make_family("H:6")
        ctx = SolveContext(h6.graph)
        out = play_out(ctx, fast_strategy(h6), optimal_strategy(ctx))
        assert out.finished
        assert sorted(h6.name_of(v) for v in out.moves) == [f"u_{i}" for i in range(1, 7)]

        h3 = make_family("H:3")
        ctx = SolveContext(h3.graph)
        out = play_out(ctx, optimal_strategy(ctx), slow_strategy(h3), Turn.STALLER)
        assert out.finished and len(out.moves) == 6


def test_criterion_13_oracle_equivalence():
    with criterion(13, "memoized = unmemoized, optimal playout = value, graphs <= 6 vertices", 30 * 60):
        suite_clean("memo")
