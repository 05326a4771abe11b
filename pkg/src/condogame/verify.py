"""Named claim suites run over graph corpora.

Each suite is a predicate applied to one corpus instance at a time; it
returns how many checks it made and a list of violation witnesses.  Witnesses
carry the graph in graph6 form plus every value involved so they can be
re-solved independently.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import os
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .domination import connected_domination_number
from .families import FamilySpec, make_family
from .game import (
    INFINITE,
    BudgetExceeded,
    GameState,
    SolveContext,
    Turn,
    format_value,
)
from .graph import Graph, LabeledGraph, bits, canonical_labels, closed_neighborhood_set, is_connected, is_tree
from .io import encode_graph6, read_graph6_lines
from .isolation import sgame_infinite_by_characterization, tree_sgame_infinite
from .strategies import optimal_strategy, play_out

CONNECTED_LE7 = "connected_le7.g6"
TREES_LE10 = "trees_le10.g6"


def data_path(name: str) -> Path:
    return Path(str(resources.files("condogame") / "data" / name))


@dataclass(frozen=True)
class Instance:
    id: str
    graph: LabeledGraph
    family: FamilySpec | None = None


@dataclass
class Corpus:
    source: str
    instances: list[Instance]

    def __iter__(self) -> Iterator[Instance]:
        return iter(self.instances)

    def __len__(self) -> int:
        return len(self.instances)

    @classmethod
    def from_graph6(
        cls,
        path: str | Path,
        min_order: int = 1,
        max_order: int | None = None,
        connected: bool = True,
        trees: bool = False,
    ) -> "Corpus":
        """Graphs from a graph6 file, one per line, kept only if they pass the filter."""
        path = Path(path)
        out = []
        for lineno, g in read_graph6_lines(path.read_text()):
            if g.n < min_order or (max_order is not None and g.n > max_order):
                continue
            if connected and not is_connected(g, g.all_vertices):
                continue
            if trees and not is_tree(g):
                continue
            out.append(Instance(f"{path.name}:{lineno}", LabeledGraph(g, canonical_labels(g.n))))
        return cls(str(path), out)

    @classmethod
    def from_families(cls, specs: Iterable[FamilySpec | str]) -> "Corpus":
        out = []
        for spec in specs:
            if isinstance(spec, str):
                spec = FamilySpec.parse(spec)
            out.append(Instance(str(spec), make_family(spec), spec))
        return cls("families", out)

    @classmethod
    def builtin(cls, name: str, max_order: int | None = None) -> "Corpus":
        trees = name == TREES_LE10
        return cls.from_graph6(data_path(name), max_order=max_order, trees=trees)


@dataclass
class SuiteReport:
    suite: str
    source: str
    instances_checked: int = 0
    checks: int = 0
    violations: list[dict] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> str:
        d = asdict(self)
        d["passed"] = self.passed
        return json.dumps(d, sort_keys=True, indent=2)


# helpers ---------------------------------------------------------------------


def _gcg(g: Graph, pre: int = 0, first: Turn = Turn.DOMINATOR, **opts):
    return SolveContext(g, pre, **opts).solve(GameState(0, first))


def _witness(inst: Instance, **values) -> dict:
    w = {"graph": encode_graph6(inst.graph.graph), "id": inst.id}
    for k, v in values.items():
        w[k] = format_value(v) if isinstance(v, (int, float)) and not isinstance(v, bool) else v
    return w


def _each_x(inst: Instance, budget: int | None, first: Turn = Turn.DOMINATOR):
    g = inst.graph.graph
    for x in range(g.n):
        yield x, inst.graph.name_of(x), _gcg(g, 1 << x, first, node_budget=budget)


def played_set_value(g: Graph, predominated: int, played: int, dominator_to_move: bool, memo: dict) -> float:
    """Game value keyed on the played set itself, legality checked from scratch.

    Independent of the frontier representation; used only to validate it.
    """
    key = (played, dominator_to_move)
    if key in memo:
        return memo[key]
    dominated = closed_neighborhood_set(g, played) | predominated
    if dominated == g.all_vertices:
        r = 0
    else:
        vals = []
        for v in range(g.n):
            if played >> v & 1:
                continue
            if played and not any(g.adj[v] >> u & 1 for u in bits(played)):
                continue
            if not g.closed[v] & ~dominated:
                continue
            vals.append(played_set_value(g, predominated, played | 1 << v, not dominator_to_move, memo))
        if not vals:
            r = INFINITE
        else:
            r = 1 + (min(vals) if dominator_to_move else max(vals))
    memo[key] = r
    return r


# suites ------------------------------------------------------------------------

Result = tuple[int, list[dict]]


def suite_sandwich(inst: Instance, budget=None) -> Result:
    g = inst.graph.graph
    gc = connected_domination_number(g)
    v = _gcg(g, node_budget=budget)
    if gc <= v <= 2 * gc - 1:
        return 1, []
    return 1, [_witness(inst, gamma_c=gc, gamma_cg=v)]


def suite_staller_start(inst: Instance, budget=None) -> Result:
    g = inst.graph.graph
    d = _gcg(g, node_budget=budget)
    s = _gcg(g, 0, Turn.STALLER, node_budget=budget)
    return 1, ([] if s <= 2 * d else [_witness(inst, gamma_cg=d, gamma_cg_staller=s)])


def suite_upper_bound(inst: Instance, budget=None) -> Result:
    g = inst.graph.graph
    v = _gcg(g, node_budget=budget)
    if v < 3:
        return 0, []
    bad = [
        _witness(inst, x=name, gamma_cg=v, gamma_cg_x=vx)
        for x, name, vx in _each_x(inst, budget)
        if not vx <= 2 * v - 3
    ]
    return g.n, bad


def suite_lower_bound(inst: Instance, budget=None) -> Result:
    g = inst.graph.graph
    if g.n < 2:
        return 0, []
    v = _gcg(g, node_budget=budget)
    bad = [
        _witness(inst, x=name, gamma_cg=v, gamma_cg_x=vx)
        for x, name, vx in _each_x(inst, budget)
        if not vx >= math.ceil(v / 2)
    ]
    return g.n, bad


def suite_dgame_finite(inst: Instance, budget=None) -> Result:
    bad = [_witness(inst, x=name, gamma_cg_x=vx) for x, name, vx in _each_x(inst, budget) if vx == INFINITE]
    return inst.graph.graph.n, bad


def connected_subsets(g: Graph) -> list[int]:
    return [s for s in range(1, 1 << g.n) if is_connected(g, s)]


def suite_continuation(inst: Instance, budget=None, exhaustive_max: int = 6, samples: int = 400, seed: int = 0) -> Result:
    """Enlarging a connected played set never lengthens the optimal continuation."""
    g = inst.graph.graph
    sets = connected_subsets(g)
    bad = []
    checks = 0
    for turn in Turn:
        ctx = SolveContext(g, node_budget=budget)
        val = {d: ctx.solve(GameState(closed_neighborhood_set(g, d), turn)) for d in sets}
        if g.n <= exhaustive_max:
            pairs = ((d, e) for d in sets for e in sets if d & e == d)
        else:
            rng = random.Random(f"{seed}:{inst.id}:{turn.value}")
            pairs = []
            for _ in range(samples):
                d = rng.choice(sets)
                supers = [e for e in sets if e & d == d]
                pairs.append((d, rng.choice(supers)))
        for d, e in pairs:
            checks += 1
            if val[e] > val[d]:
                bad.append(_witness(inst, turn=turn.value, D=inst.graph.names(d), DC=inst.graph.names(e),
                                    value_D=val[d], value_DC=val[e]))
    return checks, bad


def _predominated_choices(g: Graph) -> list[int]:
    return [0] + [1 << x for x in range(g.n)]


def suite_pruning(inst: Instance, budget=None) -> Result:
    g = inst.graph.graph
    bad, checks = [], 0
    for pre in _predominated_choices(g):
        for first in Turn:
            a = _gcg(g, pre, first, node_budget=budget)
            b = _gcg(g, pre, first, node_budget=budget, prune=True)
            checks += 1
            if a != b:
                bad.append(_witness(inst, predominated=inst.graph.names(pre), first=first.value, plain=a, pruned=b))
    return checks, bad


def suite_memo(inst: Instance, budget=None) -> Result:
    """Memoized = unmemoized, and an optimal-vs-optimal playout realises the value."""
    g = inst.graph.graph
    bad, checks = [], 0
    for pre in _predominated_choices(g):
        for first in Turn:
            ctx = SolveContext(g, pre, node_budget=budget)
            a = ctx.solve(GameState(0, first))
            b = _gcg(g, pre, first, use_memo=False)
            opt = optimal_strategy(ctx)
            length = play_out(ctx, opt, opt, first).outcome
            checks += 1
            if not a == b == length:
                bad.append(_witness(inst, predominated=inst.graph.names(pre), first=first.value,
                                    memo=a, plain=b, playout=length))
    return checks, bad


def suite_state_sufficiency(inst: Instance, budget=None, playouts: int = 20, seed: int = 0) -> Result:
    """Along random legal histories, the played-set value equals the frontier value."""
    g = inst.graph.graph
    rng = random.Random(f"{seed}:{inst.id}")
    bad, checks = [], 0
    for pre in _predominated_choices(g):
        ctx = SolveContext(g, pre, node_budget=budget)
        memo: dict = {}
        for _ in range(playouts):
            first = rng.choice(list(Turn))
            played, frontier, dom = 0, 0, first is Turn.DOMINATOR
            while True:
                checks += 1
                a = ctx.value(frontier, dom)
                b = played_set_value(g, pre, played, dom, memo)
                if a != b:
                    bad.append(_witness(inst, predominated=inst.graph.names(pre), played=inst.graph.names(played),
                                        frontier_value=a, played_value=b))
                und = g.all_vertices & ~(frontier | pre)
                moves = [v for v in bits(frontier if frontier else g.all_vertices) if g.closed[v] & und]
                if not moves:
                    break
                v = rng.choice(moves)
                played |= 1 << v
                frontier |= g.closed[v]
                dom = not dom
    return checks, bad


def suite_isolation(inst: Instance, budget=None) -> Result:
    g = inst.graph.graph
    bad = []
    for x, name, v in _each_x(inst, budget, Turn.STALLER):
        direct = v == INFINITE
        char = sgame_infinite_by_characterization(g, x)
        if direct != char:
            bad.append(_witness(inst, x=name, direct_infinite=direct, characterization=char))
    return g.n, bad


def suite_trees(inst: Instance, budget=None) -> Result:
    g = inst.graph.graph
    bad = []
    for x, name, v in _each_x(inst, budget, Turn.STALLER):
        direct = v == INFINITE
        closed_form = tree_sgame_infinite(g, x)
        char = sgame_infinite_by_characterization(g, x)
        if not direct == closed_form == char:
            bad.append(_witness(inst, x=name, direct_infinite=direct, tree_test=closed_form, characterization=char))
    return g.n, bad


def _family_values(inst: Instance, budget, label: str | None = None, first: Turn = Turn.DOMINATOR):
    lg = inst.graph
    pre = lg.vset(label) if label else 0
    return _gcg(lg.graph, pre, first, node_budget=budget)


def suite_H(inst: Instance, budget=None) -> Result:
    (n,) = inst.family.params
    d = _family_values(inst, budget)
    s = _family_values(inst, budget, first=Turn.STALLER)
    ok = d == n and s == 2 * n
    return 1, ([] if ok else [_witness(inst, gamma_cg=d, gamma_cg_staller=s, expected=[n, 2 * n])])


def suite_Hprime(inst: Instance, budget=None) -> Result:
    (n,) = inst.family.params
    d = _family_values(inst, budget)
    dx = _family_values(inst, budget, "u_1")
    ok = d == n and dx == 2 * n - 3
    return 1, ([] if ok else [_witness(inst, gamma_cg=d, gamma_cg_x=dx, expected=[n, 2 * n - 3])])


def suite_C2(inst: Instance, budget=None) -> Result:
    k, l = inst.family.params
    if l > k + 1:
        return 0, []
    d = _family_values(inst, budget)
    dw = _family_values(inst, budget, "w")
    return 1, ([] if dw - d >= l - 2 else [_witness(inst, gamma_cg=d, gamma_cg_x=dw, bound=l - 2)])


def suite_D(inst: Instance, budget=None) -> Result:
    d = _family_values(inst, budget)
    dc = _family_values(inst, budget, "c_2")
    return 1, ([] if dc == d - 2 else [_witness(inst, gamma_cg=d, gamma_cg_x=dc)])


def suite_Gnr(inst: Instance, budget=None) -> Result:
    n, r = inst.family.params
    if n > r:
        return 0, []
    d = _family_values(inst, budget)
    dv = _family_values(inst, budget, f"v_{n + 1}")
    ok = d == 2 * n - 1 and dv == n
    return 1, ([] if ok else [_witness(inst, gamma_cg=d, gamma_cg_x=dv, expected=[2 * n - 1, n])])


@dataclass(frozen=True)
class Suite:
    check: Callable[..., Result]
    corpus: Callable[[], Corpus]


def _builtin(name: str, max_order: int | None = None) -> Callable[[], Corpus]:
    return lambda: Corpus.builtin(name, max_order)


def _families(*specs: str) -> Callable[[], Corpus]:
    return lambda: Corpus.from_families(specs)


SUITES: dict[str, Suite] = {
    "sandwich": Suite(suite_sandwich, _builtin(CONNECTED_LE7)),
    "staller-start": Suite(suite_staller_start, _builtin(CONNECTED_LE7)),
    "upper-bound": Suite(suite_upper_bound, _builtin(CONNECTED_LE7)),
    "lower-bound": Suite(suite_lower_bound, _builtin(CONNECTED_LE7)),
    "dgame-finite": Suite(suite_dgame_finite, _builtin(CONNECTED_LE7)),
    "continuation": Suite(suite_continuation, _builtin(CONNECTED_LE7, 6)),
    "pruning": Suite(suite_pruning, _builtin(CONNECTED_LE7, 6)),
    "memo": Suite(suite_memo, _builtin(CONNECTED_LE7, 6)),
    "state-sufficiency": Suite(suite_state_sufficiency, _builtin(CONNECTED_LE7)),
    "isolation": Suite(suite_isolation, _builtin(CONNECTED_LE7)),
    "trees": Suite(suite_trees, _builtin(TREES_LE10)),
    "H": Suite(suite_H, _families("H:2", "H:3", "H:4", "H:5")),
    "Hprime": Suite(suite_Hprime, _families("Hprime:3", "Hprime:4", "Hprime:5")),
    "C2-gap": Suite(suite_C2, _families("C2:1,1", "C2:1,2", "C2:2,3", "C2:1,3")),
    "D-drop": Suite(suite_D, _families("D:3", "D:4", "D:5")),
    "Gnr": Suite(suite_Gnr, _families("Gnr:1,1", "Gnr:2,2", "Gnr:2,3", "Gnr:3,3")),
}


def _run_one(args) -> tuple[str, int, list[dict], bool]:
    name, inst, budget = args
    try:
        checks, bad = SUITES[name].check(inst, budget)
    except BudgetExceeded:
        return inst.id, 0, [], True
    return inst.id, checks, bad, False


def _pool_map(fn, items: list, jobs: int | None):
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with multiprocessing.get_context("fork").Pool(jobs) as pool:
        return pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs)))


def run_suite(name: str, corpus: Corpus | None = None, *, jobs: int | None = 1, node_budget: int | None = None) -> SuiteReport:
    """Evaluate suite ``name`` on every instance; budget overruns are reported as skipped."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if corpus is None:
        corpus = SUITES[name].corpus()
    if not len(corpus):
        raise ValueError("empty corpus")
    t0 = time.perf_counter()
    report = SuiteReport(name, corpus.source)
    results = _pool_map(_run_one, [(name, inst, node_budget) for inst in corpus], jobs)
    for inst_id, checks, bad, skipped in results:
        if skipped:
            report.skipped.append(inst_id)
            continue
        report.instances_checked += 1
        report.checks += checks
        report.violations.extend(bad)
    report.elapsed = time.perf_counter() - t0
    return report


# sharpness census ---------------------------------------------------------------


@dataclass
class Census:
    pairs: Counter = field(default_factory=Counter)
    examples: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=lambda: {k: [] for k in CENSUS_KINDS})
    skipped: list = field(default_factory=list)

    def to_tsv(self) -> str:
        lines = ["gamma_cg\tgamma_cg_x\tcount\tkinds\texample"]
        for (v, vx), count in sorted(self.pairs.items()):
            kinds = ",".join(census_kinds(v, vx)) or "-"
            lines.append(f"{format_value(v)}\t{format_value(vx)}\t{count}\t{kinds}\t{self.examples[(v, vx)]}")
        return "\n".join(lines) + "\n"


CENSUS_KINDS = ("upper-sharp", "lower-sharp", "drop-1", "drop-2")


def census_kinds(v, vx) -> list[str]:
    out = []
    if v >= 3 and vx == 2 * v - 3:
        out.append("upper-sharp")
    if vx == math.ceil(v / 2):
        out.append("lower-sharp")
    if vx == v - 1:
        out.append("drop-1")
    if vx == v - 2:
        out.append("drop-2")
    return out


def _census_one(args):
    inst, budget = args
    g = inst.graph.graph
    try:
        v = _gcg(g, node_budget=budget)
        return inst.id, [(v, vx, name) for _, name, vx in _each_x(inst, budget)]
    except BudgetExceeded:
        return inst.id, None


def sharpness_census(corpus: Corpus, *, jobs: int | None = 1, node_budget: int | None = None) -> Census:
    """Tabulate ``(value on G, value on G|x)`` pairs and collect extremal witnesses."""
    census = Census()
    for inst_id, rows in _pool_map(_census_one, [(inst, node_budget) for inst in corpus], jobs):
        if rows is None:
            census.skipped.append(inst_id)
            continue
        for v, vx, name in rows:
            census.pairs[(v, vx)] += 1
            census.examples.setdefault((v, vx), f"{inst_id}|{name}")
            for kind in census_kinds(v, vx):
                census.witnesses[kind].append((inst_id, name, v, vx))
    return census
