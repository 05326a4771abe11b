"""Constructors for the graph families used as test instances.

Every constructor returns a :class:`LabeledGraph`.  Vertex indices follow a
fixed order (chain or cycle vertices first, gadget vertices after) so that
outputs are reproducible, but nothing downstream depends on the order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, LabeledGraph, from_vertices

FAMILY_ARITY = {
    "H": (1, (2,)),
    "Hprime": (1, (3,)),
    "C2": (2, (1, 1)),
    "D": (1, (3,)),
    "Gnr": (2, (1, 1)),
    "path": (1, (1,)),
    "cycle": (1, (3,)),
    "complete": (1, (1,)),
    "star": (1, (2,)),
}


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.name not in FAMILY_ARITY:
            raise FamilyError(f"unknown family {self.name!r}")
        arity, mins = FAMILY_ARITY[self.name]
        if len(self.params) != arity:
            raise FamilyError(f"{self.name} takes {arity} parameter(s), got {len(self.params)}")
        for p, lo in zip(self.params, mins):
            if p < lo:
                raise FamilyError(f"{self.name} parameter {p} below minimum {lo}")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``NAME:p1,p2``."""
        name, _, rest = text.partition(":")
        try:
            params = tuple(int(p) for p in rest.split(",")) if rest else ()
        except ValueError:
            raise FamilyError(f"bad family parameters in {text!r}") from None
        return cls(name, params)

    def __str__(self) -> str:
        return f"{self.name}:{','.join(map(str, self.params))}"


class _Builder:
    def __init__(self) -> None:
        self.index: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []

    def vertex(self, name: str) -> int:
        if name not in self.index:
            self.index[name] = len(self.index)
        return self.index[name]

    def edge(self, a: str, b: str) -> None:
        self.edges.append((self.vertex(a), self.vertex(b)))

    def build(self, groups: dict[str, list[str]] | None = None) -> LabeledGraph:
        g = Graph.from_edges(len(self.index), self.edges)
        sets = {k: from_vertices(self.index[x] for x in names) for k, names in (groups or {}).items()}
        return LabeledGraph(g, dict(self.index), sets)


def _h_edges(n: int, u, x, y) -> list[tuple[str, str]]:
    """Edges of H_n with vertex names supplied by the callables ``u``, ``x``, ``y``."""
    out = [(u(i), u(i + 1)) for i in range(n + 1)]
    for i in range(1, n):
        out += [(u(i), x(i)), (x(i), y(i)), (y(i), u(i + 1)), (u(i + 1), x(i))]
    return out


def make_H(n: int) -> LabeledGraph:
    if n < 2:
        raise FamilyError("H_n needs n >= 2")
    b = _Builder()
    for i in range(n + 2):
        b.vertex(f"u_{i}")
    for i in range(1, n):
        b.vertex(f"x_{i}")
    for i in range(1, n):
        b.vertex(f"y_{i}")
    for e in _h_edges(n, lambda i: f"u_{i}", lambda i: f"x_{i}", lambda i: f"y_{i}"):
        b.edge(*e)
    return b.build()


def make_H_prime(n: int) -> LabeledGraph:
    """H_n with ``x_1`` and ``y_1`` deleted."""
    if n < 3:
        raise FamilyError("H'_n needs n >= 3")
    h = make_H(n)
    drop = h.vset("x_1", "y_1")
    sub, old = h.graph.induced(h.graph.all_vertices & ~drop)
    new_index = {v: i for i, v in enumerate(old)}
    labels = {name: new_index[v] for name, v in h.labels.items() if v in new_index}
    return LabeledGraph(sub, labels)


def make_C2(k: int, l: int) -> LabeledGraph:
    """Four H-chains glued into a long cycle ``C_0`` with gadgets hanging off it.

    Copies A, B of H_{k+1} and C, D of H_{l+1}; in copy A the vertices
    ``u_j, x_j, y_j`` are named ``a_{k+2-j}, a'_{k+2-j}, a''_{k+2-j}`` and the
    ends are glued: a_0 = b_0 = s, c_{l+2} = d_{l+2} = t, a_{k+2} = c_0 = w,
    b_{k+2} = d_0 = y.
    """
    if k < 1 or l < 1:
        raise FamilyError("C_{k,l} needs k, l >= 1")
    ends = {
        "a": {0: "s", k + 2: "w"},
        "b": {0: "s", k + 2: "y"},
        "c": {0: "w", l + 2: "t"},
        "d": {0: "y", l + 2: "t"},
    }
    size = {"a": k, "b": k, "c": l, "d": l}

    def names(p: str):
        m = size[p] + 2
        u = lambda j: ends[p].get(m - j, f"{p}_{m - j}")
        x = lambda j: f"{p}'_{m - j}"
        y = lambda j: f"{p}''_{m - j}"
        return u, x, y

    cycle = (
        ["s"]
        + [f"a_{i}" for i in range(1, k + 2)]
        + ["w"]
        + [f"c_{i}" for i in range(1, l + 2)]
        + ["t"]
        + [f"d_{i}" for i in range(l + 1, 0, -1)]
        + ["y"]
        + [f"b_{i}" for i in range(k + 1, 0, -1)]
    )
    b = _Builder()
    for name in cycle:
        b.vertex(name)
    for p in "abcd":
        m = size[p] + 2
        for i in range(2, m):
            b.vertex(f"{p}'_{i}")
            b.vertex(f"{p}''_{i}")
    for p in "abcd":
        for e in _h_edges(size[p] + 1, *names(p)):
            b.edge(*e)
    return b.build({"C_0": cycle})


def make_D(n: int) -> LabeledGraph:
    if n < 3:
        raise FamilyError("D_n needs n >= 3")
    cycle = ["a_0"] + [f"c_{i}" for i in range(1, n + 1)] + ["b_0"] + [f"c'_{i}" for i in range(n, 0, -1)]
    b = _Builder()
    for name in cycle:
        b.vertex(name)
    for i, name in enumerate(cycle):
        b.edge(name, cycle[(i + 1) % len(cycle)])
    for e in [("b_0", "b_1"), ("a_0", "a_1"), ("a_1", "a_2"), ("a_2", "a_3"),
              ("a_0", "a'_0"), ("a'_0", "a'_1"), ("a'_1", "a_1")]:
        b.edge(*e)
    return b.build({"C": [f"c_{i}" for i in range(1, n + 1)], "C'": [f"c'_{i}" for i in range(1, n + 1)]})


def make_Gnr(n: int, r: int) -> LabeledGraph:
    """Cycle ``z v_1 ... v_{n+1} z`` with ``r`` triangle-plus-pendant gadgets per chain edge.

    Gadget ``j`` on edge ``v_i v_{i+1}`` is ``x_j^i`` (adjacent to v_i,
    v_{i+1}, y_j^i) and ``y_j^i`` (adjacent to v_i, x_j^i).
    """
    if n < 1 or r < 1:
        raise FamilyError("G_{n,r} needs n, r >= 1")
    b = _Builder()
    b.vertex("z")
    for i in range(1, n + 2):
        b.vertex(f"v_{i}")
    for i in range(1, n + 1):
        for j in range(1, r + 1):
            b.vertex(f"x_{j}^{i}")
            b.vertex(f"y_{j}^{i}")
    b.edge("z", "v_1")
    b.edge("z", f"v_{n + 1}")
    for i in range(1, n + 1):
        b.edge(f"v_{i}", f"v_{i + 1}")
        for j in range(1, r + 1):
            x, y = f"x_{j}^{i}", f"y_{j}^{i}"
            b.edge(f"v_{i}", x)
            b.edge(f"v_{i}", y)
            b.edge(x, y)
            b.edge(x, f"v_{i + 1}")
    return b.build()


def make_standard(spec: FamilySpec) -> LabeledGraph:
    n = spec.params[0]
    names = [f"v{i}" for i in range(1, n + 1)]
    b = _Builder()
    if spec.name == "star":
        b.vertex("center")
        for name in names:
            b.edge("center", name)
        return b.build()
    for name in names:
        b.vertex(name)
    if spec.name == "path":
        for a, c in zip(names, names[1:]):
            b.edge(a, c)
    elif spec.name == "cycle":
        for i in range(n):
            b.edge(names[i], names[(i + 1) % n])
    elif spec.name == "complete":
        for i in range(n):
            for j in range(i + 1, n):
                b.edge(names[i], names[j])
    else:
        raise FamilyError(f"{spec.name} is not a standard family")
    return b.build()


def make_family(spec: FamilySpec | str) -> LabeledGraph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    p = spec.params
    if spec.name == "H":
        return make_H(*p)
    if spec.name == "Hprime":
        return make_H_prime(*p)
    if spec.name == "C2":
        return make_C2(*p)
    if spec.name == "D":
        return make_D(*p)
    if spec.name == "Gnr":
        return make_Gnr(*p)
    return make_standard(spec)
