"""Connected domination number by iterative deepening over connected sets."""

from __future__ import annotations

from .graph import Graph, VertexSet, bits, is_connected, lowest, popcount
from .game import GameError


def _extra_needed(g: Graph, d: VertexSet, allowed: VertexSet, und: VertexSet) -> int:
    """Lower bound on vertices still to add to ``d`` so that ``und`` gets dominated.

    Each undominated ``u`` needs some allowed ``w`` in ``N[u]`` joined to ``d``
    through allowed vertices; that costs at least ``dist(d, w)`` new vertices.
    Returns a huge number when some ``u`` cannot be reached at all.
    """
    adj = g.adj
    closed = g.closed
    seen = d
    layer = d
    dist = 0
    pending = und
    need = 0
    while pending:
        hit = 0
        for u in bits(pending):
            if closed[u] & layer:
                hit |= 1 << u
        if hit:
            need = dist
            pending &= ~hit
            if not pending:
                break
        nxt = 0
        for v in bits(layer):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        if not nxt:
            return g.n + 1
        seen |= nxt
        layer = nxt
        dist += 1
    return need


def connected_domination_number(g: Graph, predominated: VertexSet = 0) -> int:
    """Minimum ``|D|`` with ``G[D]`` connected and ``N[D]`` covering every non-predominated vertex."""
    if not is_connected(g, g.all_vertices):
        raise GameError("connected domination number needs a connected graph")
    full = g.all_vertices
    target = full & ~predominated
    if not target:
        return 0
    closed = g.closed
    adj = g.adj

    def search(d: VertexSet, size: int, dominated: VertexSet, ext: VertexSet, banned: VertexSet, k: int) -> bool:
        und = target & ~dominated
        if not und:
            return True
        if size == k:
            return False
        if size + _extra_needed(g, d, full & ~banned, und) > k:
            return False
        while ext:
            u = lowest(ext)
            ext &= ~(1 << u)
            new_ext = (ext | adj[u]) & ~banned & ~d & ~(1 << u)
            if search(d | 1 << u, size + 1, dominated | closed[u], new_ext, banned, k):
                return True
            banned |= 1 << u
        return False

    k = 1
    while True:
        banned = 0
        for v in range(g.n):
            if search(1 << v, 1, closed[v], adj[v] & ~banned, banned | 1 << v, k):
                return k
            banned |= 1 << v
        k += 1
