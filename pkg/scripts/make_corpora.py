"""Regenerate the vendored graph6 corpora.

    python scripts/make_corpora.py

Writes one graph per line into ``src/condogame/data``:

* ``connected_le7.g6``: every connected graph on 1..7 vertices up to
  isomorphism (from the networkx graph atlas, 996 graphs);
* ``trees_le10.g6``: every tree on 1..10 vertices up to isomorphism (201 trees).

networkx is only needed here, not by the package.
"""

from pathlib import Path

import networkx as nx

from condogame.graph import Graph
from condogame.io import encode_graph6

DATA = Path(__file__).resolve().parents[1] / "src" / "condogame" / "data"


def to_graph(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(index), [(index[a], index[b]) for a, b in h.edges])


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    connected = [
        h for h in nx.graph_atlas_g() if h.number_of_nodes() >= 1 and nx.is_connected(h)
    ]
    trees = [nx.empty_graph(1)]
    for n in range(2, 11):
        trees.extend(nx.nonisomorphic_trees(n))
    for name, graphs in [("connected_le7.g6", connected), ("trees_le10.g6", trees)]:
        lines = [encode_graph6(to_graph(h)) for h in graphs]
        (DATA / name).write_text("\n".join(lines) + "\n")
        print(f"{name}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
