"""Tabulate game values on the built-in families.

    python scripts/family_values.py

For each family instance prints the connected domination number, the
D-game and S-game values, and the D-game value with the family's
distinguished vertex predominated.
"""

import time
from dataclasses import dataclass

from condogame.domination import connected_domination_number
from condogame.families import make_family
from condogame.game import GameState, SolveContext, Turn, format_value


@dataclass(frozen=True)
class Row:
    spec: str
    marked: str | None = None


ROWS = [
    *(Row(f"H:{n}") for n in range(2, 7)),
    *(Row(f"Hprime:{n}", "u_1") for n in range(3, 7)),
    Row("C2:1,1", "w"),
    Row("C2:1,2", "w"),
    Row("C2:1,3", "w"),
    Row("C2:2,3", "w"),
    *(Row(f"D:{n}", "c_2") for n in range(3, 6)),
    *(Row(f"Gnr:{n},{r}", f"v_{n + 1}") for n, r in [(1, 1), (2, 2), (2, 3), (3, 3)]),
    Row("path:4", "v2"),
]


def main() -> None:
    print("family\tn\tgamma_c\tD-game\tS-game\tmarked\tD-game|x\tS-game|x\tsecs")
    for row in ROWS:
        t0 = time.perf_counter()
        lg = make_family(row.spec)
        g = lg.graph
        pre = lg.vset(row.marked) if row.marked else 0
        vals = [SolveContext(g, p).solve(GameState(0, t)) for p in (0, pre) for t in Turn]
        cells = [format_value(v) for v in vals] if row.marked else [format_value(v) for v in vals[:2]] + ["-", "-"]
        print(
            f"{row.spec}\t{g.n}\t{connected_domination_number(g)}\t{cells[0]}\t{cells[1]}\t"
            f"{row.marked or '-'}\t{cells[2]}\t{cells[3]}\t{time.perf_counter() - t0:.2f}"
        )


if __name__ == "__main__":
    main()
