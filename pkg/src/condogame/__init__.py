"""Exact values of the connected domination game, with and without predominated vertices."""

from .game import (
    INFINITE,
    BudgetExceeded,
    GameState,
    IllegalMove,
    SolveContext,
    Turn,
    apply_move,
    continuation_value,
    game_connected_domination,
    legal_moves,
    legal_ordering,
    solve,
)
from .domination import connected_domination_number
from .families import FamilySpec, make_family
from .graph import Graph, LabeledGraph
from .isolation import (
    IsolationConvention,
    sgame_infinite_by_characterization,
    tree_sgame_infinite,
    x_isolation_winner,
)

__all__ = [
    "INFINITE",
    "BudgetExceeded",
    "FamilySpec",
    "GameState",
    "Graph",
    "IllegalMove",
    "IsolationConvention",
    "LabeledGraph",
    "SolveContext",
    "Turn",
    "apply_move",
    "connected_domination_number",
    "continuation_value",
    "game_connected_domination",
    "legal_moves",
    "legal_ordering",
    "make_family",
    "sgame_infinite_by_characterization",
    "solve",
    "tree_sgame_infinite",
    "x_isolation_winner",
]
