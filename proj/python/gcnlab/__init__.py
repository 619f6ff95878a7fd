"""Coloring-game simulation lab: Python front end to the C++ core."""

from ._core import (
    Graph,
    available_colors,
    bipartite_minus_matching,
    color_arranging,
    config_hash,
    constants,
    criterion_holds,
    estimate_chi_g,
    f_bound,
    gen_gnp,
    greedy_chromatic,
    mix,
    parse_graph,
    play_ballsbins,
    play_boxgame,
    play_game,
    play_game_jsonl,
    rate_functions,
    run,
    serialize_graph,
    solve_boxgame_exact,
    solve_exact,
    trace_monitors,
)

__all__ = [
    "Graph",
    "available_colors",
    "bipartite_minus_matching",
    "color_arranging",
    "config_hash",
    "constants",
    "criterion_holds",
    "estimate_chi_g",
    "f_bound",
    "gen_gnp",
    "greedy_chromatic",
    "mix",
    "parse_graph",
    "play_ballsbins",
    "play_boxgame",
    "play_game",
    "play_game_jsonl",
    "rate_functions",
    "run",
    "serialize_graph",
    "solve_boxgame_exact",
    "solve_exact",
    "trace_monitors",
]
