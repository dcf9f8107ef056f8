"""Minimum vertex-edge domination on convex bipartite graphs."""

from ._core import (
    CapacityError,
    ContractError,
    DomainError,
    GenerationError,
    Graph,
    InputError,
    SetSystem,
    approx_set_cover,
    brute_force_gamma_ve,
    brute_force_min_cover,
    build_graph,
    cross_check,
    decompose,
    find_convex_ordering,
    gen_convex,
    is_ve_dominating_set,
    lex_convex_ordering,
    parse_graph,
    reduce,
    solve_baseline,
    solve_exact,
    write_graph,
)

__all__ = [
    "CapacityError",
    "ContractError",
    "DomainError",
    "GenerationError",
    "Graph",
    "InputError",
    "SetSystem",
    "approx_set_cover",
    "brute_force_gamma_ve",
    "brute_force_min_cover",
    "build_graph",
    "cross_check",
    "decompose",
    "find_convex_ordering",
    "gen_convex",
    "is_ve_dominating_set",
    "lex_convex_ordering",
    "parse_graph",
    "reduce",
    "solve_baseline",
    "solve_exact",
    "write_graph",
]
