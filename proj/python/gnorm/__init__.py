"""Exact graph normality decisions and star covering machinery."""

from _gnorm import (
    count_short_cycles,
    decide,
    from_graph6,
    girth,
    independence_number,
    maximal_cliques,
    sample_gnp,
    short_cycle_transversal,
    star_covering,
    to_graph6,
    verify,
)

__all__ = [
    "count_short_cycles",
    "decide",
    "from_graph6",
    "girth",
    "independence_number",
    "maximal_cliques",
    "sample_gnp",
    "short_cycle_transversal",
    "star_covering",
    "to_graph6",
    "verify",
]
