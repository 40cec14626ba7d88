"""Chromatic symmetric function expansions for natural unit interval orders.

The heavy lifting lives in the compiled extension ``csftab._core``; this
package re-exports its functions unchanged.
"""

from ._core import (
    bounce_number,
    coefficient,
    enumerate_functions,
    expand,
    expansion,
    graph_edges,
    oracle_crosscheck,
    tableau_count,
    tableaux,
    trace,
    verify,
    verify_range,
)

__all__ = [
    "bounce_number",
    "coefficient",
    "enumerate_functions",
    "expand",
    "expansion",
    "graph_edges",
    "oracle_crosscheck",
    "tableau_count",
    "tableaux",
    "trace",
    "verify",
    "verify_range",
]
