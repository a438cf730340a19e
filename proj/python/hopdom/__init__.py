"""Python bindings for the hopdom library.

Graphs use 0-based vertices; solution records and gadget domsets use the
library's 1-based JSON convention.
"""

import json as _json

from ._core import (
    DimacsError,
    Graph,
    GraphError,
    build_gadget,
    exact_distance_graph,
    is_bipartite,
    is_chordal,
    read_dimacs,
    write_dimacs,
)
from . import _core

__all__ = [
    "DimacsError",
    "Graph",
    "GraphError",
    "build_gadget",
    "exact_distance_graph",
    "forward_certificate",
    "is_bipartite",
    "is_chordal",
    "read_dimacs",
    "run_campaign",
    "solve",
    "verify",
    "write_dimacs",
]

__version__ = "0.1.0"


def solve(g, problem, r=0, method="exact", budget=None):
    """Solve `problem` on `g`; returns the solution record as a dict."""
    return _json.loads(_core._solve(g, problem, r, method, budget))


def verify(g, record):
    """Check a solution record (as returned by `solve`) against `g`."""
    return _core._verify(g, _json.dumps(record))


def forward_certificate(g1, r, family, domset, wiring="literal"):
    return _json.loads(_core._forward_certificate(g1, r, family, list(domset), wiring))


def run_campaign(config):
    """Run a verification campaign; `config` is a dict in the campaign schema."""
    return _json.loads(_core._run_campaign(_json.dumps(config)))
