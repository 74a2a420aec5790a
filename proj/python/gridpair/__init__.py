"""Edge-disjoint routing on complete grid graphs K_t^n."""

import json as _json

from ._core import (
    DemandGraph,
    GridpairError,
    GridSpec,
    Routing,
    VerificationReport,
    __version__,
    choose_q,
    degree_ratio,
    generate_multigraph,
    generate_pairing,
    make_demand_graph,
    read_instance,
    read_routing,
    report_json,
    solve,
    solve_complete,
    two_factorization,
    verify,
)


def report(demands, routing):
    """Verification report as a plain dict."""
    return _json.loads(report_json(demands, routing))


__all__ = [
    "DemandGraph",
    "GridpairError",
    "GridSpec",
    "Routing",
    "VerificationReport",
    "__version__",
    "choose_q",
    "degree_ratio",
    "generate_multigraph",
    "generate_pairing",
    "make_demand_graph",
    "read_instance",
    "read_routing",
    "report",
    "report_json",
    "solve",
    "solve_complete",
    "two_factorization",
    "verify",
]
