"""General Kneser hypergraphs, alternating Turan numbers and exact chromatic numbers."""

import json as _json

from ._core import (
    CapExceeded,
    Hypergraph,
    alt,
    alt_sigma,
    altermatic_certificate,
    are_isomorphic,
    chromatic_number,
    complete,
    complete_bipartite,
    complete_uniform,
    covering_number,
    cycle,
    ex,
    ex_alt,
    ex_alt_sigma,
    independence_number,
    kneser,
    matching,
    multigraph,
    occurrences,
    path,
    pattern_hypergraph,
    run_cli,
    salt_sigma,
    star,
)
from ._core import golden_report as _golden_report


def golden(groups=()):
    """Golden suite report as a dict."""
    return _json.loads(_golden_report(list(groups)))


def kneser_chi(host, family, r=2):
    """chi(KG^r(host, family))."""
    return chromatic_number(kneser(pattern_hypergraph(host, family), r))["value"]


__all__ = [
    "CapExceeded",
    "Hypergraph",
    "alt",
    "alt_sigma",
    "altermatic_certificate",
    "are_isomorphic",
    "chromatic_number",
    "complete",
    "complete_bipartite",
    "complete_uniform",
    "covering_number",
    "cycle",
    "ex",
    "ex_alt",
    "ex_alt_sigma",
    "golden",
    "independence_number",
    "kneser",
    "kneser_chi",
    "matching",
    "multigraph",
    "occurrences",
    "path",
    "pattern_hypergraph",
    "run_cli",
    "salt_sigma",
    "star",
]
