"""Exact nondominated sets for problems with up to two ordinal objectives and one sum objective."""

from ._core import (
    Front,
    Instance,
    InvalidInstance,
    ParseError,
    count_Ue,
    dominates,
    enumerate_U,
    enumerate_U_w,
    fixtures,
    generate,
    greedy_candidates,
    oracle_solve,
    selftest,
    solve,
)

__all__ = [
    "Front",
    "Instance",
    "InvalidInstance",
    "ParseError",
    "count_Ue",
    "dominates",
    "enumerate_U",
    "enumerate_U_w",
    "fixtures",
    "generate",
    "greedy_candidates",
    "oracle_solve",
    "selftest",
    "solve",
]
