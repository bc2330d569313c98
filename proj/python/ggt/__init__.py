"""Exact algebra for Thompson-like groups, dyadic circle maps, and finite
hyperbolic-graph kernels, with verification suites runnable from Python."""

from ._core import (
    Arity,
    CircleMap,
    ClopenSet,
    FiniteGraph,
    VElement,
    cone_off_dot,
    cone_off_edges,
    decompose_bounded,
    delta_four_point,
    extremely_proximal_witness,
    list_suites,
    ordered_witness,
    quasiline_word_lengths,
    run_suite,
    transitivity_witness,
    tuple_admissible,
)

__all__ = [
    "Arity",
    "CircleMap",
    "ClopenSet",
    "FiniteGraph",
    "VElement",
    "cone_off_dot",
    "cone_off_edges",
    "decompose_bounded",
    "delta_four_point",
    "extremely_proximal_witness",
    "list_suites",
    "ordered_witness",
    "quasiline_word_lengths",
    "run_suite",
    "transitivity_witness",
    "tuple_admissible",
]
