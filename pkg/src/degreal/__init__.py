"""Degree-interval realization: verification, certificates and graphs."""

from .core import (
    DeviationBreakdown,
    IntervalSequence,
    NotGraphicError,
    NotRealizableError,
    SequenceError,
    add_characteristic,
    apply_levelling,
    deviation,
    l1_distance,
    sequence_stats,
    spread,
)
from .verify import epsilon_vector, is_graphic, is_realizable, xy_vectors
from .levelled import LevelledSequence, f_value, fill_level, levelled_sequence
from .certify import certificate, min_deviation_certificate
from .regular import most_regular_certificate
from .graph_build import Graph, realize_graph
from .extensions import min_chebyshev, min_graphic_extension, min_relative_epsilon

__all__ = [
    "DeviationBreakdown",
    "Graph",
    "IntervalSequence",
    "LevelledSequence",
    "NotGraphicError",
    "NotRealizableError",
    "SequenceError",
    "add_characteristic",
    "apply_levelling",
    "certificate",
    "deviation",
    "epsilon_vector",
    "f_value",
    "fill_level",
    "is_graphic",
    "is_realizable",
    "l1_distance",
    "levelled_sequence",
    "min_chebyshev",
    "min_deviation_certificate",
    "min_graphic_extension",
    "min_relative_epsilon",
    "most_regular_certificate",
    "realize_graph",
    "sequence_stats",
    "spread",
    "xy_vectors",
]
