"""Packing, partitioning and covering a graph's edges with two structured objects."""

from .graph import MultiGraph
from .witness import Kind, Mode, Problem, Terminals, Verdict, Witness, catalogue, problem

__all__ = [
    "Kind",
    "Mode",
    "MultiGraph",
    "Problem",
    "Terminals",
    "Verdict",
    "Witness",
    "catalogue",
    "problem",
]
