"""Rainbow clique subdivisions in properly edge-colored graphs.

Build graphs with :func:`build` or the generators, search with
:func:`build_tkt` / :func:`find_rainbow_cycle`, and check any result with
:func:`verify_subdivision` / :func:`verify_cycle`.
"""

from .certificates import RainbowCycle, RainbowPath, SubdivisionCertificate
from .errors import RainbowError, SearchFailure
from .expansion import ForbiddenMap, ForbiddenSet, measure_expansion, restricted_neighborhood, sample_colors
from .generators import GenSpec, complete, hypercube, jung_union, random_colored
from .graph import ColoredGraph, GraphStats, build, induced_subgraph, stats
from .io import load, save
from .kernels import BACKEND
from .omega import LOG2, OmegaFunction, brute_force_maximal, check_min_degree, extract_maximal, omega_ratio
from .search import SearchParams, build_tkt, connect, find_rainbow_cycle, q_schedule, reach
from .verify import (
    Verdict,
    cross_check,
    rainbow_cycle_oracle,
    verify_cycle,
    verify_path,
    verify_subdivision,
)

__all__ = [
    "RainbowCycle",
    "RainbowPath",
    "SubdivisionCertificate",
    "RainbowError",
    "SearchFailure",
    "ForbiddenMap",
    "ForbiddenSet",
    "measure_expansion",
    "restricted_neighborhood",
    "sample_colors",
    "GenSpec",
    "complete",
    "hypercube",
    "jung_union",
    "random_colored",
    "ColoredGraph",
    "GraphStats",
    "build",
    "induced_subgraph",
    "stats",
    "load",
    "save",
    "BACKEND",
    "LOG2",
    "OmegaFunction",
    "brute_force_maximal",
    "check_min_degree",
    "extract_maximal",
    "omega_ratio",
    "SearchParams",
    "build_tkt",
    "connect",
    "find_rainbow_cycle",
    "q_schedule",
    "reach",
    "Verdict",
    "cross_check",
    "rainbow_cycle_oracle",
    "verify_cycle",
    "verify_path",
    "verify_subdivision",
]

__version__ = "0.1.0"
