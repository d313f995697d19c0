"""Numerical semigroup invariants, bound checkers, and exhaustive sweeps."""

from .apery import (
    AperySet,
    PseudoFrobeniusSet,
    SymmetryClass,
    apery_set,
    is_almost_symmetric,
    pseudo_frobenius,
    symmetry_class,
)
from .bounds import (
    BoundId,
    BoundReport,
    FullReport,
    Scope,
    WitnessKind,
    WitnessPartition,
    apery_partition_witness,
    check_bound,
    full_report,
    pf_partition_witness,
)
from .core import (
    GeneratorTuple,
    InvariantSummary,
    Semigroup,
    from_generators,
    invariants,
    membership,
    small_elements,
)
from .enumeration import (
    SlackExtremum,
    SweepSummary,
    TreeNode,
    Violation,
    brute_force_oracle,
    enumerate_tree,
    genus_cap,
    sweep,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "AperySet",
    "BoundId",
    "BoundReport",
    "FullReport",
    "GeneratorTuple",
    "InvariantSummary",
    "PseudoFrobeniusSet",
    "Scope",
    "Semigroup",
    "SlackExtremum",
    "SweepSummary",
    "SymmetryClass",
    "TreeNode",
    "Violation",
    "WitnessKind",
    "WitnessPartition",
    "apery_partition_witness",
    "apery_set",
    "brute_force_oracle",
    "check_bound",
    "enumerate_tree",
    "errors",
    "from_generators",
    "full_report",
    "genus_cap",
    "invariants",
    "is_almost_symmetric",
    "membership",
    "pf_partition_witness",
    "pseudo_frobenius",
    "small_elements",
    "sweep",
    "symmetry_class",
    "__version__",
]
