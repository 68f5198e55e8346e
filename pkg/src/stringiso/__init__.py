"""String isomorphism over permutation groups, with coset expressions and constant checks."""

from .calculus import Coset, Empty, is_isomorphism
from .chain import StabilizerChain, alternating_group, schreier_sims, symmetric_group
from .cost_model import ConstantReport, constants_suite
from .expr import atom_count, evaluate, parse, serialize
from .orbits import minimal_blocks, orbits
from .solver import BudgetExceeded, aut, iso

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ConstantReport",
    "Coset",
    "Empty",
    "StabilizerChain",
    "alternating_group",
    "atom_count",
    "aut",
    "constants_suite",
    "evaluate",
    "is_isomorphism",
    "iso",
    "minimal_blocks",
    "orbits",
    "parse",
    "schreier_sims",
    "serialize",
    "symmetric_group",
]
