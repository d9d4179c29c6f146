"""Inference over coherent sets of desirable (sets of) things.

Finite universes of "things" carry a closure operator and a forbidden
set; the package decides coherence, computes conservative closures,
represents disjunctive statements through events and lattice filters,
and instantiates the machinery for propositional logic and for
desirable gambles with credal-set choice.
"""

from .core import (
    Backend,
    CapacityError,
    ClosureSpec,
    InconsistencyError,
    InputError,
    RuleSet,
    Table,
    Universe,
    never_desirable_things,
    parse_universe,
)

__version__ = "0.1.0"

__all__ = [
    "Backend",
    "CapacityError",
    "ClosureSpec",
    "InconsistencyError",
    "InputError",
    "RuleSet",
    "Table",
    "Universe",
    "never_desirable_things",
    "parse_universe",
    "__version__",
]
