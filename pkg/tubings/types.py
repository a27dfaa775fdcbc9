"""Type definitions shared across tubings.

Provides structured types for clarity and type safety.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple, Optional


class PairClass(str, Enum):
    """How two distinct tubes of a graph sit relative to each other."""
    NESTED = "nested"              # one contains the other
    FAR_APART = "far_apart"        # disjoint, no edge between them
    LINKED = "linked"              # disjoint, joined by an edge
    INTERSECTING = "intersecting"  # overlapping, neither contains the other

    def __str__(self) -> str:
        return self.value


class DTubOp(str, Enum):
    """Binary operations of the trialgebra of disconnected tubings."""
    VDASH = "vdash"
    DASHV = "dashv"
    TIMES = "times"

    def __str__(self) -> str:
        return self.value

    @property
    def symbol(self) -> str:
        return {"vdash": "⊢", "dashv": "⊣", "times": "×"}[self.value]


class SuiteName(str, Enum):
    """Verification suites runnable from the command line."""
    D2 = "d2"
    LEIBNIZ = "leibniz"
    PRELIE = "prelie"
    OPERAD = "operad"
    PERMUTAD = "permutad"
    CIRC = "circ"
    TOPOLOGY = "topology"
    SUBSTITUTION = "substitution"
    RESTRICTION = "restriction"
    GENERATORS = "generators"
    TRIAS = "trias"
    LALGEBRA = "lalgebra"
    OPCAT = "opcat"
    FVECTOR = "fvector"

    def __str__(self) -> str:
        return self.value


class CaseFailure(NamedTuple):
    """One failing case of a verification suite."""
    case: str                   # Short description of the case (graph, tubing, indices)
    detail: dict                # JSON-ready counterexample data


class AxiomResult(NamedTuple):
    """Outcome of one operadic-category axiom over all chains of a graph."""
    axiom: str
    cases: int
    counterexample: Optional[dict]  # None when the axiom held everywhere

    @property
    def passed(self) -> bool:
        return self.counterexample is None
