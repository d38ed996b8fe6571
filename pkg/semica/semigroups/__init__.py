"""
Concrete semigroup families and the operations shared by all of them
"""
from __future__ import annotations

from .protocols import Family, Semigroup
from .lattice import NaturalNumbers, NaturalLattice, IntegerLattice
from .free_monoid import FreeMonoid
from .bicyclic import BicyclicMonoid
from .finite import FiniteSemigroup, load_table, parse_table
from .operations import (
    CancellabilityVerdict,
    ball,
    box_window,
    cancellability_audit,
    folner_window,
    left_divide,
    multiply,
    right_divide,
)
from semica.errors import InvalidInputError


def make_semigroup(family: str, param: int | None = None) -> Semigroup:
    """Build a descriptor from a family tag and its integer parameter"""
    try:
        tag = Family(family)
    except ValueError:
        raise InvalidInputError(f"unknown semigroup family {family!r}", field="family")

    def _need_param() -> int:
        if param is None:
            raise InvalidInputError(f"family {tag} needs a parameter", field="family")
        return param

    match tag:
        case Family.NAT:
            return NaturalNumbers()
        case Family.NAT_D:
            return NaturalLattice(_need_param())
        case Family.INT_D:
            return IntegerLattice(_need_param())
        case Family.FREE_MONOID:
            return FreeMonoid(_need_param())
        case Family.BICYCLIC:
            return BicyclicMonoid()
        case _:
            raise InvalidInputError("finite semigroups are built from a table", field="family")
