"""
Built-in jobs: the shift on ℕ and on a free monoid (surjective, not
pre-injective), the p-shift on the bicyclic monoid (pre-injective, not
surjective), XOR and AND on ℤ, and the identity.
"""
from __future__ import annotations

import itertools

from semica.automaton import CellularAutomaton, shift_automaton
from semica.cli.spec_format import JobKind, JobSpec, WindowSequence
from semica.errors import InvalidInputError
from semica.semigroups import BicyclicMonoid, FreeMonoid, IntegerLattice, NaturalNumbers, ball
from semica.semigroups.bicyclic import P


def _z_rule(op) -> CellularAutomaton:
    "τ(x)(n) = op(x(n), x(n+1)) on ℤ"
    return CellularAutomaton.from_function(2, ((0,), (1,)), lambda v: op(v[0], v[1]))


def examples_catalog() -> list[JobSpec]:
    nat = NaturalNumbers()
    free = FreeMonoid(2)
    bicyclic = BicyclicMonoid()
    z = IntegerLattice(1)
    return [
        JobSpec(
            name="example-8.1",
            semigroup=nat,
            kind=JobKind.AUDIT,
            q=2,
            automaton=shift_automaton(1),
            index_range=(1, 12),
        ),
        JobSpec(
            name="example-8.1-free-monoid",
            semigroup=free,
            kind=JobKind.AUDIT,
            q=2,
            automaton=shift_automaton("a"),
            windows=tuple(ball(free, free.generators(), r) for r in range(4)),
        ),
        JobSpec(
            name="bicyclic",
            semigroup=bicyclic,
            kind=JobKind.AUDIT,
            q=2,
            automaton=shift_automaton(P),
            windows=(
                bicyclic.window([(0, 0)]),
                bicyclic.window([(0, 0), (1, 1)]),
                bicyclic.window(itertools.product(range(2), repeat=2)),
                bicyclic.window(itertools.product(range(2), range(4))),
            ),
        ),
        JobSpec(
            name="z-xor",
            semigroup=z,
            kind=JobKind.AUDIT,
            q=2,
            automaton=_z_rule(lambda a, b: a ^ b),
            index_range=(1, 6),
            sequence=WindowSequence.BOX,
        ),
        JobSpec(
            name="z-and",
            semigroup=z,
            kind=JobKind.ENTROPY,
            q=2,
            automaton=_z_rule(lambda a, b: a & b),
            n_max=12,
            sequence=WindowSequence.BOX,
        ),
        JobSpec(
            name="identity",
            semigroup=nat,
            kind=JobKind.AUDIT,
            q=2,
            automaton=shift_automaton(0),
            index_range=(1, 8),
        ),
    ]


def get_example(name: str) -> JobSpec:
    for spec in examples_catalog():
        if spec.name == name:
            return spec
    names = ", ".join(s.name for s in examples_catalog())
    raise InvalidInputError(f"unknown example {name!r}; choose one of {names}")
