"""
Cellular automata over a semigroup S with finite alphabet {0, ..., q-1}.

For a configuration x and s ∈ S the image is
    τ(x)(s) = μ(m ↦ x(m·s))
where M = (m_1, ..., m_k) is the memory set in its declared order and μ is
the local rule. The left action of t on configurations is tx(s) = x(s·t).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from semica.datastructure import Element, Pattern, Window
from semica.errors import InsufficientWindowError, InvalidInputError
from semica.geometry import interior
from semica.semigroups import Semigroup


@dataclass(frozen=True)
class CellularAutomaton:
    q: int
    memory: tuple[Element, ...]
    """Declared order; fixes the digit order of the rule table"""
    rule: tuple[int, ...]
    """Dense table indexed by the base-q encoding of the memory tuple, first memory element most significant"""

    table: np.ndarray = field(init=False, repr=False, compare=False)
    weights: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.q < 1:
            raise InvalidInputError(f"alphabet size must be >= 1, got {self.q}")
        if not self.memory:
            raise InvalidInputError("memory set must be non-empty")
        if len(set(self.memory)) != len(self.memory):
            raise InvalidInputError("memory set has duplicate elements")
        m = len(self.memory)
        if len(self.rule) != self.q**m:
            raise InvalidInputError(
                f"rule table is not total: {len(self.rule)} entries, expected {self.q}^{m}"
            )
        table = np.asarray(self.rule, dtype=np.int64)
        if len(table) and (table.min() < 0 or table.max() >= self.q):
            raise InvalidInputError(f"rule outputs must be symbols in 0..{self.q - 1}")
        table.setflags(write=False)
        weights = self.q ** np.arange(m - 1, -1, -1, dtype=np.int64)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_function(
        cls, q: int, memory: Sequence[Element], mu: Callable[[tuple[int, ...]], int]
    ) -> CellularAutomaton:
        "Tabulate a local rule given as a function of the memory tuple"
        rule = tuple(int(mu(values)) for values in itertools.product(range(q), repeat=len(memory)))
        return cls(q, tuple(memory), rule)

    @classmethod
    def from_rule_lines(
        cls, q: int, memory: Sequence[Element], lines: Iterable[tuple[Sequence[int], int]]
    ) -> CellularAutomaton:
        """
        Build from explicit `a1 ... am -> b` entries; every one of the q^m
        tuples must appear exactly once.
        """
        m = len(memory)
        entries: dict[tuple[int, ...], int] = {}
        for values, out in lines:
            values = tuple(values)
            if len(values) != m or not all(0 <= v < q for v in values):
                raise InvalidInputError(f"rule input {values} is not a tuple of {m} symbols < {q}")
            if values in entries:
                raise InvalidInputError(f"rule input {values} appears twice")
            entries[values] = out
        missing = [v for v in itertools.product(range(q), repeat=m) if v not in entries]
        if missing:
            raise InvalidInputError(
                f"rule table is not total: {len(missing)} missing tuples, first {missing[0]}"
            )
        return cls(q, tuple(memory), tuple(entries[v] for v in itertools.product(range(q), repeat=m)))

    @property
    def m(self) -> int:
        return len(self.memory)

    def local_rule(self, values: Sequence[int]) -> int:
        return self.rule[int(np.dot(values, self.weights))]

    def rule_lines(self) -> list[tuple[tuple[int, ...], int]]:
        return list(zip(itertools.product(range(self.q), repeat=self.m), self.rule))

    def check_memory(self, desc: Semigroup) -> CellularAutomaton:
        for s in self.memory:
            desc.validate(s)
        return self


def shift_automaton(s0: Element, q: int = 2) -> CellularAutomaton:
    "τ(x)(s) = x(s0·s)"
    return CellularAutomaton.from_function(q, (s0,), lambda v: v[0])


def dependence_window(desc: Semigroup, tau: CellularAutomaton, omega: Iterable[Element]) -> Window:
    "MΩ: the cells the image on Ω reads"
    return desc.window(desc.multiply(m, s) for s in omega for m in tau.memory)


def apply_to_pattern(desc: Semigroup, tau: CellularAutomaton, p: Pattern) -> Pattern:
    """
    Image of a pattern on Ω, defined on int_M(Ω) where every read cell is known.
    """
    inner = interior(desc, p.window, tau.memory)
    values = tuple(
        tau.local_rule([p[desc.multiply(m, s)] for m in tau.memory]) for s in inner
    )
    return Pattern(inner, values)


def apply_with_background(
    desc: Semigroup, tau: CellularAutomaton, support: Pattern, a0: int, target: Window
) -> Pattern:
    """
    Evaluate τ on the configuration equal to `support` on its window and to
    a0 everywhere else, restricted to `target`.
    """
    known = support.as_dict()
    values = tuple(
        tau.local_rule([known.get(desc.multiply(m, s), a0) for m in tau.memory]) for s in target
    )
    return Pattern(target, values)


def shift_pattern(desc: Semigroup, t: Element, p: Pattern) -> Pattern:
    "t·p, defined on {s : s·t ∈ Ω} by (tp)(s) = p(s·t)"
    domain = desc.window(s for w in p.window for s in desc.right_divide(t, w))
    return Pattern(domain, tuple(p[desc.multiply(s, t)] for s in domain))


def equivariance_check(desc: Semigroup, tau: CellularAutomaton, t: object, p: Pattern) -> bool:
    """
    Compare τ(tx) with t·τ(x) on the cells where both are determined by p.
    """
    t = desc.validate(t)
    lhs = apply_to_pattern(desc, tau, shift_pattern(desc, t, p))
    rhs = shift_pattern(desc, t, apply_to_pattern(desc, tau, p))
    common = [s for s in lhs.window if s in rhs.window]
    if not common:
        raise InsufficientWindowError(
            f"no cell where both τ(tx) and tτ(x) are determined for t={desc.format_element(t)}"
        )
    return all(lhs[s] == rhs[s] for s in common)
