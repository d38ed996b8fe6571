"""
Family-independent semigroup operations.

These validate their operands against the descriptor and return canonical
Windows, so callers never see family-specific containers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from semica.datastructure import Element, Window
from semica.errors import BudgetExceededError, InvalidInputError, NoFolnerSequenceError
from semica.semigroups.protocols import Family, Semigroup

DEFAULT_BALL_BUDGET = 10**6


def multiply(desc: Semigroup, s: object, t: object) -> Element:
    return desc.multiply(desc.validate(s), desc.validate(t))


def left_divide(desc: Semigroup, k: object, w: object) -> Window:
    "{s : k·s = w}"
    return desc.window(desc.left_divide(desc.validate(k), desc.validate(w)))


def right_divide(desc: Semigroup, t: object, w: object) -> Window:
    "{s : s·t = w}"
    return desc.window(desc.right_divide(desc.validate(t), desc.validate(w)))


def folner_window(desc: Semigroup, n: int) -> Window:
    """
    The n-th member of the family's canonical Følner sequence:
    {0..n-1} for ℕ, {0..n-1}ᵈ for ℕᵈ, [-n, n]ᵈ for ℤᵈ, {qᵃpᵇ : a, b < n}
    for the bicyclic monoid and the whole table for finite semigroups.
    """
    if n < 1:
        raise InvalidInputError(f"Følner index must be >= 1, got {n}")
    if not desc.has_folner:
        raise NoFolnerSequenceError(f"{desc.describe()} has no Følner sequence")
    return desc.window(desc.folner(n))


def box_window(desc: Semigroup, n: int) -> Window:
    "{0..n-1}ᵈ for the lattice families"
    box = getattr(desc, "box", None)
    if box is None:
        raise InvalidInputError(f"{desc.describe()} has no box windows")
    if n < 1:
        raise InvalidInputError(f"box size must be >= 1, got {n}")
    return desc.window(box(n))


def ball(
    desc: Semigroup, generators: Iterable[object], radius: int, budget: int = DEFAULT_BALL_BUDGET
) -> Window:
    """
    All products of at most `radius` generators (plus the identity for monoids).
    """
    gens = [desc.validate(g) for g in generators]
    if not gens:
        raise InvalidInputError("ball needs at least one generator")
    if radius < 0:
        raise InvalidInputError(f"radius must be >= 0, got {radius}")

    found: set[Element] = set()
    if desc.is_monoid:
        found.add(desc.identity)
    frontier = list(dict.fromkeys(gens)) if radius >= 1 else []
    found.update(frontier)
    for _ in range(1, radius):
        nxt = []
        for w in frontier:
            for g in gens:
                x = desc.multiply(w, g)
                if x not in found:
                    found.add(x)
                    nxt.append(x)
            if len(found) > budget:
                raise BudgetExceededError(len(found), budget)
        frontier = nxt
    if len(found) > budget:
        raise BudgetExceededError(len(found), budget)
    return desc.window(found)


@dataclass(frozen=True)
class CancellabilityVerdict:
    element: Element
    left_cancellable: bool
    right_cancellable: bool
    left_witness: tuple[Element, Element] | None = None
    """x != y with s·x = s·y"""
    right_witness: tuple[Element, Element] | None = None
    """x != y with x·s = y·s"""


def _scan_witness(desc: Semigroup, s: Element, test_ball: Window, left: bool):
    seen: dict[Element, Element] = {}
    for x in test_ball:
        v = desc.multiply(s, x) if left else desc.multiply(x, s)
        if v in seen:
            return (seen[v], x)
        seen[v] = x
    return None


def cancellability_audit(
    desc: Semigroup, s: object, radius: int, budget: int = DEFAULT_BALL_BUDGET
) -> CancellabilityVerdict:
    """
    Exact left/right cancellability of `s` with witness pairs on failure.

    Finite tables are scanned completely. Infinite families use the analytic
    verdict; the ball of `radius` over the default generators only supplies
    explicit witnesses, with the family's closed-form witness as fallback. The
    ball is bounded by `budget`, normally `AnalysisConfig.ball_budget`.
    """
    s = desc.validate(s)
    left_ok = desc.is_left_cancellable(s)
    right_ok = desc.is_right_cancellable(s)
    if desc.FAMILY == Family.FINITE:
        return CancellabilityVerdict(
            s,
            left_ok,
            right_ok,
            None if left_ok else desc.cancellation_witness(s, left=True),
            None if right_ok else desc.cancellation_witness(s, left=False),
        )

    if radius < 1:
        raise InvalidInputError(f"radius must be >= 1 for {desc.describe()}")
    test_ball = ball(desc, desc.generators(), radius, budget)
    witnesses = []
    for ok, left in ((left_ok, True), (right_ok, False)):
        if ok:
            witnesses.append(None)
            continue
        w = _scan_witness(desc, s, test_ball, left)
        witnesses.append(w if w is not None else desc.cancellation_witness(s, left))
    return CancellabilityVerdict(s, left_ok, right_ok, witnesses[0], witnesses[1])
