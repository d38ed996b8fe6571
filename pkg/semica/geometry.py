"""
K-interiors, K-adherences, K-boundaries and relative amenability constants
of finite windows, plus numerical Følner verification.

    int_K(Ω) = {s ∈ Ω : Ks ⊂ Ω}
    adh_K(Ω) = {s ∈ S : Ks ∩ Ω != ∅}
    ∂_K(Ω)   = Ω \\ int_K(Ω)
    ∂*_K(Ω)  = adh_K(Ω) \\ int_K(Ω)
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable

from semica.datastructure import Element, Window
from semica.errors import BudgetExceededError, InvalidInputError
from semica.semigroups import Semigroup, folner_window
from semica.semigroups.operations import DEFAULT_BALL_BUDGET


def _print(*args):
    print("[Geometry]", *args, file=sys.stderr)


def _check_nonempty(omega: Window, K: Window):
    if not len(omega) or not len(K):
        raise InvalidInputError("Ω and K must be non-empty")


def translate(desc: Semigroup, k: Element, omega: Iterable[Element]) -> set[Element]:
    "kΩ"
    return {desc.multiply(k, s) for s in omega}


def interior(desc: Semigroup, omega: Window, K: Iterable[Element]) -> Window:
    K = tuple(K)
    return Window(tuple(s for s in omega if all(desc.multiply(k, s) in omega for k in K)))


def adherence(
    desc: Semigroup, omega: Window, K: Iterable[Element], budget: int = DEFAULT_BALL_BUDGET
) -> Window:
    "Union over k ∈ K and ω ∈ Ω of the solutions of k·s = ω"
    found: set[Element] = set()
    for k in K:
        for w in omega:
            found.update(desc.left_divide(k, w))
        if len(found) > budget:
            raise BudgetExceededError(len(found), budget)
    return desc.window(found)


@dataclass(frozen=True)
class BoundaryFormulaCheck:
    """
    Cross-check of the definitional boundaries against the union formulas
    that hold when every k ∈ K is left-cancellable.
    """

    formula_boundary: Window
    """∪_k L_k⁻¹(kΩ \\ Ω)"""
    outer_part: Window
    """∪_k L_k⁻¹(Ω \\ kΩ)"""
    translation_excess: int
    """Σ_k |kΩ \\ Ω|"""
    formula_agrees: bool
    boundary_within_bound: bool
    star_within_bound: bool
    star_inclusion_holds: bool
    parts_disjoint: bool

    @property
    def ok(self) -> bool:
        return (
            self.formula_agrees
            and self.boundary_within_bound
            and self.star_within_bound
            and self.star_inclusion_holds
            and self.parts_disjoint
        )


@dataclass(frozen=True)
class RegionReport:
    interior: Window
    adherence: Window
    boundary: Window
    boundary_star: Window
    alpha: Fraction
    alpha_star: Fraction
    formula_check: BoundaryFormulaCheck | None = None
    note: str = ""


def boundary_formula_check(
    desc: Semigroup, omega: Window, K: Window, report: RegionReport
) -> BoundaryFormulaCheck:
    formula: set[Element] = set()
    outer: set[Element] = set()
    excess = 0
    for k in K:
        k_omega = translate(desc, k, omega)
        escaped = k_omega - omega.members
        excess += len(escaped)
        for w in escaped:
            formula.update(desc.left_divide(k, w))
        for w in omega.members - k_omega:
            outer.update(desc.left_divide(k, w))

    boundary = set(report.boundary)
    star = set(report.boundary_star)
    return BoundaryFormulaCheck(
        formula_boundary=desc.window(formula),
        outer_part=desc.window(outer),
        translation_excess=excess,
        formula_agrees=formula == boundary,
        boundary_within_bound=len(boundary) <= excess,
        star_within_bound=len(star) <= 2 * excess,
        star_inclusion_holds=star <= boundary | outer,
        parts_disjoint=not (boundary & outer),
    )


def region_calculus(
    desc: Semigroup,
    omega: Window,
    K: Window,
    budget: int = DEFAULT_BALL_BUDGET,
    cross_check: bool = True,
) -> RegionReport:
    """
    All four regions of Ω relative to K with exact constants α, α*.
    The union-formula cross-check runs only when every k is left-cancellable.
    """
    _check_nonempty(omega, K)
    inner = interior(desc, omega, K)
    adh = adherence(desc, omega, K, budget)
    boundary = Window(tuple(s for s in omega if s not in inner))
    star = Window(tuple(s for s in adh if s not in inner))
    report = RegionReport(
        interior=inner,
        adherence=adh,
        boundary=boundary,
        boundary_star=star,
        alpha=Fraction(len(boundary), len(omega)),
        alpha_star=Fraction(len(star), len(omega)),
    )
    if not cross_check:
        return report

    bad = [k for k in K if not desc.is_left_cancellable(k)]
    if bad:
        note = (
            f"formula cross-check skipped: {desc.format_element(bad[0])} is not left-cancellable"
        )
        _print(note)
        return replace(report, note=note)
    check = boundary_formula_check(desc, omega, K, report)
    return replace(report, formula_check=check)


def folner_ratio(desc: Semigroup, F: Window, K: Iterable[Element]) -> Fraction:
    "max over k of |kF \\ F| / |F|"
    return max(Fraction(len(translate(desc, k, F) - F.members), len(F)) for k in K)


@dataclass(frozen=True)
class FolnerStep:
    n: int
    size: int
    ratio: Fraction
    alpha: Fraction
    alpha_star: Fraction
    guarantee_holds: bool | None
    """α ≤ |K|·ratio and α* ≤ 2|K|·ratio; None when K is not left-cancellable"""


@dataclass(frozen=True)
class FolnerTrace:
    semigroup: Semigroup
    K: Window
    epsilon: Fraction
    steps: tuple[FolnerStep, ...]
    first_n: int | None
    """First n whose ratio is <= epsilon"""

    def first_n_alpha_below(self, bound: Fraction) -> int | None:
        for step in self.steps:
            if step.alpha <= bound and step.alpha_star <= bound:
                return step.n
        return None


def verify_folner_prefix(
    desc: Semigroup, K: Window, n_max: int, epsilon: Fraction | float | str
) -> FolnerTrace:
    """
    Follow the family Følner sequence up to n_max, reporting the translation
    ratio and both amenability constants for each window.
    """
    if not len(K):
        raise InvalidInputError("K must be non-empty")
    epsilon = Fraction(str(epsilon)) if isinstance(epsilon, float) else Fraction(epsilon)
    cancellable = all(desc.is_left_cancellable(k) for k in K)
    steps = []
    first_n = None
    for n in range(1, n_max + 1):
        F = folner_window(desc, n)
        ratio = folner_ratio(desc, F, K)
        regions = region_calculus(desc, F, K, cross_check=False)
        guarantee = None
        if cancellable:
            guarantee = (
                regions.alpha <= len(K) * ratio and regions.alpha_star <= 2 * len(K) * ratio
            )
        steps.append(FolnerStep(n, len(F), ratio, regions.alpha, regions.alpha_star, guarantee))
        if first_n is None and ratio <= epsilon:
            first_n = n
    return FolnerTrace(desc, K, epsilon, tuple(steps), first_n)
