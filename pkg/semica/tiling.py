"""
K-tilings on finite arenas.

A K-tiling T satisfies
    (T-1) Kt₁ ∩ Kt₂ = ∅ for distinct t₁, t₂ ∈ T
    (T-2) every s has some t ∈ T with Ks ∩ Kt != ∅
Here (T-2) is checked only for arena elements s with Ks inside adh_K(arena).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from semica.datastructure import Element, Window
from semica.geometry import adherence, region_calculus
from semica.errors import InvalidInputError
from semica.semigroups import Semigroup, folner_window


@dataclass(frozen=True)
class Tiling:
    semigroup: Semigroup
    K: Window
    arena: Window
    """The finite set in which maximality holds"""
    tiles: Window


@dataclass(frozen=True)
class TilingVerdict:
    ok: bool
    condition: str = ""
    """'T-1' or 'T-2' for the first violated condition"""
    witness: tuple[Element, ...] = ()
    """(t₁, t₂) with overlapping tiles, or (s,) with Ks missing every tile"""


def greedy_tiling(desc: Semigroup, K: Window, arena: Window) -> Tiling:
    """
    Scan the arena in canonical order, keeping t whenever Kt is disjoint from
    every tile kept so far. The result is maximal in the arena.
    """
    if not len(K):
        raise InvalidInputError("K must be non-empty")
    covered: set[Element] = set()
    tiles = []
    for t in arena:
        Kt = {desc.multiply(k, t) for k in K}
        if covered.isdisjoint(Kt):
            covered |= Kt
            tiles.append(t)
    return Tiling(desc, K, arena, Window(tuple(tiles)))


def verify_tiling(tiling: Tiling) -> TilingVerdict:
    desc, K = tiling.semigroup, tiling.K
    owner: dict[Element, Element] = {}
    for t in tiling.tiles:
        for k in K:
            x = desc.multiply(k, t)
            if owner.setdefault(x, t) != t:
                return TilingVerdict(False, "T-1", (owner[x], t))
    adh = adherence(desc, tiling.arena, K).members
    for s in tiling.arena:
        Ks = [desc.multiply(k, s) for k in K]
        if not all(x in adh for x in Ks):
            continue
        if not any(x in owner for x in Ks):
            return TilingVerdict(False, "T-2", (s,))
    return TilingVerdict(True)


@dataclass(frozen=True)
class DensityReport:
    window_size: int
    tiles_inside: int
    """|T_F|, T_F = {t ∈ T : Kt ⊂ F}"""
    delta: Fraction
    """1 / (4|K|²)"""
    bound: Fraction
    """δ·|F|"""
    passed: bool
    tiles_touching: int
    """|T*_F|, T*_F = T ∩ adh_K(F)"""
    touching_bound_holds: bool | None
    """|T*_F| / |F| >= (1 - α(F, K)) / |K|²; None unless K is left-cancellable"""
    excess_bound_holds: bool
    """|T*_F \\ T_F| <= |∂*_K(F)|"""


def tiling_density(desc: Semigroup, K: Window, T: Window, F: Window) -> DensityReport:
    inside = [t for t in T if all(desc.multiply(k, t) in F for k in K)]
    regions = region_calculus(desc, F, K, cross_check=False)
    touching = [t for t in T if t in regions.adherence]

    delta = Fraction(1, 4 * len(K) ** 2)
    bound = delta * len(F)
    touching_ok = None
    if all(desc.is_left_cancellable(k) for k in K):
        touching_ok = Fraction(len(touching), len(F)) >= (1 - regions.alpha) / len(K) ** 2
    return DensityReport(
        window_size=len(F),
        tiles_inside=len(inside),
        delta=delta,
        bound=bound,
        passed=len(inside) >= bound,
        tiles_touching=len(touching),
        touching_bound_holds=touching_ok,
        excess_bound_holds=len(touching) - len(inside) <= len(regions.boundary_star),
    )


@dataclass(frozen=True)
class DensityTrace:
    reports: tuple[DensityReport, ...]
    threshold: int | None
    """Smallest n from which every computed window passes"""


def density_trace(
    tiling: Tiling, n_max: int, windows: Callable[[Semigroup, int], Window] = folner_window
) -> DensityTrace:
    desc = tiling.semigroup
    reports = tuple(
        tiling_density(desc, tiling.K, tiling.tiles, windows(desc, n)) for n in range(1, n_max + 1)
    )
    threshold = None
    for n in range(n_max, 0, -1):
        if not reports[n - 1].passed:
            break
        threshold = n
    return DensityTrace(reports, threshold)
