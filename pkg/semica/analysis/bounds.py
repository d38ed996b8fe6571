"""
Window-level counting inequalities, checked with exact image counts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from semica.analysis.certificates import Certificate, CertificateKind
from semica.analysis.enumeration import image_set
from semica.analysis.search import window_image
from semica.automaton import CellularAutomaton, dependence_window
from semica.datastructure import AnalysisConfig, Element, Pattern, Window
from semica.errors import InvalidInputError
from semica.geometry import interior, region_calculus
from semica.semigroups import Semigroup


@dataclass(frozen=True)
class WindowInequality:
    window: Window
    interior: Window
    image_count: int
    """|π_{int_M(F)}(τ(A^S))|"""
    full_count: int
    """|π_F(A^S)| = q^{|F|}"""

    @property
    def holds(self) -> bool:
        return self.image_count <= self.full_count


def window_inequality(
    desc: Semigroup, tau: CellularAutomaton, F: Window, config: AnalysisConfig | None = None
) -> WindowInequality:
    inner = interior(desc, F, tau.memory)
    count = window_image(desc, tau, inner, config).count
    return WindowInequality(F, inner, count, tau.q ** len(F))


@dataclass(frozen=True)
class AdherenceBound:
    window: Window
    adherence: Window
    adherence_count: int
    """|π_{adh_M(F)}(Y)|"""
    window_count: int
    """|π_F(Y)|"""
    boundary_star: int
    """|∂*_M(F)|"""
    lhs: float
    rhs: float
    holds: bool
    """|π_adh(Y)| <= |π_F(Y)|·q^{|∂*_M(F)|}, the exact form of lhs <= rhs"""


def adherence_bound(
    desc: Semigroup, tau: CellularAutomaton, F: Window, config: AnalysisConfig | None = None
) -> AdherenceBound:
    """
    log|π_{adh_M(F)}(Y)| / |F| <= log|π_F(Y)| / |F| + α*(F, M)·log q
    for Y = τ(A^S).
    """
    config = config or AnalysisConfig()
    M = desc.window(tau.memory)
    regions = region_calculus(desc, F, M, config.ball_budget, cross_check=False)
    adh_count = window_image(desc, tau, regions.adherence, config).count
    f_count = window_image(desc, tau, F, config).count
    star = len(regions.boundary_star)
    return AdherenceBound(
        window=F,
        adherence=regions.adherence,
        adherence_count=adh_count,
        window_count=f_count,
        boundary_star=star,
        lhs=math.log(adh_count) / len(F),
        rhs=math.log(f_count) / len(F) + float(regions.alpha_star) * math.log(tau.q),
        holds=adh_count <= f_count * tau.q**star,
    )


@dataclass(frozen=True)
class ShiftedMissing:
    s: Element
    pattern: Pattern
    """v on Ks with v(ks) = u(k)"""
    missing: bool


def translate_missing_pattern(
    desc: Semigroup,
    tau: CellularAutomaton,
    cert: Certificate,
    s: object,
    config: AnalysisConfig | None = None,
) -> ShiftedMissing:
    """
    Move a Garden-of-Eden pattern u on K to v on Ks, v(ks) = u(k), and check
    that v is missing from π_{Ks}(τ(A^S)) too. Needs s right-cancellable so
    that k ↦ ks is injective.
    """
    if cert.kind != CertificateKind.GOE_PATTERN:
        raise InvalidInputError(f"expected a {CertificateKind.GOE_PATTERN} certificate, got {cert.kind}")
    s = desc.validate(s)
    if not desc.is_right_cancellable(s):
        raise InvalidInputError(f"{desc.format_element(s)} is not right-cancellable")

    u: Pattern = cert.payload.pattern
    shifted = {desc.multiply(k, s): u[k] for k in u.window}
    Ks = desc.window(shifted)
    v = Pattern.from_mapping(Ks, shifted)
    config = config or AnalysisConfig()
    images = image_set(desc, tau, dependence_window(desc, tau, Ks), Ks, config)
    return ShiftedMissing(s, v, v not in images)
