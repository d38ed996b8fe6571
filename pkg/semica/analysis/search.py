"""
Window-level searches for Garden-of-Eden patterns and mutually erasable pairs.

Both are exact: the image on Ω depends only on MΩ, so enumerating the
assignments of MΩ yields the projection of τ(A^S) on Ω; two configurations
that agree off Ω have images that agree off adh_M(Ω).
"""
from __future__ import annotations

import sys
from dataclasses import dataclass

from semica.analysis.certificates import (
    Certificate,
    CertificateKind,
    ErasablePair,
    GardenOfEden,
    ImageEvidence,
)
from semica.analysis.enumeration import ImageSet, first_collision, image_set, unpack
from semica.automaton import CellularAutomaton, apply_with_background, dependence_window
from semica.datastructure import AnalysisConfig, Pattern, Window
from semica.errors import InvalidInputError
from semica.geometry import adherence
from semica.semigroups import Semigroup


def _print(*args):
    print("[Search]", *args, file=sys.stderr)


@dataclass(frozen=True)
class WindowImage:
    window: Window
    dependence: Window
    count: int
    image: ImageSet | None = None


def window_image(
    desc: Semigroup,
    tau: CellularAutomaton,
    omega: Window,
    config: AnalysisConfig | None = None,
    keep_image: bool = False,
) -> WindowImage:
    """
    |π_Ω(τ(A^S))| by enumerating all q^{|MΩ|} assignments of MΩ.
    """
    config = config or AnalysisConfig()
    dep = dependence_window(desc, tau, omega)
    images = image_set(desc, tau, dep, omega, config)
    return WindowImage(omega, dep, len(images), images if keep_image else None)


def goe_or_evidence(desc: Semigroup, tau: CellularAutomaton, omega: Window, config: AnalysisConfig):
    "(GOE certificate, None) or (None, surjective-up-to evidence)"
    dep = dependence_window(desc, tau, omega)
    images = image_set(desc, tau, dep, omega, config)
    missing = images.smallest_missing()
    if missing is None:
        evidence = ImageEvidence(omega, len(images), images.full_size)
        return None, Certificate(CertificateKind.SURJECTIVE_UP_TO, desc, tau, evidence)
    goe = GardenOfEden(missing, dep, len(images))
    return Certificate(CertificateKind.GOE_PATTERN, desc, tau, goe), None


def find_goe_pattern(
    desc: Semigroup, tau: CellularAutomaton, omega: Window, config: AnalysisConfig | None = None
) -> Certificate | None:
    """
    The canonically smallest pattern on Ω outside the image, or None when
    every pattern on Ω is an image (surjective up to Ω).
    """
    cert, _ = goe_or_evidence(desc, tau, omega, config or AnalysisConfig())
    return cert


def erasable_or_evidence(
    desc: Semigroup,
    tau: CellularAutomaton,
    omega: Window,
    background: int,
    config: AnalysisConfig,
):
    if not 0 <= background < tau.q:
        raise InvalidInputError(f"background {background} outside alphabet 0..{tau.q - 1}")
    target = adherence(desc, omega, tau.memory, config.ball_budget)
    pair, distinct = first_collision(desc, tau, omega, target, config, background)
    if pair is None:
        evidence = ImageEvidence(omega, distinct, tau.q ** len(omega), background, target)
        return None, Certificate(CertificateKind.PRE_INJECTIVE_UP_TO, desc, tau, evidence)

    i, j = pair
    _print(f"images collide on {len(omega)} support cells: assignments {i} and {j}")
    first = Pattern(omega, unpack(i, tau.q, len(omega)))
    second = Pattern(omega, unpack(j, tau.q, len(omega)))
    image = apply_with_background(desc, tau, first, background, target)
    payload = ErasablePair(first, second, background, target, image, distinct)
    return Certificate(CertificateKind.MUTUALLY_ERASABLE_PAIR, desc, tau, payload), None


def find_mutually_erasable(
    desc: Semigroup,
    tau: CellularAutomaton,
    omega: Window,
    background: int = 0,
    config: AnalysisConfig | None = None,
) -> Certificate | None:
    """
    Enumerate the q^{|Ω|} configurations equal to `background` off Ω and
    return the first pair with equal images on adh_M(Ω). Returns a pair
    whenever fewer than q^{|Ω|} distinct images exist.
    """
    cert, _ = erasable_or_evidence(desc, tau, omega, background, config or AnalysisConfig())
    return cert
