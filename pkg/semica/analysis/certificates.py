from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from semica.automaton import CellularAutomaton
from semica.datastructure import Pattern, Window
from semica.semigroups import Semigroup


class CertificateKind(str, Enum):
    GOE_PATTERN = "goe_pattern"
    MUTUALLY_ERASABLE_PAIR = "mutually_erasable_pair"
    SURJECTIVE_UP_TO = "surjective_up_to"
    PRE_INJECTIVE_UP_TO = "pre_injective_up_to"
    ENTROPY_TRACE = "entropy_trace"
    AUDIT_VERDICT = "audit_verdict"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class GardenOfEden:
    """A pattern on Ω with no preimage: τ(x)|Ω != pattern for every x"""

    pattern: Pattern
    dependence: Window
    """MΩ, the only cells the image on Ω reads"""
    image_count: int


@dataclass(frozen=True)
class ImageEvidence:
    """
    Bounded-window evidence: every pattern on `window` is an image
    (surjective_up_to) or every support on `window` has its own image
    (pre_injective_up_to).
    """

    window: Window
    count: int
    full_size: int
    background: int | None = None
    target: Window | None = None
    """adh_M(Ω) for pre_injective_up_to"""


@dataclass(frozen=True)
class ErasablePair:
    """
    Two configurations equal to `background` off the support window, different
    on it, with identical images. Outside `target` = adh_M(Ω) the images agree
    automatically.
    """

    first: Pattern
    second: Pattern
    background: int
    target: Window
    image: Pattern
    """The shared image restricted to `target`"""
    distinct_images: int


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    semigroup: Semigroup
    automaton: CellularAutomaton | None
    payload: Any
    """GardenOfEden, ErasablePair, ImageEvidence, EntropyTrace or AuditVerdict"""
