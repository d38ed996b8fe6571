"""
Myhill audit: run both certificate searches over a window schedule and
compare the outcome with what the Garden of Eden theorem allows.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from semica.analysis.certificates import Certificate, CertificateKind
from semica.analysis.search import erasable_or_evidence, goe_or_evidence
from semica.automaton import CellularAutomaton
from semica.datastructure import AnalysisConfig, Window
from semica.errors import BudgetExceededError, InvalidInputError
from semica.semigroups import Semigroup


def _print(*args):
    print("[Audit]", *args, file=sys.stderr)


class Status(str, Enum):
    CERTIFIED_NO = "certified-no"
    NO_GOE_UP_TO_WINDOW = "no-goe-up-to-window"
    NO_MEP_UP_TO_WINDOW = "no-mep-up-to-window"

    def __str__(self):
        return self.value


class Consistency(str, Enum):
    CONSISTENT = "consistent"
    MYHILL_TENSION = "myhill-tension"
    EXPECTED_NON_CANCELLATIVE = "expected-non-cancellative"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class AuditVerdict:
    surjectivity: Status
    pre_injectivity: Status
    goe: Certificate | None
    mep: Certificate | None
    surjective_evidence: tuple[Certificate, ...]
    """One surjective_up_to certificate per window checked before a GOE pattern turned up"""
    pre_injective_evidence: tuple[Certificate, ...]
    left_cancellative: bool
    right_cancellative: bool
    has_folner: bool
    left_reversible: bool | None
    """Only known for finite tables and free monoids"""
    consistency: Consistency
    partial: bool = False
    note: str = ""

    @property
    def cancellative(self) -> bool:
        return self.left_cancellative and self.right_cancellative

    def certificates(self) -> tuple[Certificate, ...]:
        found = tuple(c for c in (self.goe, self.mep) if c is not None)
        return found + self.surjective_evidence + self.pre_injective_evidence


def _left_reversible(desc: Semigroup) -> bool | None:
    reversible = getattr(desc, "is_left_reversible", None)
    if reversible is not None:
        return reversible()
    if desc.has_folner:
        return True
    return None


def consistency_of(desc: Semigroup, goe: Certificate | None, mep: Certificate | None) -> Consistency:
    if not desc.is_cancellative:
        return Consistency.EXPECTED_NON_CANCELLATIVE
    if desc.has_folner and goe is not None and mep is None:
        return Consistency.MYHILL_TENSION
    return Consistency.CONSISTENT


def myhill_audit(
    desc: Semigroup,
    tau: CellularAutomaton,
    schedule: Sequence[Window],
    config: AnalysisConfig | None = None,
) -> Certificate:
    """
    Search every window of `schedule` (in order) for a Garden-of-Eden pattern
    and for a mutually erasable pair supported on it. Each search stops at its
    first certificate; a budget overrun stops it and marks the verdict partial.
    """
    config = config or AnalysisConfig()
    if not schedule:
        raise InvalidInputError("audit schedule is empty")

    goe = mep = None
    surj_evidence: list[Certificate] = []
    inj_evidence: list[Certificate] = []
    notes = []
    goe_done = mep_done = False
    for omega in schedule:
        if not goe_done:
            try:
                goe, evidence = goe_or_evidence(desc, tau, omega, config)
            except BudgetExceededError as e:
                notes.append(f"GOE search stopped at |Ω|={len(omega)}: {e}")
                goe_done = True
            else:
                goe_done = goe is not None
                if evidence is not None:
                    surj_evidence.append(evidence)
        if not mep_done:
            try:
                mep, evidence = erasable_or_evidence(desc, tau, omega, config.background, config)
            except BudgetExceededError as e:
                notes.append(f"MEP search stopped at |Ω|={len(omega)}: {e}")
                mep_done = True
            else:
                mep_done = mep is not None
                if evidence is not None:
                    inj_evidence.append(evidence)
        if goe_done and mep_done:
            break

    for note in notes:
        _print(note)
    consistency = consistency_of(desc, goe, mep)
    if consistency == Consistency.MYHILL_TENSION:
        _print("Myhill tension: GOE pattern without an erasable pair, increase windows")

    verdict = AuditVerdict(
        surjectivity=Status.CERTIFIED_NO if goe else Status.NO_GOE_UP_TO_WINDOW,
        pre_injectivity=Status.CERTIFIED_NO if mep else Status.NO_MEP_UP_TO_WINDOW,
        goe=goe,
        mep=mep,
        surjective_evidence=tuple(surj_evidence),
        pre_injective_evidence=tuple(inj_evidence),
        left_cancellative=desc.is_left_cancellative,
        right_cancellative=desc.is_right_cancellative,
        has_folner=desc.has_folner,
        left_reversible=_left_reversible(desc),
        consistency=consistency,
        partial=bool(notes),
        note="; ".join(notes),
    )
    return Certificate(CertificateKind.AUDIT_VERDICT, desc, tau, verdict)
