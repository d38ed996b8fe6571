"""
Independent re-verification of certificates.

Nothing here touches the enumeration engine: every check walks the
assignments with itertools and evaluates τ cell by cell through the
automaton module.
"""
from __future__ import annotations

import itertools
import math
import sys

from semica.analysis.certificates import Certificate, CertificateKind
from semica.automaton import CellularAutomaton, apply_with_background, dependence_window
from semica.datastructure import AnalysisConfig, Pattern, Window
from semica.errors import BudgetExceededError
from semica.geometry import adherence
from semica.semigroups import Semigroup


def _print(*args):
    print("[Replay]", *args, file=sys.stderr)


def brute_force_images(
    desc: Semigroup, tau: CellularAutomaton, omega: Window, budget: int
) -> set[tuple[int, ...]]:
    "Every τ(x)|Ω, one assignment of MΩ at a time"
    dep = dependence_window(desc, tau, omega)
    if tau.q ** len(dep) > budget:
        raise BudgetExceededError(tau.q ** len(dep), budget, exponent=len(dep))
    images = set()
    for values in itertools.product(range(tau.q), repeat=len(dep)):
        images.add(apply_with_background(desc, tau, Pattern(dep, values), 0, omega).values)
    return images


def brute_force_supports(
    desc: Semigroup, tau: CellularAutomaton, omega: Window, a0: int, target: Window, budget: int
) -> set[tuple[int, ...]]:
    "Distinct images on `target` of the configurations equal to a0 off Ω"
    if tau.q ** len(omega) > budget:
        raise BudgetExceededError(tau.q ** len(omega), budget, exponent=len(omega))
    return {
        apply_with_background(desc, tau, Pattern(omega, values), a0, target).values
        for values in itertools.product(range(tau.q), repeat=len(omega))
    }


def replay_certificate(cert: Certificate, config: AnalysisConfig | None = None) -> bool:
    config = config or AnalysisConfig()
    desc, tau, payload = cert.semigroup, cert.automaton, cert.payload

    match cert.kind:
        case CertificateKind.GOE_PATTERN:
            u = payload.pattern
            if payload.dependence != dependence_window(desc, tau, u.window):
                return False
            return u.values not in brute_force_images(desc, tau, u.window, config.budget)

        case CertificateKind.SURJECTIVE_UP_TO:
            images = brute_force_images(desc, tau, payload.window, config.budget)
            return len(images) == payload.count == tau.q ** len(payload.window)

        case CertificateKind.MUTUALLY_ERASABLE_PAIR:
            first, second, a0 = payload.first, payload.second, payload.background
            if first.window != second.window or first == second:
                return False
            target = adherence(desc, first.window, tau.memory, config.ball_budget)
            if target != payload.target:
                return False
            img1 = apply_with_background(desc, tau, first, a0, target)
            img2 = apply_with_background(desc, tau, second, a0, target)
            return img1 == img2 == payload.image

        case CertificateKind.PRE_INJECTIVE_UP_TO:
            omega = payload.window
            target = adherence(desc, omega, tau.memory, config.ball_budget)
            images = brute_force_supports(
                desc, tau, omega, payload.background, target, config.budget
            )
            return len(images) == payload.count == tau.q ** len(omega)

        case CertificateKind.ENTROPY_TRACE:
            q = payload.q
            for e in payload.entries:
                if tau is None:
                    count = q**e.size
                else:
                    count = len(brute_force_images(desc, tau, e.window, config.budget))
                if count != e.count or e.value > math.log(q):
                    _print(f"entropy entry n={e.n} does not replay")
                    return False
            return True

        case CertificateKind.AUDIT_VERDICT:
            return all(replay_certificate(c, config) for c in payload.certificates())

        case _:
            raise ValueError(f"Unknown certificate kind: {cert.kind}")
