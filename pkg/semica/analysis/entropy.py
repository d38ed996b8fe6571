"""
Entropy of τ(A^S) (or of the full shift A^S) along a window sequence:

    value_n = log |π_{F_n}(X)| / |F_n|

Only a finite prefix is ever computed, so the limsup is reported as the
running maximum over that prefix.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from semica.analysis.search import window_image
from semica.automaton import CellularAutomaton
from semica.datastructure import AnalysisConfig, Window
from semica.errors import BudgetExceededError, InvalidInputError, NoFolnerSequenceError
from semica.semigroups import Semigroup, folner_window

LIMSUP_LABEL = "max-so-far over computed prefix (limsup proxy)"


def _print(*args):
    print("[Entropy]", *args, file=sys.stderr)


@dataclass(frozen=True)
class EntropyEntry:
    n: int
    window: Window
    count: int
    """|π_{F_n}(X)|, exact"""
    value: float

    @property
    def size(self) -> int:
        return len(self.window)


@dataclass(frozen=True)
class EntropyTrace:
    q: int
    entries: tuple[EntropyEntry, ...]
    max_so_far: tuple[float, ...]
    truncated_at: int | None = None
    """First n whose enumeration exceeded the budget"""
    label: str = LIMSUP_LABEL

    @property
    def truncated(self) -> bool:
        return self.truncated_at is not None

    @property
    def limsup_proxy(self) -> float | None:
        return self.max_so_far[-1] if self.max_so_far else None

    def first_n_below(self, level: float) -> int | None:
        "Smallest n from which every computed value is strictly below `level`"
        first = None
        for e in reversed(self.entries):
            if e.value >= level:
                break
            first = e.n
        return first


def entropy_value(count: int, q: int, size: int) -> float:
    # exact ceiling when the window projection is onto
    if count == q**size:
        return math.log(q)
    return math.log(count) / size


def estimate_entropy(
    desc: Semigroup,
    tau: CellularAutomaton | None,
    q: int,
    n_max: int,
    config: AnalysisConfig | None = None,
    windows: Callable[[Semigroup, int], Window] = folner_window,
) -> EntropyTrace:
    """
    Exact window counts along `windows(desc, 1..n_max)`; `tau=None` selects the
    full shift. A budget overrun stops the trace at that n and flags it.
    """
    config = config or AnalysisConfig()
    if not desc.has_folner:
        raise NoFolnerSequenceError(f"{desc.describe()} has no Følner sequence")
    if tau is not None and tau.q != q:
        raise InvalidInputError(f"automaton alphabet {tau.q} does not match q={q}")
    if q < 1 or n_max < 1:
        raise InvalidInputError("q and n_max must be >= 1")

    entries: list[EntropyEntry] = []
    running: list[float] = []
    truncated_at = None
    for n in range(1, n_max + 1):
        F = windows(desc, n)
        try:
            count = q ** len(F) if tau is None else window_image(desc, tau, F, config).count
        except BudgetExceededError as e:
            _print(f"trace truncated at n={n}: {e}")
            truncated_at = n
            break
        value = entropy_value(count, q, len(F))
        entries.append(EntropyEntry(n, F, count, value))
        running.append(max(value, running[-1]) if running else value)
    return EntropyTrace(q, tuple(entries), tuple(running), truncated_at)


def entropy_deficit_bound(q: int, K: Window, delta: Fraction | float) -> float:
    """
    log q - c·δ with c = -log(1 - q^{-|K|}): an upper bound on the entropy of
    any X missing a pattern on every tile Kt of a K-tiling of density δ.
    """
    if q < 2:
        raise InvalidInputError(f"alphabet size must be >= 2, got {q}")
    if not len(K):
        raise InvalidInputError("K must be non-empty")
    if not 0 < delta <= 1:
        raise InvalidInputError(f"delta must be in (0, 1], got {delta}", field="delta")
    c = -math.log1p(-(float(q) ** -len(K)))
    return math.log(q) - c * float(delta)
