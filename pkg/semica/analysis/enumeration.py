"""
Exhaustive enumeration of window assignments.

An assignment on a window of width w is the base-q integer whose digits,
most significant first, are the symbols in the window's canonical order.
Chunks of consecutive assignments are decoded into uint8 digit matrices,
pushed through the rule table in one vectorized step and packed back into
sortable codes. Chunk results are reduced in chunk order, so the outcome
does not depend on the number of worker threads.
"""
from __future__ import annotations

import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, TypeVar

import numpy as np

from semica.automaton import CellularAutomaton
from semica.datastructure import AnalysisConfig, Pattern, Window
from semica.errors import BudgetExceededError, InvalidInputError
from semica.semigroups import Semigroup

R = TypeVar("R")

MAX_INT_CODE = 2**62


def _print(*args):
    print("[Enumeration]", *args, file=sys.stderr)


def check_budget(q: int, width: int, budget: int) -> int:
    "Number of assignments on a window of `width`, or BudgetExceededError"
    required = q**width
    if required > budget:
        _print(f"{q}^{width} assignments exceed budget {budget}")
        raise BudgetExceededError(required, budget, exponent=width)
    return required


def digits(start: int, stop: int, q: int, width: int) -> np.ndarray:
    "Assignments start..stop-1 as a (stop - start, width) uint8 matrix"
    idx = np.arange(start, stop, dtype=np.int64)
    powers = q ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] // powers) % q).astype(np.uint8)


def read_plan(
    desc: Semigroup, tau: CellularAutomaton, inputs: Window, outputs: Window
) -> np.ndarray:
    """
    plan[i, j] is the position in `inputs` of m_j·s_i for the i-th output cell,
    or -1 when that cell lies outside `inputs` (read as the background).
    """
    pos = inputs.positions()
    plan = [[pos.get(desc.multiply(m, s), -1) for m in tau.memory] for s in outputs]
    return np.array(plan, dtype=np.int64).reshape(len(outputs), tau.m)


def evaluate(
    tau: CellularAutomaton, assignments: np.ndarray, plan: np.ndarray, background: int = 0
) -> np.ndarray:
    "Output symbols, one row per assignment and one column per output cell"
    n = len(assignments)
    padded = np.concatenate([assignments, np.full((n, 1), background, dtype=np.uint8)], axis=1)
    reads = padded[:, plan].astype(np.int64)  # -1 selects the background column
    return tau.table[reads @ tau.weights].astype(np.uint8)


def pack(rows: np.ndarray, q: int) -> np.ndarray:
    """
    One sortable code per row. Lexicographic row order equals code order:
    int64 base-q codes while they fit, raw byte strings beyond that.
    """
    width = rows.shape[1]
    if q**width <= MAX_INT_CODE:
        weights = q ** np.arange(width - 1, -1, -1, dtype=np.int64)
        return rows.astype(np.int64) @ weights
    return np.ascontiguousarray(rows).view(np.dtype((np.void, width))).ravel()


def unpack(code, q: int, width: int) -> tuple[int, ...]:
    if isinstance(code, (bytes, np.void)):
        return tuple(int(v) for v in bytes(code))
    code = int(code)
    values = []
    for _ in range(width):
        code, r = divmod(code, q)
        values.append(r)
    return tuple(reversed(values))


def code_of(values, q: int) -> int:
    code = 0
    for v in values:
        code = code * q + int(v)
    return code


def map_chunks(fn: Callable[[int, int], R], total: int, config: AnalysisConfig) -> list[R]:
    "Apply fn to consecutive [start, stop) chunks of range(total), results in chunk order"
    step = config.chunk_size
    bounds = [(a, min(a + step, total)) for a in range(0, total, step)]
    if config.workers <= 1 or len(bounds) <= 1:
        return [fn(a, b) for a, b in bounds]
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(lambda ab: fn(*ab), bounds))


class ImageSet:
    """
    The distinct output patterns on a window, stored as sorted packed codes.
    """

    def __init__(self, window: Window, q: int, codes: np.ndarray):
        self.window = window
        self.q = q
        self.codes = codes

    def __len__(self) -> int:
        return len(self.codes)

    @property
    def full_size(self) -> int:
        return self.q ** len(self.window)

    @property
    def is_full(self) -> bool:
        return len(self.codes) == self.full_size

    def patterns(self) -> frozenset[Pattern]:
        width = len(self.window)
        return frozenset(Pattern(self.window, unpack(c, self.q, width)) for c in self.codes)

    def __contains__(self, p: Pattern) -> bool:
        if p.window != self.window:
            raise InvalidInputError("pattern is on a different window")
        row = np.array([p.values], dtype=np.uint8).reshape(1, len(self.window))
        code = pack(row, self.q)[0]
        i = np.searchsorted(self.codes, code)
        return bool(i < len(self.codes) and self.codes[i] == code)

    def smallest_missing(self) -> Pattern | None:
        "Canonically smallest pattern on the window that is not in the set"
        if self.is_full:
            return None
        width = len(self.window)
        if self.codes.dtype.kind == "i":
            gaps = np.flatnonzero(self.codes != np.arange(len(self.codes)))
            missing = int(gaps[0]) if len(gaps) else len(self.codes)
        else:
            missing = len(self.codes)
            for i, c in enumerate(self.codes):
                if code_of(bytes(c), self.q) != i:
                    missing = i
                    break
        return Pattern(self.window, unpack(missing, self.q, width))


def image_set(
    desc: Semigroup,
    tau: CellularAutomaton,
    inputs: Window,
    outputs: Window,
    config: AnalysisConfig,
    background: int = 0,
) -> ImageSet:
    """
    Distinct images on `outputs` over every assignment of `inputs`
    (cells outside `inputs` read as `background`).
    """
    total = check_budget(tau.q, len(inputs), config.budget)
    plan = read_plan(desc, tau, inputs, outputs)

    def _chunk(start: int, stop: int) -> np.ndarray:
        out = evaluate(tau, digits(start, stop, tau.q, len(inputs)), plan, background)
        return np.unique(pack(out, tau.q))

    parts = map_chunks(_chunk, total, config)
    return ImageSet(outputs, tau.q, np.unique(np.concatenate(parts)))


def first_collision(
    desc: Semigroup,
    tau: CellularAutomaton,
    inputs: Window,
    outputs: Window,
    config: AnalysisConfig,
    background: int = 0,
) -> tuple[tuple[int, int] | None, int]:
    """
    Scan assignments of `inputs` in order and return the first pair (i, j),
    i < j, with equal images on `outputs`, and the number of distinct images.
    """
    total = check_budget(tau.q, len(inputs), config.budget)
    plan = read_plan(desc, tau, inputs, outputs)

    def _chunk(start: int, stop: int) -> np.ndarray:
        out = evaluate(tau, digits(start, stop, tau.q, len(inputs)), plan, background)
        return pack(out, tau.q)

    codes = np.concatenate(map_chunks(_chunk, total, config))
    _, first, inverse = np.unique(codes, return_index=True, return_inverse=True)
    inverse = inverse.reshape(-1)
    repeats = np.flatnonzero(first[inverse] != np.arange(total))
    if not len(repeats):
        return None, len(first)
    j = int(repeats[0])
    return (int(first[inverse[j]]), j), len(first)
