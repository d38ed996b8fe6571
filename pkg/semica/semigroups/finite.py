"""
Finite semigroups given by a Cayley (multiplication) table.

Table file format: first line n, then n lines of n space-separated
0-based indices; row x column y holds x·y.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import ClassVar

import numpy as np

from semica.errors import InvalidInputError
from semica.semigroups.protocols import Family, Semigroup


def _print(*args):
    print("[Finite Semigroup]", *args, file=sys.stderr)


def find_associativity_failure(table: np.ndarray) -> tuple[int, int, int] | None:
    "Check all n³ triples at once; returns the first (x, y, z) with (xy)z != x(yz)"
    n = len(table)
    left = table[table]  # left[x, y, z] = (xy)z
    right = table[np.arange(n)[:, None, None], table[None, :, :]]  # x(yz)
    bad = np.argwhere(left != right)
    if len(bad):
        x, y, z = bad[0]
        return int(x), int(y), int(z)
    return None


@dataclass(frozen=True)
class FiniteSemigroup(Semigroup):
    rows: tuple[tuple[int, ...], ...]

    FAMILY: ClassVar[Family] = Family.FINITE
    has_folner: ClassVar[bool] = True

    table: np.ndarray = field(init=False, repr=False, compare=False)
    _identity: int | None = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise InvalidInputError("multiplication table must be a non-empty n×n square")
        table = np.array(self.rows, dtype=np.int64)
        if table.min() < 0 or table.max() >= n:
            raise InvalidInputError(f"table entries must be indices in 0..{n - 1}")
        bad = find_associativity_failure(table)
        if bad is not None:
            x, y, z = bad
            raise InvalidInputError(f"table is not associative: ({x}·{y})·{z} != {x}·({y}·{z})")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

        idx = np.arange(n)
        units = [e for e in range(n) if (table[e] == idx).all() and (table[:, e] == idx).all()]
        object.__setattr__(self, "_identity", units[0] if units else None)

    @classmethod
    def from_rows(cls, rows) -> FiniteSemigroup:
        return cls(tuple(tuple(int(v) for v in r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def is_monoid(self) -> bool:  # type: ignore[override]
        return self._identity is not None

    @property
    def identity(self) -> int | None:
        return self._identity

    @property
    def is_left_cancellative(self) -> bool:
        return all(self.is_left_cancellable(s) for s in range(self.size))

    @property
    def is_right_cancellative(self) -> bool:
        return all(self.is_right_cancellable(s) for s in range(self.size))

    def is_left_reversible(self) -> bool:
        "aS ∩ bS != ∅ for all a, b"
        principal = [set(r) for r in self.rows]
        return all(principal[a] & principal[b] for a in range(self.size) for b in range(a))

    def validate(self, s: object) -> int:
        if isinstance(s, bool) or not isinstance(s, (int, np.integer)) or not 0 <= s < self.size:
            raise InvalidInputError(f"{s!r} is not an index of a table of size {self.size}")
        return int(s)

    def sort_key(self, s):
        return s

    def describe(self) -> str:
        return "finite"

    def generators(self):
        return tuple(range(self.size))

    def multiply(self, s, t):
        return self.rows[s][t]

    def left_divide(self, k, w):
        return tuple(int(s) for s in np.flatnonzero(self.table[k] == w))

    def right_divide(self, t, w):
        return tuple(int(s) for s in np.flatnonzero(self.table[:, t] == w))

    def is_left_cancellable(self, s) -> bool:
        return len(set(self.rows[s])) == self.size

    def is_right_cancellable(self, s) -> bool:
        return len({r[s] for r in self.rows}) == self.size

    def cancellation_witness(self, s, left: bool):
        seen: dict[int, int] = {}
        for x in range(self.size):
            v = self.rows[s][x] if left else self.rows[x][s]
            if v in seen:
                return (seen[v], x)
            seen[v] = x
        return None

    def folner(self, n: int):
        return range(self.size)

    def parse_element(self, text: str) -> int:
        try:
            return self.validate(int(text))
        except ValueError:
            raise InvalidInputError(f"{text!r} is not a table index")

    def format_element(self, s) -> str:
        return str(s)

    def to_text(self) -> str:
        return "\n".join([str(self.size), *(" ".join(str(v) for v in r) for r in self.rows)]) + "\n"


def parse_table(text: str) -> FiniteSemigroup:
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise InvalidInputError("empty table")
    try:
        n = int(lines[0][0])
        rows = [[int(v) for v in ln] for ln in lines[1:]]
    except ValueError as e:
        raise InvalidInputError(f"bad table entry: {e}")
    if len(rows) != n:
        raise InvalidInputError(f"table declares {n} rows but has {len(rows)}")
    return FiniteSemigroup.from_rows(rows)


def load_table(path: str | Path) -> FiniteSemigroup:
    "Load a finite semigroup from a table file, checking associativity"
    with open(path) as fp:
        semigroup = parse_table(fp.read())
    _print(f"Loaded {semigroup.size}-element table from {path}")
    return semigroup
