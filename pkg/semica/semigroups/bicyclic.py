"""
The bicyclic monoid B = <p, q : pq = 1>.

Every element is uniquely qᵃpᵇ and is stored as the pair (a, b);
1_B = (0, 0), p = (0, 1), q = (1, 0).
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import ClassVar

from semica.errors import InvalidInputError
from semica.semigroups.lattice import format_int_tuple, parse_int_tuple
from semica.semigroups.protocols import Family, Semigroup

ONE = (0, 0)
P = (0, 1)
Q = (1, 0)


@dataclass(frozen=True)
class BicyclicMonoid(Semigroup):
    FAMILY: ClassVar[Family] = Family.BICYCLIC
    is_monoid: ClassVar[bool] = True
    is_left_cancellative: ClassVar[bool] = False
    is_right_cancellative: ClassVar[bool] = False
    has_folner: ClassVar[bool] = True

    @property
    def identity(self):
        return ONE

    def validate(self, s: object):
        if (
            not isinstance(s, tuple)
            or len(s) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in s)
        ):
            raise InvalidInputError(f"{s!r} is not a canonical bicyclic pair (a,b)")
        return s

    def sort_key(self, s):
        return s

    def describe(self) -> str:
        return "bicyclic"

    def generators(self):
        return (P, Q)

    def multiply(self, s, t):
        (a, b), (c, d) = s, t
        m = min(b, c)
        return (a + c - m, d + b - m)

    def left_divide(self, k, w):
        a, b = k
        x, y = w
        sols = []
        # s = (c, d) with c >= b: k·s = (a + c - b, d)
        if x >= a:
            sols.append((x - a + b, y))
        # c < b: k·s = (a, d + b - c)
        if x == a:
            sols.extend((c, y - b + c) for c in range(max(0, b - y), b))
        return tuple(sols)

    def right_divide(self, t, w):
        a, b = t
        x, y = w
        sols = []
        # s = (c, d) with d >= a: s·t = (c, b + d - a)
        if y >= b:
            sols.append((x, y - b + a))
        # d < a: s·t = (c + a - d, b)
        if y == b:
            sols.extend((x - a + d, d) for d in range(max(0, a - x), a))
        return tuple(sols)

    def is_left_cancellable(self, s) -> bool:
        return s[1] == 0

    def is_right_cancellable(self, s) -> bool:
        return s[0] == 0

    def cancellation_witness(self, s, left: bool):
        a, b = s
        if left and b > 0:
            # qᵃpᵇ·qᵇpᵇ = qᵃpᵇ
            return (ONE, (b, b))
        if not left and a > 0:
            # qᵃpᵃ·qᵃpᵇ = qᵃpᵇ
            return (ONE, (a, a))
        return None

    def folner(self, n: int):
        "{qᵃpᵇ : a, b < n}"
        return itertools.product(range(n), repeat=2)

    def parse_element(self, text: str):
        text = text.strip()
        if text.startswith("("):
            return self.validate(parse_int_tuple(text))
        if text == "1":
            return ONE
        if not re.fullmatch(r"[pq]+", text):
            raise InvalidInputError(f"{text!r} is not a bicyclic literal")
        s = ONE
        for c in text:
            s = self.multiply(s, P if c == "p" else Q)
        return s

    def format_element(self, s) -> str:
        return format_int_tuple(s)
