"""
Free commutative families: the additive monoids ℕ, ℕᵈ and the group ℤᵈ
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import ClassVar

from semica.datastructure import Element
from semica.errors import InvalidInputError
from semica.semigroups.protocols import Family, Semigroup

_TUPLE_RE = re.compile(r"^\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*,?\s*\)$")


def parse_int_tuple(text: str) -> tuple[int, ...]:
    m = _TUPLE_RE.match(text.strip())
    if m is None:
        raise InvalidInputError(f"expected a tuple like (1,0), got {text!r}")
    return tuple(int(v) for v in m.group(1).split(","))


def format_int_tuple(s: tuple[int, ...]) -> str:
    return "(" + ",".join(str(v) for v in s) + ")"


@dataclass(frozen=True)
class NaturalNumbers(Semigroup):
    """(ℕ, +), elements are plain ints"""

    FAMILY: ClassVar[Family] = Family.NAT
    is_monoid: ClassVar[bool] = True
    is_left_cancellative: ClassVar[bool] = True
    is_right_cancellative: ClassVar[bool] = True
    has_folner: ClassVar[bool] = True

    @property
    def identity(self) -> int:
        return 0

    def validate(self, s: object) -> int:
        if isinstance(s, tuple) and len(s) == 1:
            s = s[0]
        if isinstance(s, bool) or not isinstance(s, int) or s < 0:
            raise InvalidInputError(f"{s!r} is not an element of nat")
        return s

    def sort_key(self, s):
        return s

    def describe(self) -> str:
        return "nat"

    def generators(self):
        return (1,)

    def multiply(self, s, t):
        return s + t

    def left_divide(self, k, w):
        return (w - k,) if w >= k else ()

    def right_divide(self, t, w):
        return self.left_divide(t, w)

    def is_left_cancellable(self, s) -> bool:
        return True

    def is_right_cancellable(self, s) -> bool:
        return True

    def cancellation_witness(self, s, left: bool):
        return None

    def folner(self, n: int):
        return range(n)

    def box(self, n: int):
        return range(n)

    def parse_element(self, text: str) -> int:
        text = text.strip()
        try:
            return self.validate(int(text))
        except ValueError:
            return self.validate(parse_int_tuple(text))

    def format_element(self, s) -> str:
        return str(s)


@dataclass(frozen=True)
class _Lattice(Semigroup):
    d: int

    is_monoid: ClassVar[bool] = True
    is_left_cancellative: ClassVar[bool] = True
    is_right_cancellative: ClassVar[bool] = True
    has_folner: ClassVar[bool] = True

    def __post_init__(self):
        if self.d < 1:
            raise InvalidInputError(f"{self.FAMILY} needs d >= 1, got {self.d}")

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * self.d

    def _check_sign(self, s: tuple[int, ...]) -> bool:
        return True

    def validate(self, s: object) -> tuple[int, ...]:
        if isinstance(s, int) and not isinstance(s, bool) and self.d == 1:
            s = (s,)
        if (
            not isinstance(s, tuple)
            or len(s) != self.d
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in s)
            or not self._check_sign(s)
        ):
            raise InvalidInputError(f"{s!r} is not an element of {self.describe()}")
        return s

    def sort_key(self, s):
        return s

    def describe(self) -> str:
        return f"{self.FAMILY} {self.d}"

    def _units(self):
        return [tuple(int(i == j) for j in range(self.d)) for i in range(self.d)]

    def multiply(self, s, t):
        return tuple(a + b for a, b in zip(s, t))

    def is_left_cancellable(self, s) -> bool:
        return True

    def is_right_cancellable(self, s) -> bool:
        return True

    def cancellation_witness(self, s, left: bool):
        return None

    def box(self, n: int):
        "{0..n-1}^d"
        return itertools.product(range(n), repeat=self.d)

    def parse_element(self, text: str) -> Element:
        text = text.strip()
        if self.d == 1 and re.fullmatch(r"-?\d+", text):
            return self.validate(int(text))
        return self.validate(parse_int_tuple(text))

    def format_element(self, s) -> str:
        return str(s[0]) if self.d == 1 else format_int_tuple(s)


@dataclass(frozen=True)
class NaturalLattice(_Lattice):
    """(ℕᵈ, +), elements are d-tuples of naturals"""

    FAMILY: ClassVar[Family] = Family.NAT_D

    def _check_sign(self, s):
        return all(v >= 0 for v in s)

    def generators(self):
        return tuple(self._units())

    def left_divide(self, k, w):
        s = tuple(b - a for a, b in zip(k, w))
        return (s,) if all(v >= 0 for v in s) else ()

    def right_divide(self, t, w):
        return self.left_divide(t, w)

    def folner(self, n: int):
        return itertools.product(range(n), repeat=self.d)


@dataclass(frozen=True)
class IntegerLattice(_Lattice):
    """(ℤᵈ, +), elements are d-tuples of integers"""

    FAMILY: ClassVar[Family] = Family.INT_D

    def generators(self):
        units = self._units()
        return tuple(units + [tuple(-v for v in u) for u in units])

    def left_divide(self, k, w):
        return (tuple(b - a for a, b in zip(k, w)),)

    def right_divide(self, t, w):
        return self.left_divide(t, w)

    def folner(self, n: int):
        "[-n, n]^d"
        return itertools.product(range(-n, n + 1), repeat=self.d)

