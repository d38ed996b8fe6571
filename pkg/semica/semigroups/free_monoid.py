from __future__ import annotations

import string
from dataclasses import dataclass
from typing import ClassVar

from semica.errors import InvalidInputError, NoFolnerSequenceError
from semica.semigroups.protocols import Family, Semigroup

EMPTY_WORD_LITERAL = "1"


@dataclass(frozen=True)
class FreeMonoid(Semigroup):
    """
    Free monoid on k letters 'a', 'b', ...; elements are str words, the
    empty word is the identity. Canonical order is shortlex.
    """

    k: int

    FAMILY: ClassVar[Family] = Family.FREE_MONOID
    is_monoid: ClassVar[bool] = True
    is_left_cancellative: ClassVar[bool] = True
    is_right_cancellative: ClassVar[bool] = True

    def __post_init__(self):
        if not 1 <= self.k <= 26:
            raise InvalidInputError(f"free_monoid needs 1 <= k <= 26, got {self.k}")

    @property
    def letters(self) -> str:
        return string.ascii_lowercase[: self.k]

    @property
    def has_folner(self) -> bool:
        # aS ∩ bS = ∅ for distinct letters: not left-reversible once k >= 2
        return self.k == 1

    def is_left_reversible(self) -> bool:
        return self.k == 1

    @property
    def identity(self) -> str:
        return ""

    def validate(self, s: object) -> str:
        if not isinstance(s, str) or any(c not in self.letters for c in s):
            raise InvalidInputError(f"{s!r} is not a word over {self.letters!r}")
        return s

    def sort_key(self, s):
        return (len(s), s)

    def describe(self) -> str:
        return f"free_monoid {self.k}"

    def generators(self):
        return tuple(self.letters)

    def multiply(self, s, t):
        return s + t

    def left_divide(self, k, w):
        return (w[len(k) :],) if w.startswith(k) else ()

    def right_divide(self, t, w):
        return (w[: len(w) - len(t)],) if w.endswith(t) else ()

    def is_left_cancellable(self, s) -> bool:
        return True

    def is_right_cancellable(self, s) -> bool:
        return True

    def cancellation_witness(self, s, left: bool):
        return None

    def folner(self, n: int):
        if not self.has_folner:
            raise NoFolnerSequenceError(
                f"{self.describe()} is not left-reversible (aS ∩ bS = ∅), so it has no Følner sequence"
            )
        return ("a" * i for i in range(n))

    def parse_element(self, text: str) -> str:
        text = text.strip()
        return "" if text == EMPTY_WORD_LITERAL else self.validate(text)

    def format_element(self, s) -> str:
        return s if s else EMPTY_WORD_LITERAL
