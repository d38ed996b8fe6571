from __future__ import annotations

from enum import Enum
from typing import ClassVar, Iterable, Protocol, Sequence

from semica.datastructure import Element, Window


class Family(str, Enum):
    NAT = "nat"
    NAT_D = "nat_d"
    INT_D = "int_d"
    FREE_MONOID = "free_monoid"
    BICYCLIC = "bicyclic"
    FINITE = "finite"

    def __str__(self):
        return self.value


class SupportsMultiply(Protocol):
    def multiply(self, s: Element, t: Element) -> Element:
        """
        Returns s·t. Operands are assumed already validated.
        """


class SupportsDivision(Protocol):
    def left_divide(self, k: Element, w: Element) -> Iterable[Element]:
        """
        Exact solution set {s : k·s = w}
        """

    def right_divide(self, t: Element, w: Element) -> Iterable[Element]:
        """
        Exact solution set {s : s·t = w}
        """


class SupportsCancellability(Protocol):
    def is_left_cancellable(self, s: Element) -> bool:
        """
        Exact verdict: analytic for infinite families, full scan for tables.
        """

    def is_right_cancellable(self, s: Element) -> bool:
        ...

    def cancellation_witness(self, s: Element, left: bool) -> tuple[Element, Element] | None:
        """
        A pair x != y with sx = sy (left) or xs = ys (right),
        or None when s is cancellable on that side.
        """


class SupportsFolner(Protocol):
    def folner(self, n: int) -> Iterable[Element]:
        """
        The n-th member of the family's canonical Følner sequence.
        Raises NoFolnerSequenceError when the family has none.
        """


class HasLiterals(Protocol):
    def parse_element(self, text: str) -> Element:
        """
        Parse an element literal from a spec file.
        """

    def format_element(self, s: Element) -> str:
        """
        Inverse of parse_element.
        """


class Semigroup(
    SupportsMultiply, SupportsDivision, SupportsCancellability, SupportsFolner, HasLiterals, Protocol
):
    """
    A concrete semigroup family. Concrete descriptors subclass this explicitly
    and inherit the canonical-window helpers below.
    """

    FAMILY: ClassVar[Family]

    is_monoid: ClassVar[bool]
    is_left_cancellative: bool
    is_right_cancellative: bool
    has_folner: bool

    @property
    def identity(self) -> Element | None:
        ...

    def validate(self, s: object) -> Element:
        """
        Coerce a payload into this family's element type or raise InvalidInputError.
        """

    def sort_key(self, s: Element):
        ...

    def generators(self) -> Sequence[Element]:
        """
        Default generating set, used for balls and cancellability witnesses.
        """

    def describe(self) -> str:
        """
        The `family = ...` value in spec files.
        """

    @property
    def is_cancellative(self) -> bool:
        return self.is_left_cancellative and self.is_right_cancellative

    def window(self, items: Iterable[object]) -> Window:
        "Validate, deduplicate and canonically order `items`"
        elems = {self.validate(s) for s in items}
        return Window(tuple(sorted(elems, key=self.sort_key)))
