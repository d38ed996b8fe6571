from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Iterator, Mapping, Union

from semica.errors import InvalidInputError

Element = Union[int, str, tuple[int, ...]]
"""
A point of a semigroup. The payload depends on the family:
int for ℕ and finite tables, tuple[int, ...] for ℕᵈ, ℤᵈ and the
bicyclic monoid ((a, b) meaning qᵃpᵇ), str for free monoid words.
"""


@dataclass(frozen=True)
class Window:
    """
    A finite, duplicate-free, canonically ordered set of elements.

    Build windows through a semigroup's `window()` method so the order is
    the family's canonical order; two equal sets then have equal encodings.
    """

    elements: tuple[Element, ...]

    _positions: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_positions", {s: i for i, s in enumerate(self.elements)})
        if len(self._positions) != len(self.elements):
            raise InvalidInputError("window has duplicate elements")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __contains__(self, s: object) -> bool:
        return s in self._positions

    def index(self, s: Element) -> int:
        return self._positions[s]

    def positions(self) -> dict[Element, int]:
        return dict(self._positions)

    @property
    def members(self) -> frozenset:
        return frozenset(self._positions)


@dataclass(frozen=True, slots=True)
class Pattern:
    """
    A finite partial configuration: one symbol per window element.
    `values` follow the window's canonical order so patterns hash exactly.
    """

    window: Window
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != len(self.window):
            raise InvalidInputError(
                f"pattern has {len(self.values)} values for a window of {len(self.window)}"
            )

    @classmethod
    def from_mapping(cls, window: Window, mapping: Mapping[Element, int]) -> Pattern:
        try:
            return cls(window, tuple(int(mapping[s]) for s in window))
        except KeyError as e:
            raise InvalidInputError(f"no value for window element {e.args[0]!r}")

    @classmethod
    def constant(cls, window: Window, symbol: int) -> Pattern:
        return cls(window, (symbol,) * len(window))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, s: Element) -> int:
        return self.values[self.window.index(s)]

    def as_dict(self) -> dict[Element, int]:
        return dict(zip(self.window.elements, self.values))

    def check_alphabet(self, q: int):
        for v in self.values:
            if not 0 <= v < q:
                raise InvalidInputError(f"symbol {v} outside alphabet 0..{q - 1}")


@dataclass
class AnalysisConfig:
    """
    Knobs shared by the enumeration engines and the CLI
    """

    budget: int = field(
        default=2**24, metadata=dict(range=(1, 2**40), name="Assignments per window")
    )
    workers: int = field(default=1, metadata=dict(range=(1, 64), name="Worker threads"))
    background: int = field(
        default=0, metadata=dict(range=(0, 255), name="Background symbol a0")
    )
    chunk_size: int = field(
        default=2**16, metadata=dict(range=(1, 2**24), name="Assignments per chunk")
    )
    ball_budget: int = field(
        default=10**6, metadata=dict(range=(1, 10**9), name="Max ball size")
    )

    def validate(self) -> AnalysisConfig:
        for f in fields(self):
            lo, hi = f.metadata["range"]
            val = getattr(self, f.name)
            if not lo <= val <= hi:
                raise InvalidInputError(
                    f"{f.metadata['name']} must be in [{lo}, {hi}], got {val}", field=f.name
                )
        return self

    def dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_disk(self, savedir: Path):
        "Write config to `savedir`"
        with (savedir / "analysis_config.json").open("w") as fp:
            json.dump(asdict(self), fp, indent=2)

