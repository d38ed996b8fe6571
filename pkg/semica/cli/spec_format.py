"""
Line-oriented job spec files.

    # comment
    [semigroup]
    family = nat | nat_d <d> | int_d <d> | free_monoid <k> | bicyclic | finite
    table = <path>              (finite only)
    row = i j k ...             (finite only, one per table row)
    [alphabet]
    size = <q>
    [automaton]
    memory = <elem> <elem> ...
    a1 a2 ... am -> b
    [job]
    kind = regions | folner | tiling | goe | mep | entropy | audit | examples
    name = <label>
    omega = <elems>   k = <elems>   arena = <elems>
    window = <elems>            (repeatable: explicit schedule)
    windows = n1..n2            (indices into the window sequence)
    n_max = N   epsilon = p/q   background = b   budget = N
    sequence = folner | box     shift = full     output = <path>

Element literals are fixed per family: integers for nat and table indices,
(a,b,...) tuples for nat_d / int_d (plain integers when d = 1), words over
a, b, ... for free monoids with 1 for the empty word, and (a,b) for qᵃpᵇ in
the bicyclic monoid (p, q words are accepted too).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path

from semica.automaton import CellularAutomaton
from semica.datastructure import Window
from semica.errors import InvalidInputError, SpecSyntaxError
from semica.semigroups import (
    FiniteSemigroup,
    Semigroup,
    box_window,
    folner_window,
    load_table,
    make_semigroup,
)
from semica.semigroups.protocols import Family

SECTIONS = ("semigroup", "alphabet", "automaton", "job")
_SECTION_RE = re.compile(r"\[(\w+)\]")
_TOKEN_RE = re.compile(r"\([^)]*\)|\S+")
_RANGE_RE = re.compile(r"(\d+)\s*\.\.\s*(\d+)")

_KEYS = {
    "semigroup": {"family", "table", "row"},
    "alphabet": {"size"},
    "automaton": {"memory"},
    "job": {
        "kind",
        "name",
        "omega",
        "k",
        "arena",
        "window",
        "windows",
        "n_max",
        "epsilon",
        "background",
        "budget",
        "sequence",
        "shift",
        "output",
    },
}
_REPEATABLE = {"row", "window"}


class JobKind(str, Enum):
    REGIONS = "regions"
    FOLNER = "folner"
    TILING = "tiling"
    GOE = "goe"
    MEP = "mep"
    ENTROPY = "entropy"
    AUDIT = "audit"
    EXAMPLES = "examples"

    def __str__(self):
        return self.value


class WindowSequence(str, Enum):
    FOLNER = "folner"
    BOX = "box"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class JobSpec:
    semigroup: Semigroup
    kind: JobKind
    q: int | None = None
    automaton: CellularAutomaton | None = None
    name: str = ""
    omega: Window | None = None
    K: Window | None = None
    arena: Window | None = None
    windows: tuple[Window, ...] = ()
    """Explicit schedule"""
    index_range: tuple[int, int] | None = None
    """n1..n2 into the window sequence"""
    n_max: int | None = None
    epsilon: Fraction | None = None
    background: int = 0
    budget: int | None = None
    sequence: WindowSequence = WindowSequence.FOLNER
    full_shift: bool = False
    output: str | None = None

    def window_at(self, n: int) -> Window:
        if self.sequence == WindowSequence.BOX:
            return box_window(self.semigroup, n)
        return folner_window(self.semigroup, n)

    def schedule(self) -> list[Window]:
        """
        Windows a goe/mep/audit job walks through: the explicit `window`
        lines, else the indexed range of the window sequence, else omega.
        """
        if self.windows:
            return list(self.windows)
        if self.index_range is not None:
            lo, hi = self.index_range
            return [self.window_at(n) for n in range(lo, hi + 1)]
        if self.omega is not None:
            return [self.omega]
        raise InvalidInputError(f"{self.kind} job needs omega, window or windows", field="window")


@dataclass
class _Entry:
    value: str
    line: int


def _parse_int(entry: _Entry, field: str, lo: int = 0) -> int:
    try:
        v = int(entry.value)
    except ValueError:
        raise SpecSyntaxError(f"expected an integer, got {entry.value!r}", entry.line, field)
    if v < lo:
        raise InvalidInputError(f"must be >= {lo}, got {v}", entry.line, field)
    return v


def _parse_elements(desc: Semigroup, entry: _Entry, field: str) -> Window:
    try:
        return desc.window(desc.parse_element(tok) for tok in _TOKEN_RE.findall(entry.value))
    except InvalidInputError as e:
        raise InvalidInputError(str(e), entry.line, field)


def _parse_rule_line(text: str, line: int) -> tuple[tuple[int, ...], int]:
    lhs, _, rhs = text.partition("->")
    try:
        return tuple(int(v) for v in lhs.split()), int(rhs)
    except ValueError:
        raise SpecSyntaxError(f"bad rule line {text!r}", line, "rule")


def _read_sections(text: str):
    values: dict[str, dict[str, list[_Entry]]] = {s: {} for s in SECTIONS}
    rules: list[tuple[tuple[int, ...], int]] = []
    rules_line = None
    section = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _SECTION_RE.fullmatch(line):
            section = m.group(1)
            if section not in SECTIONS:
                raise SpecSyntaxError(f"unknown section [{section}]", lineno)
            continue
        if section is None:
            raise SpecSyntaxError("content before the first section", lineno)
        if section == "automaton" and "->" in line:
            rules.append(_parse_rule_line(line, lineno))
            rules_line = rules_line or lineno
            continue
        key, eq, value = line.partition("=")
        key = key.strip()
        if not eq:
            raise SpecSyntaxError(f"expected key = value, got {line!r}", lineno)
        if key not in _KEYS[section]:
            raise SpecSyntaxError(f"unknown key in [{section}]", lineno, key)
        entries = values[section].setdefault(key, [])
        if entries and key not in _REPEATABLE:
            raise SpecSyntaxError("key given twice", lineno, key)
        entries.append(_Entry(value.strip(), lineno))
    return values, rules, rules_line


def _build_semigroup(sg: dict[str, list[_Entry]], base_dir: Path | None) -> Semigroup:
    if "family" not in sg:
        raise SpecSyntaxError("[semigroup] needs a family", field="family")
    entry = sg["family"][0]
    tag, *rest = entry.value.split() or [""]
    if tag == Family.FINITE:
        if "table" in sg and "row" in sg:
            raise InvalidInputError("give either table or row lines", entry.line, "table")
        try:
            if "table" in sg:
                path = Path(sg["table"][0].value)
                return load_table(base_dir / path if base_dir and not path.is_absolute() else path)
            if "row" in sg:
                rows = [[int(v) for v in r.value.split()] for r in sg["row"]]
                return FiniteSemigroup.from_rows(rows)
        except ValueError as e:
            raise InvalidInputError(str(e), entry.line, "row")
        raise InvalidInputError("finite family needs a table", entry.line, "table")
    if len(rest) > 1:
        raise SpecSyntaxError(f"bad family {entry.value!r}", entry.line, "family")
    param = _parse_int(_Entry(rest[0], entry.line), "family", lo=1) if rest else None
    try:
        return make_semigroup(tag, param)
    except InvalidInputError as e:
        raise InvalidInputError(str(e), entry.line, "family")


def parse_spec(text: str, base_dir: Path | None = None) -> JobSpec:
    """
    Validated JobSpec from spec text; errors name the offending line and field.
    `base_dir` resolves relative table paths.
    """
    values, rules, rules_line = _read_sections(text)
    desc = _build_semigroup(values["semigroup"], base_dir)

    q = None
    if "size" in values["alphabet"]:
        q = _parse_int(values["alphabet"]["size"][0], "size", lo=1)

    automaton = None
    auto = values["automaton"]
    if "memory" in auto or rules:
        if "memory" not in auto:
            raise SpecSyntaxError("rule lines without a memory set", rules_line, "memory")
        if q is None:
            raise SpecSyntaxError("an automaton needs [alphabet] size", auto["memory"][0].line, "size")
        mem_entry = auto["memory"][0]
        try:
            memory = [desc.parse_element(t) for t in _TOKEN_RE.findall(mem_entry.value)]
        except InvalidInputError as e:
            raise InvalidInputError(str(e), mem_entry.line, "memory")
        try:
            automaton = CellularAutomaton.from_rule_lines(q, memory, rules)
        except InvalidInputError as e:
            raise InvalidInputError(str(e), rules_line or mem_entry.line, "rule")

    job = values["job"]
    if "kind" not in job:
        raise SpecSyntaxError("[job] needs a kind", field="kind")

    def _enum(cls, key):
        entry = job[key][0]
        try:
            return cls(entry.value)
        except ValueError:
            raise SpecSyntaxError(f"unknown {key} {entry.value!r}", entry.line, key)

    def _opt_elements(key):
        return _parse_elements(desc, job[key][0], key) if key in job else None

    def _opt_int(key, lo=0):
        return _parse_int(job[key][0], key, lo) if key in job else None

    index_range = None
    if "windows" in job:
        entry = job["windows"][0]
        m = _RANGE_RE.fullmatch(entry.value)
        if m is None:
            raise SpecSyntaxError(f"expected n1..n2, got {entry.value!r}", entry.line, "windows")
        index_range = (int(m.group(1)), int(m.group(2)))
        if not 1 <= index_range[0] <= index_range[1]:
            raise InvalidInputError("need 1 <= n1 <= n2", entry.line, "windows")

    epsilon = None
    if "epsilon" in job:
        entry = job["epsilon"][0]
        try:
            epsilon = Fraction(entry.value)
        except (ValueError, ZeroDivisionError):
            raise SpecSyntaxError(f"bad rational {entry.value!r}", entry.line, "epsilon")

    full_shift = False
    if "shift" in job:
        entry = job["shift"][0]
        if entry.value != "full":
            raise SpecSyntaxError("only shift = full is supported", entry.line, "shift")
        full_shift = True

    background = _opt_int("background") or 0
    if q is not None and background >= q:
        raise InvalidInputError(f"background {background} outside alphabet", field="background")

    spec = JobSpec(
        semigroup=desc,
        kind=_enum(JobKind, "kind"),
        q=q,
        automaton=automaton,
        name=job["name"][0].value if "name" in job else "",
        omega=_opt_elements("omega"),
        K=_opt_elements("k"),
        arena=_opt_elements("arena"),
        windows=tuple(_parse_elements(desc, e, "window") for e in job.get("window", [])),
        index_range=index_range,
        n_max=_opt_int("n_max", lo=1),
        epsilon=epsilon,
        background=background,
        budget=_opt_int("budget", lo=1),
        sequence=_enum(WindowSequence, "sequence") if "sequence" in job else WindowSequence.FOLNER,
        full_shift=full_shift,
        output=job["output"][0].value if "output" in job else None,
    )
    return check_spec(spec)


def check_spec(spec: JobSpec) -> JobSpec:
    "Per-kind required parameters"

    def _need(cond: bool, field: str, what: str):
        if not cond:
            raise InvalidInputError(f"{spec.kind} job needs {what}", field=field)

    match spec.kind:
        case JobKind.REGIONS:
            _need(spec.omega is not None, "omega", "omega")
            _need(spec.K is not None, "k", "k")
        case JobKind.FOLNER:
            _need(spec.K is not None, "k", "k")
            _need(spec.n_max is not None, "n_max", "n_max")
            _need(spec.epsilon is not None, "epsilon", "epsilon")
        case JobKind.TILING:
            _need(spec.K is not None, "k", "k")
            _need(spec.arena is not None, "arena", "arena")
        case JobKind.GOE | JobKind.MEP | JobKind.AUDIT:
            _need(spec.automaton is not None, "memory", "an automaton")
            _need(
                bool(spec.windows) or spec.index_range is not None or spec.omega is not None,
                "window",
                "omega, window or windows",
            )
        case JobKind.ENTROPY:
            _need(spec.automaton is not None or spec.full_shift, "shift", "an automaton or shift = full")
            _need(spec.q is not None, "size", "an alphabet size")
            _need(spec.n_max is not None or spec.index_range is not None, "n_max", "n_max or windows")
        case JobKind.EXAMPLES:
            pass
        case _:
            raise ValueError(f"Unknown job kind: {spec.kind}")
    if spec.automaton is not None:
        spec.automaton.check_memory(spec.semigroup)
    return spec


def _format_elements(desc: Semigroup, window: Window) -> str:
    return " ".join(desc.format_element(s) for s in window)


def format_spec(spec: JobSpec) -> str:
    "Spec text that parses back to `spec`"
    desc = spec.semigroup
    lines = ["[semigroup]", f"family = {desc.describe()}"]
    if isinstance(desc, FiniteSemigroup):
        lines += [f"row = {' '.join(str(v) for v in r)}" for r in desc.rows]
    if spec.q is not None:
        lines += ["", "[alphabet]", f"size = {spec.q}"]
    if spec.automaton is not None:
        lines += ["", "[automaton]", f"memory = {_format_elements(desc, spec.automaton.memory)}"]
        lines += [f"{' '.join(map(str, v))} -> {b}" for v, b in spec.automaton.rule_lines()]

    lines += ["", "[job]", f"kind = {spec.kind}"]
    if spec.name:
        lines.append(f"name = {spec.name}")
    for key, window in (("omega", spec.omega), ("k", spec.K), ("arena", spec.arena)):
        if window is not None:
            lines.append(f"{key} = {_format_elements(desc, window)}")
    lines += [f"window = {_format_elements(desc, w)}" for w in spec.windows]
    if spec.index_range is not None:
        lines.append(f"windows = {spec.index_range[0]}..{spec.index_range[1]}")
    if spec.n_max is not None:
        lines.append(f"n_max = {spec.n_max}")
    if spec.epsilon is not None:
        lines.append(f"epsilon = {spec.epsilon}")
    if spec.background:
        lines.append(f"background = {spec.background}")
    if spec.budget is not None:
        lines.append(f"budget = {spec.budget}")
    if spec.sequence != WindowSequence.FOLNER:
        lines.append(f"sequence = {spec.sequence}")
    if spec.full_shift:
        lines.append("shift = full")
    if spec.output is not None:
        lines.append(f"output = {spec.output}")
    return "\n".join(lines) + "\n"
