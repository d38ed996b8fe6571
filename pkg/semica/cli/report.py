"""
Report rendering.

Every certificate and result becomes one or more records: a tag (CERT,
REGIONS, FOLNER, TILING, DENSITY, EXAMPLE), an optional kind and ordered
key=value fields. The machine format prints one record per line; the human
format prints each record as an indented section. Neither format carries
timestamps, so equal inputs give byte-identical reports.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Iterable, Sequence

from semica.analysis import AuditVerdict, Certificate, CertificateKind, EntropyTrace
from semica.cli.jobs import Regions, TilingResult
from semica.cli.spec_format import JobSpec
from semica.datastructure import Pattern, Window
from semica.geometry import FolnerTrace
from semica.semigroups import Semigroup

Record = tuple[str, str, list[tuple[str, object]]]


class ReportFormat(str, Enum):
    HUMAN = "human"
    MACHINE = "machine"

    def __str__(self):
        return self.value


def _value(v: object) -> str:
    match v:
        case None:
            return "na"
        case bool():
            return "true" if v else "false"
        case float():
            return f"{v:.12f}"
        case Fraction():
            return str(v)
        case Enum():
            return str(v.value)
        case _:
            return str(v)


def _window(desc: Semigroup, w: Window | None) -> str | None:
    if w is None:
        return None
    return "{" + ";".join(desc.format_element(s) for s in w) + "}"


def _pattern(p: Pattern) -> str:
    return ",".join(str(v) for v in p.values)


def _cert_records(cert: Certificate) -> list[Record]:
    desc, tau, payload = cert.semigroup, cert.automaton, cert.payload
    kind = str(cert.kind)
    head: list[tuple[str, object]] = [("semigroup", desc.describe())]
    if tau is not None:
        head.append(("q", tau.q))

    match cert.kind:
        case CertificateKind.GOE_PATTERN:
            u = payload.pattern
            fields = [
                ("window", _window(desc, u.window)),
                ("pattern", _pattern(u)),
                ("image_count", payload.image_count),
                ("full", tau.q ** len(u.window)),
                ("dependence", _window(desc, payload.dependence)),
            ]
            return [("CERT", kind, head + fields)]

        case CertificateKind.MUTUALLY_ERASABLE_PAIR:
            fields = [
                ("support", _window(desc, payload.first.window)),
                ("background", payload.background),
                ("first", _pattern(payload.first)),
                ("second", _pattern(payload.second)),
                ("target", _window(desc, payload.target)),
                ("image", _pattern(payload.image)),
                ("distinct_images", payload.distinct_images),
            ]
            return [("CERT", kind, head + fields)]

        case CertificateKind.SURJECTIVE_UP_TO | CertificateKind.PRE_INJECTIVE_UP_TO:
            fields = [("window", _window(desc, payload.window))]
            if cert.kind == CertificateKind.PRE_INJECTIVE_UP_TO:
                fields += [
                    ("background", payload.background),
                    ("target", _window(desc, payload.target)),
                ]
            fields += [("count", payload.count), ("full", payload.full_size)]
            return [("CERT", kind, head + fields)]

        case CertificateKind.ENTROPY_TRACE:
            return _entropy_records(kind, head, payload)

        case CertificateKind.AUDIT_VERDICT:
            return _audit_records(kind, head, payload)

        case _:
            raise ValueError(f"Unknown certificate kind: {cert.kind}")


def _entropy_records(kind: str, head, trace: EntropyTrace) -> list[Record]:
    if len(head) == 1:
        head = head + [("q", trace.q), ("shift", "full")]
    records: list[Record] = [
        (
            "CERT",
            kind,
            head
            + [
                ("n", e.n),
                ("size", e.size),
                ("count", e.count),
                ("value", e.value),
                ("max_so_far", m),
            ],
        )
        for e, m in zip(trace.entries, trace.max_so_far)
    ]
    summary = [
        ("entries", len(trace.entries)),
        ("truncated_at", trace.truncated_at),
        ("limsup_proxy", trace.limsup_proxy),
        ("limsup", "max-so-far-over-prefix"),
    ]
    records.append(("CERT", kind, head + summary))
    return records


def _audit_records(kind: str, head, verdict: AuditVerdict) -> list[Record]:
    fields = [
        ("surjectivity", verdict.surjectivity),
        ("pre_injectivity", verdict.pre_injectivity),
        ("left_cancellative", verdict.left_cancellative),
        ("right_cancellative", verdict.right_cancellative),
        ("has_folner", verdict.has_folner),
        ("left_reversible", verdict.left_reversible),
        ("consistency", verdict.consistency),
        ("partial", verdict.partial),
    ]
    records: list[Record] = [("CERT", kind, head + fields)]
    for cert in verdict.certificates():
        records += _cert_records(cert)
    return records


def _records(certs: Sequence[Certificate], results: Iterable[object]):
    records: list[Record] = []
    for cert in certs:
        records += _cert_records(cert)
    for result in results:
        records += _records_for_result(result)
    return records


def _records_for_result(result: object) -> list[Record]:
    match result:
        case Regions(semigroup=desc, omega=omega, K=K, report=r):
            w = partial(_window, desc)
            check = r.formula_check
            formula = "skipped" if check is None else "agrees" if check.ok else "disagrees"
            fields = [
                ("omega", w(omega)),
                ("K", w(K)),
                ("interior", w(r.interior)),
                ("adherence", w(r.adherence)),
                ("boundary", w(r.boundary)),
                ("boundary_star", w(r.boundary_star)),
                ("alpha", r.alpha),
                ("alpha_star", r.alpha_star),
                ("formula", formula),
            ]
            return [("REGIONS", "", fields)]

        case FolnerTrace(semigroup=desc):
            w = partial(_window, desc)
            records: list[Record] = [
                (
                    "FOLNER",
                    "",
                    [
                        ("n", s.n),
                        ("size", s.size),
                        ("ratio", s.ratio),
                        ("alpha", s.alpha),
                        ("alpha_star", s.alpha_star),
                        ("guarantee", s.guarantee_holds),
                    ],
                )
                for s in result.steps
            ]
            summary = [("K", w(result.K)), ("epsilon", result.epsilon), ("first_n", result.first_n)]
            records.append(("FOLNER", "summary", summary))
            return records

        case TilingResult(tiling=t, verdict=v, density=density):
            fields = [
                ("K", _window(t.semigroup, t.K)),
                ("arena_size", len(t.arena)),
                ("tile_count", len(t.tiles)),
                ("tiles", _window(t.semigroup, t.tiles)),
                ("verdict", "ok" if v.ok else v.condition),
                ("witness", ";".join(t.semigroup.format_element(s) for s in v.witness) or None),
            ]
            records = [("TILING", "", fields)]
            if density is not None:
                for n, d in enumerate(density.reports, 1):
                    records.append(
                        (
                            "DENSITY",
                            "",
                            [
                                ("n", n),
                                ("size", d.window_size),
                                ("inside", d.tiles_inside),
                                ("bound", d.bound),
                                ("passed", d.passed),
                                ("touching", d.tiles_touching),
                                ("touching_bound", d.touching_bound_holds),
                                ("excess_bound", d.excess_bound_holds),
                            ],
                        )
                    )
                records.append(("DENSITY", "summary", [("threshold", density.threshold)]))
            return records

        case JobSpec():
            fields = [
                ("name", result.name),
                ("kind", result.kind),
                ("semigroup", result.semigroup.describe()),
            ]
            return [("EXAMPLE", "", fields)]

        case _:
            raise ValueError(f"Unknown result type: {type(result).__name__}")


def _machine(record: Record) -> str:
    tag, kind, fields = record
    parts = [tag] + ([kind] if kind else [])
    parts += [f"{k}={_value(v).replace(' ', '_')}" for k, v in fields]
    return " ".join(parts)


def _human(record: Record) -> str:
    tag, kind, fields = record
    lines = [f"== {tag}{' ' + kind if kind else ''} =="]
    lines += [f"  {k}: {_value(v)}" for k, v in fields]
    return "\n".join(lines)


def emit_report(
    certs: Sequence[Certificate],
    fmt: ReportFormat | str = ReportFormat.MACHINE,
    results: Iterable[object] = (),
) -> str:
    "Render certificates, then non-certificate results, in the order given"
    fmt = ReportFormat(fmt)
    records = _records(certs, results)
    if not records:
        return "NONE\n" if fmt == ReportFormat.MACHINE else "No certificates or results.\n"
    render = _machine if fmt == ReportFormat.MACHINE else _human
    sep = "\n" if fmt == ReportFormat.MACHINE else "\n\n"
    return sep.join(render(r) for r in records) + "\n"
