from __future__ import annotations

import sys
from dataclasses import dataclass, replace

from semica.analysis import Certificate, CertificateKind, estimate_entropy, myhill_audit
from semica.analysis.search import erasable_or_evidence, goe_or_evidence
from semica.cli.catalog import examples_catalog
from semica.cli.spec_format import JobKind, JobSpec
from semica.datastructure import AnalysisConfig, Window
from semica.geometry import RegionReport, region_calculus, verify_folner_prefix
from semica.semigroups import Semigroup
from semica.tiling import (
    DensityTrace,
    Tiling,
    TilingVerdict,
    density_trace,
    greedy_tiling,
    verify_tiling,
)


def _print(*args):
    print("[Job]", *args, file=sys.stderr)


@dataclass(frozen=True)
class Regions:
    semigroup: Semigroup
    omega: Window
    K: Window
    report: RegionReport


@dataclass(frozen=True)
class TilingResult:
    tiling: Tiling
    verdict: TilingVerdict
    density: DensityTrace | None = None


@dataclass(frozen=True)
class JobResult:
    spec: JobSpec
    certificates: tuple[Certificate, ...]
    results: tuple[object, ...] = ()
    """Regions, FolnerTrace, TilingResult or JobSpec (examples listing)"""


def config_for(spec: JobSpec, base: AnalysisConfig | None = None) -> AnalysisConfig:
    "`base` with the spec's budget and background applied"
    base = base or AnalysisConfig()
    return replace(
        base,
        budget=spec.budget if spec.budget is not None else base.budget,
        background=spec.background,
    ).validate()


def _search(spec: JobSpec, config: AnalysisConfig, find) -> tuple[Certificate, ...]:
    "Walk the schedule until `find` returns a certificate, keeping the evidence on the way"
    certs = []
    for omega in spec.schedule():
        found, evidence = find(omega)
        if found is not None:
            return (found, *certs)
        certs.append(evidence)
    return tuple(certs)


def run_job(spec: JobSpec, config: AnalysisConfig | None = None) -> JobResult:
    config = config_for(spec, config)
    desc, tau = spec.semigroup, spec.automaton
    _print(f"running {spec.kind} job {spec.name or '(unnamed)'} on {desc.describe()}")

    match spec.kind:
        case JobKind.REGIONS:
            report = region_calculus(desc, spec.omega, spec.K, config.ball_budget)
            return JobResult(spec, (), (Regions(desc, spec.omega, spec.K, report),))

        case JobKind.FOLNER:
            trace = verify_folner_prefix(desc, spec.K, spec.n_max, spec.epsilon)
            return JobResult(spec, (), (trace,))

        case JobKind.TILING:
            tiling = greedy_tiling(desc, spec.K, spec.arena)
            density = None
            if spec.n_max is not None:
                density = density_trace(tiling, spec.n_max, lambda _, n: spec.window_at(n))
            return JobResult(spec, (), (TilingResult(tiling, verify_tiling(tiling), density),))

        case JobKind.GOE:
            certs = _search(spec, config, lambda w: goe_or_evidence(desc, tau, w, config))
            return JobResult(spec, certs)

        case JobKind.MEP:
            certs = _search(
                spec,
                config,
                lambda w: erasable_or_evidence(desc, tau, w, config.background, config),
            )
            return JobResult(spec, certs)

        case JobKind.ENTROPY:
            n_max = spec.index_range[1] if spec.index_range is not None else spec.n_max
            shift = None if spec.full_shift else tau
            trace = estimate_entropy(
                desc, shift, spec.q, n_max, config, windows=lambda _, n: spec.window_at(n)
            )
            cert = Certificate(CertificateKind.ENTROPY_TRACE, desc, shift, trace)
            return JobResult(spec, (cert,))

        case JobKind.AUDIT:
            return JobResult(spec, (myhill_audit(desc, tau, spec.schedule(), config),))

        case JobKind.EXAMPLES:
            return JobResult(spec, (), tuple(examples_catalog()))

        case _:
            raise ValueError(f"Unknown job kind: {spec.kind}")
