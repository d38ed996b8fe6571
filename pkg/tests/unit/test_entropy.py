import math
from dataclasses import replace
from fractions import Fraction

import pytest

from semica.analysis import (
    adherence_bound,
    entropy_deficit_bound,
    estimate_entropy,
    find_goe_pattern,
    find_mutually_erasable,
    replay_certificate,
    translate_missing_pattern,
    window_inequality,
)
from semica.automaton import shift_automaton
from semica.cli import examples_catalog, get_example, run_job
from semica.datastructure import AnalysisConfig
from semica.errors import InvalidInputError, NoFolnerSequenceError
from semica.geometry import interior
from semica.semigroups import BicyclicMonoid, FreeMonoid, IntegerLattice, NaturalNumbers, box_window
from semica.semigroups.bicyclic import P
from semica.tiling import greedy_tiling, tiling_density


@pytest.fixture
def z():
    return IntegerLattice(1)


@pytest.fixture
def z_and():
    return get_example("z-and").automaton


def test_full_shift_entropy_is_log_q():
    trace = estimate_entropy(NaturalNumbers(), None, 2, 6)
    assert [e.count for e in trace.entries] == [2, 4, 8, 16, 32, 64]
    assert all(e.value == math.log(2) for e in trace.entries)

    trace = estimate_entropy(IntegerLattice(2), None, 3, 3)
    assert trace.limsup_proxy == math.log(3)


def test_surjective_shift_has_full_entropy():
    trace = estimate_entropy(NaturalNumbers(), shift_automaton(1), 2, 8)
    assert all(e.value == math.log(2) for e in trace.entries)
    assert trace.first_n_below(math.log(2)) is None
    assert not trace.truncated


def test_and_entropy_drops_below_log_2(z, z_and):
    trace = estimate_entropy(z, z_and, 2, 4, windows=box_window)
    assert [e.count for e in trace.entries] == [2, 4, 7, 12]
    assert trace.first_n_below(math.log(2)) == 3
    assert trace.max_so_far == (math.log(2),) * 4
    assert trace.entries[2].value == pytest.approx(math.log(7) / 3)

    K = z.window([0, 1, 2])
    tiling = greedy_tiling(z, K, z.window(range(-20, 20)))
    density = tiling_density(z, K, tiling.tiles, box_window(z, 12))
    assert density.passed
    bound = entropy_deficit_bound(2, K, density.delta)
    assert bound == pytest.approx(0.6894, abs=1e-4)
    assert all(e.value <= bound for e in trace.entries[2:])


def test_deficit_bound_constant():
    nat = NaturalNumbers()
    assert entropy_deficit_bound(2, nat.window([0]), Fraction(1, 4)) == pytest.approx(
        0.75 * math.log(2)
    )
    assert entropy_deficit_bound(3, nat.window([0, 1]), 1) < math.log(3)


@pytest.mark.parametrize("q, delta", [(1, Fraction(1, 2)), (2, 0), (2, Fraction(3, 2))])
def test_deficit_bound_rejects_bad_input(q, delta):
    with pytest.raises(InvalidInputError):
        entropy_deficit_bound(q, NaturalNumbers().window([0]), delta)


def test_no_entropy_without_folner():
    with pytest.raises(NoFolnerSequenceError):
        estimate_entropy(FreeMonoid(2), None, 2, 3)


def test_alphabet_must_match(z, z_and):
    with pytest.raises(InvalidInputError):
        estimate_entropy(z, z_and, 3, 3)


def test_entropy_trace_truncates_on_budget(z, z_and):
    trace = estimate_entropy(z, z_and, 2, 8, AnalysisConfig(budget=32), windows=box_window)
    assert trace.truncated
    assert trace.truncated_at == 5
    assert len(trace.entries) == 4


def test_window_inequalities_on_integer_boxes(z):
    for name in ["z-and", "z-xor"]:
        tau = get_example(name).automaton
        for n in range(2, 7):
            F = box_window(z, n)
            assert len(window_inequality(z, tau, F).interior) == n - 1
            bound = adherence_bound(z, tau, F)
            assert len(bound.adherence) == n + 1
            assert bound.boundary_star == 2


def _tested_windows(spec):
    if spec.kind == "entropy":
        return [spec.window_at(n) for n in range(2, 7)]
    return spec.schedule()


@pytest.mark.parametrize(
    "spec", [s for s in examples_catalog() if s.automaton is not None], ids=lambda s: s.name
)
def test_window_inequalities_hold(spec):
    desc, tau = spec.semigroup, spec.automaton
    windows = [F for F in _tested_windows(spec) if len(interior(desc, F, tau.memory))]
    assert windows
    for F in windows:
        check = window_inequality(desc, tau, F)
        assert check.interior == interior(desc, F, tau.memory)
        assert check.holds

        bound = adherence_bound(desc, tau, F)
        assert bound.holds
        assert bound.lhs <= bound.rhs + 1e-12
        assert bound.boundary_star == len(bound.adherence) - len(check.interior)


def test_adherence_bound_for_the_shift():
    nat = NaturalNumbers()
    bound = adherence_bound(nat, shift_automaton(1), nat.window(range(6)))
    assert bound.adherence_count == 2**5
    assert bound.boundary_star == 0
    assert bound.window_count == 2**6
    assert bound.holds


def test_translated_goe_pattern_stays_missing(z, z_and):
    cert = find_goe_pattern(z, z_and, z.window(range(3)))
    moved = translate_missing_pattern(z, z_and, cert, (5,))
    assert moved.pattern.window.elements == ((5,), (6,), (7,))
    assert moved.pattern.values == (1, 0, 1)
    assert moved.missing


def test_translated_goe_on_bicyclic():
    b = BicyclicMonoid()
    tau = shift_automaton(P)
    cert = find_goe_pattern(b, tau, b.window([(0, 0), (1, 1)]))
    moved = translate_missing_pattern(b, tau, cert, (0, 2))
    assert moved.pattern.as_dict() == {(0, 2): 0, (1, 3): 1}
    assert moved.missing

    # q is not right-cancellable
    with pytest.raises(InvalidInputError):
        translate_missing_pattern(b, tau, cert, (1, 0))


def test_translate_needs_a_goe_certificate():
    nat = NaturalNumbers()
    tau = shift_automaton(1)
    cert = find_mutually_erasable(nat, tau, nat.window([0]), 0)
    with pytest.raises(InvalidInputError):
        translate_missing_pattern(nat, tau, cert, 1)


def test_xor_keeps_full_entropy(z):
    xor = get_example("z-xor").automaton
    trace = estimate_entropy(z, xor, 2, 12, windows=box_window)
    assert [e.count for e in trace.entries] == [2**n for n in range(1, 13)]
    assert all(e.value == math.log(2) for e in trace.entries)


def test_entropy_job_on_the_catalog():
    spec = replace(get_example("z-and"), n_max=5)
    (cert,) = run_job(spec).certificates
    assert [e.count for e in cert.payload.entries] == [2, 4, 7, 12, 21]
    assert replay_certificate(cert)
