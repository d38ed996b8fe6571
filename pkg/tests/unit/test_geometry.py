from fractions import Fraction

import pytest
from hypothesis import given, settings

from semica.errors import InvalidInputError
from semica.geometry import (
    adherence,
    folner_ratio,
    interior,
    region_calculus,
    translate,
    verify_folner_prefix,
)
from semica.semigroups import BicyclicMonoid, FreeMonoid, IntegerLattice, NaturalNumbers, folner_window
from semica.semigroups.bicyclic import P
from tests.unit.strategies import finite_sets, naturals, words, z2_points


@pytest.fixture
def nat():
    return NaturalNumbers()


def test_regions_on_naturals(nat):
    report = region_calculus(nat, nat.window(range(10)), nat.window([1, 2]))
    assert report.interior.elements == tuple(range(8))
    assert report.adherence.elements == tuple(range(9))
    assert report.boundary.elements == (8, 9)
    assert report.boundary_star.elements == (8,)
    assert report.alpha == Fraction(1, 5)
    assert report.alpha_star == Fraction(1, 10)

    check = report.formula_check
    assert check is not None and check.ok
    assert check.formula_boundary == report.boundary
    assert check.translation_excess == 3
    assert len(check.outer_part) == 0


def test_regions_on_integers():
    z = IntegerLattice(1)
    omega = z.window([0])
    K = z.window([-1, 1])
    assert adherence(z, omega, K).elements == ((-1,), (1,))
    assert len(interior(z, omega, K)) == 0
    assert translate(z, (2,), omega) == {(2,)}


def test_cross_check_skipped_without_left_cancellability():
    b = BicyclicMonoid()
    report = region_calculus(b, folner_window(b, 2), b.window([P]))
    assert report.formula_check is None
    assert "not left-cancellable" in report.note


def test_empty_inputs_rejected(nat):
    with pytest.raises(InvalidInputError):
        region_calculus(nat, nat.window([]), nat.window([1]))


@settings(max_examples=170, deadline=None)
@given(finite_sets(naturals), finite_sets(naturals, max_size=3))
def test_boundary_formula_on_naturals(omega, K):
    nat = NaturalNumbers()
    report = region_calculus(nat, nat.window(omega), nat.window(K))
    assert report.formula_check.ok


@settings(max_examples=170, deadline=None)
@given(finite_sets(z2_points, max_size=12), finite_sets(z2_points, max_size=3))
def test_boundary_formula_on_z2(omega, K):
    z2 = IntegerLattice(2)
    report = region_calculus(z2, z2.window(omega), z2.window(K))
    assert report.formula_check.ok


@settings(max_examples=170, deadline=None)
@given(finite_sets(words), finite_sets(words, max_size=3))
def test_boundary_formula_on_free_monoid(omega, K):
    free = FreeMonoid(2)
    report = region_calculus(free, free.window(omega), free.window(K))
    assert report.formula_check.ok


def test_folner_trace_on_naturals(nat):
    trace = verify_folner_prefix(nat, nat.window([1]), 30, 0.05)
    assert trace.epsilon == Fraction(1, 20)
    assert trace.first_n == 20
    assert trace.first_n_alpha_below(Fraction(1, 20)) == 20
    assert all(step.guarantee_holds for step in trace.steps)
    assert trace.steps[9].alpha == Fraction(1, 10)
    assert trace.steps[9].alpha_star == 0


def test_folner_trace_on_bicyclic():
    b = BicyclicMonoid()
    trace = verify_folner_prefix(b, b.window(b.generators()), 41, Fraction(1, 20))
    assert trace.first_n == 20
    for step in trace.steps[1:]:
        n = step.n
        assert step.ratio == Fraction(1, n)
        assert step.alpha == Fraction(n + 1, n * n)
        assert step.alpha_star == Fraction(2 * n + 1, n * n)
        assert step.guarantee_holds is None
    assert trace.first_n_alpha_below(Fraction(1, 20)) == 41


def test_folner_constants_on_z2():
    z2 = IntegerLattice(2)
    gens = z2.window(z2.generators())
    trace = verify_folner_prefix(z2, gens, 10, Fraction(1, 20))
    alphas = [step.alpha for step in trace.steps]
    assert alphas == sorted(alphas, reverse=True)
    assert all(step.guarantee_holds for step in trace.steps)

    F = folner_window(z2, 80)
    report = region_calculus(z2, F, gens, cross_check=False)
    assert report.alpha == Fraction(8 * 80, 161**2)
    assert report.alpha_star == Fraction(16 * 80 + 4, 161**2)
    assert report.alpha_star <= Fraction(1, 20)
    assert folner_ratio(z2, F, gens) == Fraction(161, 161**2)


def test_regions_on_integers_with_two_sided_K():
    z = IntegerLattice(1)
    report = region_calculus(z, z.window(range(10)), z.window([-1, 1]))
    assert report.interior == z.window(range(1, 9))
    assert report.adherence == z.window(range(-1, 11))
    assert report.boundary == z.window([0, 9])
    assert report.boundary_star == z.window([-1, 0, 9, 10])
    assert (report.alpha, report.alpha_star) == (Fraction(1, 5), Fraction(2, 5))
    assert report.formula_check.ok


def test_identity_K_has_no_boundary(nat):
    report = region_calculus(nat, nat.window([0, 3, 7]), nat.window([0]))
    assert report.interior == report.adherence == nat.window([0, 3, 7])
    assert report.alpha == report.alpha_star == 0
