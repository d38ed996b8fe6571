from fractions import Fraction

import pytest

from semica.datastructure import Window
from semica.errors import InvalidInputError
from semica.semigroups import FreeMonoid, IntegerLattice, NaturalNumbers, ball, box_window
from semica.tiling import Tiling, density_trace, greedy_tiling, tiling_density, verify_tiling


@pytest.fixture
def nat():
    return NaturalNumbers()


@pytest.fixture
def pair_tiling(nat):
    return greedy_tiling(nat, nat.window([0, 1]), nat.window(range(10_000)))


def test_greedy_tiling_picks_evens(pair_tiling):
    assert pair_tiling.tiles.elements == tuple(range(0, 10_000, 2))
    assert verify_tiling(pair_tiling).ok


def test_overlapping_tiles_fail_first_condition(nat):
    tiling = Tiling(nat, nat.window([0, 1]), nat.window(range(6)), Window((0, 1)))
    verdict = verify_tiling(tiling)
    assert not verdict.ok
    assert verdict.condition == "T-1"
    assert verdict.witness == (0, 1)


def test_non_maximal_tiling_fails_second_condition(nat):
    tiling = Tiling(nat, nat.window([0, 1]), nat.window(range(6)), Window((0,)))
    verdict = verify_tiling(tiling)
    assert not verdict.ok
    assert verdict.condition == "T-2"
    assert verdict.witness == (2,)


def test_empty_K_rejected(nat):
    with pytest.raises(InvalidInputError):
        greedy_tiling(nat, nat.window([]), nat.window(range(3)))


def test_density_of_even_tiles(nat, pair_tiling):
    for n in range(2, 40):
        report = tiling_density(nat, pair_tiling.K, pair_tiling.tiles, box_window(nat, n))
        assert report.delta == Fraction(1, 16)
        assert report.tiles_inside == n // 2
        assert report.tiles_inside >= Fraction(n, 16)
        assert report.passed
        assert report.tiles_touching == (n + 1) // 2
        assert report.touching_bound_holds
        assert report.excess_bound_holds


def test_density_trace_threshold(pair_tiling):
    trace = density_trace(pair_tiling, 30)
    assert not trace.reports[0].passed
    assert trace.threshold == 2


def test_tiling_on_integers_and_free_monoid():
    z = IntegerLattice(1)
    tiling = greedy_tiling(z, z.window([0, 1, 2]), z.window(range(-6, 6)))
    assert tiling.tiles.elements == ((-6,), (-3,), (0,), (3,))
    assert verify_tiling(tiling).ok

    free = FreeMonoid(2)
    arena = ball(free, free.generators(), 3)
    tiling = greedy_tiling(free, free.window(["", "a"]), arena)
    assert verify_tiling(tiling).ok


def test_tiling_on_z2_box():
    z2 = IntegerLattice(2)
    K = z2.window([(0, 0), (1, 0), (0, 1)])
    tiling = greedy_tiling(z2, K, box_window(z2, 6))
    assert verify_tiling(tiling).ok
    assert (0, 0) in tiling.tiles


def test_identity_tiles_everything(nat):
    arena = nat.window(range(7))
    tiling = greedy_tiling(nat, nat.window([0]), arena)
    assert tiling.tiles == arena
    report = tiling_density(nat, tiling.K, tiling.tiles, arena)
    assert report.delta == Fraction(1, 4)
    assert report.tiles_inside == 7


def test_second_condition_ignores_the_arena_edge(nat):
    # K·10 = {10, 11} leaves adh_K({0..10}), so 10 is not checked
    tiling = Tiling(nat, nat.window([0, 1]), nat.window(range(11)), nat.window(range(0, 10, 2)))
    assert verify_tiling(tiling).ok

    greedy = greedy_tiling(nat, nat.window([0, 1]), nat.window(range(11)))
    assert greedy.tiles.elements == (0, 2, 4, 6, 8, 10)
    assert verify_tiling(greedy).ok


def test_second_condition_inside_the_arena(nat):
    tiling = Tiling(nat, nat.window([0, 1]), nat.window(range(10)), Window((0,)))
    verdict = verify_tiling(tiling)
    assert verdict.condition == "T-2"
    assert verdict.witness == (2,)
