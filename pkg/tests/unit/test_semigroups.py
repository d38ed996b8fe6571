import itertools
from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semica.datastructure import AnalysisConfig, Window
from semica.errors import BudgetExceededError, InvalidInputError, NoFolnerSequenceError
from semica.semigroups import (
    BicyclicMonoid,
    FiniteSemigroup,
    FreeMonoid,
    IntegerLattice,
    NaturalLattice,
    NaturalNumbers,
    ball,
    box_window,
    cancellability_audit,
    folner_window,
    left_divide,
    load_table,
    make_semigroup,
    multiply,
    parse_table,
    right_divide,
)
from semica.semigroups.bicyclic import ONE, P, Q
from tests.unit.strategies import bicyclic_pairs, naturals, words, z2_points


@pytest.fixture
def left_zero_table_file():
    import tests.unit.fixtures
    return resources.files(tests.unit.fixtures).joinpath("left_zero_table.txt")


@pytest.fixture
def bicyclic():
    return BicyclicMonoid()


def test_bicyclic_relations(bicyclic):
    assert multiply(bicyclic, P, Q) == ONE
    assert multiply(bicyclic, Q, P) == (1, 1)
    assert bicyclic.parse_element("qp") == (1, 1)
    assert bicyclic.parse_element("pq") == ONE
    assert bicyclic.parse_element("1") == ONE


def test_bicyclic_left_divide(bicyclic):
    assert left_divide(bicyclic, P, ONE).elements == (Q,)
    assert len(left_divide(bicyclic, Q, ONE)) == 0
    assert left_divide(bicyclic, P, P).elements == (ONE, (1, 1))


@given(bicyclic_pairs, bicyclic_pairs, bicyclic_pairs)
def test_bicyclic_associative(s, t, u):
    b = BicyclicMonoid()
    assert b.multiply(b.multiply(s, t), u) == b.multiply(s, b.multiply(t, u))


@given(bicyclic_pairs, bicyclic_pairs)
def test_bicyclic_division_is_exact(k, w):
    b = BicyclicMonoid()
    lefts = set(b.left_divide(k, w))
    rights = set(b.right_divide(k, w))
    assert all(b.multiply(k, s) == w for s in lefts)
    assert all(b.multiply(s, k) == w for s in rights)
    for s in itertools.product(range(12), repeat=2):
        if b.multiply(k, s) == w:
            assert s in lefts
        if b.multiply(s, k) == w:
            assert s in rights


@given(words, words)
def test_free_monoid_division(u, v):
    free = FreeMonoid(2)
    w = free.multiply(u, v)
    assert left_divide(free, u, w).elements == (v,)
    assert right_divide(free, v, w).elements == (u,)


def test_bicyclic_cancellability_witness(bicyclic):
    verdict = cancellability_audit(bicyclic, P, radius=2)
    assert not verdict.left_cancellable
    assert verdict.right_cancellable
    assert verdict.left_witness == (ONE, (1, 1))
    assert verdict.right_witness is None

    x, y = cancellability_audit(bicyclic, (2, 0), radius=1).right_witness
    assert x != y
    assert bicyclic.multiply(x, (2, 0)) == bicyclic.multiply(y, (2, 0))


def test_cancellability_needs_radius(bicyclic):
    with pytest.raises(InvalidInputError):
        cancellability_audit(bicyclic, P, radius=0)


def test_cancellability_ball_respects_budget(bicyclic):
    config = AnalysisConfig(ball_budget=3)
    with pytest.raises(BudgetExceededError):
        cancellability_audit(bicyclic, P, radius=3, budget=config.ball_budget)
    assert cancellability_audit(bicyclic, P, radius=3, budget=10).left_witness is not None


def test_lattice_families():
    nat = NaturalNumbers()
    assert left_divide(nat, 3, 5).elements == (2,)
    assert len(left_divide(nat, 3, 2)) == 0

    n2 = NaturalLattice(2)
    assert len(box_window(n2, 3)) == 9
    assert len(left_divide(n2, (1, 2), (0, 5))) == 0

    z2 = IntegerLattice(2)
    assert len(folner_window(z2, 1)) == 9
    assert left_divide(z2, (1, -1), (0, 0)).elements == ((-1, 1),)
    assert set(z2.generators()) == {(1, 0), (0, 1), (-1, 0), (0, -1)}


def test_window_is_canonical():
    nat = NaturalNumbers()
    assert nat.window([3, 1, 3]).elements == (1, 3)
    assert FreeMonoid(2).window(["b", "", "ab", "a"]).elements == ("", "a", "b", "ab")
    with pytest.raises(InvalidInputError):
        Window((1, 1))
    with pytest.raises(InvalidInputError):
        nat.window([-1])


def test_folner_availability():
    with pytest.raises(NoFolnerSequenceError):
        folner_window(FreeMonoid(2), 3)
    assert folner_window(FreeMonoid(1), 3).elements == ("", "a", "aa")
    assert len(folner_window(BicyclicMonoid(), 3)) == 9


def test_ball():
    free = FreeMonoid(2)
    assert len(ball(free, free.generators(), 2)) == 7
    assert ball(NaturalNumbers(), [1], 3).elements == (0, 1, 2, 3)


def test_load_table(left_zero_table_file):
    table = load_table(left_zero_table_file)
    assert table.size == 3
    assert table.identity is None
    assert not table.is_monoid
    assert not table.is_left_cancellative
    assert table.is_right_cancellative
    assert not table.is_left_reversible()
    assert table.cancellation_witness(1, left=True) == (0, 1)
    assert parse_table(table.to_text()) == table


def test_table_identity_detected():
    # ({0, 1}, max) with identity 0
    table = FiniteSemigroup.from_rows([[0, 1], [1, 1]])
    assert table.identity == 0
    assert table.is_left_reversible()


def test_non_associative_table_rejected():
    with pytest.raises(InvalidInputError, match="not associative"):
        FiniteSemigroup.from_rows([[1, 0], [0, 0]])


def test_make_semigroup():
    assert make_semigroup("nat_d", 2) == NaturalLattice(2)
    assert make_semigroup("bicyclic") == BicyclicMonoid()
    with pytest.raises(InvalidInputError):
        make_semigroup("group")
    with pytest.raises(InvalidInputError):
        make_semigroup("free_monoid")
    with pytest.raises(InvalidInputError):
        make_semigroup("finite")


_CANCELLABLE = [
    (NaturalNumbers(), naturals),
    (NaturalLattice(2), st.tuples(naturals, naturals)),
    (IntegerLattice(2), z2_points),
    (FreeMonoid(2), words),
    (BicyclicMonoid(), st.integers(0, 5).map(lambda a: (a, 0))),
]


@pytest.mark.parametrize(
    "desc, elements", _CANCELLABLE, ids=["nat", "nat2", "z2", "free", "bicyclic-q"]
)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_left_cancellable_elements_divide_uniquely(desc, elements, data):
    k = data.draw(elements)
    assert desc.is_left_cancellable(k)
    test_ball = ball(desc, desc.generators(), 3)
    targets = set(test_ball) | {desc.multiply(k, s) for s in test_ball}
    for w in targets:
        solutions = left_divide(desc, k, w)
        assert len(solutions) <= 1
        assert all(desc.multiply(k, s) == w for s in solutions)


@pytest.mark.parametrize(
    "rows",
    [
        [[(s + t) % 4 for t in range(4)] for s in range(4)],
        [[0, 1, 2]] * 3,
        [[0, 0], [0, 1]],
    ],
)
def test_left_cancellable_table_elements_divide_uniquely(rows):
    table = FiniteSemigroup.from_rows(rows)
    cancellable = [k for k in range(table.size) if table.is_left_cancellable(k)]
    assert cancellable
    for k in cancellable:
        for w in range(table.size):
            assert len(left_divide(table, k, w)) <= 1
