import pytest
from hypothesis import given, strategies as st

from treecut.ilp import IlpInstance, solve_min

from helpers import ilp_by_enumeration, random_ilp


def test_single_variable_lower_bound():
    inst = IlpInstance((("x", 0, 10),), (((1,), ">=", 3),), (1,))
    assert solve_min(inst) == ((3,), 3)


def test_two_variables():
    inst = IlpInstance((("x", 0, 2), ("y", 0, 5)), (((1, 1), ">=", 3),), (1, 1))
    x, val = solve_min(inst)
    assert val == 3 and inst.feasible(x)


def test_infeasible():
    inst = IlpInstance((("x", 0, 1),), (((1,), ">=", 1), ((1,), "<=", 0)), (1,))
    assert solve_min(inst) is None


def test_no_variables():
    assert solve_min(IlpInstance((), (), ())) == ((), 0)
    assert solve_min(IlpInstance((), (((), ">=", 1),), ())) is None


def test_equality_and_negative_objective():
    inst = IlpInstance(
        (("a", -3, 3), ("b", 0, 4)), (((2, 1), "=", 4),), (-1, 1)
    )
    x, val = solve_min(inst)
    assert inst.feasible(x) and val == ilp_by_enumeration(inst)


@pytest.mark.parametrize(
    "variables, cons, obj",
    [
        ((("x", 0, 1.5),), (), (1,)),
        ((("x", 0, 1),), (((1, 2), "<=", 1),), (1,)),
        ((("x", 0, 1),), (((1,), "<", 1),), (1,)),
        ((("x", 0, 1),), (), (1, 1)),
    ],
)
def test_malformed_rows_rejected(variables, cons, obj):
    with pytest.raises(ValueError):
        IlpInstance(variables, cons, obj)


@given(st.randoms(use_true_random=False))
def test_agrees_with_enumeration(rng):
    inst = random_ilp(rng, max_vars=4, max_points=3000)
    got = solve_min(inst)
    ref = ilp_by_enumeration(inst)
    if ref is None:
        assert got is None
    else:
        x, val = got
        assert inst.feasible(x) and inst.value(x) == val == ref
