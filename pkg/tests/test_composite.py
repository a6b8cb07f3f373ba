import itertools
import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from ctxlogic.composite import (
    BipartiteShape,
    PqcForm,
    binary,
    context,
    context_family,
    decompose,
    from_pqc,
    is_decomposable,
    marginal_first,
    marginal_second,
    nearest_product_distance,
    tensor,
    to_pqc,
)
from ctxlogic.errors import Infeasible, NotDecomposable, OutOfRange, ShapeMismatch
from ctxlogic.prob_core import distance, make_proposition, uniform

from conftest import propositions

C_VALUES = [F(x) for x in ("-1/4", "-1/8", "0", "1/8", "1/4")]
GRID = [F(x) for x in ("0", "1/4", "1/3", "1/2", "2/3")]


def test_tensor_examples():
    b = make_proposition(["1/3", "2/3"])
    assert tensor(make_proposition([1, 0]), b).probs == (F(1, 3), F(2, 3), 0, 0)
    assert tensor(uniform(2), uniform(2)) == uniform(4)
    assert tensor(make_proposition([1, 0]), uniform(2)).probs == (F(1, 2), F(1, 2), 0, 0)


def test_shape_index_convention():
    s = BipartiteShape(2, 2)
    assert [s.pair(k) for k in range(1, 5)] == [(1, 1), (1, 2), (2, 1), (2, 2)]
    s = BipartiteShape(2, 3)
    assert all(s.index(*s.pair(k)) == k for k in range(1, 7))


def test_projections_match_printed_formulas():
    a = make_proposition(["1/10", "2/10", "3/10", "4/10"])
    assert marginal_first(a).probs == (F(3, 10), F(7, 10))   # p1+p2, p3+p4
    assert marginal_second(a).probs == (F(4, 10), F(6, 10))  # p1+p3, p2+p4


@pytest.mark.parametrize("c", C_VALUES)
def test_context_family(c):
    a = context_family(c)
    assert marginal_first(a) == marginal_second(a) == uniform(2)
    assert context(a) == c
    assert is_decomposable(a) == (c == 0)


def test_context_family_range():
    with pytest.raises(OutOfRange):
        context_family(F(3, 10))


@given(propositions(3), propositions(4))
def test_general_shape_round_trip(a, b):
    t = tensor(a, b)
    shape = BipartiteShape(3, 4)
    assert marginal_first(t, shape) == a
    assert marginal_second(t, shape) == b
    assert is_decomposable(t, shape)


def test_marginal_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        marginal_first(uniform(6))
    with pytest.raises(ShapeMismatch):
        context(uniform(2))


def test_context_examples():
    assert context(make_proposition(["1/2", "0", "0", "1/2"])) == F(1, 4)
    assert context(make_proposition(["1/2", "1/2", "0", "0"])) == 0


def test_context_of_products_vanishes_on_grid():
    # bidegree (2, 2) polynomial; 5 points per variable decide it
    for x, y in itertools.product(GRID, repeat=2):
        assert context(tensor(binary(x), binary(y))) == 0


def test_decompose():
    assert decompose(uniform(4)) == (uniform(2), uniform(2))
    assert decompose(make_proposition(["1/2", "1/2", "0", "0"])) == (make_proposition([1, 0]), uniform(2))
    with pytest.raises(NotDecomposable):
        decompose(context_family(F(1, 8)))


def test_general_shape_decomposability_agrees_with_context():
    pts = [make_proposition([F(w, 3) for w in ws])
           for ws in itertools.product(range(4), repeat=4) if sum(ws) == 3]
    for a in pts:
        assert is_decomposable(a, BipartiteShape(2, 2)) == (context(a) == 0)
        assert (tensor(marginal_first(a), marginal_second(a)) == a) == (context(a) == 0)


def test_from_pqc_examples():
    assert from_pqc(PqcForm(F(1, 2), F(1, 2), F(1, 8))).probs == (F(3, 8), F(1, 8), F(1, 8), F(3, 8))
    for x, y in itertools.product(GRID, repeat=2):
        assert from_pqc(PqcForm(x, y, 0)) == tensor(binary(x), binary(y))
    with pytest.raises(Infeasible):
        from_pqc(PqcForm(1, F(1, 2), F(1, 8)))


@given(propositions(4))
def test_pqc_round_trip(a):
    form = to_pqc(a)
    assert from_pqc(form) == a
    assert to_pqc(from_pqc(form)) == form
    assert PqcForm.from_json(form.to_json()) == form


@given(propositions(4))
def test_distance_to_marginal_product_is_twice_context(a):
    product = tensor(marginal_first(a), marginal_second(a))
    assert distance(a, product) == 2 * abs(context(a))


def _nearest_oracle(a, g):
    # independent brute force: TV = 1 - sum of entrywise minima
    best = None
    for i, j in itertools.product(range(g + 1), repeat=2):
        x, y = F(i, g), F(j, g)
        prod = [x * y, x * (1 - y), (1 - x) * y, (1 - x) * (1 - y)]
        d = 1 - sum(min(u, v) for u, v in zip(a, prod))
        if best is None or d < best[0]:
            best = (d, x, y)
    return best


@pytest.mark.parametrize("c, g, expected", [
    # frozen from _nearest_oracle
    (F(1, 4), 4, (F(7, 16), F(1, 4), F(1, 4))),
    (F(1, 8), 8, (F(15, 64), F(3, 8), F(3, 8))),
    (F(-1, 4), 8, (F(7, 16), F(1, 4), F(5, 8))),
    (F(0), 8, (F(0), F(1, 2), F(1, 2))),
])
def test_nearest_product_distance(c, g, expected):
    a = context_family(c)
    assert _nearest_oracle(a, g) == expected
    d, form = nearest_product_distance(a, g)
    assert (d, form.p, form.q, form.C) == expected + (0,)


def test_nearest_product_is_not_the_marginal_product():
    a = context_family(F(1, 4))
    d, _ = nearest_product_distance(a, 100)
    assert d < distance(a, tensor(marginal_first(a), marginal_second(a)))
    # the continuous infimum for this state is sqrt(2) - 1
    assert math.sqrt(2) - 1 <= d < math.sqrt(2) - 1 + 0.01


def test_nearest_product_decomposable_is_zero():
    a = tensor(binary(F(1, 4)), binary(F(3, 4)))
    d, form = nearest_product_distance(a, 4)
    assert d == 0 and (form.p, form.q) == (F(1, 4), F(3, 4))


def test_nearest_product_requires_grid():
    with pytest.raises(OutOfRange):
        nearest_product_distance(uniform(4), 3)


@given(st.integers(0, 6), st.integers(0, 6))
def test_product_states_are_decomposable(i, j):
    t = tensor(binary(F(i, 6)), binary(F(j, 6)))
    assert is_decomposable(t)
    assert decompose(t) == (binary(F(i, 6)), binary(F(j, 6)))
