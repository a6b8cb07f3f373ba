import json
from fractions import Fraction as F

import pytest
from hypothesis import given

from ctxlogic.errors import EmptyError, NegativeEntry, NotNormalized, ShapeMismatch
from ctxlogic.prob_core import (
    Proposition,
    distance,
    format_scalar,
    make_proposition,
    to_scalar,
    uniform,
)

from conftest import propositions


def test_make_proposition_valid():
    assert make_proposition([F(1, 2), F(1, 2)]).probs == (F(1, 2), F(1, 2))
    a = make_proposition([F(1, 4) + F(1, 8), F(1, 4) - F(1, 8), F(1, 4) - F(1, 8), F(1, 4) + F(1, 8)])
    assert a.probs == (F(3, 8), F(1, 8), F(1, 8), F(3, 8))


@pytest.mark.parametrize(
    "values, exc",
    [
        ([F(1, 2), F(1, 2), F(1, 2), F(-1, 2)], NegativeEntry),
        ([F(1, 2), F(1, 3)], NotNormalized),
        ([], EmptyError),
    ],
)
def test_make_proposition_errors(values, exc):
    with pytest.raises(exc):
        make_proposition(values)


def test_floats_refused():
    with pytest.raises(TypeError):
        make_proposition([0.5, 0.5])


def test_to_scalar_forms():
    assert to_scalar("3/6") == F(1, 2)
    assert to_scalar(" 2 ") == 2
    assert to_scalar(F(2, 4)) == F(1, 2)
    with pytest.raises(ValueError):
        to_scalar("1/0")
    with pytest.raises(ValueError):
        to_scalar("0.5")


def test_format_scalar_lowest_terms():
    assert format_scalar(F(6, 8)) == "3/4"
    assert format_scalar(F(4, 2)) == "2"
    assert format_scalar(F(-1, 4)) == "-1/4"


def test_uniform():
    assert uniform(2).probs == (F(1, 2),) * 2
    assert uniform(4).probs == (F(1, 4),) * 4
    assert uniform(1).probs == (F(1),)


def test_distance_examples():
    a = make_proposition(["1/2", "1/4", "1/8", "1/8"])
    assert distance(a, a) == 0
    assert distance(make_proposition([1, 0, 0, 0]), make_proposition([0, 0, 0, 1])) == 1


def test_distance_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        distance(uniform(2), uniform(4))


@pytest.mark.parametrize("c1", ["-1/4", "-1/8", "0", "1/8", "1/4"])
@pytest.mark.parametrize("c2", ["-1/4", "-1/8", "0", "1/8", "1/4"])
def test_distance_on_context_family(c1, c2):
    c1, c2 = F(c1), F(c2)

    def fam(c):
        return make_proposition([F(1, 4) + c, F(1, 4) - c, F(1, 4) - c, F(1, 4) + c])

    # each of the 4 slots differs by |c1 - c2|
    assert distance(fam(c1), fam(c2)) == 2 * abs(c1 - c2)


@given(propositions(4), propositions(4), propositions(4))
def test_distance_is_a_bounded_metric(a, b, c):
    assert 0 <= distance(a, b) <= 1
    assert distance(a, b) == distance(b, a)
    assert distance(a, c) <= distance(a, b) + distance(b, c)
    assert (distance(a, b) == 0) == (a == b)


@given(propositions(5))
def test_json_round_trip(a):
    text = json.dumps(a.to_json())
    assert Proposition.from_json(json.loads(text)) == a


def test_json_parses_unreduced():
    a = Proposition.from_json({"probs": ["2/8", "1/4", "2/4"]})
    assert a.to_json() == {"probs": ["1/4", "1/4", "1/2"]}
