"""Logical connectives as admissible maps on tensor products.

The 4-valued outcomes of a two-unit device are ordered as a diamond,
``1 > {2, 3} > 4`` (1 = both units true, 4 = both false).  Conjunction
and disjunction are the selectors sending a pair of outcomes to its meet
and join; the closed forms below are the expanded pushforwards and are
checked against the selectors in the test suite.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .admissible import AdmissibleMatrix, apply
from .composite import tensor_all
from .errors import ShapeMismatch
from .prob_core import Proposition

# outcome -> (first unit true?, second unit true?)
_BITS = {1: (1, 1), 2: (1, 0), 3: (0, 1), 4: (0, 0)}
_OUTCOME = {bits: k for k, bits in _BITS.items()}


def diamond_meet(i: int, j: int) -> int:
    (a1, a2), (b1, b2) = _BITS[i], _BITS[j]
    return _OUTCOME[(a1 & b1, a2 & b2)]


def diamond_join(i: int, j: int) -> int:
    (a1, a2), (b1, b2) = _BITS[i], _BITS[j]
    return _OUTCOME[(a1 | b1, a2 | b2)]


def _pair_selector(op: Callable[[int, int], int]) -> AdmissibleMatrix:
    # tensor index (i - 1) * 4 + j for the operand pair (i, j)
    return AdmissibleMatrix(4, tuple(op(i, j) for i in range(1, 5) for j in range(1, 5)))


MEET = _pair_selector(diamond_meet)
JOIN = _pair_selector(diamond_join)
NEGATION4 = AdmissibleMatrix(4, (4, 3, 2, 1))
NEGATION2 = AdmissibleMatrix(2, (2, 1))
AND2 = AdmissibleMatrix(2, (1, 2, 2, 2))
OR2 = AdmissibleMatrix(2, (1, 1, 1, 2))


def meet_join_selectors() -> tuple[AdmissibleMatrix, AdmissibleMatrix]:
    return MEET, JOIN


@dataclass(frozen=True)
class ConnectiveSpec:
    input_dims: tuple[int, ...]
    selector: AdmissibleMatrix

    def __post_init__(self) -> None:
        dims = tuple(int(d) for d in self.input_dims)
        if not dims or any(d < 1 for d in dims):
            raise ShapeMismatch(f"bad input dims {dims}")
        if math.prod(dims) != self.selector.cols:
            raise ShapeMismatch(
                f"selector has {self.selector.cols} columns but inputs span {math.prod(dims)} outcomes"
            )
        object.__setattr__(self, "input_dims", dims)

    @property
    def arity(self) -> int:
        return len(self.input_dims)

    @property
    def output_dim(self) -> int:
        return self.selector.rows

    def to_json(self) -> dict:
        return {**self.selector.to_json(), "input_dims": list(self.input_dims)}

    @classmethod
    def from_json(cls, obj: dict) -> "ConnectiveSpec":
        return cls(tuple(obj["input_dims"]), AdmissibleMatrix.from_json(obj))


def apply_connective(spec: ConnectiveSpec, props: Sequence[Proposition]) -> Proposition:
    dims = tuple(len(p) for p in props)
    if dims != spec.input_dims:
        raise ShapeMismatch(f"connective expects inputs {spec.input_dims}, got {dims}")
    return apply(spec.selector, tensor_all(props))


def _require(n: int, *props: Proposition) -> None:
    for p in props:
        if len(p) != n:
            raise ShapeMismatch(f"expected a {n}-valued proposition, got {len(p)} outcomes")


def negation4(a: Proposition) -> Proposition:
    _require(4, a)
    p1, p2, p3, p4 = a
    return Proposition((p4, p3, p2, p1))


def conjunction4(a: Proposition, b: Proposition) -> Proposition:
    _require(4, a, b)
    p1, p2, p3, p4 = a
    q1, q2, q3, q4 = b
    return Proposition((
        p1 * q1,
        p1 * q2 + p2 * q1 + p2 * q2,
        p1 * q3 + p3 * q1 + p3 * q3,
        p2 * q3 + p3 * q2 + p4 + q4 - p4 * q4,
    ))


def disjunction4(a: Proposition, b: Proposition) -> Proposition:
    _require(4, a, b)
    p1, p2, p3, p4 = a
    q1, q2, q3, q4 = b
    return Proposition((
        p3 * q2 + p2 * q3 + p1 + q1 - p1 * q1,
        p4 * q2 + p2 * q4 + p2 * q2,
        p4 * q3 + p3 * q4 + p3 * q3,
        p4 * q4,
    ))


def not2(a: Proposition) -> Proposition:
    _require(2, a)
    return Proposition((a[1], a[0]))


def and2(a: Proposition, b: Proposition) -> Proposition:
    _require(2, a, b)
    pq = a[0] * b[0]
    return Proposition((pq, 1 - pq))


def or2(a: Proposition, b: Proposition) -> Proposition:
    _require(2, a, b)
    p, q = a[0], b[0]
    return Proposition((p + q - p * q, (1 - p) * (1 - q)))


# named built-ins: name -> (closed-form function, equivalent selector spec)
BUILTINS: dict[str, tuple[Callable[..., Proposition], ConnectiveSpec]] = {
    "not4": (negation4, ConnectiveSpec((4,), NEGATION4)),
    "and4": (conjunction4, ConnectiveSpec((4, 4), MEET)),
    "or4": (disjunction4, ConnectiveSpec((4, 4), JOIN)),
    "not2": (not2, ConnectiveSpec((2,), NEGATION2)),
    "and2": (and2, ConnectiveSpec((2, 2), AND2)),
    "or2": (or2, ConnectiveSpec((2, 2), OR2)),
}


def builtin(name: str) -> Callable[..., Proposition]:
    try:
        return BUILTINS[name][0]
    except KeyError:
        raise KeyError(f"unknown connective {name!r}; known: {', '.join(BUILTINS)}") from None
