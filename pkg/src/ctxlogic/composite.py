"""Bipartite structure of composite propositions.

Composite outcome ``k`` (1-based) of a ``d1 x d2`` device corresponds to
the pair ``(i, j)`` with ``k = (i - 1) * d2 + j``.  For two 2-valued units
this gives the projections ``(p1+p2, p3+p4)`` and ``(p1+p3, p2+p4)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import Infeasible, NotDecomposable, OutOfRange, ShapeMismatch
from .prob_core import Proposition, ScalarLike, distance, format_scalar, to_scalar

QUARTER = Fraction(1, 4)


@dataclass(frozen=True)
class BipartiteShape:
    d1: int = 2
    d2: int = 2

    @property
    def size(self) -> int:
        return self.d1 * self.d2

    def index(self, i: int, j: int) -> int:
        """Composite outcome number for the 1-based pair ``(i, j)``."""
        return (i - 1) * self.d2 + j

    def pair(self, k: int) -> tuple[int, int]:
        return (k - 1) // self.d2 + 1, (k - 1) % self.d2 + 1


TWO_BY_TWO = BipartiteShape(2, 2)


@dataclass(frozen=True)
class PqcForm:
    """``p`` and ``q`` are the true-masses of the two units, ``C`` the context."""

    p: Fraction
    q: Fraction
    C: Fraction

    def __post_init__(self) -> None:
        for name in ("p", "q", "C"):
            object.__setattr__(self, name, to_scalar(getattr(self, name)))

    def to_json(self) -> dict:
        return {"p": format_scalar(self.p), "q": format_scalar(self.q), "C": format_scalar(self.C)}

    @classmethod
    def from_json(cls, obj: dict) -> "PqcForm":
        return cls(to_scalar(obj["p"]), to_scalar(obj["q"]), to_scalar(obj["C"]))


def _shape_for(a: Proposition, shape: Optional[BipartiteShape]) -> BipartiteShape:
    shape = shape or TWO_BY_TWO
    if len(a) != shape.size:
        raise ShapeMismatch(f"{len(a)} outcomes do not fit a {shape.d1}x{shape.d2} device")
    return shape


def _require4(a: Proposition) -> None:
    if len(a) != 4:
        raise ShapeMismatch(f"expected a 4-valued proposition, got {len(a)} outcomes")


def tensor(a: Proposition, b: Proposition) -> Proposition:
    return Proposition(tuple(x * y for x in a for y in b))


def tensor_all(props) -> Proposition:
    props = list(props)
    if not props:
        raise ShapeMismatch("tensor of no propositions")
    out = props[0]
    for p in props[1:]:
        out = tensor(out, p)
    return out


def marginal_first(a: Proposition, shape: Optional[BipartiteShape] = None) -> Proposition:
    s = _shape_for(a, shape)
    return Proposition(tuple(sum(a.probs[i * s.d2:(i + 1) * s.d2], Fraction(0)) for i in range(s.d1)))


def marginal_second(a: Proposition, shape: Optional[BipartiteShape] = None) -> Proposition:
    s = _shape_for(a, shape)
    return Proposition(tuple(sum(a.probs[j::s.d2], Fraction(0)) for j in range(s.d2)))


def context(a: Proposition) -> Fraction:
    """The context variable ``p1*p4 - p2*p3`` of a 4-valued proposition."""
    _require4(a)
    p1, p2, p3, p4 = a.probs
    return p1 * p4 - p2 * p3


def is_decomposable(a: Proposition, shape: Optional[BipartiteShape] = None) -> bool:
    """Whether ``a`` is the tensor product of its two projections.

    On a 2x2 device this is exactly ``context(a) == 0``; larger shapes use
    the rank-1 test on the reshaped probability grid.
    """
    s = _shape_for(a, shape)
    if s == TWO_BY_TWO:
        return context(a) == 0
    return tensor(marginal_first(a, s), marginal_second(a, s)) == a


def decompose(a: Proposition, shape: Optional[BipartiteShape] = None) -> tuple[Proposition, Proposition]:
    if not is_decomposable(a, shape):
        raise NotDecomposable(f"{a} is not a product of its projections")
    return marginal_first(a, shape), marginal_second(a, shape)


def to_pqc(a: Proposition) -> PqcForm:
    _require4(a)
    p1, p2, p3, _ = a.probs
    return PqcForm(p1 + p2, p1 + p3, context(a))


def from_pqc(form: PqcForm) -> Proposition:
    p, q, c = form.p, form.q, form.C
    entries = (p * q + c, p * (1 - q) - c, q * (1 - p) - c, (1 - p) * (1 - q) + c)
    bad = [i for i, e in enumerate(entries, start=1) if e < 0]
    if bad or not (0 <= p <= 1 and 0 <= q <= 1):
        raise Infeasible(
            f"p={format_scalar(p)}, q={format_scalar(q)}, C={format_scalar(c)} "
            f"gives negative entries at outcomes {bad}"
        )
    return Proposition(entries)


def context_family(c: ScalarLike) -> Proposition:
    """The one-parameter family ``[1/4+C, 1/4-C, 1/4-C, 1/4+C]``, ``|C| <= 1/4``."""
    c = to_scalar(c)
    if not -QUARTER <= c <= QUARTER:
        raise OutOfRange(f"C={format_scalar(c)} outside [-1/4, 1/4]")
    return Proposition((QUARTER + c, QUARTER - c, QUARTER - c, QUARTER + c))


def binary(p: ScalarLike) -> Proposition:
    """2-valued proposition ``[p, 1 - p]``."""
    p = to_scalar(p)
    return Proposition((p, 1 - p))


def nearest_product_distance(a: Proposition, grid_denominator: int) -> tuple[Fraction, PqcForm]:
    """Exact grid search for the closest product ``[x, 1-x] (x) [y, 1-y]``.

    ``x`` and ``y`` range over multiples of ``1/grid_denominator``; ties go
    to the smallest ``x`` and then the smallest ``y``.  The argmin is
    returned as a ``PqcForm`` with ``C = 0``.
    """
    _require4(a)
    if grid_denominator < 4:
        raise OutOfRange("grid_denominator must be at least 4")
    g = grid_denominator
    best: Optional[tuple[Fraction, Fraction, Fraction]] = None
    for i in range(g + 1):
        x = Fraction(i, g)
        for j in range(g + 1):
            y = Fraction(j, g)
            d = distance(a, tensor(binary(x), binary(y)))
            if best is None or d < best[0]:
                best = (d, x, y)
    d, x, y = best
    return d, PqcForm(x, y, Fraction(0))
