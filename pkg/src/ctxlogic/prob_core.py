"""Exact probabilistic propositions.

A proposition over ``N`` logical outcomes is a probability vector -- the
diagonal of a normalized diagonal matrix.  All arithmetic goes through
:class:`fractions.Fraction`, so every identity checked elsewhere in the
package is decided exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Sequence, Union

from .errors import EmptyError, NegativeEntry, NotNormalized, ShapeMismatch

ExactScalar = Fraction
ScalarLike = Union[int, Fraction, str]


def to_scalar(value: ScalarLike) -> Fraction:
    """Coerce ``value`` to an exact rational.

    Accepts ints, rationals and strings of the form ``"a"`` or ``"a/b"``
    (unreduced fractions allowed).  Floats are refused on purpose.
    """
    if type(value) is Fraction:
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not probabilities")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


def format_scalar(value: Fraction) -> str:
    """Lowest-terms text form: ``"3/8"``, ``"0"``, ``"-1/4"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Proposition:
    """Probability vector over ``len(probs)`` outcomes (outcome 1 first)."""

    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        probs = tuple(to_scalar(p) for p in self.probs)
        if not probs:
            raise EmptyError("a proposition needs at least one outcome")
        for i, p in enumerate(probs, start=1):
            if p < 0:
                raise NegativeEntry(f"outcome {i} has negative probability {format_scalar(p)}")
        total = sum(probs, Fraction(0))
        if total != 1:
            raise NotNormalized(f"probabilities sum to {format_scalar(total)}, not 1")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def _trusted(cls, probs: tuple[Fraction, ...]) -> "Proposition":
        """Build without re-validation; callers must have checked the invariants."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "probs", probs)
        return obj

    @cached_property
    def scaled(self) -> tuple[int, tuple[int, ...]]:
        """``(D, (k_1, ..., k_N))`` with ``p_i = k_i / D`` and ``D`` the lcm of denominators."""
        den = math.lcm(*(p.denominator for p in self.probs))
        return den, tuple(p.numerator * (den // p.denominator) for p in self.probs)

    @property
    def n(self) -> int:
        return len(self.probs)

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.probs)

    def __getitem__(self, index):
        return self.probs[index]

    def __str__(self) -> str:
        return "[" + ", ".join(format_scalar(p) for p in self.probs) + "]"

    def to_json(self) -> dict:
        return {"probs": [format_scalar(p) for p in self.probs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Proposition":
        return make_proposition(obj["probs"])


@lru_cache(maxsize=1 << 16)
def exact_ratio(num: int, den: int) -> Fraction:
    """Memoized ``Fraction(num, den)``; selector application produces many repeats."""
    return Fraction(num, den)


def make_proposition(values: Iterable[ScalarLike]) -> Proposition:
    return Proposition(tuple(values))


def uniform(n: int) -> Proposition:
    if n < 1:
        raise EmptyError("outcome count must be positive")
    return Proposition((Fraction(1, n),) * n)


def point_mass(n: int, outcome: int) -> Proposition:
    """All mass on ``outcome`` (1-based) out of ``n``."""
    if not 1 <= outcome <= n:
        raise ShapeMismatch(f"outcome {outcome} not in 1..{n}")
    return Proposition(tuple(Fraction(int(i == outcome)) for i in range(1, n + 1)))


def check_same_length(*props: Sequence) -> int:
    lengths = {len(p) for p in props}
    if len(lengths) != 1:
        raise ShapeMismatch(f"outcome counts differ: {sorted(lengths)}")
    return lengths.pop()


def distance(a: Proposition, b: Proposition) -> Fraction:
    """Total-variation distance, half the L1 distance of the vectors."""
    check_same_length(a, b)
    return sum((abs(p - q) for p, q in zip(a, b)), Fraction(0)) / 2
