"""Propositions are exact probability vectors; distance is total variation."""
from fractions import Fraction

from ctxlogic import distance, make_proposition, uniform

# A 2-valued proposition: true with probability 2/3.
a = make_proposition(["2/3", "1/3"])
print("a =", a)

# A 4-valued proposition of a two-unit device.
b = make_proposition(["3/8", "1/8", "1/8", "3/8"])
print("b =", b, "  as JSON:", b.to_json())

# Validation is exact; there is no tolerance.
try:
    make_proposition(["1/2", "1/3"])
except ValueError as exc:
    print("rejected:", exc)

print("D(b, uniform) =", distance(b, uniform(4)))
print("D([1,0,0,0], [0,0,0,1]) =", distance(make_proposition([1, 0, 0, 0]), make_proposition([0, 0, 0, 1])))
print("D is at most 1:", distance(make_proposition([1, 0]), make_proposition([0, 1])) == Fraction(1))
