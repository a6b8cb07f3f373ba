"""4-valued negation, conjunction, disjunction and their 2-valued shadows."""
from ctxlogic import (
    conjunction4,
    disjunction4,
    make_proposition,
    marginal_first,
    marginal_second,
    meet_join_selectors,
    negation4,
    uniform,
)
from ctxlogic.connectives import and2, or2

a = make_proposition(["1/2", "1/4", "1/8", "1/8"])
b = uniform(4)
print("not a   =", negation4(a))
print("a and b =", conjunction4(a, b))
print("a or b  =", disjunction4(a, b))

meet, join = meet_join_selectors()
print("meet selector (4x16):", meet.col_map)
print("join selector (4x16):", join.col_map)

# projections commute with the connectives
for name, proj in (("first", marginal_first), ("second", marginal_second)):
    print(f"{name} unit: proj(a and b) = {proj(conjunction4(a, b))}, "
          f"and2(proj a, proj b) = {and2(proj(a), proj(b))}")
    print(f"{name} unit: proj(a or b)  = {proj(disjunction4(a, b))}, "
          f"or2(proj a, proj b)  = {or2(proj(a), proj(b))}")
