"""The context variable C = p1*p4 - p2*p3 and decomposable propositions."""
from fractions import Fraction

from ctxlogic import (
    PqcForm,
    context,
    context_family,
    decompose,
    distance,
    from_pqc,
    is_decomposable,
    make_proposition,
    marginal_first,
    marginal_second,
    nearest_product_distance,
    tensor,
    to_pqc,
)

product = tensor(make_proposition(["1/3", "2/3"]), make_proposition(["1/4", "3/4"]))
print("product state", product, "context", context(product), "decomposable", is_decomposable(product))
print("decompose ->", *decompose(product))

corr = make_proposition(["1/2", "0", "0", "1/2"])
print("correlated state", corr, "context", context(corr))
print("(p, q, C) form:", to_pqc(corr).to_json())
print("rebuilt from (1/2, 1/2, 1/8):", from_pqc(PqcForm(Fraction(1, 2), Fraction(1, 2), Fraction(1, 8))))

# Distance to the product of the projections is exactly 2|C| ...
for c in ("1/8", "1/4"):
    a = context_family(c)
    d_marg = distance(a, tensor(marginal_first(a), marginal_second(a)))
    d_grid, arg = nearest_product_distance(a, 16)
    # ... but it is not always the nearest product state.
    print(f"C={c}: to marginal product {d_marg}, nearest on 1/16 grid {d_grid} at a={arg.p}, b={arg.q}")
