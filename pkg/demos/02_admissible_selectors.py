"""Admissible matrices: 0/1 with one 1 per column, stored as column -> row maps."""
from ctxlogic import apply, as_dense, compose, count_selectors, enumerate_selectors, identity, make_admissible
from ctxlogic.composite import context_family

swap = make_admissible(4, [2, 1, 3, 4])
for row in as_dense(swap):
    print(row)

a = context_family("1/8")
print("A(1/8)        =", a)
print("swap applied  =", apply(swap, a))
print("swap o swap is identity:", compose(swap, swap) == identity(4))

# one-place operations of an N-valued logic number N**N
for n in (2, 3, 4):
    print(f"{n}-valued one-place operations:", count_selectors(n, n))
print("first three 2x4 selectors:", [str(g) for g, _ in zip(enumerate_selectors(2, 4), range(3))])
