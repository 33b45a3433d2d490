"""
Exact linear algebra over the rationals
=======================================

Row reduction, kernels and intersections of spans of linear forms,
all in exact rational arithmetic.
"""

from plgen.exact import intersect_spans, kernel_basis, normalize_form, rref


def fmt(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


# a dependent pair of rows collapses to one
rows, pivots, r = rref([[1, 1], [2, 2]])
print([fmt(v) for v in rows], pivots, r)

# the kernel of x1 - x2 is two-dimensional
for v in kernel_basis([[1, -1, 0]]):
    print("kernel vector", fmt(v))

# span{x1 - x2, x1 + x2} and span{x1 - x3, x1 + x3} share only x1
print([fmt(v) for v in intersect_spans([[1, -1, 0], [1, 1, 0]], [[1, 0, -1], [1, 0, 1]])])

# hyperplanes are identified up to scaling
print(fmt(normalize_form(["3/2", 3, 0])))
