"""
Deciding generation by products of linear forms
===============================================

Compute the vanishing ideal, the blocker ideal and the host-product
ideal of a few small arrangements, then run the full decision.
"""

from plgen.arrangements import (
    SubspaceArrangement,
    blocker_ideal,
    canonical_embedding,
    enlarge_embedding,
    h_product_ideal,
    pl_check,
    vanishing_ideal,
)
from plgen.families import skew_lines


def show(name, ideal):
    print(f"{name:>4}:", ", ".join(g.to_str() for g in ideal.generators))


# two planes given by "crossed" forms: the given host is too poor
a = SubspaceArrangement.from_forms([[[1, -1, 0], [1, 1, 0]], [[1, 0, -1], [1, 0, 1]]], 3)
e = canonical_embedding(a)
show("I_A", vanishing_ideal(a))
show("B", blocker_ideal(e))
show("F", h_product_ideal(e))

# enlarging the host makes x1 available, and then F = I_A
big = enlarge_embedding(e)
print("added hyperplanes:", len(big.host) - len(e.host))
cert = pl_check(a)
print("pl-generated:", cert.verdict)
for row in cert.hilbert_trace:
    print("  degree %d: %d %d" % row)

# three skew lines on a quadric are not pl-generated
cert = pl_check(skew_lines(3))
print("three skew lines:", cert.verdict, "witness", cert.witness.to_str())
