"""
Groebner bases, intersections and Hilbert functions
===================================================

The polynomial engine behind every ideal computation in the package.
"""

from plgen.poly import (
    LEX,
    Ideal,
    Ring,
    buchberger,
    hilbert_function,
    ideal_compare,
    intersect_ideals,
    is_groebner,
)

R = Ring.standard(3)
x1, x2, x3 = R.gens()

# twisted-cubic style binomials
gens = [x1**2 - x2 * x3, x1 * x2 - x3**2, x2**2 - x1 * x3]
gb = buchberger(gens)
print("grevlex:", [g.to_str() for g in gb])
print("lex:    ", [g.to_str(LEX) for g in buchberger(gens, LEX)])
print("S-polynomials reduce to zero:", is_groebner(gb))

# intersection by elimination of an auxiliary variable
i = Ideal(R, [x1 - x2, x1 + x2])
j = Ideal(R, [x1 - x3, x1 + x3])
k = intersect_ideals(i, j)
print("I ∩ J =", [g.to_str() for g in k.generators])
print(ideal_compare(k, Ideal(R, [x1, x2 * x3])))

# Hilbert function of the quotient, degree by degree
print([hilbert_function(k, t) for t in range(5)])
