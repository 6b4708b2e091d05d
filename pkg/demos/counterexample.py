"""Walk through an SRFR instance whose solution space has rank two.

Both residues come from the same fraction v/d, yet the degree bounds admit a
second, unrelated solution.  Run: python3 demos/counterexample.py
"""

from srfr import ModuliSet, Polynomial, PrimeField, SRFRInstance, srfr_solve
from srfr.poly import inverse_mod

F = PrimeField(11)
a = Polynomial(F, [2, 1, 8, 1])  # (x - 2)(x - 4)(x - 8)
v = [Polynomial(F, [6, 2]), Polynomial(F, [2, 8])]
d = Polynomial(F, [2, 2, 2])
u = [(vi * inverse_mod(d, a)) % a for vi in v]

inst = SRFRInstance(ModuliSet([a, a]), u, N=(2, 2), D=3)
space = srfr_solve(inst)

print(f"residues u = ({u[0]}, {u[1]})")
print(f"solution module rank {space.rank}, K-dimension {space.kdim}")
for g, r in zip(space.generators, space.row_degrees):
    print(f"  generator with shifted degree {r}: v = ({g[0]}, {g[1]}), d = {g[2]}")

# the fraction we started from is one point of a two-dimensional space
print("original (v, d) lies in the span:", space.contains(tuple(v) + (d,)))
other = (Polynomial.zero(F), Polynomial.zero(F), Polynomial(F, [10, 9, 4]))
print("so does (0, 0, 4x^2 + 9x + 10):", space.contains(other))
