"""Predicted pivot degrees of a relation basis, compared with a random instance.

For generic M the shifted pivot degrees depend only on the shift and the
degrees f of the invariant factors a_n | ... | a_1 of the moduli.  Run: python3 demos/degree_prediction.py
"""

from srfr import ModuliSet, PrimeField, generic_pivot_degrees, nice_form, relation_basis
from srfr.sampling import random_divisor_chain, random_poly, trial_rng

F = PrimeField(10007)
shift = (0, 2, 4)
rng = trial_rng(0, 0)

for f in [(6, 1, 0), (3, 0, 0), (3, 3, 1)]:
    prof = generic_pivot_degrees(f, shift)
    taken = " ".join(str(m) for m, ok in prof.selection if ok)
    skipped = " ".join(str(m) for m, ok in prof.selection if not ok) or "none"
    print(f"f = {f}: delta = {prof.pivot_degrees}, rho = {prof.row_degrees}")
    print(f"  selected {taken}; skipped {skipped}")

    nf = nice_form(f, shift)
    print("  closed form", "applies" if nf.applies else f"not applicable ({', '.join(nf.failed)})")

    mods = ModuliSet(random_divisor_chain(rng, F, f))
    M = [tuple(random_poly(rng, F, fi) for fi in f) for _ in shift]
    print(f"  random instance gives delta = {relation_basis(M, mods, shift).pivot_degrees}")
