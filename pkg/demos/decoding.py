"""Decode an evaluation code of a vector fraction with corrupted columns.

Also recovers A^-1 b from a black box that lies at one evaluation point.
Run: python3 demos/decoding.py
"""

from srfr import EvalParams, Polynomial, PrimeField, encode, inject_errors, plswe_pipeline, srfrwe_solve
from srfr.codes import BlackBoxPLS, random_error_pattern
from srfr.sampling import random_points, random_poly, random_poly_matrix, trial_rng

F = PrimeField(10007)
rng = trial_rng(1, 0)

n, N, D, eps = 2, 3, 2, 2
f = N + D + 2 * eps - 1
alphas = random_points(rng, F, f)
v = [random_poly(rng, F, N) for _ in range(n)]
d = Polynomial(F, [3, 1])
word = inject_errors(encode(v, d, alphas), random_error_pattern(rng, F, n, f, eps))

res = srfrwe_solve(word, EvalParams(F, tuple(alphas), n, N, D, eps))
print(f"{f} evaluations, {eps} corrupted")
print(f"decoded v = ({res.v[0]}, {res.v[1]}), d = {res.d}")
print(f"error positions {res.error_positions}, matches sent fraction: {res.matches(v, d)}")

k = 1
A = random_poly_matrix(rng, F, n, n, k + 1)
b = tuple(random_poly(rng, F, k + 1) for _ in range(n))
N = D = n * k + 1
f = N + D + 1
pts = random_points(rng, F, f + 5)
box = BlackBoxPLS(A, b, faults={pts[2]: (1, 0)})
out = plswe_pipeline(box, EvalParams(F, tuple(pts[:f]), n, N, D, 1), spare=pts[f:])
print(f"linear system: decoded d = {out.decode.d}, agrees with Cramer: {out.matches}")
