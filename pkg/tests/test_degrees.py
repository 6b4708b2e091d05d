import itertools

import pytest
from hypothesis import given, strategies as st

from srfr.degrees import feasible, generic_pivot_degrees, nice_form, srfr_witness, witness_matrix
from srfr.field import PrimeField
from srfr.order import MonomialFamily
from srfr.poly import Polynomial
from srfr.reconstruct import SRFRInstance, srfr_solve
from srfr.relation import ModuliSet, relation_basis
from srfr.sampling import random_divisor_chain, random_monic, trial_rng

F = PrimeField(10007)
SHIFT = (0, 2, 4)


def test_feasible_examples():
    assert feasible((5, 5, 3, 3), (8, 4, 4, 0))
    assert feasible((8, 4, 4), (8, 4, 4))
    assert not feasible((4, 1, 0), (3, 3, 1))
    assert feasible((5, 3, 3, 5), (8, 4, 4))  # f is padded, d sorted


@given(st.lists(st.integers(0, 5), min_size=1, max_size=4), st.lists(st.integers(0, 5), min_size=1, max_size=4), st.randoms())
def test_feasible_is_permutation_invariant(d, f, rnd):
    f = f[: len(d)]
    d2 = list(d)
    rnd.shuffle(d2)
    f = sorted(f, reverse=True)
    assert feasible(d, f) == feasible(d2, f)


@pytest.mark.parametrize(
    "f, delta, rho",
    [((6, 1, 0), (5, 2, 0), (5, 4, 4)), ((3, 0, 0), (3, 0, 0), (3, 2, 4)), ((3, 3, 1), (3, 3, 1), (3, 5, 5))],
)
def test_three_situations(f, delta, rho):
    prof = generic_pivot_degrees(f, SHIFT)
    assert prof.pivot_degrees == delta and prof.row_degrees == rho and prof.rank == sum(f)


def test_feasible_length_mismatch():
    with pytest.raises(ValueError):
        feasible((1,), (1, 1))


def test_rank_out_of_range():
    with pytest.raises(ValueError):
        generic_pivot_degrees((3, 3, 1), SHIFT, 8)
    with pytest.raises(ValueError):
        generic_pivot_degrees((3, 3, 1), SHIFT, -1)
    assert generic_pivot_degrees((3, 3, 1), SHIFT, 0).pivot_degrees == (0, 0, 0)


def test_selection_trace_situation_three():
    prof = generic_pivot_degrees((3, 3, 1), SHIFT)
    got = [(str(m), t) for m, t in prof.selection]
    assert got == [
        ("e1", True), ("xe1", True), ("x^2e1", True), ("e2", True), ("x^3e1", False),
        ("xe2", True), ("x^2e2", True), ("e3", True),
    ]


def _lexmin_family(f, shift, r):
    """Smallest feasible family of r monomials, comparing s-TOP-sorted key lists."""
    m = len(shift)
    best = None
    for d in itertools.product(range(r + 1), repeat=m):
        if sum(d) != r or not feasible(d, f):
            continue
        keys = sorted(mon.key(shift) for mon in MonomialFamily(d))
        if best is None or keys < best[0]:
            best = (keys, d)
    return best[1]


def test_greedy_is_lexmin_exhaustive():
    checked = 0
    for m in (1, 2, 3):
        for f in itertools.product(range(4), repeat=m):
            if list(f) != sorted(f, reverse=True):
                continue
            for shift in itertools.product((-2, 0, 1, 3), repeat=m):
                for r in range(sum(f) + 1):
                    assert generic_pivot_degrees(f, shift, r).pivot_degrees == _lexmin_family(f, shift, r)
                    checked += 1
    assert checked > 1000


def test_nice_form_examples():
    nf = nice_form((6, 1, 0), SHIFT)
    assert nf.row_degrees == (5, 4, 4) and nf.applies and (nf.quotient, nf.remainder) == (4, 1)
    nf = nice_form((3, 0, 0), SHIFT)
    assert not nf.applies and "quotient-bound" in nf.failed
    nf = nice_form((3, 3, 1), SHIFT)
    assert nf.failed == ("prefix-bound",)
    # quotient-bound and prefix-bound hold but the implied pivot degrees (0, 2) are infeasible
    nf = nice_form((1, 1), (0, -2))
    assert nf.failed == ("dominance",) and nf.row_degrees == (0, 0)
    assert generic_pivot_degrees((1, 1), (0, -2)).row_degrees == (1, -1)
    # SRFR shift with sum f = sum N + D - 1
    nf = nice_form((3, 3, 0), (-2, -2, -3))
    assert nf.applies and nf.row_degrees == (0, 0, -1)


@given(
    st.lists(st.integers(0, 5), min_size=1, max_size=4).map(lambda f: sorted(f, reverse=True)),
    st.lists(st.integers(-3, 3), min_size=4, max_size=4),
)
def test_nice_form_agrees_when_it_applies(f, shift):
    shift = shift[: len(f)]
    nf = nice_form(f, shift)  # raises if the closed form and greedy disagree
    if nf.applies:
        assert nf.row_degrees == generic_pivot_degrees(f, shift).row_degrees


@pytest.mark.parametrize("f, delta", [((6, 1, 0), (5, 2, 0)), ((3, 0, 0), (3, 0, 0)), ((3, 3, 1), (3, 3, 1))])
@pytest.mark.parametrize("seed", range(5))
def test_generic_matrix_realizes_prediction(f, delta, seed):
    rng = trial_rng(seed, 0)
    mods = ModuliSet(random_divisor_chain(rng, F, f))
    M = [tuple(Polynomial(F, rng.integers(0, F.p, size=fi).tolist()) for fi in f) for _ in range(3)]
    assert relation_basis(M, mods, SHIFT).pivot_degrees == delta


def test_coprime_moduli_follow_their_invariant_factors():
    # pairwise coprime moduli of degrees (3, 3, 1) present K[x]/(a1 a2 a3), i.e. f = (7, 0, 0)
    rng = trial_rng(0, 1)
    mods = ModuliSet([Polynomial(F, [1, 0, 0, 1]), Polynomial(F, [2, 0, 0, 1]), Polynomial(F, [5, 1])])
    M = [tuple(Polynomial(F, rng.integers(0, F.p, size=3).tolist()) for _ in range(3)) for _ in range(3)]
    got = relation_basis(M, mods, SHIFT).pivot_degrees
    assert got == generic_pivot_degrees((7, 0, 0), SHIFT).pivot_degrees != (3, 3, 1)


def test_witness_borrows_columns():
    x = Polynomial.x(F)
    O, Z = Polynomial.one(F), Polynomial.zero(F)
    w = witness_matrix((8, 4, 4), (5, 5, 3, 3), F)
    assert w.M == [(O, Z, Z), (x, O, Z), (Z, Z, O), (x**6, Z, x)]
    assert w.independent


def test_witness_identity_when_no_borrowing():
    O, Z = Polynomial.one(F), Polynomial.zero(F)
    w = witness_matrix((3, 2), (3, 2, 0), F)
    assert w.M == [(O, Z), (Z, O), (Z, Z)] and w.trace == () and w.independent


def test_witness_rejects_infeasible():
    with pytest.raises(ValueError):
        witness_matrix((3, 3, 1), (4, 1, 0), F)


def _non_increasing(draw_max):
    return st.lists(st.integers(0, draw_max), min_size=1, max_size=3).map(lambda v: sorted(v, reverse=True))


@given(_non_increasing(5), st.integers(0, 2), st.data())
def test_random_feasible_witness_is_independent(f, extra, data):
    m = len(f) + extra
    d = data.draw(st.lists(st.integers(0, 6), min_size=m, max_size=m).map(lambda v: sorted(v, reverse=True)))
    if not feasible(d, f):
        return
    mods = ModuliSet([random_monic(trial_rng(sum(f), len(d)), PrimeField(7), fi) for fi in f])
    assert witness_matrix(f, d, PrimeField(7), mods).independent


@pytest.mark.parametrize("f, N, D", [((4,), (3,), 2), ((3, 3), (2, 2), 3), ((3, 2), (3, 2), 1), ((5, 4, 4), (3, 3, 4), 4)])
def test_srfr_witness_gives_unique_instance(f, N, D):
    w = srfr_witness(f, N, D, F)
    assert w.independent
    mods = ModuliSet([Polynomial.monomial(F, fi) for fi in f])
    space = srfr_solve(SRFRInstance(mods, w.u, N, D))
    assert space.rank == 1
    if D == 1:
        assert all(q.is_zero() for q in w.u)
