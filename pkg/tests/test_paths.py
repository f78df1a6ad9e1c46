import random

import numpy as np
import pytest

from fqmodsym.ffpoly import IdealA, Poly, gcd
from fqmodsym.paths import CuspPoint, convergents, path_to_symbols
from fqmodsym.projline import class_lift

SEED = 20240817

LEVELS = [(2, "T^3+T+1"), (2, "T^2+T"), (2, "T^4+T+1"), (3, "T^3+2*T+2")]


def P(q, s):
    return Poly.parse(q, s)


def ideal(q, s):
    return IdealA(Poly.parse(q, s))


def rand_point(q, rng, dmax=4):
    while True:
        num = Poly.from_int(q, rng.randrange(0, q ** (dmax + 1)))
        den = Poly.from_int(q, rng.randrange(0, q ** (dmax + 1)))
        if num or den:
            return CuspPoint.of(num, den)


# ------------------------------------------------------------- convergents


def test_convergents_frozen_q2():
    got = convergents(P(2, "T^2+1"), P(2, "T"))
    want = [(P(2, "1"), P(2, "0")), (P(2, "T"), P(2, "1")), (P(2, "T^2+1"), P(2, "T"))]
    assert got == want


def test_convergents_polynomial_case():
    for q, us in ((2, "T^3+T"), (3, "2*T^2+T+1"), (2, "0")):
        u = P(q, us)
        assert convergents(u, Poly.one(q)) == [(Poly.one(q), Poly.zero(q)), (u, Poly.one(q))]


def test_convergents_rejects_bad_input():
    with pytest.raises(ValueError):
        convergents(P(2, "T"), P(2, "0"))
    with pytest.raises(ValueError):
        convergents(P(2, "T^2+T"), P(2, "T"))


@pytest.mark.parametrize("q", [2, 3, 5])
def test_convergents_random_properties(q):
    rng = random.Random(SEED + q)
    for _ in range(300):
        a = Poly.from_int(q, rng.randrange(0, q**5))
        c = Poly.from_int(q, rng.randrange(1, q**5))
        g = gcd(a, c)
        a, c = a // g, c // g
        conv = convergents(a, c)
        assert conv[0] == (Poly.one(q), Poly.zero(q))
        assert conv[-1] == (a, c)
        for (pp, qp), (pk, qk) in zip(conv, conv[1:]):
            det = pk * qp - pp * qk
            assert det.degree == 0  # a unit of F_q[T]
        # denominators strictly increase in degree after the first step
        degs = [qk.degree for _, qk in conv[1:]]
        assert degs == sorted(degs)


# -------------------------------------------------------------- cusp points


def test_cusp_point_normalization():
    pt = CuspPoint.of(P(2, "T^3"), P(2, "T^2+T"))
    assert (str(pt.num), str(pt.den)) == ("T^2", "T+1")
    pt3 = CuspPoint.of(P(3, "T+1"), P(3, "2*T"))
    assert pt3.den.is_monic and (str(pt3.num), str(pt3.den)) == ("2*T+2", "T")
    assert CuspPoint.of(P(2, "T"), P(2, "0")) == CuspPoint.infinity(2)
    assert CuspPoint.infinity(2).is_infinity
    assert str(CuspPoint.infinity(2)) == "oo"
    with pytest.raises(ValueError):
        CuspPoint.of(P(2, "0"), P(2, "0"))


# -------------------------------------------------------------- base cases


def test_path_same_point_is_empty():
    n = ideal(2, "T^3+T+1")
    r = CuspPoint.of(P(2, "T"), P(2, "T+1"))
    assert path_to_symbols(r, r, n) == {}
    assert path_to_symbols(CuspPoint.infinity(2), CuspPoint.infinity(2), n) == {}


def test_path_infinity_to_zero():
    n = ideal(2, "T^3+T+1")
    comb = path_to_symbols(CuspPoint.infinity(2), CuspPoint.of(P(2, "0"), P(2, "1")), n)
    assert len(comb) == 1
    ((c, coeff),) = comb.items()
    assert str(c) == "(1:0)" and coeff == 1
    space = __import__("fqmodsym.symspace", fromlist=["build_space"])
    # boundary is (cusp 0) - (cusp oo)
    sp = space.build_space(n, __import__("fqmodsym.linalg", fromlist=["PrimeField"]).PrimeField(2))
    b = sp.boundary_of_comb(comb)
    i0 = sp.cusp_index(P(2, "0"), P(2, "1"))
    ioo = sp.cusp_index(P(2, "1"), P(2, "0"))
    assert b[i0] == 1 and b[ioo] == -1 and np.count_nonzero(b) == 2


def test_path_zero_to_reciprocal_is_generator(store):
    # prime level: [0, 1/u] lands exactly on the class of (u:1)
    space = store.space(2, "T^5+T^2+1", "fp")
    n = space.level
    for us in ("T", "T+1", "T^2+T+1", "T^3+T+1"):
        u = P(2, us)
        comb = path_to_symbols(
            CuspPoint.of(P(2, "0"), P(2, "1")), CuspPoint.of(P(2, "1"), u), n
        )
        got = space.coords_of_comb(comb)
        want = space.coords_of_comb({__import__("fqmodsym.projline", fromlist=["p1_normalize"]).p1_normalize(u, Poly.one(2), n): 1})
        assert np.array_equal(got, want)


# --------------------------------------------------------------- invariants


@pytest.mark.parametrize("q,ns", LEVELS)
def test_boundary_compatibility(q, ns, store):
    space = store.space(q, ns, "fp")
    n = space.level
    rng = random.Random(SEED + 11 * q + n.degree)
    for _ in range(500):
        r = rand_point(q, rng)
        s = rand_point(q, rng)
        b = space.boundary_of_comb(path_to_symbols(r, s, n))
        want = np.zeros(space.cusp_count(), dtype=np.int64)
        want[space.cusp_index(s.num, s.den)] += 1
        want[space.cusp_index(r.num, r.den)] -= 1
        assert np.array_equal(b, want), (str(r), str(s))


@pytest.mark.parametrize("q,ns", LEVELS)
def test_path_additivity(q, ns, store):
    n = ideal(q, ns)
    rng = random.Random(SEED + q)
    for ring in ("fp", "q"):
        space = store.space(q, ns, ring)
        for _ in range(100):
            r, s, t = (rand_point(q, rng) for _ in range(3))
            lhs = space.coords_of_comb(path_to_symbols(r, s, n)) + space.coords_of_comb(
                path_to_symbols(s, t, n)
            )
            if space.field.char:
                lhs = lhs % space.field.char
            rhs = space.coords_of_comb(path_to_symbols(r, t, n))
            assert np.array_equal(lhs, rhs)


def _rand_gamma0(n, rng, words=6):
    """Random element of the level group as a word in elementary matrices."""
    q = n.q
    N = n.gen
    one, zero = Poly.one(q), Poly.zero(q)
    a, b, c, d = one, zero, zero, one
    for _ in range(words):
        kind = rng.randrange(3)
        if kind == 0:
            x = Poly.from_int(q, rng.randrange(0, q**3))
            e, f, g, h = one, x, zero, one
        elif kind == 1:
            z = Poly.from_int(q, rng.randrange(0, q**2))
            e, f, g, h = one, zero, N * z, one
        else:
            e, f, g, h = Poly.const(q, rng.randrange(1, q)), zero, zero, Poly.const(
                q, rng.randrange(1, q)
            )
        a, b, c, d = a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h
    return a, b, c, d


@pytest.mark.parametrize("q,ns", LEVELS)
def test_gamma0_invariance(q, ns, store):
    space = store.space(q, ns, "fp")
    n = space.level
    rng = random.Random(SEED + 7 * q + n.degree)
    for _ in range(60):
        a, b, c, d = _rand_gamma0(n, rng)
        assert not (c % n.gen)
        r = rand_point(q, rng, dmax=3)
        s = rand_point(q, rng, dmax=3)
        gr = CuspPoint.of(a * r.num + b * r.den, c * r.num + d * r.den)
        gs = CuspPoint.of(a * s.num + b * s.den, c * s.num + d * s.den)
        lhs = space.coords_of_comb(path_to_symbols(gr, gs, n))
        rhs = space.coords_of_comb(path_to_symbols(r, s, n))
        assert np.array_equal(lhs, rhs), (str(r), str(s))


@pytest.mark.parametrize("q,ns", LEVELS)
def test_path_reproduces_every_generator(q, ns, store):
    for ring in ("fp", "q"):
        space = store.space(q, ns, ring)
        n = space.level
        for cls in space.classes:
            a, b, u, v = class_lift(cls)
            comb = path_to_symbols(CuspPoint.of(b, v), CuspPoint.of(a, u), n)
            got = space.coords_of_comb(comb)
            want = space.coords_of_class(cls)
            assert np.array_equal(got, want), str(cls)
