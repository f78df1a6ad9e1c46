"""The projective line P^1(A/n) for A = F_q[T].

Classes (u:v) are pairs of residues mod the monic generator N, coprime to
the level as a triple, up to scaling by units of A/n. Each class stores one
canonical representative so classes can be compared, hashed, and indexed.

Canonical form: v = 0 becomes (1, 0); otherwise the pair is scaled so the
second coordinate is the monic gcd g of v and N, and the first coordinate
is minimized (by integer key) over the remaining unit scalings, which are
exactly the units congruent to 1 mod N/g. For prime n this degenerates to
(u*v^-1 mod N, 1) and (1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffpoly import IdealA, Poly, gcd, gcd3, ideal_is_prime, invmod, monic_divisors, xgcd


@dataclass(frozen=True)
class P1Class:
    u: Poly
    v: Poly
    level: IdealA

    def __post_init__(self):
        # cheap sanity only; canonicality is normalization's contract
        if self.u.degree >= self.level.degree or self.v.degree >= self.level.degree:
            raise ValueError("class coordinates must be reduced mod the level")

    @property
    def key(self) -> tuple[int, int]:
        return (self.v.to_int(), self.u.to_int())

    def __str__(self) -> str:
        return f"({self.u}:{self.v})"


def _lift_to_unit(N: Poly, d: Poly, a: Poly) -> Poly:
    """Lift a unit a mod d (d a divisor of N) to a unit mod N.

    Splits N = u*v with gcd(u, v) = 1, every prime factor of u dividing d,
    and gcd(v, d) = 1; then CRT gives w = a mod u, w = 1 mod v.
    """
    q = N.q
    u, v = Poly.one(q), N
    g = gcd(v, d)
    while g.degree > 0:
        u = u * g
        v = v // g
        g = gcd(v, g)
    _, x, y = xgcd(u, v)
    return (u * x + a * y * v) % N


def p1_normalize(u: Poly, v: Poly, n: IdealA) -> P1Class:
    """Canonical representative of the class of (u, v) in P^1(A/n)."""
    N = n.gen
    q = N.q
    u = u % N
    v = v % N
    if gcd3(u, v, N) != Poly.one(q):
        raise ValueError(f"({u}, {v}) is not coprime to the level {N}")
    if not v:
        return P1Class(Poly.one(q), Poly.zero(q), n)
    g, _, s = xgcd(N, v)  # s*v = g mod N, s a unit mod N/g
    if g == Poly.one(q):
        return P1Class((u * invmod(v, N)) % N, g, n)
    w = _lift_to_unit(N, N // g, s % (N // g))
    u1 = (w * u) % N
    # remaining freedom: units t = 1 mod N/g; pick the smallest u1*t
    cof = N // g
    best = None
    for k in range(q**g.degree):
        t = Poly.one(q) + Poly.from_int(q, k) * cof
        if gcd(t, N) != Poly.one(q):
            continue
        cand = (u1 * t) % N
        if best is None or cand.to_int() < best.to_int():
            best = cand
    return P1Class(best, g, n)


def p1_enumerate(n: IdealA) -> list[P1Class]:
    """All classes of P^1(A/n), each exactly once, in a deterministic order.

    (1:0) first; then for each monic divisor g of N (ascending, g != N) the
    classes with canonical second coordinate g, in first-seen order as the
    first coordinate sweeps residues ascending.
    """
    N = n.gen
    q = N.q
    out = [P1Class(Poly.one(q), Poly.zero(q), n)]
    if ideal_is_prime(n):
        # every nonzero residue is invertible: classes are (u:1)
        out.extend(P1Class(Poly.from_int(q, i), Poly.one(q), n) for i in range(q**N.degree))
        return out
    for g in monic_divisors(N):
        if g == N:
            continue
        seen = set()
        for i in range(q**N.degree):
            u = Poly.from_int(q, i)
            if gcd(u, g) != Poly.one(q):
                continue
            c = p1_normalize(u, g, n)
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out


def two_term(c: P1Class) -> P1Class:
    """(u:v) -> (-v:u)."""
    return p1_normalize(-c.v, c.u, c.level)


def three_term_1(c: P1Class) -> P1Class:
    """(u:v) -> (v:-u-v)."""
    return p1_normalize(c.v, -c.u - c.v, c.level)


def three_term_2(c: P1Class) -> P1Class:
    """(u:v) -> (-u-v:u)."""
    return p1_normalize(-c.u - c.v, c.u, c.level)


def diag_sym(c: P1Class, d1: int, d2: int) -> P1Class:
    """(u:v) -> (d1*u : d2*v) for nonzero scalars d1, d2."""
    q = c.level.q
    if d1 % q == 0 or d2 % q == 0:
        raise ValueError("diagonal scalars must be nonzero")
    return p1_normalize(d1 * c.u, d2 * c.v, c.level)


def p1_sym(c: P1Class, which: str, d1: int | None = None, d2: int | None = None) -> P1Class:
    if which == "two_term":
        return two_term(c)
    if which == "three_term_1":
        return three_term_1(c)
    if which == "three_term_2":
        return three_term_2(c)
    if which == "diag":
        return diag_sym(c, d1, d2)
    raise ValueError(f"unknown symmetry {which!r}")


def class_lift(c: P1Class) -> tuple[Poly, Poly, Poly, Poly]:
    """A determinant-1 matrix (a, b; u, v) over A whose bottom row is the
    stored representative. Exists because canonical reps have gcd(u, v) = 1
    in A."""
    g, s, t = xgcd(c.u, c.v)
    if g != Poly.one(c.level.q):
        raise ValueError(f"representative {c} has non-coprime coordinates")
    # s*u + t*v = 1, so det(t, -s; u, v) = t*v + s*u = 1
    return t, -s, c.u, c.v
