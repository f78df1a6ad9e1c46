"""Cusp-to-cusp paths expanded in presentation generators.

Continued fractions in F_q(T) write any symbol [r, s] with endpoints in
P^1(F_q(T)) as an integer combination of generator classes; this is the
mechanism that makes the generator map surjective.  Orientation is pinned
by the boundary contract: the combination for [r, s] has boundary
(cusp of s) - (cusp of r).
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffpoly import IdealA, Poly, gcd, monicize
from .projline import P1Class, p1_normalize

__all__ = ["CuspPoint", "convergents", "path_to_symbols"]


@dataclass(frozen=True)
class CuspPoint:
    """A point of P^1(F_q(T)): num/den in lowest terms, infinity = (1, 0)."""

    num: Poly
    den: Poly

    @classmethod
    def of(cls, num: Poly, den: Poly) -> "CuspPoint":
        if not num and not den:
            raise ValueError("0/0 is not a point of the projective line")
        if not den:
            return cls(Poly.one(num.q), Poly.zero(num.q))
        g = gcd(num, den)
        num, den = num // g, den // g
        unit, den = monicize(den)
        if unit != 1:
            num = pow(unit, -1, num.q) * num
        return cls(num, den)

    @classmethod
    def infinity(cls, q: int) -> "CuspPoint":
        return cls(Poly.one(q), Poly.zero(q))

    @property
    def is_infinity(self) -> bool:
        return not self.den

    def __str__(self) -> str:
        return "oo" if self.is_infinity else f"({self.num})/({self.den})"


def convergents(a: Poly, c: Poly) -> list[tuple[Poly, Poly]]:
    """Continued-fraction convergents of a/c, from (1, 0) down to (a, c).

    Consecutive pairs have unit determinant; the final pair equals (a, c)
    on the nose, not just projectively.
    """
    if not c:
        raise ValueError("denominator must be nonzero")
    if gcd(a, c).degree != 0:
        raise ValueError("expected coprime numerator and denominator")
    q = a.q
    out = [(Poly.one(q), Poly.zero(q))]
    pk_2, qk_2 = Poly.zero(q), Poly.one(q)
    pk_1, qk_1 = out[0]
    x, y = a, c
    while y:
        u, r = divmod(x, y)
        pk = u * pk_1 + pk_2
        qk = u * qk_1 + qk_2
        out.append((pk, qk))
        pk_2, qk_2, pk_1, qk_1 = pk_1, qk_1, pk, qk
        x, y = y, r
    # the loop lands on a unit multiple of (a, c); absorb it
    lam = out[-1][1].lc * pow(c.lc, -1, q) % q
    if lam != 1:
        inv = pow(lam, -1, q)
        out[-1] = (inv * out[-1][0], inv * out[-1][1])
    assert out[-1] == (a, c)
    return out


def _path_from_infinity(pt: CuspPoint, n: IdealA) -> dict[P1Class, int]:
    """[oo, pt] as a generator combination.

    Telescoping over consecutive convergents h_{k-1}, h_k of pt: each edge
    [p_{k-1}/q_{k-1}, p_k/q_k] is the image of a unit-determinant matrix
    with bottom row (q_k, q_{k-1}), hence the class of (q_k : q_{k-1}).
    """
    if pt.is_infinity:
        return {}
    conv = convergents(pt.num, pt.den)
    acc: dict[P1Class, int] = {}
    for (_, qprev), (_, qcur) in zip(conv, conv[1:]):
        c = p1_normalize(qcur, qprev, n)
        acc[c] = acc.get(c, 0) + 1
    return acc


def path_to_symbols(r: CuspPoint, s: CuspPoint, n: IdealA) -> dict[P1Class, int]:
    """Expand [r, s] as {generator class: integer coefficient}.

    [r, s] = [oo, s] - [oo, r]; zero coefficients are dropped.
    """
    acc = _path_from_infinity(s, n)
    for c, coeff in _path_from_infinity(r, n).items():
        acc[c] = acc.get(c, 0) - coeff
    return {c: coeff for c, coeff in acc.items() if coeff}
