"""Exact arithmetic in F_q[T] for prime q.

Polynomials are immutable, stored densely (coefficients ascending, no
trailing zeros), and totally ordered by their base-q integer key so that
every enumeration downstream is reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


_PRIME_CACHE: set[int] = set()


def _check_prime_q(q: int) -> None:
    if q in _PRIME_CACHE:
        return
    if not isinstance(q, int) or not _is_prime(q):
        raise ValueError(f"q must be a prime integer, got {q!r}")
    _PRIME_CACHE.add(q)


_TERM_RE = re.compile(r"^(?:(\d+)\*)?T(?:\^(\d+))?$|^(\d+)$")


class Poly:
    """Element of F_q[T].

    coeffs is an ascending tuple of ints in [0, q) with no trailing zero;
    the zero polynomial has coeffs == ().
    """

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs=()):
        _check_prime_q(q)
        cs = [c % q for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, q: int) -> "Poly":
        return cls(q, ())

    @classmethod
    def one(cls, q: int) -> "Poly":
        return cls(q, (1,))

    @classmethod
    def const(cls, q: int, c: int) -> "Poly":
        return cls(q, (c,))

    @classmethod
    def gen(cls, q: int) -> "Poly":
        """The variable T."""
        return cls(q, (0, 1))

    @classmethod
    def from_int(cls, q: int, n: int) -> "Poly":
        """Inverse of to_int: base-q digits become coefficients."""
        if n < 0:
            raise ValueError("key must be nonnegative")
        cs = []
        while n:
            n, r = divmod(n, q)
            cs.append(r)
        return cls(q, cs)

    @classmethod
    def parse(cls, q: int, text: str) -> "Poly":
        """Parse the textual format, e.g. "T^3+T+1", "2*T^2+1", "0"."""
        _check_prime_q(q)
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial string")
        acc = [0] * 1
        for raw in s.split("+"):
            term = raw.strip()
            m = _TERM_RE.match(term)
            if not m:
                raise ValueError(f"bad monomial {term!r} in {text!r}")
            if m.group(3) is not None:
                coeff, exp = int(m.group(3)), 0
            else:
                coeff = int(m.group(1)) if m.group(1) is not None else 1
                exp = int(m.group(2)) if m.group(2) is not None else 1
            if coeff >= q:
                raise ValueError(f"coefficient {coeff} out of range for q={q}")
            if exp >= len(acc):
                acc.extend([0] * (exp + 1 - len(acc)))
            acc[exp] = (acc[exp] + coeff) % q
        return cls(q, acc)

    # -- basic queries -----------------------------------------------

    @property
    def degree(self):
        """Degree; float('-inf') for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def to_int(self) -> int:
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.q + c
        return n

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.q, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def _cmp_key(self, other) -> int:
        if not isinstance(other, Poly) or other.q != self.q:
            raise TypeError("cannot order polynomials over different fields")
        return other.to_int()

    def __lt__(self, other):
        return self.to_int() < self._cmp_key(other)

    def __le__(self, other):
        return self.to_int() <= self._cmp_key(other)

    def __gt__(self, other):
        return self.to_int() > self._cmp_key(other)

    def __ge__(self, other):
        return self.to_int() >= self._cmp_key(other)

    # -- ring operations ---------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.q != self.q:
                raise ValueError("mixed moduli")
            return other
        if isinstance(other, int):
            return Poly.const(self.q, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.q
        return Poly(self.q, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.q, [(-c) % self.q for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return Poly.zero(self.q)
        a, b = self.coeffs, o.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % self.q
        return Poly(self.q, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero polynomial")
        q = self.q
        db = len(o.coeffs) - 1
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return Poly.zero(q), self
        inv_lc = pow(o.coeffs[-1], -1, q)
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            f = (rem[i] * inv_lc) % q
            if f:
                quot[i - db] = f
                for j, bj in enumerate(o.coeffs):
                    rem[i - db + j] = (rem[i - db + j] - f * bj) % q
        return Poly(q, quot), Poly(q, rem)

    def __floordiv__(self, other):
        dm = divmod(self, other)
        return dm[0] if dm is not NotImplemented else NotImplemented

    def __mod__(self, other):
        dm = divmod(self, other)
        return dm[1] if dm is not NotImplemented else NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.one(self.q)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def frobenius(self) -> "Poly":
        # over F_q the q-th power just spreads coefficients: (sum c_i T^i)^q = sum c_i T^(iq)
        if not self:
            return self
        out = [0] * ((len(self.coeffs) - 1) * self.q + 1)
        for i, c in enumerate(self.coeffs):
            out[i * self.q] = c
        return Poly(self.q, out)

    def evaluate(self, x: int) -> int:
        """Value at the scalar x, reduced into [0, q)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.q
        return acc

    # -- text format --------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                var = "T" if e == 1 else f"T^{e}"
                parts.append(var if c == 1 else f"{c}*{var}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"Poly(q={self.q}, {self})"


def monicize(a: Poly) -> tuple[int, Poly]:
    """Write a = unit * m with m monic; returns (unit, m)."""
    if not a:
        raise ValueError("cannot monicize the zero polynomial")
    u = a.lc
    if u == 1:
        return 1, a
    inv = pow(u, -1, a.q)
    return u, inv * a


def xgcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended gcd: returns (g, s, t) with g monic and g = s*a + t*b."""
    if not a and not b:
        raise ValueError("xgcd(0, 0) is undefined")
    q = a.q
    r0, r1 = a, b
    s0, s1 = Poly.one(q), Poly.zero(q)
    t0, t1 = Poly.zero(q), Poly.one(q)
    while r1:
        qt, rm = divmod(r0, r1)
        r0, r1 = r1, rm
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    unit, g = monicize(r0)
    inv = pow(unit, -1, q)
    return g, inv * s0, inv * t0


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    if not a and not b:
        return a
    return xgcd(a, b)[0]


def gcd3(a: Poly, b: Poly, c: Poly) -> Poly:
    return gcd(gcd(a, b), c)


def invmod(a: Poly, m: Poly) -> Poly:
    """Inverse of a modulo m; requires gcd(a, m) = 1."""
    g, s, _ = xgcd(a, m)
    if g != Poly.one(a.q):
        raise ValueError(f"{a} is not invertible mod {m}")
    return s % m


def powmod(base: Poly, e: int, mod: Poly) -> Poly:
    if e < 0:
        raise ValueError("negative exponent")
    result = Poly.one(base.q)
    b = base % mod
    while e:
        if e & 1:
            result = (result * b) % mod
        b = (b * b) % mod
        e >>= 1
    return result


def enumerate_monic(q: int, d: int, upto: bool = False):
    """Monic polynomials of degree exactly d (or of degree <= d, including 1).

    Deterministic order: by degree, then coefficient-lexicographic with the
    constant term varying fastest (= increasing integer key).
    """
    _check_prime_q(q)
    if d < 0:
        raise ValueError("degree must be >= 0")
    if upto:
        out = []
        for e in range(d + 1):
            out.extend(enumerate_monic(q, e))
        return out
    return [Poly.from_int(q, n) for n in range(q**d, 2 * q**d)]


def is_irreducible(a: Poly) -> bool:
    """Irreducibility of a monic polynomial of degree >= 1.

    Checks gcd(T^(q^i) - T, a) = 1 for i up to deg(a)/2, which rules out
    every monic factor of degree in [1, deg(a)/2].
    """
    if not a.is_monic or a.degree < 1:
        raise ValueError("is_irreducible requires a monic nonconstant polynomial")
    q = a.q
    t = Poly.gen(q)
    x = t % a
    for _ in range(a.degree // 2):
        x = powmod(x, q, a)
        if gcd(x - t, a) != Poly.one(q):
            return False
    return True


def irreducibles(q: int, d: int):
    """Monic irreducibles of degree d, in enumeration order."""
    return [a for a in enumerate_monic(q, d) if is_irreducible(a)]


def carlitz_coeffs(a: Poly):
    """Coefficients (C_{a,0}, ..., C_{a,deg a}) of the twisted polynomial C(a).

    C(a) = sum_k C_{a,k} x^(q^k) is F_q-linear in a; rows for T^i follow
    C_{T*b,k} = T*C_{b,k} + C_{b,k-1}^q.
    """
    if not a:
        raise ValueError("carlitz_coeffs(0) is undefined")
    q = a.q
    t = Poly.gen(q)
    d = len(a.coeffs) - 1
    total = [Poly.zero(q) for _ in range(d + 1)]
    row = [Poly.one(q)]  # C(T^0) = x
    for i in range(d + 1):
        ci = a.coeffs[i]
        if ci:
            for k, rk in enumerate(row):
                total[k] = total[k] + ci * rk
        if i < d:
            nxt = []
            for k in range(len(row) + 1):
                term = t * row[k] if k < len(row) else Poly.zero(q)
                if k > 0:
                    term = term + row[k - 1].frobenius()
                nxt.append(term)
            row = nxt
    return total


def monic_divisors(a: Poly):
    """All monic divisors of a nonzero polynomial, by trial division.

    Ascending integer-key order (degree 0 first, the monic part of a last).
    """
    if not a:
        raise ValueError("zero polynomial has no divisor list")
    q = a.q
    _, m = monicize(a)
    out = []
    for d in range(m.degree + 1):
        for f in enumerate_monic(q, d):
            if not (m % f):
                out.append(f)
    return out


@dataclass(frozen=True)
class IdealA:
    """Nonzero ideal of F_q[T], stored by its monic generator."""

    gen: Poly

    def __post_init__(self):
        if not self.gen or not self.gen.is_monic:
            raise ValueError("ideal generator must be monic and nonzero")

    @classmethod
    def of(cls, a: Poly) -> "IdealA":
        return cls(monicize(a)[1])

    @property
    def q(self) -> int:
        return self.gen.q

    @property
    def degree(self) -> int:
        return self.gen.degree

    def reduce(self, x: Poly) -> Poly:
        return x % self.gen

    def contains(self, x: Poly) -> bool:
        return not (x % self.gen)

    def __str__(self) -> str:
        return str(self.gen)


@lru_cache(maxsize=None)
def ideal_is_prime(n: IdealA) -> bool:
    return is_irreducible(n.gen)
