"""Shared fixtures: a session-wide store of built spaces (they are immutable,
and several test modules exercise the same levels), plus the level matrix."""

import pytest

from fqmodsym.ffpoly import IdealA, Poly, irreducibles
from fqmodsym.linalg import PrimeField, RationalField
from fqmodsym.symspace import build_relations, quotient_basis

SEED = 20240817

# primes per (q, degree) used across the suite; first-k of the deterministic
# enumeration so every run sees the same levels
PRIMES = {
    (2, 3): [str(p) for p in irreducibles(2, 3)],          # both
    (2, 4): [str(p) for p in irreducibles(2, 4)],          # all three
    (2, 5): [str(p) for p in irreducibles(2, 5)[:2]],
    (2, 6): [str(p) for p in irreducibles(2, 6)[:2]],
    (2, 7): [str(p) for p in irreducibles(2, 7)[:1]],
    (3, 3): [str(p) for p in irreducibles(3, 3)[:2]],
    (3, 4): [str(p) for p in irreducibles(3, 4)[:2]],
    (3, 5): [str(p) for p in irreducibles(3, 5)[:2]],
}

COMPOSITES = [(2, "T^2+T"), (2, "T^3+T^2"), (2, "T^4+T^2+1"), (3, "T^2"), (3, "T^3+2*T^2")]


class Stores:
    def __init__(self):
        self.relsets = {}
        self.spaces = {}

    def relations(self, q, ns):
        key = (q, ns)
        if key not in self.relsets:
            self.relsets[key] = build_relations(IdealA(Poly.parse(q, ns)))
        return self.relsets[key]

    def space(self, q, ns, ring, p=None):
        if ring == "fp" and p is None:
            p = q
        key = (q, ns, ring, p)
        if key not in self.spaces:
            field = PrimeField(p) if ring == "fp" else RationalField()
            self.spaces[key] = quotient_basis(self.relations(q, ns), field)
        return self.spaces[key]


@pytest.fixture(scope="session")
def store():
    return Stores()
