"""The modular symbol space SM(n, R) and its cuspidal subspace.

SM(n, R) is presented by generators indexed by P^1(A/n) and three relation
families (2-term, 3-term, diagonal). Diagonal relations are pure
identifications, so generator orbits under the diagonal action are
contracted first; the remaining rows are reduced over the coefficient
field to produce a basis and a projection of every generator onto it.

The boundary map sends a generator class, via a determinant-1 lift
(a, b; u, v), to (cusp of a/u) - (cusp of b/v). Cusp classes are found by
a first-seen sweep with an explicit equivalence criterion; every build
checks that the boundary kills all relations integrally and has rank
(number of cusps) - 1 over the working field.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ffpoly import IdealA, Poly, gcd, monicize, xgcd
from .linalg import snf_invariant_factors
from .projline import P1Class, class_lift, diag_sym, p1_enumerate, p1_normalize, three_term_1, three_term_2, two_term


@dataclass
class RelationSet:
    """All presentation rows at a level, with integer coefficients over the
    generator list. kinds tags each row 'two', 'three', or 'diag'."""

    level: IdealA
    classes: list
    rows: list
    kinds: list


def _bump(row: dict, j: int, c: int) -> None:
    v = row.get(j, 0) + c
    if v:
        row[j] = v
    else:
        row.pop(j, None)


def build_relations(n: IdealA) -> RelationSet:
    if n.degree < 1:
        raise ValueError("level must have degree >= 1")
    q = n.q
    classes = p1_enumerate(n)
    idx = {c: i for i, c in enumerate(classes)}
    rows, kinds = [], []
    units = range(1, q)
    for i, c in enumerate(classes):
        row = {i: 1}
        _bump(row, idx[two_term(c)], 1)
        rows.append(row)
        kinds.append("two")

        row = {i: 1}
        _bump(row, idx[three_term_1(c)], 1)
        _bump(row, idx[three_term_2(c)], 1)
        rows.append(row)
        kinds.append("three")

        for d1 in units:
            for d2 in units:
                if d1 == 1 and d2 == 1:
                    continue
                j = idx[diag_sym(c, d1, d2)]
                if j == i:
                    continue  # zero row
                rows.append({i: 1, j: -1})
                kinds.append("diag")
    return RelationSet(n, classes, rows, kinds)


@dataclass
class MergedPresentation:
    """Presentation after contracting diagonal identifications.

    reps: class indices of orbit representatives (ascending).
    rep_position: for each class index, the position of its orbit's
    representative inside reps.
    rows: deduplicated 2-/3-term rows re-indexed over rep positions.
    """

    level: IdealA
    classes: list
    reps: list
    rep_position: list
    rows: list

    @property
    def nreps(self) -> int:
        return len(self.reps)

    def dense_rows(self):
        out = np.zeros((len(self.rows), self.nreps), dtype=np.int64)
        for r, row in enumerate(self.rows):
            for j, c in row.items():
                out[r, j] = c
        return out


def merge_diagonal(rels: RelationSet) -> MergedPresentation:
    nclasses = len(rels.classes)
    parent = list(range(nclasses))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row, kind in zip(rels.rows, rels.kinds):
        if kind != "diag":
            continue
        i, j = row.keys()
        ri, rj = find(i), find(j)
        if ri != rj:
            # keep the smaller class index as the representative
            if ri > rj:
                ri, rj = rj, ri
            parent[rj] = ri

    reps = sorted({find(i) for i in range(nclasses)})
    pos = {r: k for k, r in enumerate(reps)}
    rep_position = [pos[find(i)] for i in range(nclasses)]

    merged, seen = [], set()
    for row, kind in zip(rels.rows, rels.kinds):
        if kind == "diag":
            continue
        out: dict = {}
        for j, c in row.items():
            _bump(out, rep_position[j], c)
        if not out:
            continue
        canon = tuple(sorted(out.items()))
        if canon in seen:
            continue
        seen.add(canon)
        merged.append(out)
    return MergedPresentation(rels.level, rels.classes, reps, rep_position, merged)


@dataclass
class ZStructure:
    invariant_factors: list
    torsion: list
    free_rank: int


def z_structure(rels: RelationSet) -> ZStructure:
    merged = merge_diagonal(rels)
    facs = snf_invariant_factors(merged.dense_rows(), merged.nreps)
    return ZStructure(
        invariant_factors=facs,
        torsion=[d for d in facs if d != 1],
        free_rank=merged.nreps - len(facs),
    )


# ------------------------------------------------------------------- cusps


@dataclass(frozen=True)
class CuspClass:
    """Canonical representative a/c of a cusp orbit; oo stored as (1, 0)."""

    num: Poly
    den: Poly
    level: IdealA

    @classmethod
    def of(cls, num: Poly, den: Poly, level: IdealA) -> "CuspClass":
        if not num and not den:
            raise ValueError("cusp (0, 0) is not a point")
        q = num.q
        if not den:
            return cls(Poly.one(q), Poly.zero(q), level)
        g = gcd(num, den)
        num, den = num // g, den // g
        unit = pow(den.lc, -1, q)
        return cls(unit * num, unit * den, level)

    def __str__(self) -> str:
        return "oo" if not self.den else f"{self.num}/{self.den}"


def cusp_equiv(c1, c2, n: IdealA) -> bool:
    """Whether cusps a1/d1 and a2/d2 are identified by the level group.

    Criterion: some unit scalar l satisfies l*s1*d2 = s2*d1 modulo
    gcd(d1*d2, N), where si inverts ai modulo di.
    """
    N = n.gen
    q = N.q
    one = Poly.one(q)
    a1, d1 = c1
    a2, d2 = c2
    for a, d in ((a1, d1), (a2, d2)):
        if not a and not d:
            raise ValueError("cusp (0, 0) is not a point")
        if gcd(a, d) != one:
            raise ValueError(f"cusp ({a}, {d}) has non-coprime coordinates")
    _, s1, _ = xgcd(a1, d1)  # s1*a1 = 1 mod d1 (exact inverse when d1 = 0)
    _, s2, _ = xgcd(a2, d2)
    m = gcd(d1 * d2, N)
    lhs0 = s1 * d2
    rhs = (s2 * d1) % m
    for lam in range(1, q):
        if (lam * lhs0) % m == rhs:
            return True
    return False


def _cusp_setup(classes, n: IdealA):
    """First-seen cusp representatives and the integer boundary matrix over
    all classes (columns) before orbit contraction."""
    reps: list[CuspClass] = []
    pairs: list[tuple[Poly, Poly]] = []

    def index_of(num, den):
        cc = CuspClass.of(num, den, n)
        for k, rep in enumerate(pairs):
            if cusp_equiv((cc.num, cc.den), rep, n):
                return k
        reps.append(cc)
        pairs.append((cc.num, cc.den))
        return len(reps) - 1

    cols = []
    for c in classes:
        a, b, u, v = class_lift(c)
        plus = index_of(a, u)
        minus = index_of(b, v)
        cols.append((plus, minus))
    B = np.zeros((len(reps), len(classes)), dtype=np.int64)
    for i, (plus, minus) in enumerate(cols):
        B[plus, i] += 1
        B[minus, i] -= 1
    return reps, B


def cusp_classes(n: IdealA) -> list[CuspClass]:
    return _cusp_setup(p1_enumerate(n), n)[0]


# ------------------------------------------------------------------- spaces


class SymSpace:
    """SM(n, R) realized on a basis of free generators.

    gens are all P^1 classes; proj maps each diagonal-orbit representative
    to its coordinate row on the basis; basis lists the class indices of
    the free generators.
    """

    def __init__(self, merged: MergedPresentation, field):
        self.level = merged.level
        self.field = field
        self.classes = merged.classes
        self.class_index = {c: i for i, c in enumerate(merged.classes)}
        self.reps = merged.reps
        self.rep_position = merged.rep_position
        self.merged_rows = merged.rows

        M = field.matrix(merged.dense_rows(), ncols=merged.nreps)
        R, pivots = field.rref(M)
        pivset = set(pivots)
        free = [k for k in range(merged.nreps) if k not in pivset]
        self.dim = len(free)
        self.basis = [merged.reps[k] for k in free]

        # pivot generator = minus its relation row on the free generators
        proj = field.zeros(merged.nreps, self.dim)
        for fi, k in enumerate(free):
            proj[k, fi] = 1
        for i, pc in enumerate(pivots):
            for fi, k in enumerate(free):
                val = R[i, k]
                if field.char:
                    proj[pc, fi] = (-int(val)) % field.char
                else:
                    proj[pc, fi] = -val
        self.proj = proj

        cusp_reps, B_all = _cusp_setup(merged.classes, self.level)
        # boundary must be constant on diagonal orbits
        rep_class_of = [merged.reps[merged.rep_position[i]] for i in range(len(merged.classes))]
        for i in range(len(merged.classes)):
            if not np.array_equal(B_all[:, i], B_all[:, rep_class_of[i]]):
                raise AssertionError("boundary differs within a diagonal orbit")
        self.cusps = cusp_reps
        self.boundary_int = B_all[:, merged.reps]

        # boundary kills every relation row integrally
        if merged.rows:
            prod = self.boundary_int @ merged.dense_rows().T
            if np.any(prod):
                raise AssertionError("boundary does not vanish on relations")

        # boundary of the basis generators, over the field
        self.boundary_basis = field.matrix(self.boundary_int[:, free], ncols=self.dim)
        if field.rank(self.boundary_basis) != len(cusp_reps) - 1:
            raise AssertionError("boundary rank is not (number of cusps) - 1")

        self._cuspidal = None

    # -- coordinates ---------------------------------------------------

    def coords_of_index(self, i: int):
        return self.proj[self.rep_position[i]]

    def coords_of_class(self, c: P1Class):
        return self.coords_of_index(self.class_index[c])

    def coords_of_comb(self, terms: dict):
        """Coordinates of an integer combination {P1Class: coeff}."""
        v = self.field.zeros(1, self.dim)[0]
        for c, coeff in terms.items():
            v = v + coeff * self.coords_of_class(c)
        if self.field.char:
            v = v % self.field.char
        return v

    @property
    def basis_classes(self):
        return [self.classes[i] for i in self.basis]

    def cusp_count(self) -> int:
        return len(self.cusps)

    def cusp_index(self, num: Poly, den: Poly) -> int:
        """Row of the cusp class of num/den in boundary_int."""
        for k, rep in enumerate(self.cusps):
            if cusp_equiv((num, den), (rep.num, rep.den), self.level):
                return k
        raise ValueError(f"{num}/{den} does not reduce to a listed cusp")

    def boundary_of_comb(self, terms: dict):
        """Integer boundary divisor of a combination {P1Class: coeff}."""
        v = np.zeros(len(self.cusps), dtype=np.int64)
        for c, coeff in terms.items():
            v = v + coeff * self.boundary_int[:, self.rep_position[self.class_index[c]]]
        return v

    def cuspidal(self) -> "CuspidalSpace":
        if self._cuspidal is None:
            ker = self.field.kernel_basis(self.boundary_basis)
            include = self.field.column_stack(ker, nrows=self.dim)
            self._cuspidal = CuspidalSpace(self, include, len(ker))
        return self._cuspidal


class CuspidalSpace:
    """SM_0(n, R): kernel of the boundary inside a built SymSpace."""

    def __init__(self, ambient: SymSpace, include, dim: int):
        self.ambient = ambient
        self.include = include  # ambient.dim x dim, columns form the basis
        self.dim = dim
        self.level = ambient.level
        self.field = ambient.field

    def coords_from_ambient(self, vectors):
        """Solve include @ X = vectors (columns must lie in the subspace)."""
        return self.field.solve_matrix(self.include, vectors)


def quotient_basis(rels: RelationSet, field) -> SymSpace:
    return SymSpace(merge_diagonal(rels), field)


def build_space(n: IdealA, field) -> SymSpace:
    return quotient_basis(build_relations(n), field)


# ------------------------------------------------------------------- family


def independent_family(n: IdealA) -> list:
    """The distinguished family: the class of (1:0) together with the
    classes of (u:v) for monic coprime u, v with deg v < deg u < deg(n)/2.
    Deterministic order: by deg u, then u, then deg v, then v."""
    N = n.gen
    q = N.q
    fam = [p1_normalize(Poly.one(q), Poly.zero(q), n)]
    du = 1
    while 2 * du < N.degree:
        for ui in range(q**du, 2 * q**du):
            u = Poly.from_int(q, ui)
            for dv in range(du):
                for vi in range(q**dv, 2 * q**dv):
                    v = Poly.from_int(q, vi)
                    if gcd(u, v) == Poly.one(q):
                        fam.append(p1_normalize(u, v, n))
        du += 1
    return fam
