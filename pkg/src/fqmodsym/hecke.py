"""Hecke operators on symbol spaces, by two independent routes.

Route one expands T_p on generators through the finite matrix set Sigma_p
(upper and lower triangular-dominant matrices of determinant generating p),
dropping the terms that do not define a projective class at the level.
Route two applies the divisor matrices S_p to the defining cusp pair of a
generator and re-expands each image path through continued fractions.  The
two implementations share no code beyond the symbol space itself, so their
agreement is used as the correctness check for both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffpoly import IdealA, Poly, enumerate_monic, gcd, gcd3, monic_divisors
from .paths import CuspPoint, path_to_symbols
from .projline import P1Class, class_lift, p1_normalize
from .symspace import CuspidalSpace, SymSpace

__all__ = [
    "Mat2",
    "HeckeOp",
    "s_matrices",
    "sigma_matrices",
    "merel_image",
    "hecke_merel",
    "hecke_definitional",
    "restrict_cuspidal",
]


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix over F_q[T]."""

    a: Poly
    b: Poly
    c: Poly
    d: Poly

    def det(self) -> Poly:
        return self.a * self.d - self.b * self.c

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}; {self.c}, {self.d}]"


@dataclass
class HeckeOp:
    """A single Hecke operator: matrix columns are images of basis elements."""

    index: IdealA
    matrix: object
    space: object  # SymSpace or CuspidalSpace

    @property
    def label(self) -> str:
        return f"T[{self.index.gen}]"


def s_matrices(p: IdealA, n: IdealA) -> list[Mat2]:
    """The divisor matrices S_p at level n.

    All (a, b; 0, d) with a, d monic, a*d generating p, a coprime to the
    level, deg b < deg d.  Deterministic order: a ascending, then b.
    """
    P, N, q = p.gen, n.gen, p.q
    zero = Poly.zero(q)
    out = []
    for a in monic_divisors(P):
        if gcd(a, N).degree != 0:
            continue
        d = P // a
        for bi in range(q ** d.degree if d.degree > 0 else 1):
            out.append(Mat2(a, Poly.from_int(q, bi), zero, d))
    return out


def sigma_matrices(p: IdealA) -> list[Mat2]:
    """The generator-formula matrices Sigma_p.

    All (a, b; c, d) with a, d monic, deg a > deg b, deg d > deg c and
    a*d - b*c equal to the monic generator of p.  Since deg(bc) < deg(ad),
    the determinant is monic of degree deg a + deg d, so the degree split
    is forced and each split is enumerated directly.
    """
    P, q = p.gen, p.q
    degp = P.degree
    zero = Poly.zero(q)
    out = []
    for da in range(degp + 1):
        dd = degp - da
        for a in enumerate_monic(q, da):
            for d in enumerate_monic(q, dd):
                e = a * d - P
                if not e:
                    # b*c = 0: one of the off-diagonal entries vanishes
                    for ci in range(q**dd):
                        out.append(Mat2(a, zero, Poly.from_int(q, ci), d))
                    for bi in range(1, q**da):
                        out.append(Mat2(a, Poly.from_int(q, bi), zero, d))
                    continue
                # b*c = e != 0: scan the shorter side for divisors
                if da <= dd:
                    for bi in range(1, q**da):
                        b = Poly.from_int(q, bi)
                        c, r = divmod(e, b)
                        if not r and c.degree < dd:
                            out.append(Mat2(a, b, c, d))
                else:
                    for ci in range(1, q**dd):
                        c = Poly.from_int(q, ci)
                        b, r = divmod(e, c)
                        if not r and b.degree < da:
                            out.append(Mat2(a, b, c, d))
    return out


def merel_image(cls: P1Class, mats: list[Mat2], n: IdealA) -> dict[P1Class, int]:
    """Sum of xi(a*u + c*v : b*u + d*v) over mats, dropped where undefined.

    A term is undefined when the image pair shares a factor with the level;
    those terms are skipped, matching the generator-formula convention.
    """
    acc: dict[P1Class, int] = {}
    for m in mats:
        x = m.a * cls.u + m.c * cls.v
        y = m.b * cls.u + m.d * cls.v
        if gcd3(x, y, n.gen).degree != 0:
            continue
        img = p1_normalize(x, y, n)
        acc[img] = acc.get(img, 0) + 1
    return acc


def hecke_merel(p: IdealA, space: SymSpace) -> HeckeOp:
    """T_p through the generator formula."""
    mats = sigma_matrices(p)
    cols = [
        space.coords_of_comb(merel_image(cls, mats, space.level))
        for cls in space.basis_classes
    ]
    return HeckeOp(p, space.field.column_stack(cols, nrows=space.dim), space)


def hecke_definitional(p: IdealA, space: SymSpace) -> HeckeOp:
    """T_p through the divisor action on defining cusp pairs."""
    mats = s_matrices(p, space.level)
    n = space.level
    cols = []
    for cls in space.basis_classes:
        a, b, u, v = class_lift(cls)
        r = CuspPoint.of(b, v)
        s = CuspPoint.of(a, u)
        comb: dict[P1Class, int] = {}
        for m in mats:
            gr = CuspPoint.of(m.a * r.num + m.b * r.den, m.c * r.num + m.d * r.den)
            gs = CuspPoint.of(m.a * s.num + m.b * s.den, m.c * s.num + m.d * s.den)
            for c2, k in path_to_symbols(gr, gs, n).items():
                comb[c2] = comb.get(c2, 0) + k
        cols.append(space.coords_of_comb(comb))
    return HeckeOp(p, space.field.column_stack(cols, nrows=space.dim), space)


def restrict_cuspidal(op: HeckeOp, cusp_space: CuspidalSpace) -> HeckeOp:
    """Matrix of op on the boundary kernel, in the kernel basis.

    Raises if the image of the kernel basis leaves the kernel; that would
    mean the ambient operator is wrong, since Hecke operators commute with
    the boundary map.
    """
    ambient = cusp_space.ambient
    F = ambient.field
    image = F.matmul(op.matrix, cusp_space.include)
    if not F.is_zero(F.matmul(ambient.boundary_basis, image)):
        raise ValueError(f"{op.label} does not stabilize the boundary kernel")
    return HeckeOp(op.index, cusp_space.coords_from_ambient(image), cusp_space)
