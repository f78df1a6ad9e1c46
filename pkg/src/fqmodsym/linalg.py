"""Exact linear algebra for the symbol spaces.

Two coefficient rings, one interface: F_p (numpy int64 arrays, every
operation reduced mod p, so all arithmetic is exact) and Q (numpy object
arrays of Fraction). Plus Smith normal form over Z in plain big integers.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .ffpoly import _is_prime


class PrimeField:
    """Row reduction, kernels, and solving over F_p in int64 arrays.

    Entries stay in [0, p); p is small enough that intermediate products
    (< p^2 * ncols) never approach int64 range.
    """

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    @property
    def tag(self) -> str:
        return f"fp{self.p}"

    @property
    def char(self) -> int:
        return self.p

    def matrix(self, rows, ncols: int | None = None):
        if len(rows) == 0:
            if ncols is None:
                raise ValueError("empty matrix needs explicit ncols")
            return np.zeros((0, ncols), dtype=np.int64)
        m = np.array(rows, dtype=np.int64) % self.p
        if m.ndim != 2:
            raise ValueError("matrix rows must be equal-length sequences")
        return m

    def vector(self, entries):
        return np.array(entries, dtype=np.int64) % self.p

    def zeros(self, r: int, c: int):
        return np.zeros((r, c), dtype=np.int64)

    def identity(self, k: int):
        return np.eye(k, dtype=np.int64)

    def rref(self, M):
        """Reduced row echelon form; returns (R, pivot_columns)."""
        p = self.p
        R = (M % p).astype(np.int64).copy()
        nrows, ncols = R.shape
        pivots = []
        row = 0
        for col in range(ncols):
            if row >= nrows:
                break
            nz = np.nonzero(R[row:, col])[0]
            if nz.size == 0:
                continue
            piv = row + int(nz[0])
            if piv != row:
                R[[row, piv]] = R[[piv, row]]
            inv = pow(int(R[row, col]), -1, p)
            R[row] = (R[row] * inv) % p
            colvals = R[:, col].copy()
            colvals[row] = 0
            mask = colvals != 0
            if mask.any():
                R[mask] = (R[mask] - np.outer(colvals[mask], R[row])) % p
            pivots.append(col)
            row += 1
        return R, tuple(pivots)

    def rank(self, M) -> int:
        return len(self.rref(M)[1])

    def kernel_basis(self, M):
        """Basis vectors of the right kernel, one per free column."""
        R, pivots = self.rref(M)
        ncols = M.shape[1]
        pivset = set(pivots)
        basis = []
        for f in range(ncols):
            if f in pivset:
                continue
            v = np.zeros(ncols, dtype=np.int64)
            v[f] = 1
            for i, pc in enumerate(pivots):
                v[pc] = (-R[i, f]) % self.p
            basis.append(v)
        return basis

    def solve_matrix(self, A, B):
        """X with A @ X = B (free coordinates set to 0); raises if inconsistent."""
        if A.shape[0] != B.shape[0]:
            raise ValueError("shape mismatch")
        na = A.shape[1]
        aug = np.hstack([A, B]) % self.p
        R, pivots = self.rref(aug)
        if any(pc >= na for pc in pivots):
            raise ValueError("inconsistent linear system")
        X = np.zeros((na, B.shape[1]), dtype=np.int64)
        for i, pc in enumerate(pivots):
            X[pc] = R[i, na:]
        return X

    def matmul(self, A, B):
        return (A @ B) % self.p

    def scale(self, c: int, M):
        return (c * M) % self.p

    def add(self, A, B):
        return (A + B) % self.p

    def neg(self, M):
        return (-M) % self.p

    def is_zero(self, M) -> bool:
        return not np.any(M)

    def equal(self, A, B) -> bool:
        return A.shape == B.shape and bool(np.all((A - B) % self.p == 0))

    def column_stack(self, vectors, nrows: int):
        if len(vectors) == 0:
            return np.zeros((nrows, 0), dtype=np.int64)
        return np.column_stack(vectors) % self.p


class RationalField:
    """Same interface over Q, entries Fraction in object arrays."""

    tag = "q"
    char = 0

    def _wrap(self, arr):
        out = np.empty(arr.shape, dtype=object)
        flat_in, flat_out = arr.ravel(), out.ravel()
        for i, x in enumerate(flat_in):
            flat_out[i] = x if isinstance(x, Fraction) else Fraction(x)
        return out

    def matrix(self, rows, ncols: int | None = None):
        if len(rows) == 0:
            if ncols is None:
                raise ValueError("empty matrix needs explicit ncols")
            return np.empty((0, ncols), dtype=object)
        width = len(rows[0])
        out = np.empty((len(rows), width), dtype=object)
        for i, r in enumerate(rows):
            if len(r) != width:
                raise ValueError("ragged rows")
            for j, x in enumerate(r):
                out[i, j] = x if isinstance(x, Fraction) else Fraction(x)
        return out

    def vector(self, entries):
        out = np.empty(len(entries), dtype=object)
        for i, x in enumerate(entries):
            out[i] = x if isinstance(x, Fraction) else Fraction(x)
        return out

    def zeros(self, r: int, c: int):
        out = np.empty((r, c), dtype=object)
        out[...] = Fraction(0)
        return out

    def identity(self, k: int):
        out = self.zeros(k, k)
        for i in range(k):
            out[i, i] = Fraction(1)
        return out

    def rref(self, M):
        R = M.copy()
        nrows, ncols = R.shape
        pivots = []
        row = 0
        for col in range(ncols):
            if row >= nrows:
                break
            piv = None
            for i in range(row, nrows):
                if R[i, col] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            if piv != row:
                R[[row, piv]] = R[[piv, row]]
            R[row] = R[row] * (Fraction(1) / R[row, col])
            for i in range(nrows):
                if i != row and R[i, col] != 0:
                    R[i] = R[i] - R[i, col] * R[row]
            pivots.append(col)
            row += 1
        return R, tuple(pivots)

    def rank(self, M) -> int:
        return len(self.rref(M)[1])

    def kernel_basis(self, M):
        R, pivots = self.rref(M)
        ncols = M.shape[1]
        pivset = set(pivots)
        basis = []
        for f in range(ncols):
            if f in pivset:
                continue
            v = self.zeros(1, ncols)[0]
            v[f] = Fraction(1)
            for i, pc in enumerate(pivots):
                v[pc] = -R[i, f]
            basis.append(v)
        return basis

    def solve_matrix(self, A, B):
        if A.shape[0] != B.shape[0]:
            raise ValueError("shape mismatch")
        na = A.shape[1]
        aug = np.hstack([A, B])
        R, pivots = self.rref(aug)
        if any(pc >= na for pc in pivots):
            raise ValueError("inconsistent linear system")
        X = self.zeros(na, B.shape[1])
        for i, pc in enumerate(pivots):
            X[pc] = R[i, na:]
        return X

    def matmul(self, A, B):
        if A.shape[1] == 0 or B.shape[1] == 0:
            return self.zeros(A.shape[0], B.shape[1])
        return A @ B

    def scale(self, c, M):
        return Fraction(c) * M

    def add(self, A, B):
        return A + B

    def neg(self, M):
        return -M

    def is_zero(self, M) -> bool:
        return all(x == 0 for x in M.ravel())

    def equal(self, A, B) -> bool:
        return A.shape == B.shape and all(x == y for x, y in zip(A.ravel(), B.ravel()))

    def column_stack(self, vectors, nrows: int):
        if len(vectors) == 0:
            return np.empty((nrows, 0), dtype=object)
        return np.column_stack(vectors)


def field_for(ring: str, p: int | None = None):
    """ring is 'fp' (requires p) or 'q'."""
    if ring == "fp":
        if p is None:
            raise ValueError("ring 'fp' needs a characteristic")
        return PrimeField(p)
    if ring == "q":
        return RationalField()
    raise ValueError(f"unknown ring {ring!r}")


def snf_invariant_factors(rows, ncols: int) -> list[int]:
    """Nonzero invariant factors (positive, each dividing the next) of the
    integer matrix given by rows. Plain Python ints throughout, so there is
    no overflow to guard against."""
    A = [[int(x) for x in r] for r in rows]
    m = len(A)
    if m == 0 or ncols == 0:
        return []
    for r in A:
        if len(r) != ncols:
            raise ValueError("ragged rows")
    n = ncols
    t = 0
    out = []
    while t < m and t < n:
        # smallest nonzero entry of the working submatrix becomes the pivot
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
        if best is None:
            break
        bi, bj, _ = best
        if bi != t:
            A[t], A[bi] = A[bi], A[t]
        if bj != t:
            for r in A:
                r[t], r[bj] = r[bj], r[t]

        restart = False
        while True:
            piv = A[t][t]
            # clear the pivot column
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    qq = A[i][t] // piv
                    if qq:
                        A[i] = [a - qq * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:  # smaller remainder: promote it
                        A[t], A[i] = A[i], A[t]
                        dirty = True
                        break
            if dirty:
                continue
            # clear the pivot row
            for j in range(t + 1, n):
                if A[t][j]:
                    qq = A[t][j] // piv
                    if qq:
                        for i in range(t, m):
                            A[i][j] -= qq * A[i][t]
                    if A[t][j]:
                        for i in range(t, m):
                            A[i][t], A[i][j] = A[i][j], A[i][t]
                        dirty = True
                        break
            if not dirty:
                break

        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
        piv = A[t][t]
        # pivot must divide every remaining entry; if not, fold the offending
        # row in and redo this step
        for i in range(t + 1, m):
            if any(x % piv for x in A[i][t + 1 :]):
                A[t] = [a + b for a, b in zip(A[t], A[i])]
                restart = True
                break
        if restart:
            continue
        out.append(piv)
        t += 1
    return out
