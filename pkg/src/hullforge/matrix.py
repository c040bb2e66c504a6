"""Dense exact linear algebra over a :class:`FieldCtx`."""

from __future__ import annotations

import numpy as np

from .field import FieldCtx


class GfMatrix:
    """An r x c matrix over ``ctx``; entries are element indices.

    The entry array is read-only; every operation returns a new matrix.
    """

    __slots__ = ("ctx", "a")

    def __init__(self, ctx: FieldCtx, entries, cols: int | None = None):
        a = np.array(entries, dtype=np.int64)
        if a.ndim == 1 and cols is not None:
            a = a.reshape(-1, cols) if a.size else np.zeros((0, cols), dtype=np.int64)
        if a.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if a.size and (a.min() < 0 or a.max() >= ctx.q):
            raise ValueError(f"entries outside GF({ctx.q})")
        a.setflags(write=False)
        self.ctx = ctx
        self.a = a

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "GfMatrix":
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "GfMatrix":
        return cls(ctx, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GfMatrix)
            and other.ctx is self.ctx
            and other.shape == self.shape
            and bool(np.array_equal(other.a, self.a))
        )

    def __repr__(self) -> str:
        return f"GfMatrix(GF({self.ctx.q}), {self.rows}x{self.cols})"

    def tolist(self) -> list[list[int]]:
        return self.a.tolist()

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": self.a.ravel().tolist()}

    @classmethod
    def from_json(cls, ctx: FieldCtx, obj: dict) -> "GfMatrix":
        rows, cols = int(obj["rows"]), int(obj["cols"])
        entries = obj["entries"]
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        return cls(ctx, np.array(entries, dtype=np.int64).reshape(rows, cols))

    @property
    def T(self) -> "GfMatrix":
        return GfMatrix(self.ctx, self.a.T)

    def conj(self) -> "GfMatrix":
        """Entrywise x -> x^q, with q the designated subfield order."""
        return GfMatrix(self.ctx, self.ctx.vpow(self.a, self.ctx.base_q))

    def dagger(self) -> "GfMatrix":
        """Conjugate transpose."""
        return self.conj().T

    def __matmul__(self, other: "GfMatrix") -> "GfMatrix":
        return matmul(self, other)

    def vstack(self, other: "GfMatrix") -> "GfMatrix":
        if other.ctx is not self.ctx or other.cols != self.cols:
            raise ValueError("cannot stack matrices with different fields or widths")
        return GfMatrix(self.ctx, np.vstack([self.a, other.a]))

    def select_columns(self, cols) -> "GfMatrix":
        return GfMatrix(self.ctx, self.a[:, list(cols)])

    def is_zero(self) -> bool:
        return not self.a.any()


def matmul(A: GfMatrix, B: GfMatrix) -> GfMatrix:
    ctx = A.ctx
    if B.ctx is not ctx or A.cols != B.rows:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    a, b = A.a, B.a
    r, n, c = A.rows, A.cols, B.cols
    if ctx.m == 1:
        return GfMatrix(ctx, (a @ b) % ctx.p)
    if ctx.p == 2:
        acc = np.zeros((r, c), dtype=np.int64)
        for t in range(n):
            acc ^= ctx.vmul(a[:, t, None], b[None, t, :])
        return GfMatrix(ctx, acc)
    # addition is digitwise mod p, so accumulate digit sums and reduce once
    acc = np.zeros((r, c, ctx.m), dtype=np.int64)
    for t in range(n):
        acc += ctx.digits[ctx.vmul(a[:, t, None], b[None, t, :])]
    return GfMatrix(ctx, (acc % ctx.p) @ ctx.weights)


def rref(M: GfMatrix) -> tuple[GfMatrix, list[int]]:
    """Canonical reduced row echelon form and its pivot columns.

    Zero rows are kept at the bottom so the shape is preserved.
    """
    ctx = M.ctx
    A = M.a.copy()
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = ctx.vmul(A[r], ctx.inv(int(A[r, c])))
        factors = A[:, c].copy()
        factors[r] = 0
        hit = np.flatnonzero(factors)
        if hit.size:
            A[hit] = ctx.vsub(A[hit], ctx.vmul(factors[hit, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return GfMatrix(ctx, A), pivots


def rank(M: GfMatrix) -> int:
    return len(rref(M)[1])


def row_basis(M: GfMatrix) -> GfMatrix:
    """Nonzero rows of the canonical RREF: a canonical basis of the row space."""
    R, piv = rref(M)
    return GfMatrix(M.ctx, R.a[: len(piv)].reshape(len(piv), M.cols))


def kernel(M: GfMatrix) -> GfMatrix:
    """Basis (as rows) of the right null space {x : M x^T = 0}.

    One basis vector per free column, with a 1 in that column.
    """
    ctx = M.ctx
    R, piv = rref(M)
    free = [c for c in range(M.cols) if c not in set(piv)]
    K = np.zeros((len(free), M.cols), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        for j, pc in enumerate(piv):
            K[i, pc] = ctx.neg(int(R.a[j, f]))
    return GfMatrix(ctx, K.reshape(len(free), M.cols))


def rowspace_intersection_dim(A: GfMatrix, B: GfMatrix) -> int:
    if A.cols != B.cols:
        raise ValueError(f"column mismatch: {A.cols} vs {B.cols}")
    return rank(A) + rank(B) - rank(A.vstack(B))


def rowspace_intersection(A: GfMatrix, B: GfMatrix) -> GfMatrix:
    """Canonical RREF basis of rowspace(A) intersected with rowspace(B)."""
    if A.cols != B.cols:
        raise ValueError(f"column mismatch: {A.cols} vs {B.cols}")
    # (x, y) with xA + yB = 0 gives xA = -yB in both spaces
    K = kernel(A.vstack(B).T)
    X = GfMatrix(A.ctx, K.a[:, : A.rows])
    if X.rows == 0:
        return GfMatrix.zeros(A.ctx, 0, A.cols)
    return row_basis(X @ A)


def in_rowspace(M: GfMatrix, vec) -> bool:
    v = GfMatrix(M.ctx, np.asarray(vec, dtype=np.int64).reshape(1, -1))
    return rank(M.vstack(v)) == rank(M)


def det_nonzero(M: GfMatrix) -> bool:
    return M.rows == M.cols and rank(M) == M.rows
