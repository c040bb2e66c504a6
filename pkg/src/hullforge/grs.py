"""Generalized Reed-Solomon codes and their dual-membership predicates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import poly
from .errors import PreconditionError
from .field import FieldCtx, field_from_descriptor
from .matrix import GfMatrix, kernel, matmul

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"
KINDS = (EUCLIDEAN, HERMITIAN)


def check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"inner product kind must be one of {KINDS}, got {kind!r}")
    return kind


def sigma(ctx: FieldCtx, x, kind: str):
    """Identity for the Euclidean product, x -> x^q for the Hermitian one."""
    if check_kind(kind) == EUCLIDEAN:
        return np.asarray(x, dtype=np.int64)
    return ctx.vpow(x, ctx.base_q)


def compute_u(ctx: FieldCtx, a: Sequence[int]) -> tuple[int, ...]:
    """u_i = prod_{j != i} (a_i - a_j)^-1 for distinct points ``a``."""
    a = np.asarray(a, dtype=np.int64)
    n = len(a)
    if n < 2:
        raise PreconditionError("need at least two evaluation points")
    if len(set(a.tolist())) != n:
        raise PreconditionError("evaluation points are not distinct")
    diff = ctx.vsub(a[:, None], a[None, :])
    np.fill_diagonal(diff, 1)
    logs = ctx.log[diff].sum(axis=1)
    return tuple(int(x) for x in ctx.exp[(-logs) % (ctx.q - 1)])


@dataclass(frozen=True)
class GrsCode:
    """GRS_k(a, v), or GRS_k(a, v, inf) when ``extended``."""

    ctx: FieldCtx
    a: tuple[int, ...]
    v: tuple[int, ...]
    k: int
    extended: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if len(self.a) != len(self.v):
            raise PreconditionError("a and v must have the same length")
        if len(set(self.a)) != len(self.a):
            raise PreconditionError("evaluation points must be distinct")
        if any(x == 0 for x in self.v):
            raise PreconditionError("column multipliers must be nonzero")
        if any(not 0 <= x < self.ctx.q for x in self.a + self.v):
            raise PreconditionError(f"entries outside GF({self.ctx.q})")
        if not 1 <= self.k <= self.length:
            raise PreconditionError(f"dimension k={self.k} outside [1, {self.length}]")

    @property
    def n(self) -> int:
        """Number of evaluation points."""
        return len(self.a)

    @property
    def length(self) -> int:
        return self.n + int(self.extended)

    @cached_property
    def generator_matrix(self) -> GfMatrix:
        ctx = self.ctx
        a = np.asarray(self.a, dtype=np.int64)
        v = np.asarray(self.v, dtype=np.int64)
        rows = [ctx.vmul(v, ctx.vpow(a, i)) for i in range(self.k)]
        G = np.array(rows, dtype=np.int64).reshape(self.k, self.n)
        if self.extended:
            tail = np.zeros((self.k, 1), dtype=np.int64)
            tail[self.k - 1, 0] = 1
            G = np.hstack([G, tail])
        return GfMatrix(ctx, G)

    @cached_property
    def parity_check_matrix(self) -> GfMatrix:
        """Generator of the Euclidean dual (canonical kernel basis)."""
        return kernel(self.generator_matrix)

    @cached_property
    def u(self) -> tuple[int, ...]:
        return compute_u(self.ctx, self.a)

    def encode(self, f: Sequence[int]) -> list[int]:
        f = list(f)
        if len(f) > self.k:
            raise PreconditionError(f"message of length {len(f)} exceeds k={self.k}")
        f = f + [0] * (self.k - len(f))
        msg = GfMatrix(self.ctx, np.array([f], dtype=np.int64))
        return matmul(msg, self.generator_matrix).a[0].tolist()

    def to_json(self) -> dict:
        return {
            "field": self.ctx.descriptor(),
            "a": list(self.a),
            "v": list(self.v),
            "k": self.k,
            "extended": self.extended,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GrsCode":
        ctx = field_from_descriptor(obj["field"])
        return cls(ctx, tuple(obj["a"]), tuple(obj["v"]), int(obj["k"]), bool(obj["extended"]))


def generator_matrix(code: GrsCode) -> GfMatrix:
    return code.generator_matrix


def encode(code: GrsCode, f: Sequence[int]) -> list[int]:
    return code.encode(f)


def dual_membership(code: GrsCode | GfMatrix, c: Sequence[int], kind: str) -> bool:
    """True iff ``c`` is orthogonal to every generator row under ``kind``."""
    G = code.generator_matrix if isinstance(code, GrsCode) else code
    ctx = G.ctx
    c = np.asarray(c, dtype=np.int64)
    if c.shape != (G.cols,):
        raise ValueError(f"word of length {c.size} for code of length {G.cols}")
    rows = sigma(ctx, G.a, kind)
    return not ctx.vsum(ctx.vmul(rows, c[None, :]), axis=1).any()


def witness_check(code: GrsCode, f: Sequence[int], g: Sequence[int], kind: str) -> bool:
    """Check the componentwise witness identity for dual membership of encode(f).

    Euclidean: v_i^2 f(a_i) = u_i g(a_i); Hermitian: v_i^(q+1) f(a_i)^q = u_i g(a_i).
    Extended codes add f_{k-1} = -g_{n-k} (resp. f_{k-1}^q = -g_{n-k}).
    """
    ctx = code.ctx
    n, k = code.n, code.k
    f = poly.trim(f)
    g = poly.trim(g)
    if poly.degree(f) > k - 1:
        raise PreconditionError(f"deg f = {poly.degree(f)} exceeds k-1 = {k - 1}")
    gmax = n - k if code.extended else n - k - 1
    if poly.degree(g) > gmax:
        raise PreconditionError(f"deg g = {poly.degree(g)} exceeds {gmax}")
    a = np.asarray(code.a, dtype=np.int64)
    v = np.asarray(code.v, dtype=np.int64)
    u = np.asarray(code.u, dtype=np.int64)
    fa = poly.evaluate(ctx, f, a)
    ga = poly.evaluate(ctx, g, a)
    if check_kind(kind) == EUCLIDEAN:
        lhs = ctx.vmul(ctx.vmul(v, v), fa)
        lead = poly.coeff(f, k - 1)
    else:
        qq = ctx.base_q
        lhs = ctx.vmul(ctx.vpow(v, qq + 1), ctx.vpow(fa, qq))
        lead = ctx.pow(poly.coeff(f, k - 1), qq)
    if not np.array_equal(lhs, ctx.vmul(u, ga)):
        return False
    if code.extended:
        return lead == ctx.neg(poly.coeff(g, n - k))
    return True
