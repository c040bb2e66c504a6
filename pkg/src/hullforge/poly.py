"""Univariate polynomials as coefficient lists, lowest degree first."""

from __future__ import annotations

import numpy as np

from .field import FieldCtx


def trim(f: list[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f: list[int]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(trim(f)) - 1


def coeff(f: list[int], i: int) -> int:
    return f[i] if 0 <= i < len(f) else 0


def evaluate(ctx: FieldCtx, f: list[int], xs):
    """Evaluate ``f`` at every point of ``xs`` (Horner, vectorised)."""
    xs = np.asarray(xs, dtype=np.int64)
    acc = np.zeros_like(xs)
    for c in reversed(list(f)):
        acc = ctx.vadd(ctx.vmul(acc, xs), c)
    return acc


def eval_at(ctx: FieldCtx, f: list[int], x: int) -> int:
    acc = 0
    for c in reversed(list(f)):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def mul(ctx: FieldCtx, f: list[int], g: list[int]) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return out


def add(ctx: FieldCtx, f: list[int], g: list[int]) -> list[int]:
    n = max(len(f), len(g))
    return [ctx.add(coeff(f, i), coeff(g, i)) for i in range(n)]


def scale(ctx: FieldCtx, c: int, f: list[int]) -> list[int]:
    return [ctx.mul(c, a) for a in f]


def from_roots(ctx: FieldCtx, roots) -> list[int]:
    """Monic polynomial prod (x - r)."""
    out = [1]
    for r in roots:
        out = mul(ctx, out, [ctx.neg(r), 1])
    return out


def frobenius_coeffs(ctx: FieldCtx, f: list[int], e: int) -> list[int]:
    """Raise every coefficient to the power ``e`` (F(x) from f(x) with e = q)."""
    return [ctx.pow(c, e) for c in f]
