"""Brute-force verifiers, independent of the rank-based machinery.

Each check enumerates codewords (or column subsets) directly and refuses
to run past its budget by raising :class:`BudgetExceeded`.  Budgets come
from :class:`Budgets`, overridable through ``HULLFORGE_BUDGET``: either a
single integer (the codeword budget) or ``key=value`` pairs separated by
commas, keys ``enum``, ``minor``, ``hull``.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, replace

import numpy as np

from .errors import BudgetExceeded, CertificationError
from .grs import GrsCode, sigma
from .matrix import GfMatrix, matmul, rank


@dataclass(frozen=True)
class Budgets:
    enum: int = 100_000
    minor: int = 14
    hull: int = 10_000


def budgets_from_env(env: dict | None = None) -> Budgets:
    raw = (env if env is not None else os.environ).get("HULLFORGE_BUDGET", "").strip()
    b = Budgets()
    if not raw:
        return b
    if raw.isdigit():
        return replace(b, enum=int(raw))
    updates = {}
    for part in raw.split(","):
        key, _, val = part.partition("=")
        key = key.strip()
        if key not in ("enum", "minor", "hull") or not val.strip().isdigit():
            raise ValueError(f"bad HULLFORGE_BUDGET entry {part!r}")
        updates[key] = int(val)
    return replace(b, **updates)


def _generator(code) -> GfMatrix:
    return code.generator_matrix if isinstance(code, GrsCode) else code


def codewords(G: GfMatrix, chunk: int = 20_000):
    """Yield blocks of codewords, all q^k messages in lexicographic order."""
    ctx = G.ctx
    k = G.rows
    total = ctx.q**k
    powers = ctx.q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        msgs = (idx[:, None] // powers[None, :]) % ctx.q
        yield matmul(GfMatrix(ctx, msgs), G).a


def min_distance_enum(code, budget: int | None = None) -> int:
    G = _generator(code)
    budget = budget if budget is not None else budgets_from_env().enum
    size = G.ctx.q**G.rows
    if size > budget:
        raise BudgetExceeded(f"{size} codewords exceeds the enumeration budget {budget}")
    best = G.cols + 1
    for block in codewords(G):
        w = np.count_nonzero(block, axis=1)
        w = w[w > 0]
        if w.size:
            best = min(best, int(w.min()))
    return best


def mds_minor_check(code, max_length: int | None = None) -> bool:
    """True iff every k x k minor of the generator matrix is nonzero."""
    G = _generator(code)
    max_length = max_length if max_length is not None else budgets_from_env().minor
    if G.cols > max_length:
        raise BudgetExceeded(f"length {G.cols} exceeds the minor-check budget {max_length}")
    k = G.rows
    return all(rank(G.select_columns(cols)) == k for cols in itertools.combinations(range(G.cols), k))


def hull_enum(code, kind: str, budget: int | None = None) -> int:
    """Hull dimension by counting codewords orthogonal to the whole code."""
    G = _generator(code)
    ctx = G.ctx
    budget = budget if budget is not None else budgets_from_env().hull
    size = ctx.q**G.rows
    if size > budget:
        raise BudgetExceeded(f"{size} codewords exceeds the hull enumeration budget {budget}")
    rows_conj = GfMatrix(ctx, sigma(ctx, G.a, kind).T)
    count = 0
    for block in codewords(G):
        ips = matmul(GfMatrix(ctx, block), rows_conj).a
        count += int(np.count_nonzero(~ips.any(axis=1)))
    dim = round(math.log(count, ctx.q))
    if ctx.q**dim != count:
        raise CertificationError(f"hull has {count} words, not a power of {ctx.q}")
    return dim
