"""Finite field arithmetic over GF(p^m).

Elements are plain ints: an element with coefficient digits
``(c_0, ..., c_{m-1})`` over GF(p) is encoded as ``sum(c_i * p**i)``.
The modulus is the monic primitive polynomial with the smallest encoding,
so the class of ``x`` (index ``p`` when ``m > 1``) always generates the
multiplicative group and the log/exp tables are canonical.

Scalar methods (``add``, ``mul``, ...) take and return ints.  The ``v*``
methods operate elementwise on numpy integer arrays.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import numpy as np
from sympy import factorint, isprime

from .errors import PreconditionError

MAX_ORDER = 1 << 20
_ADD_TABLE_LIMIT = 1024


def _polymulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    """Multiply coefficient lists (low to high) modulo a monic ``mod`` over GF(p)."""
    m = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, m - 1, -1):
        c = prod[d]
        if c:
            for j in range(m + 1):
                prod[d - m + j] = (prod[d - m + j] - c * mod[j]) % p
    prod = prod[:m] + [0] * max(0, m - len(prod))
    return prod


def _x_power(e: int, mod: list[int], p: int) -> list[int]:
    m = len(mod) - 1
    result = [1] + [0] * (m - 1)
    base = ([0, 1] + [0] * (m - 2)) if m > 1 else [(-mod[0]) % p]
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod, p)
        base = _polymulmod(base, base, mod, p)
        e >>= 1
    return result


def is_primitive(mod: list[int], p: int) -> bool:
    """True iff ``x`` has multiplicative order ``p**m - 1`` modulo ``mod``."""
    m = len(mod) - 1
    if mod[-1] != 1 or mod[0] % p == 0:
        return False
    order = p**m - 1
    one = [1] + [0] * (m - 1)
    if _x_power(order, mod, p) != one:
        return False
    return all(_x_power(order // r, mod, p) != one for r in factorint(order))


def _digits(x: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        x, d = divmod(x, p)
        out.append(d)
    return out


class FieldCtx:
    """The field GF(p^m) with precomputed log/exp tables.

    Instances are immutable after construction and cached by
    :func:`make_field`, so identity comparison is meaningful.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        q = self.q

        self.digits = np.array([_digits(x, p, m) for x in range(q)], dtype=np.int64)
        self.weights = p ** np.arange(m, dtype=np.int64)

        # exp[j] = omega^j for j in [0, 2(q-1)); log[0] is a -1 sentinel
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        cur = [1] + [0] * (m - 1)
        for j in range(q - 1):
            idx = sum(c * p**i for i, c in enumerate(cur))
            if log[idx] != -1:
                raise AssertionError("modulus is not primitive")
            exp[j] = idx
            log[idx] = j
            cur = self._times_x(cur)
        exp[q - 1 :] = exp[: q - 1]
        self.exp = exp
        self.log = log

        self.neg_table = ((-self.digits) % p) @ self.weights
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-(log[1:])) % (q - 1)]
        self.inv_table = inv
        self.add_table = None
        if m > 1 and p != 2 and q <= _ADD_TABLE_LIMIT:
            self.add_table = ((self.digits[:, None, :] + self.digits[None, :, :]) % p) @ self.weights

        for arr in (self.digits, self.weights, self.exp, self.log, self.neg_table, self.inv_table):
            arr.setflags(write=False)
        if self.add_table is not None:
            self.add_table.setflags(write=False)

    def _times_x(self, c: list[int]) -> list[int]:
        p, m, mod = self.p, self.m, self.modulus
        if m == 1:
            return [(c[0] * (-mod[0])) % p]
        top = c[-1]
        shifted = [0] + c[:-1]
        return [(shifted[i] - top * mod[i]) % p for i in range(m)]

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m})"

    # -- descriptor -------------------------------------------------------

    def descriptor(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @property
    def generator(self) -> int:
        """Index of the primitive element omega (the class of x)."""
        return int(self.exp[1]) if self.q > 2 else 1

    @property
    def base_q(self) -> int:
        """Order of the designated subfield F_q when this context is GF(q^2)."""
        if self.m % 2:
            raise PreconditionError(f"GF({self.q}) is not a quadratic extension")
        return self.p ** (self.m // 2)

    # -- scalar arithmetic -----------------------------------------------

    def check(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not an element of GF({self.q})")
        return x

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.add_table is not None:
            return int(self.add_table[a, b])
        return int(((self.digits[a] + self.digits[b]) % self.p) @ self.weights)

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def dlog(self, a: int) -> int:
        if a == 0:
            raise ValueError("discrete log of zero")
        return int(self.log[a])

    def omega_pow(self, j: int) -> int:
        return int(self.exp[j % (self.q - 1)])

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def prod(self, xs: Iterable[int]) -> int:
        out = 1
        for x in xs:
            out = self.mul(out, x)
        return out

    def sum(self, xs: Iterable[int]) -> int:
        out = 0
        for x in xs:
            out = self.add(out, x)
        return out

    def arith(self, op: str, *operands: int) -> int:
        """Dispatch ``op`` in {add, sub, mul, inv, neg, pow} on ``operands``."""
        ops = {
            "add": self.add,
            "sub": self.sub,
            "mul": self.mul,
            "inv": self.inv,
            "neg": self.neg,
            "pow": self.pow,
        }
        if op not in ops:
            raise ValueError(f"unknown operation {op!r}")
        return ops[op](*operands)

    # -- vectorised arithmetic -------------------------------------------

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.add_table is not None:
            return self.add_table[a, b]
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.weights

    def vneg(self, a):
        return self.neg_table[np.asarray(a, dtype=np.int64)]

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        la = self.log[a]
        lb = self.log[b]
        out = self.exp[np.maximum(la + lb, 0)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        return self.inv_table[a]

    def vpow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        out = self.exp[(self.log[a] * e) % (self.q - 1)]
        if e == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, out)

    def vsum(self, a, axis: int = -1):
        """Field sum along ``axis``."""
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return a.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        d = self.digits[a].sum(axis=axis if axis >= 0 else axis - 1) % self.p
        return d @ self.weights

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)


@lru_cache(maxsize=None)
def make_field(p: int, m: int) -> FieldCtx:
    """Build GF(p^m) with the smallest-encoding monic primitive modulus."""
    if not isprime(p):
        raise PreconditionError(f"p={p} is not prime")
    if m < 1:
        raise PreconditionError(f"m={m} must be positive")
    if p**m > MAX_ORDER:
        raise PreconditionError(f"GF({p}^{m}) exceeds the field size budget {MAX_ORDER}")
    for low in range(p**m):
        mod = _digits(low, p, m) + [1]
        if is_primitive(mod, p):
            return FieldCtx(p, m, tuple(mod))
    raise AssertionError(f"no primitive polynomial of degree {m} over GF({p})")


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q = p**m``."""
    if q < 2:
        raise PreconditionError(f"q={q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise PreconditionError(f"q={q} is not a prime power")
    ((p, m),) = f.items()
    return p, m


def field_of_order(q: int) -> FieldCtx:
    return make_field(*prime_power(q))


def quadratic_field(q: int) -> FieldCtx:
    """GF(q^2) with F_q as its designated subfield."""
    p, m = prime_power(q)
    return make_field(p, 2 * m)


def field_from_descriptor(desc: dict) -> FieldCtx:
    ctx = make_field(int(desc["p"]), int(desc["m"]))
    if "modulus" in desc and tuple(desc["modulus"]) != ctx.modulus:
        raise ValueError(f"modulus {desc['modulus']} differs from canonical {list(ctx.modulus)}")
    return ctx


# -- subfields, Frobenius, roots ------------------------------------------


def subfield_elements_of_order(ctx: FieldCtx, r: int) -> list[int]:
    """Elements of the subfield F_r of ``ctx``, sorted by index."""
    p, e = prime_power(r)
    if p != ctx.p or ctx.m % e:
        raise PreconditionError(f"GF({r}) is not a subfield of GF({ctx.q})")
    step = (ctx.q - 1) // (r - 1)
    return sorted([0] + [ctx.omega_pow(j * step) for j in range(r - 1)])


def subfield_elements(ctx2: FieldCtx) -> list[int]:
    """The designated subfield F_q of GF(q^2), sorted by index."""
    return subfield_elements_of_order(ctx2, ctx2.base_q)


def in_subfield(ctx: FieldCtx, x: int, r: int) -> bool:
    if x == 0:
        return True
    return ctx.dlog(x) % ((ctx.q - 1) // (r - 1)) == 0


def frobenius_q(ctx2: FieldCtx, x: int) -> int:
    """The conjugation x -> x^q of GF(q^2)."""
    return ctx2.pow(x, ctx2.base_q)


def norm_preimage(ctx2: FieldCtx, u: int) -> int:
    """Smallest-index v with v^(q+1) = u, for nonzero u in F_q."""
    q = ctx2.base_q
    if u == 0:
        raise PreconditionError("norm preimage of zero")
    d = ctx2.dlog(u)
    if d % (q + 1):
        raise PreconditionError(f"{u} is not in the subfield GF({q})")
    t = d // (q + 1)
    return min(ctx2.omega_pow(t + j * (q - 1)) for j in range(q + 1))


def sqrt(ctx: FieldCtx, u: int) -> int | None:
    """Smallest-index square root of ``u``, or None for a non-square."""
    if u == 0:
        return 0
    if ctx.p == 2:
        return ctx.pow(u, ctx.q // 2)
    d = ctx.dlog(u)
    if d % 2:
        return None
    s = ctx.omega_pow(d // 2)
    return min(s, ctx.neg(s))
