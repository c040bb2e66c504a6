"""Structured evaluation-point sets whose u_i have closed forms.

Two families are built here: unions of cosets of an additive F_r-subspace
(with the normalising constant ``epsilon``), and unions of cosets of a
multiplicative subgroup of GF(q^2)* (optionally with 0 adjoined).  All
choices left open by the existence statements (basis, eta, coset leaders,
enumeration order) are pinned so constructions are byte-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from . import poly
from .errors import PreconditionError
from .field import FieldCtx, in_subfield, prime_power, subfield_elements_of_order


@dataclass(frozen=True)
class AdditivePointSet:
    ctx: FieldCtx
    r: int
    z: int
    t: int
    h_basis: tuple[int, ...]
    h_elements: tuple[int, ...]
    eta: int
    beta: tuple[int, ...]
    points: tuple[int, ...]
    coset_of: tuple[int, ...]
    epsilon: int

    @property
    def n(self) -> int:
        return len(self.points)

    def closed_form_u(self) -> tuple[int, ...]:
        """u_i from the coset structure, without the O(n^2) product."""
        ctx = self.ctx
        hprod = ctx.prod(h for h in self.h_elements if h)
        eta_prod = ctx.prod(ctx.sub(self.eta, g) for g in self.h_elements)
        base = ctx.mul(ctx.inv(hprod), ctx.pow(eta_prod, 1 - self.t))
        per_coset = []
        for b in range(self.t):
            d = ctx.prod(ctx.sub(self.beta[b], self.beta[j]) for j in range(self.t) if j != b)
            per_coset.append(ctx.div(base, d))
        return tuple(per_coset[b] for b in self.coset_of)

    def to_json(self) -> dict:
        return {
            "kind": "additive",
            "r": self.r,
            "z": self.z,
            "t": self.t,
            "h_basis": list(self.h_basis),
            "eta": self.eta,
            "beta": list(self.beta),
            "points": list(self.points),
            "epsilon": self.epsilon,
        }


def f_r_dimension(ctx: FieldCtx, r: int) -> int:
    p, e = prime_power(r)
    if p != ctx.p or ctx.m % e:
        raise PreconditionError(f"GF({r}) is not a subfield of GF({ctx.q})")
    return ctx.m // e


def build_additive(ctx: FieldCtx, r: int, z: int, t: int) -> AdditivePointSet:
    """Union of t cosets H + beta_j * eta of a z-dimensional F_r-subspace H.

    H is spanned by 1, omega, ..., omega^(z-1); eta is the smallest-index
    element outside H; beta_1 = 0, beta_2, ... are F_r in index order.
    """
    dim = f_r_dimension(ctx, r)
    if not 1 <= z <= dim - 1:
        raise PreconditionError(f"z={z} outside [1, {dim - 1}] for GF({ctx.q}) over GF({r})")
    if not 1 <= t <= r:
        raise PreconditionError(f"t={t} outside [1, {r}]")
    fr = subfield_elements_of_order(ctx, r)
    basis = tuple(ctx.omega_pow(j) for j in range(z))

    h_elements = []
    for digits in itertools.product(range(r), repeat=z):
        # first basis vector varies fastest
        h = 0
        for d, b in zip(reversed(digits), basis):
            h = ctx.add(h, ctx.mul(fr[d], b))
        h_elements.append(h)
    h_set = set(h_elements)
    if len(h_set) != r**z:
        raise AssertionError("subspace basis is not F_r-independent")
    eta = next(x for x in range(ctx.q) if x not in h_set)
    beta = tuple(fr[:t])

    points, coset_of = [], []
    for b, bj in enumerate(beta):
        shift = ctx.mul(bj, eta)
        for h in h_elements:
            points.append(ctx.add(h, shift))
            coset_of.append(b)

    hprod = ctx.prod(h for h in h_elements if h)
    eta_prod = ctx.prod(ctx.sub(eta, g) for g in h_elements)
    epsilon = ctx.mul(hprod, ctx.pow(eta_prod, t - 1))
    return AdditivePointSet(
        ctx=ctx,
        r=r,
        z=z,
        t=t,
        h_basis=basis,
        h_elements=tuple(h_elements),
        eta=eta,
        beta=beta,
        points=tuple(points),
        coset_of=tuple(coset_of),
        epsilon=epsilon,
    )


@dataclass(frozen=True)
class MultiplicativePointSet:
    ctx: FieldCtx
    n_prime: int
    t: int
    n1: int
    n2: int
    theta: int
    leaders: tuple[int, ...]
    points: tuple[int, ...]
    coset_of: tuple[int, ...] = field(repr=False)
    include_zero: bool = False

    @property
    def n(self) -> int:
        """Number of points, including the adjoined zero."""
        return len(self.points)

    def closed_form_u(self) -> tuple[int, ...]:
        ctx = self.ctx
        npr = self.n_prime
        bpow = [ctx.pow(b, npr) for b in self.leaders]
        inv_np = ctx.inv(ctx.from_int(npr))
        coset_factor = []
        for b in range(self.t):
            d = ctx.prod(ctx.sub(bpow[b], bpow[s]) for s in range(self.t) if s != b)
            coset_factor.append(ctx.mul(inv_np, ctx.div(ctx.inv(bpow[b]), d)))
        out = []
        for a, b in zip(self.points, self.coset_of):
            if b < 0:
                continue
            ui = ctx.mul(a, coset_factor[b])
            out.append(ctx.div(ui, a) if self.include_zero else ui)
        if self.include_zero:
            sign = 1 if self.t % 2 == 0 else ctx.neg(1)
            out.append(ctx.mul(sign, ctx.inv(ctx.prod(bpow))))
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "kind": "multiplicative",
            "n_prime": self.n_prime,
            "t": self.t,
            "n1": self.n1,
            "n2": self.n2,
            "leaders": list(self.leaders),
            "include_zero": self.include_zero,
            "points": list(self.points),
        }


def build_multiplicative(ctx2: FieldCtx, n_prime: int, t: int, include_zero: bool = False) -> MultiplicativePointSet:
    """Union of t cosets beta_b * G of the order-n' subgroup G of GF(q^2)*.

    Leaders are the first t distinct G-cosets met while scanning
    omega^(j (q+1)/n2), j = 0, 1, ...; coset b lists beta_b theta^1 .. theta^n'.
    """
    q = ctx2.base_q
    Q = ctx2.q
    if n_prime < 1 or (Q - 1) % n_prime:
        raise PreconditionError(f"n'={n_prime} does not divide q^2-1={Q - 1}")
    n2 = gcd(n_prime, q + 1)
    n1 = n_prime // n2
    tmax = (q - 1) // n1
    if not 1 <= t <= tmax:
        raise PreconditionError(f"t={t} outside [1, {tmax}] (n1={n1})")
    g_step = (Q - 1) // n_prime
    h_step = (q + 1) // n2
    theta = ctx2.omega_pow(g_step)

    leaders, seen = [], set()
    j = 0
    while len(leaders) < t:
        e = j * h_step
        key = e % g_step
        if key not in seen:
            seen.add(key)
            leaders.append(ctx2.omega_pow(e))
        j += 1

    points, coset_of = [], []
    for b, beta in enumerate(leaders):
        for i in range(1, n_prime + 1):
            points.append(ctx2.mul(beta, ctx2.pow(theta, i)))
            coset_of.append(b)
    if include_zero:
        points.append(0)
        coset_of.append(-1)
    return MultiplicativePointSet(
        ctx=ctx2,
        n_prime=n_prime,
        t=t,
        n1=n1,
        n2=n2,
        theta=theta,
        leaders=tuple(leaders),
        points=tuple(points),
        coset_of=tuple(coset_of),
        include_zero=include_zero,
    )


def nonvanishing_monic(ctx: FieldCtx, A, degree: int) -> list[int]:
    """A monic polynomial of the given degree with no root in ``A``.

    Degree 0 gives 1, degree 1 gives x - delta for the smallest delta not in
    A; higher degrees take the first hit of a lexicographic scan over the
    lower coefficients (c_0, ..., c_{degree-1}).
    """
    A = sorted(set(int(x) for x in A))
    if len(A) >= ctx.q:
        raise PreconditionError("A must be a proper subset of the field")
    if degree < 0:
        raise PreconditionError("degree must be nonnegative")
    if degree == 0:
        return [1]
    if degree == 1:
        delta = next(x for x in range(ctx.q) if x not in set(A))
        return [ctx.neg(delta), 1]
    pts = np.asarray(A, dtype=np.int64)
    for low in itertools.product(range(ctx.q), repeat=degree):
        f = list(low) + [1]
        if pts.size == 0 or poly.evaluate(ctx, f, pts).all():
            return f
    raise AssertionError("no nonvanishing monic polynomial found")


def membership_in(ctx: FieldCtx, xs, r: int) -> bool:
    """True iff every x in ``xs`` is a nonzero element of the subfield F_r."""
    return all(x != 0 and in_subfield(ctx, x, r) for x in xs)
