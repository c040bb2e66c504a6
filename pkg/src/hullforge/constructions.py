"""GRS and extended GRS codes with a prescribed Euclidean or Hermitian hull dimension.

One constructor per theorem family.  Every constructor returns the code
together with a :class:`~hullforge.hull.HullCertificate` confirming that the
hull dimension is exactly the requested ``ell``.

Constructor ids: ``t3.3i``, ``t3.3ii``, ``t3.3iii`` and ``t3.4`` (Euclidean),
``t3.5``, ``t3.6i``, ``t3.6ii``, ``t3.8``, ``t3.9``, ``t3.10`` and ``t3.11``
(Hermitian, over GF(q^2)).
"""

from __future__ import annotations

import re
from dataclasses import asdict, dataclass
from math import gcd
from typing import Iterator

from sympy import divisors

from . import poly
from .errors import PreconditionError
from .field import (
    FieldCtx,
    field_of_order,
    norm_preimage,
    prime_power,
    quadratic_field,
    sqrt,
    subfield_elements,
)
from .grs import EUCLIDEAN, HERMITIAN, GrsCode, compute_u
from .hull import HullCertificate, certify
from .pointsets import build_additive, build_multiplicative, nonvanishing_monic

EUCLIDEAN_THEOREMS = ("t3.3i", "t3.3ii", "t3.3iii", "t3.4")
HERMITIAN_THEOREMS = ("t3.5", "t3.6i", "t3.6ii", "t3.8", "t3.9", "t3.10", "t3.11")
THEOREMS = EUCLIDEAN_THEOREMS + HERMITIAN_THEOREMS


def normalize_theorem(name: str) -> str:
    """Accept ``t3.6ii``, ``T3_6_ii``, ``3.6ii`` and similar spellings."""
    s = name.strip().lower().replace("_", ".")
    if not s.startswith("t"):
        s = "t" + s
    s = re.sub(r"\.(i+)$", r"\1", s)
    if s not in THEOREMS:
        raise PreconditionError(f"unknown theorem {name!r}; expected one of {', '.join(THEOREMS)}")
    return s


def kind_of(theorem: str) -> str:
    return EUCLIDEAN if normalize_theorem(theorem) in EUCLIDEAN_THEOREMS else HERMITIAN


@dataclass(frozen=True)
class ConstructionSpec:
    theorem: str
    q: int
    k: int
    ell: int
    n: int | None = None
    r: int | None = None
    z: int | None = None
    t: int | None = None
    n_prime: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "theorem", normalize_theorem(self.theorem))

    @property
    def kind(self) -> str:
        return kind_of(self.theorem)

    def to_json(self) -> dict:
        return {key: val for key, val in asdict(self).items() if val is not None}

    @classmethod
    def from_json(cls, obj: dict) -> "ConstructionSpec":
        return cls(**obj)


@dataclass(frozen=True)
class Construction:
    spec: ConstructionSpec
    code: GrsCode
    certificate: HullCertificate
    point_set: object = None

    @property
    def kind(self) -> str:
        return self.spec.kind

    def to_json(self, payload: bool = True) -> dict:
        out = self.code.to_json()
        out["theorem"] = self.spec.theorem
        out["spec"] = self.spec.to_json()
        cert = self.certificate.to_json()
        if not payload:
            cert.pop("basis")
        out["certificate"] = cert
        if payload and self.point_set is not None:
            out["point_set"] = self.point_set.to_json()
        return out


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionError(message)


def _need(spec: ConstructionSpec, *names: str) -> None:
    missing = [nm for nm in names if getattr(spec, nm) is None]
    _require(not missing, f"{spec.theorem} requires parameter(s): {', '.join(missing)}")


def euclidean_alpha(ctx: FieldCtx) -> int:
    for x in range(1, ctx.q):
        if ctx.mul(x, x) != 1:
            return x
    raise PreconditionError(f"GF({ctx.q}) has no alpha with alpha^2 != 1")


def hermitian_alpha(ctx2: FieldCtx) -> int:
    e = ctx2.base_q + 1
    for x in range(1, ctx2.q):
        if ctx2.pow(x, e) != 1:
            return x
    raise PreconditionError(f"GF({ctx2.q}) has no alpha with alpha^(q+1) != 1")


def _scale_prefix(ctx: FieldCtx, v, s: int, alpha: int) -> list[int]:
    return [ctx.mul(alpha, x) if i < s else x for i, x in enumerate(v)]


def _sqrt_or_breach(ctx: FieldCtx, x: int) -> int:
    s = sqrt(ctx, x)
    if s is None:
        raise RuntimeError(f"invariant breach: {x} has no square root in GF({ctx.q})")
    return s


def _check_range(name: str, val: int, lo: int, hi: int) -> None:
    _require(lo <= val <= hi, f"{name}={val} outside [{lo}, {hi}]")


def construct_euclid_additive(spec: ConstructionSpec) -> Construction:
    _need(spec, "r", "z", "t")
    q, r, k, ell = spec.q, spec.r, spec.k, spec.ell
    p, m = prime_power(q)
    _require(q > 2, "q must exceed 2")
    pr, e = prime_power(r)
    _require(pr == p and m % e == 0, f"r={r} is not a subfield order of q={q}")
    _require((m // e) % 2 == 0, f"m/e = {m}/{e} must be even")
    ctx = field_of_order(q)
    ps = build_additive(ctx, r, spec.z, spec.t)
    n = ps.n
    u = compute_u(ctx, ps.points)
    alpha = euclidean_alpha(ctx)

    if spec.theorem == "t3.3i":
        _check_range("k", k, 1, n // 2)
        _check_range("ell", ell, 0, k)
        s, extended = k - ell, False
        v = [_sqrt_or_breach(ctx, ctx.mul(ps.epsilon, ui)) for ui in u]
    elif spec.theorem == "t3.3ii":
        _require(n % 2 == 0, f"n={n} must be even")
        _check_range("k", k, 1, n // 2)
        _check_range("ell", ell, 0, k - 1)
        s, extended = k - 1 - ell, True
        v = [_sqrt_or_breach(ctx, ctx.mul(ps.epsilon, ui)) for ui in u]
    else:
        _require(n % 2 == 1, f"n={n} must be odd")
        _require(n < q, f"n={n} must be less than q={q}")
        _check_range("k", k, 1, (n + 1) // 2)
        _check_range("ell", ell, 0, k)
        s, extended = k - ell, True
        pi = nonvanishing_monic(ctx, ps.points, (n + 1 - 2 * k) // 2)
        pa = poly.evaluate(ctx, pi, ps.points).tolist()
        v = [ctx.mul(_sqrt_or_breach(ctx, ctx.neg(ui)), pv) for ui, pv in zip(u, pa)]
    v = _scale_prefix(ctx, v, s, alpha)
    code = GrsCode(ctx, ps.points, tuple(v), k, extended)
    return Construction(spec, code, certify(code, EUCLIDEAN, ell), ps)


def construct_euclid_mult_zero(spec: ConstructionSpec) -> Construction:
    _need(spec, "n")
    q, n, k, ell = spec.q, spec.n, spec.k, spec.ell
    ctx = field_of_order(q)
    _require(n % 2 == 1 and n >= 3, f"n={n} must be odd and at least 3")
    _require(n < q, f"n={n} must be less than q={q}")
    _require((q - 1) % (n - 1) == 0, f"n-1={n - 1} must divide q-1={q - 1}")
    _require(sqrt(ctx, ctx.from_int(1 - n)) is not None, f"1-n={1 - n} must be a square in GF({q})")
    _check_range("k", k, 1, (n + 1) // 2)
    _check_range("ell", ell, 0, k)
    theta = ctx.omega_pow((q - 1) // (n - 1))
    points = tuple(ctx.pow(theta, i) for i in range(1, n)) + (0,)
    u = compute_u(ctx, points)
    pi = nonvanishing_monic(ctx, points, (n + 1 - 2 * k) // 2)
    pa = poly.evaluate(ctx, pi, points).tolist()
    v = [ctx.mul(_sqrt_or_breach(ctx, ctx.neg(ui)), pv) for ui, pv in zip(u, pa)]
    v = _scale_prefix(ctx, v, k - ell, euclidean_alpha(ctx))
    code = GrsCode(ctx, points, tuple(v), k, True)
    return Construction(spec, code, certify(code, EUCLIDEAN, ell))


def construct_herm_smallfield(spec: ConstructionSpec) -> Construction:
    _need(spec, "n")
    q, n, k, ell = spec.q, spec.n, spec.k, spec.ell
    _require(q > 2, "q must exceed 2")
    _check_range("n", n, 2, q)
    _check_range("k", k, 1, n // 2)
    _check_range("ell", ell, 0, k)
    ctx2 = quadratic_field(q)
    points = tuple(subfield_elements(ctx2)[:n])
    v = [norm_preimage(ctx2, ui) for ui in compute_u(ctx2, points)]
    v = _scale_prefix(ctx2, v, k - ell, hermitian_alpha(ctx2))
    code = GrsCode(ctx2, points, tuple(v), k, False)
    return Construction(spec, code, certify(code, HERMITIAN, ell))


def construct_herm_additive(spec: ConstructionSpec) -> Construction:
    _need(spec, "r", "z", "t")
    q, r, k, ell = spec.q, spec.r, spec.k, spec.ell
    p, m = prime_power(q)
    _require(q >= 3, "q must be at least 3")
    pr, e = prime_power(r)
    _require(pr == p and m % e == 0, f"r={r} is not a subfield order of q={q}")
    ctx2 = quadratic_field(q)
    ps = build_additive(ctx2, r, spec.z, spec.t)
    n = ps.n
    _check_range("k", k, 1, (n - 1 + q) // (q + 1))
    if spec.theorem == "t3.6i":
        _check_range("ell", ell, 0, k)
        s, extended = k - ell, False
    else:
        _check_range("ell", ell, 0, k - 1)
        s, extended = k - 1 - ell, True
    u = compute_u(ctx2, ps.points)
    v = [norm_preimage(ctx2, ctx2.mul(ps.epsilon, ui)) for ui in u]
    v = _scale_prefix(ctx2, v, s, hermitian_alpha(ctx2))
    code = GrsCode(ctx2, ps.points, tuple(v), k, extended)
    return Construction(spec, code, certify(code, HERMITIAN, ell), ps)


def construct_herm_mult(spec: ConstructionSpec) -> Construction:
    _need(spec, "n_prime", "t")
    q, k, ell = spec.q, spec.k, spec.ell
    _require(q > 2, "q must exceed 2")
    ctx2 = quadratic_field(q)
    with_zero = spec.theorem != "t3.8"
    ps = build_multiplicative(ctx2, spec.n_prime, spec.t, include_zero=with_zero)
    n = spec.t * spec.n_prime
    _check_range("k", k, 1, (n + q) // (q + 1))
    if spec.theorem == "t3.8":
        _require(n >= 2, "t3.8 needs at least two points")
        _check_range("ell", ell, 0, k - 1)
        u = compute_u(ctx2, ps.points)
        v = [norm_preimage(ctx2, ctx2.div(ui, ai)) for ui, ai in zip(u, ps.points)]
        s, extended = k - 1 - ell, False
    else:
        u = compute_u(ctx2, ps.points)
        v = [norm_preimage(ctx2, ui) for ui in u]
        if spec.theorem == "t3.9":
            _check_range("ell", ell, 0, k)
            s, extended = k - ell, False
        else:
            _check_range("ell", ell, 0, k - 1)
            s, extended = k - 1 - ell, True
    v = _scale_prefix(ctx2, v, s, hermitian_alpha(ctx2))
    code = GrsCode(ctx2, ps.points, tuple(v), k, extended)
    return Construction(spec, code, certify(code, HERMITIAN, ell), ps)


def construct_herm_full(spec: ConstructionSpec) -> Construction:
    q, k, ell = spec.q, spec.k, spec.ell
    _require(q > 2, "q must exceed 2")
    _require(k == q, f"t3.11 fixes k = q = {q}, got k={k}")
    _check_range("ell", ell, 0, q)
    ctx2 = quadratic_field(q)
    points = tuple(range(ctx2.q))
    alpha = hermitian_alpha(ctx2)
    v = [alpha if i < q - ell else 1 for i in range(len(points))]
    code = GrsCode(ctx2, points, tuple(v), q, True)
    return Construction(spec, code, certify(code, HERMITIAN, ell))


_DISPATCH = {
    "t3.3i": construct_euclid_additive,
    "t3.3ii": construct_euclid_additive,
    "t3.3iii": construct_euclid_additive,
    "t3.4": construct_euclid_mult_zero,
    "t3.5": construct_herm_smallfield,
    "t3.6i": construct_herm_additive,
    "t3.6ii": construct_herm_additive,
    "t3.8": construct_herm_mult,
    "t3.9": construct_herm_mult,
    "t3.10": construct_herm_mult,
    "t3.11": construct_herm_full,
}


def construct(spec: ConstructionSpec) -> Construction:
    """Build and certify the code described by ``spec``."""
    prime_power(spec.q)
    return _DISPATCH[spec.theorem](spec)


# -- parameter enumeration -------------------------------------------------


def _subfield_orders(q: int) -> list[int]:
    p, m = prime_power(q)
    return [p**e for e in range(1, m + 1) if m % e == 0]


def _shapes(theorem: str, q: int) -> Iterator[dict]:
    """Point-set shape parameters with the number of evaluation points."""
    p, m = prime_power(q)
    if theorem.startswith("t3.3"):
        for r in _subfield_orders(q):
            dim = m // prime_power(r)[1]
            if dim % 2:
                continue
            for z in range(1, dim):
                for t in range(1, r + 1):
                    yield {"r": r, "z": z, "t": t}, t * r**z
    elif theorem.startswith("t3.6"):
        for r in _subfield_orders(q):
            dim = 2 * m // prime_power(r)[1]
            for z in range(1, dim):
                for t in range(1, r + 1):
                    yield {"r": r, "z": z, "t": t}, t * r**z
    elif theorem in ("t3.8", "t3.9", "t3.10"):
        for npr in divisors(q * q - 1):
            n1 = npr // gcd(npr, q + 1)
            for t in range(1, (q - 1) // n1 + 1):
                yield {"n_prime": npr, "t": t}, t * npr
    elif theorem == "t3.4":
        for n in range(3, q, 2):
            yield {"n": n}, n
    elif theorem == "t3.5":
        for n in range(2, q + 1):
            yield {"n": n}, n
    elif theorem == "t3.11":
        yield {}, q * q


def dimension_range(theorem: str, q: int, n: int) -> range:
    """Admissible k for ``n`` evaluation points (empty when the shape fails)."""
    if theorem == "t3.3i":
        return range(1, n // 2 + 1)
    if theorem == "t3.3ii":
        return range(1, n // 2 + 1) if n % 2 == 0 else range(0)
    if theorem in ("t3.3iii", "t3.4"):
        return range(1, (n + 1) // 2 + 1) if n % 2 == 1 and n < q else range(0)
    if theorem == "t3.5":
        return range(1, n // 2 + 1)
    if theorem.startswith("t3.6"):
        return range(1, (n - 1 + q) // (q + 1) + 1)
    if theorem in ("t3.8", "t3.9", "t3.10"):
        return range(1, (n + q) // (q + 1) + 1)
    if theorem == "t3.11":
        return range(q, q + 1)
    raise PreconditionError(f"unknown theorem {theorem}")


def hull_range(theorem: str, k: int) -> range:
    """Admissible ell for dimension k."""
    if theorem in ("t3.3ii", "t3.6ii", "t3.8", "t3.10"):
        return range(0, k)
    return range(0, k + 1)


def code_length(theorem: str, n: int) -> int:
    if theorem in ("t3.3ii", "t3.3iii", "t3.4", "t3.6ii", "t3.9", "t3.11"):
        return n + 1
    if theorem == "t3.10":
        return n + 2
    return n


def admissible_specs(theorem: str, q: int, max_length: int | None = None) -> Iterator[ConstructionSpec]:
    """Every in-precondition spec of ``theorem`` over q with code length <= max_length."""
    theorem = normalize_theorem(theorem)
    try:
        p, m = prime_power(q)
    except PreconditionError:
        return
    if q <= 2:
        return
    ctx = field_of_order(q)
    for shape, n in _shapes(theorem, q):
        N = code_length(theorem, n)
        if max_length is not None and N > max_length:
            continue
        if theorem == "t3.4":
            if (q - 1) % (n - 1) or sqrt(ctx, ctx.from_int(1 - n)) is None:
                continue
        if theorem == "t3.8" and n < 2:
            continue
        for k in dimension_range(theorem, q, n):
            for ell in hull_range(theorem, k):
                yield ConstructionSpec(theorem, q, k, ell, **shape)

