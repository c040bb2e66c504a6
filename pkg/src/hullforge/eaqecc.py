"""EAQECC parameters from Hermitian-hull-certified MDS codes.

An [N, k] MDS code C over GF(q^2) with dim Hull_H(C) = ell and k <= N/2
gives an [[N, N-k-ell, k+1; k-ell]]_q MDS EAQECC.  The number of ebits is
checked three ways: k - ell, rank(H H^dagger) for the parity-check matrix
H of the Hermitian dual C' (H = conj(G)), and N - dim C' - dim Hull_H(C').
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .constructions import (
    Construction,
    ConstructionSpec,
    construct,
    dimension_range,
    hull_range,
)
from .errors import CertificationError, PreconditionError
from .grs import HERMITIAN, GrsCode
from .hull import HullCertificate, conj, dual_generator, gram, hull_dim_gram
from .matrix import rank

FAMILIES = {
    "t4.6": "t3.5",
    "t4.8i": "t3.6i",
    "t4.8ii": "t3.6ii",
    "t4.9i": "t3.8",
    "t4.9ii": "t3.9",
    "t4.9iii": "t3.10",
    "t4.10": "t3.11",
}


def normalize_family(name: str) -> str:
    s = name.strip().lower().replace("_", ".")
    if not s.startswith("t"):
        s = "t" + s
    s = re.sub(r"\.(i+)$", r"\1", s)
    if s not in FAMILIES:
        raise PreconditionError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    return s


@dataclass(frozen=True)
class EaqeccParams:
    q: int
    n: int
    kappa: int
    d: int
    c: int
    mds: bool

    def __str__(self) -> str:
        return f"[[{self.n},{self.kappa},{self.d};{self.c}]]_{self.q}"

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.kappa, self.d, self.c)


@dataclass(frozen=True)
class SingletonCheck:
    applicable: bool
    holds: bool
    equality: bool
    slack: int

    def __bool__(self) -> bool:
        return self.holds


def singleton_check(params: EaqeccParams) -> SingletonCheck:
    """n + c - kappa >= 2(d-1), meaningful only when d <= (n+2)/2."""
    slack = params.n + params.c - params.kappa - 2 * (params.d - 1)
    applicable = 2 * params.d <= params.n + 2
    return SingletonCheck(applicable, slack >= 0, slack == 0, slack)


def ebits_three_ways(code, certificate: HullCertificate) -> dict[str, int]:
    G = code.generator_matrix if isinstance(code, GrsCode) else code
    N, k = G.cols, rank(G)
    H = conj(G, HERMITIAN)
    dual = dual_generator(code, HERMITIAN)
    return {
        "k_minus_ell": k - certificate.dim,
        "rank_HHdag": rank(gram(H, HERMITIAN)),
        "hull_of_dual": N - dual.rows - hull_dim_gram(dual, HERMITIAN),
    }


def derive_params(code, certificate: HullCertificate) -> EaqeccParams:
    if certificate.kind != HERMITIAN:
        raise PreconditionError("EAQECC parameters need a Hermitian hull certificate")
    G = code.generator_matrix if isinstance(code, GrsCode) else code
    N, k = G.cols, rank(G)
    if 2 * k > N:
        raise PreconditionError(f"k={k} exceeds N/2 for N={N}")
    ell = certificate.dim
    routes = ebits_three_ways(code, certificate)
    if len(set(routes.values())) != 1:
        raise CertificationError("ebit count routes disagree", routes)
    c = routes["k_minus_ell"]
    kappa = N - k - ell
    # dual code has dimension N - k
    if kappa != 2 * (N - k) - N + c:
        raise CertificationError("logical dimension routes disagree", {"kappa": kappa, "c": c})
    q = G.ctx.base_q
    d = k + 1
    slack = N + c - kappa - 2 * (d - 1)
    return EaqeccParams(q=q, n=N, kappa=kappa, d=d, c=c, mds=(2 * d <= N + 2 and slack == 0))


@dataclass(frozen=True)
class TableRow:
    k: int
    ell: int
    params: EaqeccParams
    construction: Construction = field(repr=False)

    def csv_row(self) -> dict:
        p = self.params
        return {"k": self.k, "ell": self.ell, "n": p.n, "kappa": p.kappa, "d": p.d, "c": p.c, "q": p.q}

    def to_json(self, payload: bool = True) -> dict:
        out = self.csv_row()
        out["mds"] = self.params.mds
        out["code"] = self.construction.to_json(payload=payload)
        return out


def _points_for(theorem: str, q: int, shape: dict) -> int:
    if theorem in ("t3.6i", "t3.6ii"):
        return shape["t"] * shape["r"] ** shape["z"]
    if theorem in ("t3.8", "t3.9", "t3.10"):
        return shape["t"] * shape["n_prime"]
    if theorem == "t3.5":
        return shape["n"]
    return q * q


_SHAPE_KEYS = {
    "t3.5": ("n",),
    "t3.6i": ("r", "z", "t"),
    "t3.6ii": ("r", "z", "t"),
    "t3.8": ("n_prime", "t"),
    "t3.9": ("n_prime", "t"),
    "t3.10": ("n_prime", "t"),
    "t3.11": (),
}


def generate_table(
    family: str,
    q: int,
    k_range: range | None = None,
    ell_range: range | None = None,
    **shape,
) -> list[TableRow]:
    """Construct, certify and derive one EAQECC row per (k, ell).

    ``k_range`` defaults to every admissible dimension, ``ell_range`` to
    1..k-1 (the endpoints give stabilizer and LCD cases).  Both are clipped
    to the theorem's admissible ranges.
    """
    theorem = FAMILIES[normalize_family(family)]
    keys = _SHAPE_KEYS[theorem]
    missing = [key for key in keys if shape.get(key) is None]
    if missing:
        raise PreconditionError(f"family {family} requires parameter(s): {', '.join(missing)}")
    shape = {key: shape[key] for key in keys}
    n = _points_for(theorem, q, shape)
    admissible_k = dimension_range(theorem, q, n)
    rows = []
    ks = [k for k in (k_range if k_range is not None else admissible_k) if k in admissible_k]
    for k in ks:
        allowed = hull_range(theorem, k)
        ells = ell_range if ell_range is not None else range(1, k)
        for ell in ells:
            if ell not in allowed:
                continue
            spec = ConstructionSpec(theorem, q, k, ell, **shape)
            try:
                built = construct(spec)
            except CertificationError as exc:
                exc.diagnostics.update({"family": family, "spec": spec.to_json()})
                raise
            rows.append(TableRow(k, ell, derive_params(built.code, built.certificate), built))
    return rows
