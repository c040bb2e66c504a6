"""Euclidean and Hermitian hull dimensions, computed two independent ways.

The Gram route uses dim Hull(C) = k - rank(G sigma(G)^T), checked against
the same identity on a parity-check matrix.  The intersection route builds
a generator of the dual and intersects row spaces.  ``certify`` runs both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificationError
from .grs import GrsCode, check_kind, sigma
from .matrix import GfMatrix, kernel, matmul, rank, rowspace_intersection, rowspace_intersection_dim


def _generator(code) -> GfMatrix:
    return code.generator_matrix if isinstance(code, GrsCode) else code


def conj(M: GfMatrix, kind: str) -> GfMatrix:
    return GfMatrix(M.ctx, sigma(M.ctx, M.a, kind))


def gram(M: GfMatrix, kind: str) -> GfMatrix:
    """M sigma(M)^T; for the Hermitian kind this is M M^dagger."""
    return matmul(M, conj(M, kind).T)


def parity_check(code) -> GfMatrix:
    if isinstance(code, GrsCode):
        return code.parity_check_matrix
    return kernel(code)


def dual_generator(code, kind: str) -> GfMatrix:
    """A generator matrix of the dual under ``kind``."""
    return conj(parity_check(code), kind)


def hull_dim_gram(code, kind: str) -> int:
    check_kind(kind)
    G = _generator(code)
    H = parity_check(code)
    k = rank(G)
    by_generator = k - rank(gram(G, kind))
    by_parity = G.cols - k - rank(gram(H, kind)) if H.rows else 0
    if by_generator != by_parity:
        raise CertificationError(
            "Gram ranks of generator and parity check disagree",
            {"kind": kind, "by_generator": by_generator, "by_parity_check": by_parity},
        )
    return by_generator


def hull_dim_intersect(code, kind: str) -> tuple[int, GfMatrix]:
    check_kind(kind)
    G = _generator(code)
    D = dual_generator(code, kind)
    if D.rows == 0:
        return 0, GfMatrix.zeros(G.ctx, 0, G.cols)
    dim = rowspace_intersection_dim(G, D)
    basis = rowspace_intersection(G, D)
    if basis.rows != dim:
        raise CertificationError(
            "intersection basis size disagrees with the rank formula",
            {"kind": kind, "rank_formula": dim, "basis_rows": basis.rows},
        )
    return dim, basis


@dataclass(frozen=True)
class HullCertificate:
    kind: str
    dim_by_gram: int
    dim_by_intersection: int
    hull_basis: GfMatrix

    @property
    def dim(self) -> int:
        return self.dim_by_gram

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "dim": self.dim,
            "methods": {"gram": self.dim_by_gram, "intersection": self.dim_by_intersection},
            "basis": self.hull_basis.to_json(),
        }


def certify(code, kind: str, expected: int | None = None) -> HullCertificate:
    """Compute the hull both ways; raise :class:`CertificationError` on any mismatch."""
    by_gram = hull_dim_gram(code, kind)
    by_int, basis = hull_dim_intersect(code, kind)
    diag = {"kind": kind, "dim_by_gram": by_gram, "dim_by_intersection": by_int, "expected": expected}
    if by_gram != by_int:
        raise CertificationError("hull dimension methods disagree", diag)
    G = _generator(code)
    if basis.rows:
        if not gram_cross(basis, G, kind).is_zero():
            raise CertificationError("hull basis row not in the dual", diag)
        if rank(G.vstack(basis)) != rank(G):
            raise CertificationError("hull basis row not in the code", diag)
    if expected is not None and by_gram != expected:
        raise CertificationError(f"hull dimension {by_gram} != expected {expected}", diag)
    return HullCertificate(kind, by_gram, by_int, basis)


def gram_cross(A: GfMatrix, B: GfMatrix, kind: str) -> GfMatrix:
    """A sigma(B)^T: all pairwise inner products of rows of A with rows of B."""
    return matmul(A, conj(B, kind).T)
