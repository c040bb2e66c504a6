"""GRS and extended GRS codes with prescribed Euclidean or Hermitian hull dimension."""

from .constructions import (
    EUCLIDEAN_THEOREMS,
    HERMITIAN_THEOREMS,
    THEOREMS,
    Construction,
    ConstructionSpec,
    admissible_specs,
    construct,
)
from .eaqecc import EaqeccParams, TableRow, derive_params, generate_table, singleton_check
from .errors import BudgetExceeded, CertificationError, PreconditionError
from .field import FieldCtx, field_of_order, make_field, quadratic_field
from .grs import EUCLIDEAN, HERMITIAN, GrsCode, compute_u, dual_membership
from .hull import HullCertificate, certify, hull_dim_gram, hull_dim_intersect
from .matrix import GfMatrix, kernel, rank, rref
from .oracle import hull_enum, mds_minor_check, min_distance_enum

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CertificationError",
    "Construction",
    "ConstructionSpec",
    "EUCLIDEAN",
    "EUCLIDEAN_THEOREMS",
    "EaqeccParams",
    "FieldCtx",
    "GfMatrix",
    "GrsCode",
    "HERMITIAN",
    "HERMITIAN_THEOREMS",
    "HullCertificate",
    "PreconditionError",
    "THEOREMS",
    "TableRow",
    "admissible_specs",
    "certify",
    "compute_u",
    "construct",
    "derive_params",
    "dual_membership",
    "field_of_order",
    "generate_table",
    "hull_dim_gram",
    "hull_dim_intersect",
    "hull_enum",
    "kernel",
    "make_field",
    "mds_minor_check",
    "min_distance_enum",
    "quadratic_field",
    "rank",
    "rref",
    "singleton_check",
]
