import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hullforge.constructions import ConstructionSpec, construct
from hullforge.errors import CertificationError
from hullforge.field import field_of_order, quadratic_field
from hullforge.grs import EUCLIDEAN, HERMITIAN, GrsCode
from hullforge.hull import certify, gram, hull_dim_gram, hull_dim_intersect
from hullforge.matrix import GfMatrix, rank
from hullforge.oracle import hull_enum


def test_self_orthogonal_hermitian():
    built = construct(ConstructionSpec("t3.5", 5, 2, 2, n=5))
    assert gram(built.code.generator_matrix, HERMITIAN).is_zero()
    assert hull_dim_gram(built.code, HERMITIAN) == 2


def test_lcd_hermitian():
    built = construct(ConstructionSpec("t3.5", 5, 2, 0, n=5))
    assert rank(gram(built.code.generator_matrix, HERMITIAN)) == 2
    assert hull_dim_gram(built.code, HERMITIAN) == 0


def test_smallfield_example_both_methods():
    code = construct(ConstructionSpec("t3.5", 5, 2, 1, n=5)).code
    assert hull_dim_gram(code, HERMITIAN) == 1
    dim, basis = hull_dim_intersect(code, HERMITIAN)
    assert dim == 1 and basis.rows == 1
    assert hull_enum(code, HERMITIAN) == 1


def test_certificate_fields():
    code = construct(ConstructionSpec("t3.5", 5, 2, 1, n=5)).code
    cert = certify(code, HERMITIAN, 1)
    assert cert.dim == cert.dim_by_gram == cert.dim_by_intersection == 1
    js = cert.to_json()
    assert js["methods"] == {"gram": 1, "intersection": 1}
    assert js["basis"]["rows"] == 1


def test_wrong_expectation_raises_with_diagnostics():
    code = construct(ConstructionSpec("t3.5", 5, 2, 1, n=5)).code
    with pytest.raises(CertificationError) as info:
        certify(code, HERMITIAN, 2)
    assert info.value.diagnostics["dim_by_gram"] == 1
    assert info.value.exit_code == 3


def test_plain_matrix_input():
    ctx = field_of_order(5)
    G = GfMatrix(ctx, [[1, 2, 0, 0], [0, 0, 1, 2]])
    # (1,2).(1,2) = 5 = 0, so both rows are self-orthogonal and orthogonal to each other
    assert certify(G, EUCLIDEAN, 2).dim == 2


def test_unknown_kind():
    code = GrsCode(field_of_order(5), (0, 1, 2), (1, 1, 1), 1)
    with pytest.raises(ValueError):
        hull_dim_gram(code, "symplectic")


@given(
    st.sampled_from([(3, EUCLIDEAN), (4, EUCLIDEAN), (5, EUCLIDEAN), (7, EUCLIDEAN), (4, HERMITIAN), (9, HERMITIAN)]),
    st.integers(1, 3),
    st.integers(2, 6),
    st.integers(0, 2**32 - 1),
)
def test_methods_agree_with_enumeration(q_kind, k, n, seed):
    """Random matrices: Gram route, intersection route and enumeration coincide."""
    q, kind = q_kind
    ctx = field_of_order(q)
    if k > n or q**k > 2000:
        return
    G = GfMatrix(ctx, np.random.default_rng(seed).integers(0, q, (k, n)))
    if rank(G) < k:
        return
    cert = certify(G, kind)
    assert cert.dim == hull_enum(G, kind, budget=10**4)
    assert 0 <= cert.dim <= min(k, n - k)


def test_gram_on_quadratic_field_is_hermitian():
    ctx = quadratic_field(2)
    G = GfMatrix(ctx, [[1, 2, 3]])
    # entries 1, w, w^2: Hermitian norms 1 + 1 + 1 = 1 in GF(2)
    assert gram(G, HERMITIAN).tolist() == [[1]]
