import pytest

from hullforge.constructions import ConstructionSpec, construct
from hullforge.eaqecc import (
    EaqeccParams,
    derive_params,
    ebits_three_ways,
    generate_table,
    normalize_family,
    singleton_check,
)
from hullforge.errors import PreconditionError


def params_of(theorem, q, k, ell, **shape):
    built = construct(ConstructionSpec(theorem, q, k, ell, **shape))
    return derive_params(built.code, built.certificate)


def test_table_one_first_row():
    p = params_of("t3.6i", 9, 3, 1, r=9, z=1, t=8)
    assert p.as_tuple() == (72, 68, 4, 2) and p.q == 9 and p.mds
    assert str(p) == "[[72,68,4;2]]_9"


def test_table_two_first_row():
    assert params_of("t3.8", 11, 2, 1, n_prime=12, t=8).as_tuple() == (96, 93, 3, 1)


def test_full_field_last_row():
    # kappa = N - k - ell = 170 - 13 - 12
    p = params_of("t3.11", 13, 13, 12)
    assert p.as_tuple() == (170, 145, 14, 1)
    assert singleton_check(p).equality


def test_stabilizer_endpoint():
    p = params_of("t3.5", 5, 2, 2, n=5)
    assert p.c == 0 and p.as_tuple() == (5, 1, 3, 0)


def test_rejects_euclidean_certificate():
    built = construct(ConstructionSpec("t3.3i", 9, 3, 2, r=3, z=1, t=2))
    with pytest.raises(PreconditionError):
        derive_params(built.code, built.certificate)


def test_three_ebit_routes():
    built = construct(ConstructionSpec("t3.6ii", 4, 2, 1, r=4, z=1, t=3))
    routes = ebits_three_ways(built.code, built.certificate)
    assert set(routes) == {"k_minus_ell", "rank_HHdag", "hull_of_dual"}
    assert len(set(routes.values())) == 1 == routes["k_minus_ell"]


class TestSingleton:
    def test_examples(self):
        assert singleton_check(EaqeccParams(9, 72, 68, 4, 2, True)).equality
        assert singleton_check(EaqeccParams(11, 96, 93, 3, 1, True)).equality

    def test_inflated_c(self):
        check = singleton_check(EaqeccParams(9, 72, 68, 4, 3, False))
        assert check.holds and not check.equality and check.slack == 1

    def test_violation(self):
        check = singleton_check(EaqeccParams(9, 72, 69, 4, 2, False))
        assert not check and check.slack == -1

    def test_not_applicable(self):
        assert not singleton_check(EaqeccParams(5, 6, 1, 5, 1, False)).applicable

    def test_printed_large_rows_break_equality(self):
        # the q = 13 rows as printed in the reference table are off by four
        check = singleton_check(EaqeccParams(13, 170, 141, 14, 1, False))
        assert check.holds and check.slack == 4


class TestTables:
    def test_family_names(self):
        assert normalize_family("T4_8_i") == "t4.8i"
        assert normalize_family("4.9iii") == "t4.9iii"
        with pytest.raises(PreconditionError):
            normalize_family("t4.7")

    def test_missing_shape(self):
        with pytest.raises(PreconditionError):
            generate_table("t4.8i", 9, r=9, z=1)

    def test_ranges_clipped(self):
        rows = generate_table("t4.10", 5, ell_range=range(0, 10))
        assert [r.ell for r in rows] == [0, 1, 2, 3, 4, 5]
        assert rows[0].params.c == 5 and rows[-1].params.c == 0

    def test_default_ell_range(self):
        rows = generate_table("t4.6", 5, n=5)
        assert [(r.k, r.ell) for r in rows] == [(2, 1)]

    @pytest.mark.parametrize(
        "family,q,shape",
        [
            ("t4.6", 7, dict(n=7)),
            ("t4.8i", 4, dict(r=4, z=1, t=4)),
            ("t4.8ii", 4, dict(r=2, z=3, t=2)),
            ("t4.9i", 5, dict(n_prime=6, t=4)),
            ("t4.9ii", 5, dict(n_prime=6, t=4)),
            ("t4.9iii", 5, dict(n_prime=6, t=4)),
            ("t4.10", 3, {}),
        ],
    )
    def test_every_family(self, family, q, shape):
        rows = generate_table(family, q, **shape)
        assert rows
        assert [(r.k, r.ell) for r in rows] == sorted((r.k, r.ell) for r in rows)
        for row in rows:
            p = row.params
            assert p.c == row.k - row.ell and p.d == row.k + 1
            assert p.kappa == p.n - row.k - row.ell
            check = singleton_check(p)
            if check.applicable:
                assert check.equality and p.mds
            assert row.construction.certificate.dim == row.ell

    def test_row_json(self):
        row = generate_table("t4.10", 3)[0]
        assert set(row.csv_row()) == {"k", "ell", "n", "kappa", "d", "c", "q"}
        assert "a" in row.to_json()["code"]
        assert "basis" not in row.to_json(payload=False)["code"]["certificate"]
