"""
Tests for series formulas, tables and tabled-identity verification.
Run: pytest tests/ -v
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from app.config import override_settings
from app.errors import FormulaPoleError, SeriesDataError
from app.schemas.report import CheckStatus
from app.series.formulas import (
    magic_dim,
    magic_dim_pq,
    mu_closed_form,
    series_casimir,
    series_dimension,
    vogel_casimir,
    vogel_dim_g,
    vogel_row_dim,
    vogel_row_simplifies,
)
from app.series.tables import available_series, load_series
from app.series.verify import (
    check_magic_square,
    check_vogel_dimensions,
    is_ambient_cube,
    lhs_degree,
    verify_identity,
    verify_role_casimirs,
    verify_role_dimensions,
    verify_table,
)


class TestVogel:
    """Vogel plane and magic square dimensions."""

    @pytest.mark.parametrize(
        "m,dim",
        [("-2/3", 14), ("0", 28), ("1", 52), ("2", 78), ("4", 133), ("8", 248)],
    )
    def test_exceptional_row(self, m, dim):
        assert vogel_row_dim("exceptional", m) == dim

    def test_removable_singularity(self):
        assert vogel_row_dim("subexceptional", 0) == 9

    def test_pole(self):
        with pytest.raises(FormulaPoleError):
            vogel_dim_g(0, 4)

    @pytest.mark.parametrize("row", ["osp", "sl", "subexceptional"])
    def test_rows_simplify(self, row):
        assert vogel_row_simplifies(row)

    def test_casimir_of_the_symmetric_square(self):
        # E8: β = 12, γ = 20
        assert vogel_casimir(12, 20, "g^(2)") == 2 + Fraction(2, 30)
        assert vogel_casimir(12, 20, "g_Q") == Fraction(8, 5)

    def test_magic_square(self):
        assert magic_dim(8, 8) == 248
        assert magic_dim(1, 1) == 3
        assert magic_dim(2, 2) == 16
        assert magic_dim_pq(12, 12) == 248

    def test_batteries(self):
        for record in check_vogel_dimensions() + check_magic_square():
            assert record.status is CheckStatus.MATCH, record.id


class TestSeriesFormulas:
    """Role dimension and Casimir formulas."""

    @pytest.mark.parametrize(
        "series,role,dim",
        [
            ("subexceptional", "V", 56),
            ("subexceptional", "g", 133),
            ("severi", "V", 27),
            ("severi", "g", 78),
            ("severi_section", "V", 26),
            ("severi_section", "g", 52),
        ],
    )
    def test_dimensions_at_eight(self, series, role, dim):
        assert series_dimension(series, role, 8) == dim

    def test_exceptional_casimirs(self):
        assert series_casimir("exceptional", "g", 8) == 1
        assert series_casimir("exceptional", "g2", 8) == 2
        assert series_casimir("exceptional", "g^(2)", 8) == Fraction(2 * 31, 30)
        assert series_casimir("exceptional", "g_Q", 8) == Fraction(48, 30)

    def test_pole(self):
        with pytest.raises(FormulaPoleError):
            series_casimir("severi_section", "V", Fraction(4, 5))

    def test_unknown_role(self):
        with pytest.raises(SeriesDataError):
            series_dimension("severi", "Q", 1)


class TestMuClosedForm:
    """Two-row multiplicities in S^n(A⊗B⊗C)."""

    @pytest.mark.parametrize(
        "args,value",
        [((2, 1, 1, 1), 0), ((2, 0, 0, 0), 1), ((3, 1, 1, 1), 1), ((4, 2, 2, 2), 1)],
    )
    def test_samples(self, args, value):
        assert mu_closed_form(*args) == value

    def test_argument_order(self):
        assert mu_closed_form(4, 2, 0, 2) == mu_closed_form(4, 0, 2, 2)

    def test_outside_range(self):
        with pytest.raises(ValueError):
            mu_closed_form(2, 0, 0, 2)


class TestTables:
    """Loading series tables."""

    def test_available(self):
        assert available_series() == ["exceptional", "severi", "severi_section", "subexceptional"]

    def test_exceptional_entries(self):
        table = load_series("exceptional")
        assert [str(e.algebra) for e in table.entries] == ["G2", "D4", "F4", "E6", "E7", "E8"]
        f4 = table.entry("1")
        assert f4.role("g").total_dim() == 52
        assert f4.role("1").total_dim() == 1

    def test_orbit_roles(self):
        d4 = load_series("exceptional").entry(0)
        assert len(d4.role("g_Q")) == 3
        assert len(d4.role("g_Q", representative=True)) == 1

    def test_expressions(self):
        f4 = load_series("exceptional").entry(1)
        assert f4.expression("g^(2)").terms == {(2, 0, 0, 0): 1}
        assert f4.expression("2g").terms == {(1, 0, 0, 0): 2}
        assert f4.expression("-g2").is_virtual

    def test_missing(self):
        table = load_series("exceptional")
        with pytest.raises(SeriesDataError):
            table.entry("3")
        with pytest.raises(SeriesDataError):
            table.identity("no-such-identity")
        with pytest.raises(SeriesDataError):
            load_series("quaternionic")


class TestVerification:
    """Tabled identities and role formulas."""

    @pytest.mark.parametrize("identity_id", ["vogel-ext2-g", "vogel-sym2-g"])
    def test_vogel_squares_at_f4(self, identity_id):
        table = load_series("exceptional")
        record = verify_identity(table.entry(1), table.identity(identity_id))
        assert record.status is CheckStatus.MATCH
        assert record.id == f"exceptional/m=1/{identity_id}"
        assert record.dims["lhs"] == record.dims["rhs"]

    def test_budget_becomes_a_skip(self):
        table = load_series("exceptional")
        record = verify_identity(table.entry(8), table.identity("vogel-sym2-g"), budget=100)
        assert record.status is CheckStatus.SKIPPED_BUDGET

    def test_cube_rank_limit(self):
        table = load_series("exceptional")
        f4 = table.entry(1)
        override_settings(ambient_cube_max_rank=3)
        record = verify_identity(f4, table.identity("vogel-ext3-g"))
        assert record.status is CheckStatus.SKIPPED_BUDGET
        assert "ambient_cube_max_rank 3" in record.note
        assert verify_identity(f4, table.identity("vogel-ext2-g")).status is CheckStatus.MATCH
        override_settings(ambient_cube_max_rank=4)
        assert verify_identity(f4, table.identity("vogel-ext3-g")).status is not CheckStatus.SKIPPED_BUDGET

    def test_cube_rank_limit_reaches_table_runs(self):
        override_settings(ambient_cube_max_rank=1)
        records = verify_table("exceptional", m=[Fraction(1)], identities=["vogel-ext3-g", "vogel-sym3-g"])
        assert [r.status for r in records] == [CheckStatus.SKIPPED_BUDGET] * 2

    def test_identity_left_side_degree(self):
        assert lhs_degree("sym 3 g") == 3
        assert lhs_degree("schur 21 g") == 3
        assert lhs_degree("tensor g g2") == 2
        with pytest.raises(SeriesDataError):
            lhs_degree("cube g")

    def test_only_cubes_of_g_are_rank_limited(self):
        assert is_ambient_cube("ext 3 g")
        assert is_ambient_cube("schur 21 g")
        assert not is_ambient_cube("ext 3 V")
        assert not is_ambient_cube("sym 2 g")

    @pytest.mark.parametrize("m", ["-2/3", "0", "1", "2", "4", "8"])
    def test_role_formulas(self, m):
        entry = load_series("exceptional").entry(m)
        records = verify_role_dimensions(entry) + verify_role_casimirs(entry)
        assert records
        assert all(r.status is CheckStatus.MATCH for r in records), [r.id for r in records]

    def test_table_selection(self):
        records = verify_table("exceptional", m=[Fraction(-2, 3)], identities=["vogel-ext2-g"])
        assert [r.id for r in records] == ["exceptional/m=-2/3/vogel-ext2-g"]
        assert records[0].status is CheckStatus.MATCH
