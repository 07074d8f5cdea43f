"""
Tests for generating-function expansion and the fixed symmetric-algebra checks.
Run: pytest tests/ -v
"""

from __future__ import annotations

import math

import pytest

from app.errors import WeightError
from app.lie.chars import Decomposition
from app.lie.rootsys import build_root_system
from app.schemas.report import CheckStatus
from app.series.generating import (
    GFSpec,
    GFTerm,
    direct_sym_series,
    expand_gf,
    first_difference,
    geometric_series,
    hypermatrix_closed_form,
    hypermatrix_rs,
    mu_bruteforce,
    scorza_module,
    slso_direct,
)
from app.series.formulas import mu_closed_form
from app.series.verify import check_hypermatrix, check_mu_lemma, check_scorza, check_sl3


class TestExpansion:
    """Series arithmetic in the Cartan-product ring."""

    def test_binary_forms(self):
        rs = build_root_system("A1")
        v = Decomposition.irreducible(rs, (1,))
        expected = geometric_series(GFTerm(1, v), rs, 5)
        assert [d.terms for d in expected] == [{(k,): 1} for k in range(6)]
        assert first_difference(expected, direct_sym_series(rs, (1,), 5)) is None

    def test_invariant_denominator(self):
        rs = build_root_system("A1")
        spec = GFSpec(
            rs=rs,
            label="binary quadratics",
            denominator=[GFTerm(1, Decomposition.irreducible(rs, (2,))), GFTerm(2, Decomposition.irreducible(rs, (0,)))],
        )
        expanded = expand_gf(spec, 4)
        assert expanded[4].terms == {(8,): 1, (4,): 1, (0,): 1}
        assert first_difference(expanded, direct_sym_series(rs, (2,), 4)) is None

    def test_first_difference(self):
        rs = build_root_system("A1")
        a = [Decomposition.irreducible(rs, (0,)), Decomposition.irreducible(rs, (1,))]
        b = [Decomposition.irreducible(rs, (0,)), Decomposition.irreducible(rs, (1,), 2)]
        assert first_difference(a, b) == 1
        assert first_difference(a, a) is None


class TestHypermatrices:
    """S^•(A⊗B⊗C) with dim A = dim B = dim C = 2."""

    def test_closed_form(self):
        closed = hypermatrix_closed_form(4)
        direct = direct_sym_series(hypermatrix_rs(), (1, 1, 1), 4)
        assert first_difference(closed, direct) is None
        assert closed[2].total_dim() == 36

    def test_all_forms(self):
        records = check_hypermatrix(max_degree=4)
        assert {r.id for r in records} == {"hypermatrix/phi", "hypermatrix/branches", "hypermatrix/closed"}
        assert all(r.status is CheckStatus.MATCH for r in records)

    @pytest.mark.parametrize("n", range(7))
    def test_mu_lemma(self, n):
        for a in range(n // 2 + 1):
            for b in range(a, n // 2 + 1):
                for c in range(b, n // 2 + 1):
                    assert mu_closed_form(n, a, b, c) == mu_bruteforce(n, a, b, c), (n, a, b, c)

    def test_mu_record(self):
        (record,) = check_mu_lemma(6)
        assert record.status is CheckStatus.MATCH
        assert record.dims["mismatches"] == 0

    def test_two_row_guard(self):
        with pytest.raises(ValueError):
            mu_bruteforce(2, 0, 0, 2)


class TestFixedFamilies:
    """sl3 adjoint, sl2 × so_n and Scorza checks."""

    def test_sl3(self):
        records = check_sl3(max_degree=4)
        assert [r.id for r in records] == ["sl3/alternatives", "sl3/cauchy"]
        assert all(r.status is CheckStatus.MATCH for r in records)

    @pytest.mark.parametrize("k", range(4))
    def test_slso_cauchy_side_dimension(self, k):
        assert slso_direct(5, 3)[k].total_dim() == math.comb(10 + k - 1, k)

    def test_scorza(self):
        records = check_scorza(cases=((1, 2), (1, 3), (2, 2)), max_degree=3)
        assert all(r.status is CheckStatus.MATCH for r in records), [r.note for r in records]

    def test_scorza_module(self):
        rs, v = scorza_module(8, 3)
        assert str(rs.type) == "E6"
        assert v == (1, 0, 0, 0, 0, 0)
        with pytest.raises(WeightError):
            scorza_module(8, 4)
        with pytest.raises(WeightError):
            scorza_module(3, 2)
