"""
Tests for partitions, symmetric-group characters and plethysms.
Run: pytest tests/ -v
"""

from __future__ import annotations

import math

import pytest

from app.errors import BudgetExceededError, InvalidAlgebraError, WeightError
from app.lie.chars import Decomposition, decompose_character, irr_character
from app.lie.rootsys import build_root_system
from app.plethysm.branching import gl_partition_to_sl, gl_to_so_two_row, so_label, two_row_branching
from app.plethysm.cauchy import cauchy_dimension, cauchy_sym
from app.plethysm.littlewood_richardson import lr_coefficient, lr_product
from app.plethysm.partitions import Partition, char_table, mn_character, partitions_of
from app.plethysm.powers import adams, ext_power, schur_power, schur_reconstitution, sym_power, tensor_power


class TestPartitions:
    """Partition arithmetic."""

    def test_parse(self):
        assert Partition.parse("21") == (2, 1)
        assert Partition.parse("(10,2)") == (10, 2)
        assert str(Partition((10, 2))) == "10,2"
        assert str(Partition((2, 1, 1))) == "211"

    def test_rejects_increasing(self):
        with pytest.raises(WeightError):
            Partition((1, 2))

    def test_conjugate_and_hooks(self):
        assert Partition((3, 1)).conjugate() == (2, 1, 1)
        assert sorted(Partition((2, 1)).hooks()) == [1, 1, 3]

    def test_gl_dimension(self):
        assert Partition((2, 1)).gl_dimension(3) == 8
        assert Partition((1, 1, 1)).gl_dimension(2) == 0
        assert Partition((3,)).gl_dimension(4) == 20

    def test_counts(self):
        assert [len(list(partitions_of(k))) for k in range(1, 8)] == [1, 2, 3, 5, 7, 11, 15]


class TestCharacterTable:
    """Murnaghan–Nakayama characters of S_k."""

    @pytest.mark.parametrize("k", range(1, 7))
    def test_orthogonality(self, k):
        assert char_table(k).orthogonality_defects() == []

    def test_values(self):
        assert mn_character(Partition((2, 1)), Partition((3,))) == -1
        assert mn_character(Partition((2, 1)), Partition((1, 1, 1))) == 2
        assert mn_character(Partition((1, 1, 1)), Partition((2, 1))) == -1

    def test_kronecker(self):
        table = char_table(4)
        assert table.kronecker(Partition((2, 2)), Partition((2, 2)), Partition((2, 2))) == 1
        assert char_table(2).kronecker(Partition((1, 1)), Partition((1, 1)), Partition((1, 1))) == 0


class TestLittlewoodRichardson:
    """LR coefficients."""

    def test_coefficients(self):
        assert lr_coefficient((2, 1), (1,), (1,)) == 1
        assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
        assert lr_coefficient((3,), (1, 1), (1,)) == 0

    def test_product(self):
        assert lr_product((1,), (1,)) == {Partition((2,)): 1, Partition((1, 1)): 1}
        assert lr_product((1,), (1,), max_rows=1) == {Partition((2,)): 1}


class TestBranching:
    """GL → SO and GL → SL relabelings."""

    def test_symmetric_square_of_the_vector(self):
        assert two_row_branching(2, 0) == {(2, 0): 1, (0, 0): 1}

    def test_labels(self):
        assert so_label(1, 0, 7) == (1, 0, 0)
        assert so_label(1, 1, 10) == (0, 1, 0, 0, 0)
        assert gl_partition_to_sl((2, 1), 3) == (1, 1)

    def test_dimension_preserved(self):
        d = gl_to_so_two_row(2, 1, 7)
        assert d.total_dim() == Partition((2, 1)).gl_dimension(7)

    def test_unstable_rank(self):
        with pytest.raises(InvalidAlgebraError):
            gl_to_so_two_row(1, 0, 4)


class TestCauchy:
    """Cauchy decompositions of S^k(A⊗B) and S^k(A⊗B⊗C)."""

    def test_two_factors(self):
        terms = cauchy_sym(3, [2, 3])
        assert cauchy_dimension(terms, [2, 3]) == math.comb(8, 3)

    def test_three_factors(self):
        terms = cauchy_sym(3, [2, 2, 2])
        assert cauchy_dimension(terms, [2, 2, 2]) == math.comb(10, 3)


class TestPowers:
    """Symmetric, exterior and Schur powers."""

    def test_adams(self):
        rs = build_root_system("A1")
        assert adams(irr_character(rs, (1,)), 2).entries == {(2,): 1}

    def test_binary_forms(self):
        rs = build_root_system("A1")
        chi = irr_character(rs, (1,))
        for k in range(5):
            assert decompose_character(sym_power(chi, k)) == Decomposition.irreducible(rs, (k,))
        assert decompose_character(ext_power(chi, 2)) == Decomposition.irreducible(rs, (0,))
        assert not ext_power(chi, 3)

    def test_f4_exterior_square(self):
        rs = build_root_system("F4")
        d = decompose_character(ext_power(irr_character(rs, (0, 0, 0, 1)), 2))
        assert d.terms == {(1, 0, 0, 0): 1, (0, 0, 1, 0): 1}

    @pytest.mark.slow
    def test_e6_symmetric_cube(self):
        rs = build_root_system("E6")
        d = decompose_character(sym_power(irr_character(rs, (1, 0, 0, 0, 0, 0)), 3))
        assert d.terms == {(3, 0, 0, 0, 0, 0): 1, (1, 0, 0, 0, 0, 1): 1, (0,) * 6: 1}
        assert d.total_dim() == 3654

    def test_adjoint_square(self):
        rs = build_root_system("A2")
        d = decompose_character(sym_power(irr_character(rs, (1, 1)), 2))
        assert d.terms == {(2, 2): 1, (1, 1): 1, (0, 0): 1}

    def test_schur(self):
        rs = build_root_system("A2")
        chi = irr_character(rs, (1, 0))
        assert decompose_character(schur_power(chi, Partition((2, 1)))) == Decomposition.irreducible(rs, (1, 1))

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_schur_reconstitution(self, k):
        rs = build_root_system("B2")
        chi = irr_character(rs, (1, 0))
        assert schur_reconstitution(chi, k) == tensor_power(chi, k)

    def test_degree_guard(self):
        rs = build_root_system("A2")
        with pytest.raises(BudgetExceededError):
            ext_power(irr_character(rs, (1, 1)), 3, max_degree=2)

    def test_mass_budget(self):
        rs = build_root_system("E7")
        with pytest.raises(BudgetExceededError):
            sym_power(irr_character(rs, (1, 0, 0, 0, 0, 0, 0)), 3, budget=10_000)
