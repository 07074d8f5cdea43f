"""
Tests for Dynkin data and root systems.
Run: pytest tests/ -v
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from app.errors import BudgetExceededError, InvalidAlgebraError, WeightError
from app.lie.cartan import AlgebraType, SimpleFactor, classify_component, so_type
from app.lie.rootsys import build_root_system


class TestAlgebraType:
    """Parsing of algebra strings."""

    def test_product(self):
        algebra = AlgebraType.parse("A1xA1xA1")
        assert algebra.rank == 3
        assert not algebra.is_simple
        assert str(algebra) == "A1xA1xA1"

    @pytest.mark.parametrize("text", ["E9", "B1", "Q3", "", "F5"])
    def test_rejects(self, text):
        with pytest.raises(InvalidAlgebraError):
            AlgebraType.parse(text)

    def test_so_type(self):
        assert so_type(7) == SimpleFactor("B", 3)
        assert so_type(12) == SimpleFactor("D", 6)
        with pytest.raises(InvalidAlgebraError):
            so_type(4)

    def test_classify_full_diagrams(self):
        for name in ("E8", "F4", "D5", "B4", "C4", "G2"):
            rs = build_root_system(name)
            factor, order = classify_component(rs.cartan_rows, range(rs.rank))
            assert str(factor) == name
            assert order == list(range(rs.rank))


class TestRootSystem:
    """Root counts, dual Coxeter numbers and Weyl group orders."""

    @pytest.mark.parametrize(
        "name,positive,dual_coxeter,weyl",
        [
            ("A2", 3, 3, 6),
            ("B3", 9, 5, 48),
            ("C3", 9, 4, 48),
            ("D4", 12, 6, 192),
            ("G2", 6, 4, 12),
            ("F4", 24, 9, 1152),
            ("E6", 36, 12, 51840),
            ("E7", 63, 18, 2903040),
            ("E8", 120, 30, 696729600),
        ],
    )
    def test_invariants(self, name, positive, dual_coxeter, weyl):
        rs = build_root_system(name)
        assert len(rs.positive_roots) == positive
        assert rs.dual_coxeter == dual_coxeter
        assert rs.weyl_group_order == weyl

    @pytest.mark.parametrize(
        "name,adjoint",
        [
            ("A3", (1, 0, 1)),
            ("B3", (0, 1, 0)),
            ("C3", (2, 0, 0)),
            ("G2", (0, 1)),
            ("F4", (1, 0, 0, 0)),
            ("E6", (0, 1, 0, 0, 0, 0)),
            ("E7", (1, 0, 0, 0, 0, 0, 0)),
            ("E8", (0, 0, 0, 0, 0, 0, 0, 1)),
        ],
    )
    def test_highest_root(self, name, adjoint):
        rs = build_root_system(name)
        assert rs.highest_root == adjoint
        assert rs.norm(adjoint) == 2

    def test_short_roots(self):
        assert build_root_system("G2").norm((2, -1)) == Fraction(2, 3)
        assert build_root_system("B3").root_norms[-1] == 1
        assert build_root_system("C3").root_norms[-1] == 2

    def test_product_has_one_highest_root_per_factor(self):
        rs = build_root_system("A1xA1xA1")
        assert rs.highest_roots == ((2, 0, 0), (0, 2, 0), (0, 0, 2))
        assert rs.dual_coxeters == (2, 2, 2)
        with pytest.raises(InvalidAlgebraError):
            rs.dual_coxeter

    def test_orbits(self):
        assert len(build_root_system("A2").weyl_orbit((1, 0))) == 3
        assert len(build_root_system("E8").weyl_orbit((0,) * 7 + (1,))) == 240
        assert build_root_system("E7").orbit_size((0,) * 6 + (1,)) == 56

    def test_orbit_budget(self):
        rs = build_root_system("E8")
        with pytest.raises(BudgetExceededError):
            rs.weyl_orbit((1,) * 8, limit=1000)

    def test_dominant_conjugate_on_a_wall(self):
        rs = build_root_system("A1")
        assert rs.dominant_conjugate((-1,))[1] == 0
        assert rs.dominant_conjugate((-3,)) == ((1,), -1)

    def test_dual(self):
        rs = build_root_system("E6")
        assert rs.dual((1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)
        assert build_root_system("E7").dual((0,) * 6 + (1,)) == (0,) * 6 + (1,)


class TestWeightParsing:
    """Command-line weight syntax."""

    def test_forms(self):
        rs = build_root_system("A4")
        assert rs.parse_weight("omega3") == (0, 0, 1, 0)
        assert rs.parse_weight("1,0,0,1") == (1, 0, 0, 1)
        assert rs.parse_weight("adjoint") == (1, 0, 0, 1)
        assert rs.parse_weight("0") == (0, 0, 0, 0)

    def test_product_weights(self):
        rs = build_root_system("A1xB2")
        assert rs.parse_weight("1|0,1") == (1, 0, 1)
        assert rs.format_weight((1, 0, 1)) == "[1|0,1]"

    @pytest.mark.parametrize("text", ["omega5", "1,0", "a,b,c,d"])
    def test_rejects(self, text):
        with pytest.raises(WeightError):
            build_root_system("A4").parse_weight(text)

    def test_dominance_required(self):
        with pytest.raises(WeightError):
            build_root_system("A2").require_dominant((1, -1))
