"""
Tests for characters, dimensions, Casimirs and decompositions.
Run: pytest tests/ -v
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from app.errors import BudgetExceededError, WeightError
from app.lie.chars import (
    CasimirNormalization,
    Decomposition,
    FormalCharacter,
    casimir,
    decompose_character,
    dominant_weights,
    irr_character,
    kostant_multiplicity,
    tensor,
    weyl_dimension,
)
from app.lie.rootsys import build_root_system

HR = CasimirNormalization.HIGHEST_ROOT
KILLING = CasimirNormalization.KILLING


class TestDimensions:
    """Weyl's dimension formula."""

    @pytest.mark.parametrize(
        "name,weight,dim",
        [
            ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
            ("E8", (1, 0, 0, 0, 0, 0, 0, 0), 3875),
            ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
            ("E6", (1, 0, 0, 0, 0, 0), 27),
            ("F4", (0, 0, 0, 1), 26),
            ("F4", (0, 0, 1, 0), 273),
            ("G2", (1, 0), 7),
            ("C3", (0, 0, 1), 14),
            ("B3", (0, 0, 1), 8),
            ("D5", (0, 0, 0, 0, 1), 16),
            ("A5", (0, 0, 1, 0, 0), 20),
        ],
    )
    def test_weyl_dimension(self, name, weight, dim):
        assert weyl_dimension(build_root_system(name), weight) == dim

    def test_character_mass_is_dimension(self):
        rs = build_root_system("F4")
        assert irr_character(rs, (0, 0, 0, 1)).mass() == 26
        assert irr_character(rs, (1, 0, 0, 0)).mass() == 52


class TestCasimir:
    """Casimir eigenvalues in both normalizations."""

    @pytest.mark.parametrize("name", ["A1", "A4", "B3", "C3", "D4", "G2", "F4", "E6", "E7"])
    def test_adjoint_is_one_in_killing(self, name):
        rs = build_root_system(name)
        assert casimir(rs, rs.adjoint_weight(), KILLING) == 1
        assert casimir(rs, rs.adjoint_weight(), HR) == 2 * rs.dual_coxeter

    def test_known_values(self):
        e7 = build_root_system("E7")
        assert casimir(e7, (0,) * 6 + (1,), HR) == Fraction(57, 2)
        assert casimir(e7, (0,) * 6 + (1,), KILLING) == Fraction(19, 24)
        f4 = build_root_system("F4")
        assert casimir(f4, (0, 0, 0, 1), HR) == 12
        assert casimir(f4, (0, 0, 0, 2), KILLING) == Fraction(13, 9)

    def test_product_algebra_killing(self):
        rs = build_root_system("A1xA1xA1")
        assert casimir(rs, (2, 2, 0), KILLING) == 2

    def test_parse_normalization(self):
        assert CasimirNormalization.parse("hr") is HR
        assert CasimirNormalization.parse("Killing") is KILLING
        with pytest.raises(ValueError):
            CasimirNormalization.parse("dynkin")


class TestMultiplicities:
    """Freudenthal against Kostant."""

    @pytest.mark.parametrize(
        "name,weight,mu,mult",
        [
            ("A2", (1, 1), (0, 0), 2),
            ("A3", (1, 0, 1), (0, 0, 0), 3),
            ("B3", (0, 1, 0), (0, 0, 0), 3),
            ("G2", (1, 0), (0, 0), 1),
            ("E8", (0, 0, 0, 0, 0, 0, 0, 1), (0,) * 8, 8),
        ],
    )
    def test_zero_weight(self, name, weight, mu, mult):
        assert irr_character(build_root_system(name), weight).multiplicity(mu) == mult

    @pytest.mark.parametrize(
        "name,weight",
        [("A2", (2, 1)), ("B2", (1, 1)), ("G2", (1, 1)), ("C3", (0, 1, 0)), ("A3", (1, 1, 0))],
    )
    def test_kostant_agrees(self, name, weight):
        rs = build_root_system(name)
        chi = irr_character(rs, weight)
        for mu in dominant_weights(rs, weight):
            assert kostant_multiplicity(rs, weight, mu) == chi.multiplicity(mu)

    def test_budget(self):
        rs = build_root_system("E8")
        with pytest.raises(BudgetExceededError):
            irr_character(rs, (1, 0, 0, 0, 0, 0, 0, 0), limit=1000)


class TestFormalCharacter:
    """Character arithmetic on dominant representatives."""

    def test_rejects_asymmetric_maps(self):
        rs = build_root_system("A1")
        with pytest.raises(WeightError):
            FormalCharacter.from_weights(rs, {(1,): 1})

    def test_from_weights(self):
        rs = build_root_system("A1")
        chi = FormalCharacter.from_weights(rs, {(1,): 1, (-1,): 1})
        assert chi == irr_character(rs, (1,))

    def test_dual(self):
        rs = build_root_system("A2")
        assert irr_character(rs, (1, 0)).dual() == irr_character(rs, (0, 1))

    def test_expand(self):
        rs = build_root_system("A2")
        expanded = irr_character(rs, (1, 1)).expand()
        assert len(expanded) == 7
        assert sum(expanded.values()) == 8

    def test_product_matches_klimyk(self):
        rs = build_root_system("A2")
        product = irr_character(rs, (1, 0)) * irr_character(rs, (0, 1))
        assert decompose_character(product) == tensor(rs, (1, 0), (0, 1))


class TestDecomposition:
    """Irreducible decompositions."""

    def test_a1_tensor(self):
        rs = build_root_system("A1")
        d = tensor(rs, (1,), (1,))
        assert d == Decomposition(rs, {(2,): 1, (0,): 1})
        assert d.format() == "[2](3) + [0](1)"

    def test_e6_tensor_dual(self):
        rs = build_root_system("E6")
        d = tensor(rs, (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1))
        assert d.terms == {(0,) * 6: 1, (0, 1, 0, 0, 0, 0): 1, (1, 0, 0, 0, 0, 1): 1}
        assert d.total_dim() == 729

    def test_peel_irreducible(self):
        rs = build_root_system("G2")
        assert decompose_character(irr_character(rs, (1, 1))) == Decomposition.irreducible(rs, (1, 1))

    def test_virtual(self):
        rs = build_root_system("A1")
        d = Decomposition(rs, {(2,): 1}) - Decomposition(rs, {(2,): 1, (0,): 1})
        assert d.is_virtual
        assert d.format() == "-[0](1)"

    def test_rejects_non_dominant(self):
        rs = build_root_system("A2")
        with pytest.raises(WeightError):
            Decomposition(rs, {(1, -1): 1})

    def test_access(self):
        rs = build_root_system("A1")
        d = tensor(rs, (2,), (2,))
        assert (4,) in d
        assert d[(1,)] == 0
        assert [mu for mu, _ in d] == [(4,), (2,), (0,)]
