"""
Tests for the extremal eigenspace V_k of exterior powers.
Run: pytest tests/ -v
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from app.errors import InvalidAlgebraError, WeightError
from app.extremal.checks import check_completeness, check_diameters, minuscule_cases
from app.extremal.subsets import diameter, full_subset, marked_root, weight_poset
from app.extremal.vk import (
    a_series_lower_bound,
    chain_distance,
    extremal_row,
    fano_subdiagrams,
    is_minuscule,
    max_casimir_bruteforce,
    minuscule_dichotomy_check,
    theta_vk,
    v2_irreducibility_check,
    vk_components,
    vk_regime,
)
from app.lie.chars import CasimirNormalization, Decomposition, casimir
from app.lie.rootsys import build_root_system
from app.schemas.report import CheckStatus

HR = CasimirNormalization.HIGHEST_ROOT


class TestTheta:
    """The extremal eigenvalue formula."""

    def test_e6_second_power(self):
        rs = build_root_system("E6")
        theta = theta_vk(rs, (1, 0, 0, 0, 0, 0), 2)
        assert theta == Fraction(100, 3)
        assert theta == casimir(rs, (0, 0, 1, 0, 0, 0), HR)

    def test_first_power_is_the_module(self):
        rs = build_root_system("F4")
        assert theta_vk(rs, (0, 0, 0, 1), 1, CasimirNormalization.KILLING) == casimir(rs, (0, 0, 0, 1), "killing")

    def test_needs_a_simple_algebra(self):
        with pytest.raises(InvalidAlgebraError):
            theta_vk(build_root_system("A1xA1"), (1, 0), 2)

    def test_marked_root(self):
        assert marked_root(build_root_system("A2"), (1, 1)) == (1, 1)
        assert marked_root(build_root_system("A2"), (1, 0)) == (2, -1)


class TestComponents:
    """Complete subsets against the brute-force top eigenspace."""

    def test_vector_representation_of_a4(self):
        rs = build_root_system("A4")
        assert vk_components(rs, (1, 0, 0, 0), 3) == Decomposition.irreducible(rs, (0, 0, 1, 0))
        assert vk_components(rs, (1, 0, 0, 0), 5) == Decomposition.irreducible(rs, (0, 0, 0, 0))

    @pytest.mark.parametrize(
        "name,weight",
        [
            ("A3", (0, 1, 0)),
            ("D5", (0, 0, 0, 0, 1)),
            ("E6", (1, 0, 0, 0, 0, 0)),
            ("B3", (0, 0, 1)),
            ("C3", (1, 0, 0)),
        ],
    )
    def test_extremal_row_agrees(self, name, weight):
        row = extremal_row(build_root_system(name), weight, 2)
        assert row.agrees
        assert row.predicted == row.eigenspace

    def test_exterior_power_range(self):
        with pytest.raises(WeightError):
            max_casimir_bruteforce(build_root_system("A2"), (1, 0), 4)

    def test_complement_duality(self):
        rs = build_root_system("A3")
        _, top = max_casimir_bruteforce(rs, (1, 0, 0), 3)
        assert top == Decomposition.irreducible(rs, (0, 0, 1))


class TestRegimes:
    """Where the complete-subset description is proven."""

    @pytest.mark.parametrize("name,node,distance", [("D5", 0, 2), ("E6", 0, 2), ("B4", 0, 2), ("A5", 2, None)])
    def test_chain_distance(self, name, node, distance):
        assert chain_distance(build_root_system(name), node) == distance

    def test_b4_vector(self):
        rs = build_root_system("B4")
        assert [vk_regime(rs, (1, 0, 0, 0), k) for k in range(1, 6)] == ["chain"] * 4 + [None]

    def test_minuscule(self):
        assert is_minuscule(build_root_system("E6"), (1, 0, 0, 0, 0, 0))
        assert not is_minuscule(build_root_system("E8"), (0,) * 7 + (1,))
        assert not is_minuscule(build_root_system("A2"), (0, 0))
        assert vk_regime(build_root_system("D5"), (0, 0, 0, 0, 1), 7) == "minuscule"

    def test_minuscule_cases(self):
        cases = minuscule_cases(max_rank=4)
        assert ("E7", (0, 0, 0, 0, 0, 0, 1)) in cases
        assert ("B3", (0, 0, 1)) in cases
        assert ("B3", (1, 0, 0)) not in cases
        assert not any(name == "E6" for name, _ in cases)


class TestPairGeometry:
    """Distances, diameters and completeness."""

    def test_dichotomy_off_the_simply_laced_types(self):
        result = minuscule_dichotomy_check(build_root_system("C3"), (1, 0, 0))
        assert (result.pairs, result.long_root_pairs) == (15, 3)
        assert result.holds

    def test_dichotomy_needs_minuscule(self):
        with pytest.raises(WeightError):
            minuscule_dichotomy_check(build_root_system("G2"), (1, 0))

    def test_poset_size(self):
        assert len(weight_poset(build_root_system("E7"), (0,) * 6 + (1,))) == 56

    def test_diameter(self):
        assert diameter(full_subset(build_root_system("D6"), (0,) * 5 + (1,))) == 3

    @pytest.mark.slow
    def test_batteries(self):
        for record in check_diameters() + check_completeness():
            assert record.status is CheckStatus.MATCH, record.id


class TestSubdiagramsAndBounds:
    """Fano subdiagrams, V_2 and the type A lower bound."""

    def test_fano(self):
        rs = build_root_system("A4")
        found = fano_subdiagrams(rs, (1, 0, 0, 0), 3)
        assert [w for _, w in found] == [(0, 0, 1, 0)]
        assert fano_subdiagrams(rs, (1, 0, 0, 0), 1) == [(None, (1, 0, 0, 0))]

    def test_v2(self):
        rs = build_root_system("G2")
        single, top, expected = v2_irreducibility_check(rs, (1, 0))
        assert single
        assert expected == (0, 1)
        assert top.terms == {(0, 1): 1}

    def test_k0_holds(self):
        bound = a_series_lower_bound(2, 1)
        assert bound.k0 == 3
        assert bound.conjecture_holds
        assert bound.bound_holds

    def test_k0_conjecture_fails_on_a3(self):
        bound = a_series_lower_bound(3, 2)
        assert bound.subset.cardinality == 5
        assert bound.k0 == 6
        assert not bound.conjecture_holds
        assert bound.bound_holds

    def test_k0_range(self):
        with pytest.raises(WeightError):
            a_series_lower_bound(3, 4)
