"""
Tests for subdiagram detection and diagram induction.
Run: pytest tests/ -v
"""

from __future__ import annotations

import pytest

from app.errors import InductionError
from app.induction.diagrams import (
    a_chains,
    border_set,
    diagram_automorphisms,
    find_subdiagrams,
    maximal_subdiagrams,
)
from app.induction.induced import (
    PlethysmOp,
    aad_chains,
    aad_induced,
    achain_induced,
    dim_q_from_weights,
    induce_decomposition,
    largest_quadric,
    quadric_induced,
    transport_weight,
    verify_prop22,
)
from app.lie.cartan import SimpleFactor
from app.lie.chars import Decomposition, decompose_character, irr_character
from app.lie.rootsys import build_root_system
from app.plethysm.powers import ext_power

E6_OMEGA1 = (1, 0, 0, 0, 0, 0)
E6_OMEGA6 = (0, 0, 0, 0, 0, 1)


class TestDiagrams:
    """Subdiagram embeddings."""

    def test_automorphisms(self):
        assert len(diagram_automorphisms(SimpleFactor("D", 4))) == 6
        assert len(diagram_automorphisms(SimpleFactor("E", 6))) == 2
        assert diagram_automorphisms(SimpleFactor("E", 8)) == [tuple(range(8))]

    def test_marked_a1(self):
        rs = build_root_system("E6")
        found = find_subdiagrams(rs, "A1", marking=E6_OMEGA1)
        assert [e.nodes for e in found] == [(0,)]
        assert str(border_set(found[0])) == "{3}"

    def test_a_chains_both_directions(self):
        assert len(a_chains(build_root_system("A3"))) == 9

    def test_maximal_subdiagrams(self):
        rs = build_root_system("E6")
        labels = sorted(str(e.sub_type) for e in maximal_subdiagrams(rs, E6_OMEGA1))
        assert labels == ["A1", "A2", "A4", "A5", "D5"]


class TestTransport:
    """Carrying plethysm components from a subalgebra."""

    def test_exterior_square_of_the_27(self):
        rs = build_root_system("E6")
        e = find_subdiagrams(rs, "A1", marking=E6_OMEGA1)[0]
        op = PlethysmOp.parse("ext", 2)
        induced = induce_decomposition(e, E6_OMEGA1, op)
        assert induced == Decomposition.irreducible(rs, (0, 0, 1, 0, 0, 0))
        full = decompose_character(ext_power(irr_character(rs, E6_OMEGA1), 2))
        assert full.contains(induced)

    def test_unsupported_weight(self):
        rs = build_root_system("E6")
        e = find_subdiagrams(rs, "A1", marking=E6_OMEGA1)[0]
        with pytest.raises(InductionError):
            transport_weight(e, E6_OMEGA6, 2, (0,))

    def test_plethysm_op(self):
        assert str(PlethysmOp.parse("sym", 3)) == "S^3"
        assert str(PlethysmOp.parse("wedge", 2)) == "Λ^2"
        assert PlethysmOp.parse("schur", "21").degree == 3


class TestQuadrics:
    """Quadric-type subdiagrams of the adjoint variety."""

    @pytest.mark.parametrize(
        "name,label,dim_q,tau",
        [
            ("E6", "D4", 6, (1, 0, 0, 0, 0, 1)),
            ("E7", "D5", 8, (0, 0, 0, 0, 0, 1, 0)),
            ("E8", "D7", 12, (1, 0, 0, 0, 0, 0, 0, 0)),
            ("F4", "B3", 5, (0, 0, 0, 2)),
        ],
    )
    def test_largest_quadric(self, name, label, dim_q, tau):
        rs = build_root_system(name)
        (q,) = largest_quadric(rs)
        assert q.label == label
        assert q.dim_q == dim_q
        assert q.tau == tau
        assert dim_q_from_weights(rs, rs.adjoint_weight(), q) == dim_q

    def test_quadric_lies_in_the_symmetric_square(self):
        rs = build_root_system("E7")
        (q,) = largest_quadric(rs)
        op = PlethysmOp.parse("sym", 2)
        assert q.tau in op.apply(rs, rs.adjoint_weight())

    def test_doubled_node(self):
        rs = build_root_system("A2")
        (q,) = quadric_induced(rs, (2, 0))
        assert (q.family, q.k, q.tau, q.dim_q) == ("B", 1, (0, 2), 1)

    def test_casimir_comparison(self):
        rs = build_root_system("E7")
        rows = verify_prop22(rs, rs.adjoint_weight())
        d5 = [r for r in rows if r.quadric.startswith("D5")]
        assert d5 and d5[0].direct == "56"
        assert "proof" in d5[0].matches


class TestChains:
    """A-chain and Aad induction."""

    def test_achain_exterior(self):
        rs = build_root_system("A7")
        taus = [tau for _, tau in achain_induced(rs, (0, 0, 0, 1, 0, 0, 0), "ext")]
        assert (0, 0, 1, 0, 1, 0, 0) in taus

    def test_achain_symmetric_invariant(self):
        rs = build_root_system("A3")
        taus = [tau for _, tau in achain_induced(rs, (0, 1, 0), "sym")]
        assert taus == [(0, 0, 0)]

    def test_achain_needs_fundamental(self):
        with pytest.raises(InductionError):
            achain_induced(build_root_system("A3"), (1, 1, 0), "sym")

    def test_aad_e6(self):
        rs = build_root_system("E6")
        chains = aad_chains(rs, E6_OMEGA1, E6_OMEGA6)
        assert chains == [((0, 2, 3, 4, 5), (0, 1, 0, 0, 0, 0), True)]
        tau = aad_induced(rs, E6_OMEGA1, E6_OMEGA6, (0, 2, 3, 4, 5))
        assert tau == rs.adjoint_weight()

    def test_aad_rejects_broken_chain(self):
        rs = build_root_system("E6")
        with pytest.raises(InductionError):
            aad_induced(rs, E6_OMEGA1, E6_OMEGA6, (0, 3, 4, 5))

    @pytest.mark.parametrize("nodes", [(-1,), (0, 2, 3, 4, 8)])
    def test_aad_rejects_nodes_outside_the_diagram(self, nodes):
        rs = build_root_system("E6")
        with pytest.raises(InductionError, match="outside"):
            aad_induced(rs, E6_OMEGA6, E6_OMEGA6, nodes)
