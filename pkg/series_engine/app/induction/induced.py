"""
Diagram induction.

A component η = kλ_f − ψ of a plethysm of the subalgebra module V_{λ_f} is
carried to the ambient weight kλ − ψ, with ψ reread as a combination of ambient
simple roots. Quadric-type subdiagrams (vector representations of B_k, D_k)
give the component V_Q ⊂ S²V with τ = λ + w_D(λ); A-chains give the Aad
components of tensor products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import structlog

from app.errors import InductionError, WeightError
from app.induction.diagrams import SubdiagramEmbedding, a_chains, border_set, find_subdiagrams
from app.lie.cartan import AlgebraType, SimpleFactor
from app.lie.chars import Decomposition, FormalCharacter, casimir, decompose_character, irr_character
from app.lie.rootsys import RootSystem, Weight, build_root_system
from app.plethysm.partitions import Partition
from app.plethysm.powers import ext_power, schur_power, sym_power
from app.schemas.report import QuadricCasimirRow

logger = structlog.get_logger()


@dataclass(frozen=True)
class QuadricComponent:
    embedding: SubdiagramEmbedding
    family: str  # "B" or "D"
    k: int
    tau: Weight
    dim_q: int

    @property
    def label(self) -> str:
        return f"{self.family}{self.k}"


@dataclass(frozen=True)
class PlethysmOp:
    """A plethysm request: ``sym k``, ``ext k``, ``schur P`` or ``tensor``."""

    kind: str
    shape: Partition

    @classmethod
    def parse(cls, kind: str, arg: str | int | None = None) -> PlethysmOp:
        kind = kind.lower()
        if kind in ("sym", "s"):
            return cls("sym", Partition((int(arg),)))
        if kind in ("ext", "lambda", "wedge"):
            return cls("ext", Partition((1,) * int(arg)))
        if kind == "schur":
            return cls("schur", arg if isinstance(arg, Partition) else Partition.parse(str(arg)))
        raise WeightError(f"unknown plethysm {kind!r}")

    @property
    def degree(self) -> int:
        return self.shape.size

    def __str__(self) -> str:
        if self.kind == "sym":
            return f"S^{self.degree}"
        if self.kind == "ext":
            return f"Λ^{self.degree}"
        return f"S_{self.shape}"

    def of_character(self, chi: FormalCharacter, max_degree: int | None = None, budget: int | None = None) -> FormalCharacter:
        if self.kind == "sym":
            return sym_power(chi, self.degree, max_degree=max_degree, budget=budget)
        if self.kind == "ext":
            return ext_power(chi, self.degree, max_degree=max_degree, budget=budget)
        return schur_power(chi, self.shape, max_degree=max_degree, budget=budget)

    def apply(self, rs: RootSystem, lam: Weight, max_degree: int | None = None, budget: int | None = None) -> Decomposition:
        return decompose_character(self.of_character(irr_character(rs, lam), max_degree=max_degree, budget=budget))


# ----------------------------------------------------------------------
# Weight transport
# ----------------------------------------------------------------------


def sub_root_system(e: SubdiagramEmbedding) -> RootSystem:
    return build_root_system(e.sub_type)


def transport_weight(e: SubdiagramEmbedding, lam: Weight, k: int, eta: Weight) -> Weight:
    """
    Carry the sub-weight η = kλ_f − ψ to kλ − ψ on the ambient diagram.

    Raises InductionError when λ is not supported on the subdiagram, when ψ is
    not a nonnegative root combination, or when the result is not dominant.
    """
    rs = e.rs
    lam = rs.validate(lam)
    if not e.supports(lam):
        raise InductionError(f"{rs.format_weight(lam)} is not supported on {e}")
    sub = sub_root_system(e)
    eta = sub.validate(eta)
    lam_f = e.restrict(lam)
    psi = sub.root_coordinates(tuple(k * a - b for a, b in zip(lam_f, eta)))
    if any(c < 0 or c.denominator != 1 for c in psi):
        raise InductionError(f"kλ−η = {[str(c) for c in psi]} is not a nonnegative root combination on {e}")
    out = [k * c for c in lam]
    rows = rs.cartan_rows
    for j, c in enumerate(psi):
        if c:
            row = rows[e.nodes[j]]
            for i in range(rs.rank):
                out[i] -= int(c) * row[i]
    tau = tuple(out)
    if not rs.is_dominant(tau):
        raise InductionError(f"transported weight {rs.format_weight(tau)} on {e} is not dominant")
    return tau


def check_support(e: SubdiagramEmbedding, eta: Weight, tau: Weight) -> bool:
    """supp(τ) ⊆ supp(η) ∪ border, with every border node strictly positive."""
    border = border_set(e).nodes
    allowed = {e.nodes[i] for i, c in enumerate(eta) if c} | border
    return all(c == 0 or i in allowed for i, c in enumerate(tau)) and all(tau[b] > 0 for b in border)


def induce_decomposition(
    e: SubdiagramEmbedding,
    lam: Weight,
    op: PlethysmOp,
    max_degree: int | None = None,
    budget: int | None = None,
) -> Decomposition:
    """Compute the plethysm on the subalgebra intrinsically and transport every term."""
    sub = sub_root_system(e)
    inner = op.apply(sub, e.restrict(lam), max_degree=max_degree, budget=budget)
    terms: dict[Weight, int] = {}
    for eta, mult in inner.terms.items():
        tau = transport_weight(e, lam, op.degree, eta)
        terms[tau] = terms.get(tau, 0) + mult
    return Decomposition(e.rs, terms)


# ----------------------------------------------------------------------
# Quadrics
# ----------------------------------------------------------------------


def lowest_in_orbit(rs: RootSystem, lam: Weight, nodes) -> Weight:
    """w_D(λ): reflect at nodes of D while some D-coordinate is positive."""
    nodes = list(nodes)
    mu = lam
    while True:
        for i in nodes:
            if mu[i] > 0:
                mu = rs.reflect(mu, i)
                break
        else:
            return mu


def _quadric_embeddings(rs: RootSystem, lam: Weight) -> list[tuple[SubdiagramEmbedding, str, int]]:
    out: list[tuple[SubdiagramEmbedding, str, int]] = []
    support = [i for i, c in enumerate(lam) if c]
    # B1: a single node marked 2
    if len(support) == 1 and lam[support[0]] == 2:
        e = SubdiagramEmbedding(rs, (support[0],), AlgebraType.simple("A", 1), "B1")
        out.append((e, "B", 1))
    # D2: two non-adjacent nodes marked 1
    if len(support) == 2 and all(lam[i] == 1 for i in support) and rs.cartan_rows[support[0]][support[1]] == 0:
        e = SubdiagramEmbedding(rs, tuple(support), AlgebraType.parse("A1xA1"), "D2")
        out.append((e, "D", 2))
    for k in range(2, rs.rank + 1):
        for e in find_subdiagrams(rs, SimpleFactor("B", k), marking=lam, label=f"B{k}"):
            if e.supports(lam):
                out.append((e, "B", k))
    for k in range(3, rs.rank + 1):
        for e in find_subdiagrams(rs, SimpleFactor("D", k), marking=lam, label=f"D{k}"):
            if e.supports(lam):
                out.append((e, "D", k))
    return out


def quadric_induced(rs: RootSystem, lam: Weight) -> list[QuadricComponent]:
    """
    Components V_τ ⊂ S²V_λ induced by quadric-type subdiagrams.

    τ = λ + w_D(λ); dim Q = 2k−2 for D_k and 2k−1 for B_k.
    """
    lam = rs.require_dominant(lam)
    if not any(lam):
        return []
    if sorted(c for c in lam if c) != [1] and lam not in rs.highest_roots:
        logger.warning("quadric_non_fundamental", type=str(rs.type), weight=rs.format_weight(lam))
    out = []
    for e, family, k in _quadric_embeddings(rs, lam):
        low = lowest_in_orbit(rs, lam, e.nodes)
        tau = tuple(a + b for a, b in zip(lam, low))
        if not rs.is_dominant(tau):
            raise InductionError(f"quadric weight {rs.format_weight(tau)} on {e} is not dominant")
        dim_q = 2 * k - 2 if family == "D" else 2 * k - 1
        out.append(QuadricComponent(e, family, k, tau, dim_q))
    return out


def dim_q_from_weights(rs: RootSystem, lam: Weight, q: QuadricComponent) -> Fraction:
    """Second computation of dim Q: (σ, 2ρ) with σ = (λ − w_D λ)/2."""
    low = lowest_in_orbit(rs, lam, q.embedding.nodes)
    sigma2 = tuple(a - b for a, b in zip(lam, low))
    return rs.inner(sigma2, rs.rho)


def largest_quadric(rs: RootSystem) -> list[QuadricComponent]:
    """Quadrics of maximal dimension on the adjoint variety; several entries mean a tie."""
    quadrics = quadric_induced(rs, rs.adjoint_weight())
    if not quadrics:
        return []
    top = max(q.dim_q for q in quadrics)
    winners = [q for q in quadrics if q.dim_q == top]
    if len(winners) > 1:
        logger.info("largest_quadric_tie", type=str(rs.type), dim_q=top, count=len(winners))
    return winners


def verify_prop22(rs: RootSystem, lam: Weight) -> list[QuadricCasimirRow]:
    """
    Compare θ_{V_Q} with the two quadric Casimir formulas, highest-root normalization.

    stated:   2(θ_V + (λ,λ) − (dim Q + 2)(α,α))
    proof:    2(θ_V + (λ,λ) − dim Q − 2)
    adjoint:  2(θ_g − (dim Q − 1)(α,α)), only for simply-laced adjoint λ
    """
    lam = rs.require_dominant(lam)
    rows = []
    theta_v = casimir(rs, lam)
    lam_norm = rs.norm(lam)
    simply_laced = rs.is_simple and rs.type.factors[0].is_simply_laced
    is_adjoint = rs.is_simple and lam == rs.adjoint_weight()
    for q in quadric_induced(rs, lam):
        marked = q.embedding.nodes[0]
        alpha = rs.root_norms[marked]
        direct = casimir(rs, q.tau)
        stated = 2 * (theta_v + lam_norm - (q.dim_q + 2) * alpha)
        proof = 2 * (theta_v + lam_norm - q.dim_q - 2)
        adjoint = 2 * (theta_v - (q.dim_q - 1) * alpha) if (simply_laced and is_adjoint) else None
        verdicts = [name for name, value in (("stated", stated), ("proof", proof), ("adjoint", adjoint)) if value == direct]
        rows.append(
            QuadricCasimirRow(
                algebra=str(rs.type),
                weight=rs.format_weight(lam),
                quadric=f"{q.label}@{[n + 1 for n in q.embedding.nodes]}",
                tau=rs.format_weight(q.tau),
                dim_q=q.dim_q,
                direct=str(direct),
                stated=str(stated),
                proof=str(proof),
                adjoint=None if adjoint is None else str(adjoint),
                matches=verdicts,
            )
        )
    logger.info("quadric_casimir_checked", type=str(rs.type), weight=rs.format_weight(lam), rows=len(rows))
    return rows


# ----------------------------------------------------------------------
# A-chains
# ----------------------------------------------------------------------


def achain_induced(rs: RootSystem, lam: Weight, op: str) -> list[tuple[SubdiagramEmbedding, Weight]]:
    """
    Components of S²V_{ω_k} (op "sym") or Λ²V_{ω_k} (op "ext") induced by A-chains
    centred on the marked node: the invariant of Λ^j ℂ^{2j} ⊗ Λ^j ℂ^{2j}.
    """
    lam = rs.require_dominant(lam)
    support = [i for i, c in enumerate(lam) if c]
    if len(support) != 1 or lam[support[0]] != 1:
        raise InductionError(f"A-chain induction needs a fundamental weight, got {rs.format_weight(lam)}")
    node = support[0]
    plethysm = PlethysmOp.parse(op, 2)
    out = []
    for j in range(1, rs.rank + 1):
        factor = SimpleFactor("A", 2 * j - 1)
        for e in find_subdiagrams(rs, factor, marking=lam, pattern_marking=_omega(2 * j - 1, j - 1), label=str(factor)):
            if e.nodes[j - 1] != node:
                continue
            inner = plethysm.apply(sub_root_system(e), e.restrict(lam))
            if inner[sub_root_system(e).zero()]:
                out.append((e, transport_weight(e, lam, 2, sub_root_system(e).zero())))
    return out


def _omega(rank: int, i: int) -> Weight:
    return tuple(1 if j == i else 0 for j in range(rank))


def aad_induced(rs: RootSystem, lam: Weight, mu: Weight, chain: SubdiagramEmbedding | tuple[int, ...]) -> Weight:
    """τ = λ + μ − (α_{c_1} + ⋯ + α_{c_l}) along an A-type chain from supp λ to supp μ."""
    lam, mu = rs.validate(lam), rs.validate(mu)
    nodes = chain.nodes if isinstance(chain, SubdiagramEmbedding) else tuple(chain)
    if isinstance(chain, SubdiagramEmbedding) and chain.sub_type.factors[0].family != "A":
        raise InductionError(f"{chain} is not an A-type chain")
    if any(not 0 <= n < rs.rank for n in nodes):
        raise InductionError(f"chain {list(nodes)} has nodes outside 0..{rs.rank - 1}")
    for a, b in zip(nodes, nodes[1:]):
        if rs.cartan_rows[a][b] != -1 or rs.cartan_rows[b][a] != -1:
            raise InductionError(f"chain {[n + 1 for n in nodes]} is not simply laced")
    if not nodes or lam[nodes[0]] == 0 or mu[nodes[-1]] == 0:
        raise InductionError(f"chain {[n + 1 for n in nodes]} does not join supp λ to supp μ")
    tau = [a + b for a, b in zip(lam, mu)]
    for n in nodes:
        for i, c in enumerate(rs.cartan_rows[n]):
            tau[i] -= c
    tau = tuple(tau)
    if not rs.is_dominant(tau):
        raise InductionError(f"Aad weight {rs.format_weight(tau)} is not dominant")
    return tau


def aad_chains(rs: RootSystem, lam: Weight, mu: Weight) -> list[tuple[tuple[int, ...], Weight, bool]]:
    """Every A-chain from supp λ to supp μ with its weight λ+μ−σ and whether that weight is dominant."""
    out = []
    for nodes in a_chains(rs):
        if lam[nodes[0]] == 0 or mu[nodes[-1]] == 0:
            continue
        tau = [a + b for a, b in zip(lam, mu)]
        for n in nodes:
            for i, c in enumerate(rs.cartan_rows[n]):
                tau[i] -= c
        out.append((nodes, tuple(tau), all(c >= 0 for c in tau)))
    return out
