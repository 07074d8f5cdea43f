"""
Generating functions for symmetric algebras.

A generating function is a numerator polynomial times a product of geometric
series Π 1/(1 − t^d X), optionally times a signed sum of further products
("branches"). Coefficients live in the Cartan-product ring V_λV_μ = V_{λ+μ},
so a geometric series contributes X^(k) in degree dk. Expansion is a per-degree
convolution truncated at the requested degree; no symbolic series are formed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import structlog

from app.errors import WeightError
from app.lie.cartan import AlgebraType, SimpleFactor, so_type
from app.lie.chars import Decomposition, decompose_character, irr_character
from app.lie.rootsys import RootSystem, Weight, build_root_system
from app.plethysm.branching import gl_partition_to_sl, gl_to_so_two_row, so_label
from app.plethysm.cauchy import cauchy_sym
from app.plethysm.littlewood_richardson import lr_product
from app.plethysm.partitions import Partition
from app.plethysm.powers import sym_power
from app.schemas.series import GFModel
from app.series.formulas import parse_m
from app.series.tables import SeriesEntry, cartan_product, evaluate_expression, symmetry_orbit

logger = structlog.get_logger()

Series = list[Decomposition]

S3 = ((1, 0, 2), (0, 2, 1))


@dataclass
class GFTerm:
    degree: int
    module: Decomposition
    sign: int = 1


@dataclass
class GFSpec:
    rs: RootSystem
    label: str
    denominator: list[GFTerm]
    numerator: list[GFTerm] = field(default_factory=list)
    branches: list[tuple[int, list[GFTerm]]] = field(default_factory=lambda: [(1, [])])
    symmetry: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if not self.numerator:
            self.numerator = [GFTerm(0, _trivial(self.rs))]


def _trivial(rs: RootSystem, mult: int = 1) -> Decomposition:
    return Decomposition.irreducible(rs, rs.zero(), mult)


def _irr(rs: RootSystem, weight) -> Decomposition:
    return Decomposition.irreducible(rs, rs.validate(weight))


# ----------------------------------------------------------------------
# Series arithmetic
# ----------------------------------------------------------------------


def zero_series(rs: RootSystem, max_degree: int) -> Series:
    return [Decomposition(rs) for _ in range(max_degree + 1)]


def series_product(a: Series, b: Series, max_degree: int) -> Series:
    out = zero_series(a[0].rs, max_degree)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if i + j > max_degree:
                break
            if y:
                out[i + j] = out[i + j] + cartan_product(x, y)
    return out


def series_sum(parts: list[tuple[int, Series]], rs: RootSystem, max_degree: int) -> Series:
    out = zero_series(rs, max_degree)
    for coefficient, part in parts:
        for d in range(max_degree + 1):
            out[d] = out[d] + part[d].scale(coefficient)
    return out


def geometric_series(term: GFTerm, rs: RootSystem, max_degree: int) -> Series:
    """1/(1 − t^d X) = Σ_k t^{dk} X^(k)."""
    out = zero_series(rs, max_degree)
    power = _trivial(rs)
    out[0] = power
    k = 1
    while term.degree * k <= max_degree:
        power = cartan_product(power, term.module)
        out[term.degree * k] = power
        k += 1
    return out


def polynomial(terms: list[GFTerm], rs: RootSystem, max_degree: int) -> Series:
    out = zero_series(rs, max_degree)
    for term in terms:
        if term.degree <= max_degree:
            out[term.degree] = out[term.degree] + term.module.scale(term.sign)
    return out


def symmetrize(d: Decomposition, perms: tuple[tuple[int, ...], ...]) -> Decomposition:
    """φ: replace every weight by the sum of its distinct images under the diagram symmetries."""
    out: dict[Weight, int] = {}
    for mu, m in d.terms.items():
        for image in symmetry_orbit(mu, perms):
            out[image] = out.get(image, 0) + m
    return Decomposition(d.rs, out)


def expand_gf(spec: GFSpec, max_degree: int) -> Series:
    rs = spec.rs
    common = polynomial(spec.numerator, rs, max_degree)
    for term in spec.denominator:
        common = series_product(common, geometric_series(term, rs, max_degree), max_degree)
    parts = []
    for coefficient, generators in spec.branches:
        branch = polynomial([GFTerm(0, _trivial(rs))], rs, max_degree)
        for term in generators:
            branch = series_product(branch, geometric_series(term, rs, max_degree), max_degree)
        parts.append((coefficient, branch))
    out = series_product(common, series_sum(parts, rs, max_degree), max_degree)
    if spec.symmetry:
        out = [symmetrize(d, spec.symmetry) for d in out]
    logger.debug("gf_expanded", label=spec.label, type=str(rs.type), max_degree=max_degree)
    return out


def direct_sym_series(rs: RootSystem, module: Weight | Decomposition, max_degree: int, budget: int | None = None) -> Series:
    """decompose(S^k V) for k ≤ max_degree, the side every generating function is checked against."""
    chi = module.character() if isinstance(module, Decomposition) else irr_character(rs, module)
    return [decompose_character(sym_power(chi, k, max_degree=max_degree, budget=budget)) for k in range(max_degree + 1)]


def first_difference(a: Series, b: Series) -> int | None:
    for d, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return d
    return None


# ----------------------------------------------------------------------
# Tabled generating functions
# ----------------------------------------------------------------------


def _terms(entry: SeriesEntry, generators, representative: bool) -> list[GFTerm]:
    return [GFTerm(g.degree, evaluate_expression(entry, g.role, representative), g.sign) for g in generators]


def gf_from_model(entry: SeriesEntry, model: GFModel) -> GFSpec:
    rep = model.symmetrize
    return GFSpec(
        rs=entry.rs,
        label=f"{entry.series}/{model.id}",
        numerator=_terms(entry, model.numerator, rep),
        denominator=_terms(entry, model.denominator, rep),
        branches=[(b.coefficient, _terms(entry, b.generators, rep)) for b in model.branches],
        symmetry=entry.symmetry if rep else (),
    )


def truncation(model: GFModel, m, default: int) -> int:
    """Tabled truncation degree at m, else ``default``."""
    for key, value in model.max_degree.items():
        if parse_m(key) == parse_m(m):
            return value
    return default


# ----------------------------------------------------------------------
# 2×2×2 hypermatrices
# ----------------------------------------------------------------------

HYPERMATRIX_FORMS = ("phi", "branches", "closed")


def hypermatrix_rs() -> RootSystem:
    return build_root_system("A1xA1xA1")


def hypermatrix_gf(form: str = "phi") -> GFSpec:
    """
    S^•(A⊗B⊗C) for sl(A)×sl(B)×sl(C).

    ``phi``: the S₃-symmetrization of 1/((1−tV)(1−t²g)(1−t³V)(1−t⁴)(1−t⁴V₂)) with
    g and V₂ replaced by one component each. ``branches``: the same series written
    without φ as a signed sum of thirteen products.
    """
    rs = hypermatrix_rs()
    v = _irr(rs, (1, 1, 1))
    if form == "phi":
        return GFSpec(
            rs=rs,
            label="hypermatrix/phi",
            denominator=[
                GFTerm(1, v),
                GFTerm(2, _irr(rs, (2, 0, 0))),
                GFTerm(3, v),
                GFTerm(4, _trivial(rs)),
                GFTerm(4, _irr(rs, (2, 2, 0))),
            ],
            symmetry=S3,
        )
    if form == "branches":
        square = [_irr(rs, tuple(2 if j == i else 0 for j in range(3))) for i in range(3)]
        branches: list[tuple[int, list[GFTerm]]] = []
        for x, y in ((0, 1), (1, 2), (2, 0)):
            pair = GFTerm(4, _irr(rs, tuple(2 if j in (x, y) else 0 for j in range(3))))
            branches.append((1, [pair, GFTerm(2, square[x])]))
            branches.append((1, [pair, GFTerm(2, square[y])]))
            branches.append((-1, [pair]))
        for x in range(3):
            branches.append((-1, [GFTerm(2, square[x])]))
        branches.append((1, []))
        return GFSpec(
            rs=rs,
            label="hypermatrix/branches",
            denominator=[GFTerm(1, v), GFTerm(3, v), GFTerm(4, _trivial(rs))],
            branches=branches,
        )
    raise WeightError(f"unknown hypermatrix form {form!r}; expected one of {HYPERMATRIX_FORMS}")


def _floor_count(j: int) -> int:
    # coefficient of x^j in 1/((1−x)(1−x²))
    return j // 2 + 1 if j >= 0 else 0


def hypermatrix_closed_form(max_degree: int) -> Series:
    """Coefficient of S^uA⊗S^vB⊗S^wC is t^{u+v+w−2m}(1−t^{2m+2})/((1−t²)(1−t⁴)), m = min(u,v,w), equal parities."""
    rs = hypermatrix_rs()
    out = zero_series(rs, max_degree)
    for n in range(max_degree + 1):
        terms: dict[Weight, int] = {}
        for u in range(n + 1):
            for v in range(n + 1):
                for w in range(n + 1):
                    if (u - v) % 2 or (u - w) % 2:
                        continue
                    low = u + v + w - 2 * min(u, v, w)
                    if low > n or (n - low) % 2:
                        continue
                    j = (n - low) // 2
                    coeff = _floor_count(j) - _floor_count(j - min(u, v, w) - 1)
                    if coeff:
                        terms[(u, v, w)] = coeff
        out[n] = Decomposition(rs, terms)
    return out


def hypermatrix_series(form: str, max_degree: int) -> Series:
    if form == "closed":
        return hypermatrix_closed_form(max_degree)
    return expand_gf(hypermatrix_gf(form), max_degree)


@lru_cache(maxsize=None)
def _two_row_table(n: int) -> dict[tuple[Partition, ...], int]:
    return {tuple(shapes): mult for shapes, mult in cauchy_sym(n, [2, 2, 2], max_degree=n)}


def mu_bruteforce(n: int, a: int, b: int, c: int) -> int:
    """Multiplicity of S_{n−a,a}A ⊗ S_{n−b,b}B ⊗ S_{n−c,c}C in S^n(A⊗B⊗C) from the Kronecker coefficients."""
    for x in (a, b, c):
        if x < 0 or 2 * x > n:
            raise ValueError(f"({n - x},{x}) is not a two-row partition")
    if n == 0:
        return 1
    key = (Partition((n - a, a)), Partition((n - b, b)), Partition((n - c, c)))
    return _two_row_table(n).get(key, 0)


# ----------------------------------------------------------------------
# sl₂ × so_n acting on ℂ² ⊗ ℂⁿ
# ----------------------------------------------------------------------

SLSO_FORMS = ("alternatives", "numerator-plus", "numerator-minus")


def slso_rs(n: int) -> RootSystem:
    return build_root_system(AlgebraType((SimpleFactor("A", 1), so_type(n))))


def _slso(rs: RootSystem, a: int, p: int, q: int, n: int) -> Decomposition:
    return _irr(rs, (a,) + so_label(p, q, n))


def slso_gf(n: int, form: str = "alternatives") -> GFSpec:
    """The three rational expressions for S^•(A⊗B), dim A = 2, B the vector representation of so_n."""
    if n < 5:
        raise WeightError(f"so_{n} labels are unstable; need n >= 5")
    rs = slso_rs(n)
    v = _slso(rs, 1, 1, 0, n)
    one = _trivial(rs)
    s2a = _slso(rs, 2, 0, 0, n)
    wedge_b = _slso(rs, 0, 1, 1, n)
    s2b = _slso(rs, 0, 2, 0, n)
    label = f"slso{n}/{form}"
    if form == "alternatives":
        return GFSpec(
            rs=rs,
            label=label,
            denominator=[GFTerm(1, v), GFTerm(2, wedge_b), GFTerm(3, v), GFTerm(4, one)],
            branches=[(1, [GFTerm(2, s2a)]), (1, [GFTerm(4, s2b)]), (-1, [])],
        )
    if form == "numerator-plus":
        return GFSpec(
            rs=rs,
            label=label,
            numerator=[GFTerm(0, one), GFTerm(3, v)],
            denominator=[GFTerm(4, one), GFTerm(1, v), GFTerm(2, s2a), GFTerm(2, wedge_b), GFTerm(4, s2b)],
        )
    if form == "numerator-minus":
        return GFSpec(
            rs=rs,
            label=label,
            numerator=[GFTerm(0, one), GFTerm(6, cartan_product(s2a, s2b), -1)],
            denominator=[GFTerm(1, v), GFTerm(4, one), GFTerm(3, v), GFTerm(2, s2a), GFTerm(2, wedge_b), GFTerm(4, s2b)],
        )
    raise WeightError(f"unknown form {form!r}; expected one of {SLSO_FORMS}")


def slso_direct(n: int, max_degree: int) -> Series:
    """S^k(A⊗B) = ⊕_{l+m=k} S_{l,m}A ⊗ S_{l,m}B with the GL_n → SO_n branching of S_{l,m}B."""
    rs = slso_rs(n)
    out = zero_series(rs, max_degree)
    for k in range(max_degree + 1):
        terms: dict[Weight, int] = {}
        for m in range(k // 2 + 1):
            l = k - m
            for mu, mult in gl_to_so_two_row(l, m, n).terms.items():
                key = (l - m,) + mu
                terms[key] = terms.get(key, 0) + mult
        out[k] = Decomposition(rs, terms)
    return out


# ----------------------------------------------------------------------
# Adjoint representation of sl₃
# ----------------------------------------------------------------------


def sl3_gf() -> GFSpec:
    """1/((1−tV)(1−t²)(1−t²V)(1−t³)) · (1/(1−t³V_{3ω₁}) + 1/(1−t³V_{3ω₂}) − 1)."""
    rs = build_root_system("A2")
    v = _irr(rs, (1, 1))
    one = _trivial(rs)
    return GFSpec(
        rs=rs,
        label="sl3/alternatives",
        denominator=[GFTerm(1, v), GFTerm(2, one), GFTerm(2, v), GFTerm(3, one)],
        branches=[(1, [GFTerm(3, _irr(rs, (3, 0)))]), (1, [GFTerm(3, _irr(rs, (0, 3)))]), (-1, [])],
    )


def sl3_gf_cauchy(max_degree: int) -> Series:
    """
    (1−t)/(1−t³) Σ_{a,b} t^{a+2b} S_{a+b,a}U ⊗ S_{a+b,b}U, products by Littlewood–Richardson.

    Derived from S^•(U*⊗U) by the Cauchy formula and U*⊗U = sl₃ ⊕ ℂ.
    """
    rs = build_root_system("A2")
    inner = zero_series(rs, max_degree)
    for b in range(max_degree // 2 + 1):
        for a in range(max_degree - 2 * b + 1):
            terms: dict[Weight, int] = {}
            for shape, c in lr_product(Partition((a + b, a)), Partition((a + b, b)), max_rows=3).items():
                mu = gl_partition_to_sl(shape, 3)
                terms[mu] = terms.get(mu, 0) + c
            inner[a + 2 * b] = inner[a + 2 * b] + Decomposition(rs, terms)
    # (1 − t)/(1 − t³) = 1 − t + t³ − t⁴ + …
    factor = zero_series(rs, max_degree)
    for d in range(max_degree + 1):
        if d % 3 == 0:
            factor[d] = _trivial(rs)
        elif d % 3 == 1:
            factor[d] = _trivial(rs, -1)
    return series_product(factor, inner, max_degree)


# ----------------------------------------------------------------------
# Scorza varieties
# ----------------------------------------------------------------------

SCORZA_A = (1, 2, 4, 8)


def scorza_module(a: int, n: int) -> tuple[RootSystem, Weight]:
    """(algebra, V) for the Scorza variety with parameters (a, n)."""
    if a not in SCORZA_A:
        raise WeightError(f"a must be one of {SCORZA_A}")
    if n < 2:
        raise WeightError("the Scorza series starts at n = 2")
    if a == 1:
        rs = build_root_system(f"A{n - 1}")
        return rs, rs.validate([2] + [0] * (n - 2))
    if a == 2:
        rs = build_root_system(f"A{n - 1}xA{n - 1}")
        omega = [1] + [0] * (n - 2)
        return rs, rs.validate(omega + omega)
    if a == 4:
        rs = build_root_system(f"A{2 * n - 1}")
        return rs, rs.validate([0, 1] + [0] * (2 * n - 3))
    if n != 3:
        raise WeightError("a = 8 only occurs for n = 3")
    rs = build_root_system("E6")
    return rs, rs.validate([1, 0, 0, 0, 0, 0])


def _omega(rank: int, i: int) -> list[int]:
    # ω_i with ω_0 = ω_{rank+1} = 0
    return [1 if j == i - 1 else 0 for j in range(rank)]


def scorza_gf(a: int, n: int) -> GFSpec:
    """Π_{j=1..n} 1/(1 − t^j I_j) with the j-th generator 2ω_j, ω_j+η_j, ω_{2j} (a = 1, 2, 4); degree n is the trivial module."""
    rs, v = scorza_module(a, n)
    generators = []
    if a == 8:
        generators = [GFTerm(1, _irr(rs, v)), GFTerm(2, _irr(rs, rs.dual(v))), GFTerm(3, _trivial(rs))]
    else:
        for j in range(1, n + 1):
            if a == 1:
                weight = [2 * c for c in _omega(n - 1, j)]
            elif a == 2:
                weight = _omega(n - 1, j) + _omega(n - 1, j)
            else:
                weight = _omega(2 * n - 1, 2 * j)
            generators.append(GFTerm(j, _irr(rs, weight)))
    return GFSpec(rs=rs, label=f"scorza/a={a},n={n}", denominator=generators)
