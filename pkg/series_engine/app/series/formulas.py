"""
Rational-in-m formulas of the series.

Every formula is a sympy rational function of the series parameter m, cancelled
before evaluation so removable singularities (the subexceptional m = 0 point of
the Vogel row) evaluate cleanly; a genuine pole raises FormulaPoleError.
Casimir eigenvalues are in Killing normalization (adjoint ↦ 1).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

import sympy

from app.errors import FormulaPoleError, SeriesDataError

M = sympy.Symbol("m")

SERIES = ("exceptional", "subexceptional", "severi", "severi_section")

TABLED_M: dict[str, tuple[Fraction, ...]] = {
    "exceptional": (Fraction(-2, 3), Fraction(0), Fraction(1), Fraction(2), Fraction(4), Fraction(8)),
    "subexceptional": (Fraction(-2, 3), Fraction(0), Fraction(1), Fraction(2), Fraction(4), Fraction(8)),
    "severi": (Fraction(1), Fraction(2), Fraction(4), Fraction(8)),
    "severi_section": (Fraction(1), Fraction(2), Fraction(4), Fraction(8)),
}

# Vogel lines with α = −2: (β(m), γ(m)) and the algebra at every tabled m
VOGEL_ROWS: dict[str, tuple[sympy.Expr, sympy.Expr]] = {
    "exceptional": (M + 4, 2 * M + 4),
    "osp": (M - 4, sympy.Integer(4)),
    "sl": (sympy.Integer(2), M),
    "subexceptional": (M, M + 4),
}

VOGEL_POINTS: dict[str, dict[Fraction, str]] = {
    "exceptional": dict(zip(TABLED_M["exceptional"], ("G2", "D4", "F4", "E6", "E7", "E8"))),
    "osp": {
        Fraction(5): "B2",
        Fraction(6): "D3",
        Fraction(7): "B3",
        Fraction(8): "D4",
        Fraction(9): "B4",
        Fraction(10): "D5",
        Fraction(11): "B5",
        Fraction(12): "D6",
        Fraction(-2): "A1",
        Fraction(-4): "C2",
        Fraction(-6): "C3",
    },
    "sl": {Fraction(n): f"A{n - 1}" for n in range(2, 10)},
    "subexceptional": dict(zip(TABLED_M["subexceptional"], ("A1", "A1xA1xA1", "C3", "A5", "D6", "E7"))),
}

VOGEL_SIMPLIFIED: dict[str, sympy.Expr] = {
    "osp": M * (M - 1) / 2,
    "sl": M**2 - 1,
    "subexceptional": 3 * (2 * M + 3) * (3 * M + 4) / (M + 4),
}

MAGIC_SQUARE: dict[tuple[int, int], str] = {
    (1, 1): "A1",
    (1, 2): "A2",
    (1, 4): "C3",
    (1, 8): "F4",
    (2, 1): "A2",
    (2, 2): "A2xA2",
    (2, 4): "A5",
    (2, 8): "E6",
    (4, 1): "C3",
    (4, 2): "A5",
    (4, 4): "D6",
    (4, 8): "E7",
    (8, 1): "F4",
    (8, 2): "E6",
    (8, 4): "E7",
    (8, 8): "E8",
}


def to_fraction(value) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise SeriesDataError(f"{value} is not rational")


def parse_m(text: str | Fraction | int) -> Fraction:
    return Fraction(text) if not isinstance(text, str) else Fraction(text.strip())


def evaluate(expr: sympy.Expr, m: Fraction | str, what: str = "formula") -> Fraction:
    """Exact value of a rational function of m; raises FormulaPoleError at a pole."""
    m = parse_m(m)
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    point = sympy.Rational(m.numerator, m.denominator)
    den_value = den.subs(M, point)
    if den_value == 0:
        raise FormulaPoleError(f"{what} has a pole at m = {m}")
    return to_fraction(num.subs(M, point) / den_value)


# ----------------------------------------------------------------------
# Vogel plane and magic square
# ----------------------------------------------------------------------


def vogel_dim_g(beta, gamma) -> Fraction:
    """dim g = (β+γ−1)(2β+γ−4)(2γ+β−4)/(βγ) with α = −2."""
    beta, gamma = Fraction(beta), Fraction(gamma)
    if beta * gamma == 0:
        raise FormulaPoleError(f"Vogel dimension undefined at β={beta}, γ={gamma}")
    return (beta + gamma - 1) * (2 * beta + gamma - 4) * (2 * gamma + beta - 4) / (beta * gamma)


def vogel_dim_expr(row: str) -> sympy.Expr:
    beta, gamma = VOGEL_ROWS[row]
    return sympy.cancel((beta + gamma - 1) * (2 * beta + gamma - 4) * (2 * gamma + beta - 4) / (beta * gamma))


def vogel_row_dim(row: str, m: Fraction | str) -> Fraction:
    """vogel_dim_g on a row; removable singularities are cancelled first."""
    return evaluate(vogel_dim_expr(row), m, f"Vogel dimension on the {row} row")


def vogel_row_simplifies(row: str) -> bool:
    if row not in VOGEL_SIMPLIFIED:
        return True
    return sympy.simplify(vogel_dim_expr(row) - VOGEL_SIMPLIFIED[row]) == 0


def vogel_casimir(beta, gamma, space: str) -> Fraction:
    """
    Killing-normalized Casimir of the S²g spaces: Y₂(x) has 2 − x/(α+β+γ),
    with x = α for g^(2), β for g_Q and γ for g_Q'.
    """
    beta, gamma = Fraction(beta), Fraction(gamma)
    h = beta + gamma - 2
    if h == 0:
        raise FormulaPoleError("α+β+γ = 0")
    x = {"g^(2)": Fraction(-2), "g_Q": beta, "g_Q'": gamma}[space]
    return 2 - x / h


def magic_dim(a, b) -> Fraction:
    """dim g(a,b) = 3(ab+4a+4b−4)(ab+2a+2b)/((a+4)(b+4))."""
    a, b = Fraction(a), Fraction(b)
    if (a + 4) * (b + 4) == 0:
        raise FormulaPoleError(f"magic-square dimension undefined at a={a}, b={b}")
    return 3 * (a * b + 4 * a + 4 * b - 4) * (a * b + 2 * a + 2 * b) / ((a + 4) * (b + 4))


def magic_dim_pq(p, q) -> Fraction:
    """dim g(p,q) = 3(pq−20)(pq−2p−2q)/(pq)."""
    p, q = Fraction(p), Fraction(q)
    if p * q == 0:
        raise FormulaPoleError(f"magic-square dimension undefined at p={p}, q={q}")
    return 3 * (p * q - 20) * (p * q - 2 * p - 2 * q) / (p * q)


def scorza_dim(a: int, n: int) -> int:
    return n + a * n * (n - 1) // 2


# ----------------------------------------------------------------------
# Series dimension and Casimir registries
# ----------------------------------------------------------------------


def _choose(d: sympy.Expr, k: int) -> sympy.Expr:
    if k < 0:
        return sympy.Integer(0)
    return sympy.expand(sympy.prod([d - i for i in range(k)]) / math.factorial(k))


_ROLE_RE = re.compile(r"^(?P<base>V|g)(?:(?P<index>\d+)|\^\((?P<power>\d+)\))?$")


def _split_role(role: str) -> tuple[str, str, int]:
    """'V3' → ('V', 'index', 3); 'g^(2)' → ('g', 'power', 2); 'V' → ('V', 'power', 1)."""
    role = role.strip().rstrip("*")
    match = _ROLE_RE.match(role)
    if not match:
        return role, "", 0
    if match["index"] is not None:
        return match["base"], "index", int(match["index"])
    return match["base"], "power", int(match["power"] or 1)


@lru_cache(maxsize=None)
def dimension_expr(series: str, role: str, printed: bool = False) -> sympy.Expr:
    base, kind, k = _split_role(role)
    m = M
    if series == "subexceptional":
        d = 6 * m + 8
        dim_g = 3 * (2 * m + 3) * (3 * m + 4) / (m + 4)
        if (base, kind) == ("V", "power") and k == 1:
            return d
        if (base, kind) == ("V", "index"):
            return _choose(d, k) - _choose(d, k - 2)
        if (base, kind, k) == ("g", "power", 1):
            return dim_g
        if (base, kind, k) == ("g", "index", 2):
            return sympy.cancel(dim_g * (dim_g - 3) / 2)
        if (base, kind, k) == ("g", "index", 3):
            return (2 * m + 3) * (3 * m + 4) * (9 * m + 16) * (m + 1) * (18 * m**2 + 43 * m + 4) / (m + 4) ** 3
        if base == "C":
            return 32 * (m + 1) * (2 * m + 3) * (3 * m + 4) / ((m + 4) * (m + 6))
        if base in ("Q", "g_Q'"):
            return (8 - m) * (m + 1) * (2 * m + 3) * (3 * m + 2) * (3 * m + 4) / ((m + 4) ** 2 * (m + 6))
        if base == "L":
            return 9 * (8 - m) * (m + 1) * (2 * m + 3) * (3 * m + 2) * (3 * m + 4) / ((m + 4) * (m + 6) * (m + 8))
    elif series == "severi":
        d = 3 * m + 3
        if (base, kind) == ("V", "power") and k == 1:
            return d
        if (base, kind) == ("V", "index"):
            return _choose(d, k)
        if (base, kind, k) == ("g", "power", 1):
            return 4 * (m + 1) * (3 * m + 2) / (m + 4)
        if base == "J":
            factor = 1 if printed else m
            return factor * 3 * (m + 1) * (8 - m) * (3 * m + 2) / (2 * (m + 4) * (m + 6))
    elif series == "severi_section":
        if (base, kind) == ("V", "power") and k == 1:
            return 3 * m + 2
        if (base, kind, k) == ("g", "power", 1):
            return 3 * m * (3 * m + 2) / (m + 4)
        if (base, kind, k) == ("V", "index", 2):
            return (3 * m + 2) * (3 * m + 4) * (m + 1) / (2 * (m + 4))
    elif series == "exceptional":
        dim_g = vogel_dim_expr("exceptional")
        if (base, kind, k) == ("g", "power", 1):
            return dim_g
        if (base, kind, k) == ("g", "index", 2):
            return sympy.cancel(dim_g * (dim_g - 3) / 2)
    raise SeriesDataError(f"no dimension formula for role {role!r} of the {series} series")


@lru_cache(maxsize=None)
def casimir_expr(series: str, role: str) -> sympy.Expr:
    base, kind, k = _split_role(role)
    m = M
    if base == "g" and kind == "index":
        return sympy.Integer(k)
    if (base, kind, k) == ("g", "power", 1):
        return sympy.Integer(1)
    if series == "subexceptional":
        if (base, kind) == ("V", "power"):
            return (k * (6 * m + 9) + 3 * (k**2 - k)) / (8 * m + 8)
        if (base, kind) == ("V", "index"):
            return (6 * k * m + 10 * k - k**2) / (8 * m + 8)
        if (base, kind) == ("g", "power"):
            return (2 * k * m + k**2 + k) / (2 * (m + 1))
        if base == "C":
            return (12 * m + 9) / (8 * m + 8)
        if base in ("Q", "g_Q'"):
            return 3 * m / (2 * m + 2)
        if base == "L":
            return (2 * m + 1) / (m + 1)
        if base == "g_Q":
            return (3 * m + 4) / (2 * m + 2)
    elif series == "exceptional":
        if (base, kind) == ("g", "power"):
            return k * (k + 3 * m + 5) / (3 * m + 6)
        if base == "g_Q":
            return (5 * m + 8) / (3 * m + 6)
    elif series == "severi":
        if (base, kind) == ("V", "power"):
            return (6 * k * m + 4 * k**2) / (9 * m)
        if (base, kind) == ("V", "index"):
            return k * (6 * m + 6 - 2 * k) / (9 * m)
        if base == "J":
            return (12 * m - 8) / (9 * m)
    elif series == "severi_section":
        if (base, kind) == ("V", "power"):
            return (3 * k * m - 2 * k + 2 * k**2) / (5 * m - 4)
        if (base, kind, k) == ("V", "index", 2):
            return 6 * m / (5 * m - 4)
    raise SeriesDataError(f"no Casimir formula for role {role!r} of the {series} series")


def series_dimension(series: str, role: str, m: Fraction | str, printed: bool = False) -> Fraction:
    return evaluate(dimension_expr(series, role, printed), m, f"dim {role} ({series})")


def series_casimir(series: str, role: str, m: Fraction | str) -> Fraction:
    return evaluate(casimir_expr(series, role), m, f"θ {role} ({series})")


def has_dimension_formula(series: str, role: str) -> bool:
    try:
        dimension_expr(series, role)
    except SeriesDataError:
        return False
    return True


def has_casimir_formula(series: str, role: str) -> bool:
    try:
        casimir_expr(series, role)
    except SeriesDataError:
        return False
    return True


# ----------------------------------------------------------------------
# Two-row multiplicities in S^n(A⊗B⊗C)
# ----------------------------------------------------------------------


def mu_closed_form(n: int, a: int, b: int, c: int) -> int:
    """
    Multiplicity of S_{n−a,a}A ⊗ S_{n−b,b}B ⊗ S_{n−c,c}C in S^n(A⊗B⊗C), dim A = dim B = dim C = 2.

    The arguments are sorted so that c is the largest; the closed form needs 2c ≤ n.
    """
    a, b, c = sorted((a, b, c))
    if min(n, a) < 0 or 2 * c > n:
        raise ValueError(f"μ({n};{a},{b},{c}) needs 0 ≤ a,b ≤ c and 2c ≤ n")
    if c > a + b:
        return 0
    base = math.floor(Fraction(a + b - c, 2)) + 1
    if n >= a + b + c:
        return base
    return base - math.ceil(Fraction(a + b + c - n, 2))
