"""Truncated zeta series, rational-form checks and Hankel determinant scans."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from . import hodge
from .monoid_ring import (
    Alphabet,
    Atom,
    C,
    FieldElement,
    MonoidWord,
    RingElement,
    UnluckyEvaluation,
    exact_divide,
    random_assignment,
    symbol_alphabet,
)

LE = symbol_alphabet("L", "E")

Scalar = Union[RingElement, FieldElement]

LEADING_TERM_MODEL = "leading-term model"


@dataclass(frozen=True)
class ZetaSeries:
    """Coefficients a_0..a_N of a zeta series, with a label saying where they came from."""

    coefficients: tuple
    label: str
    alphabet: Alphabet = C
    provenance: str = "exact"

    @property
    def N(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n):
        return self.coefficients[n]

    def __len__(self):
        return len(self.coefficients)

    def truncate(self, N: int) -> "ZetaSeries":
        return ZetaSeries(self.coefficients[: N + 1], self.label, self.alphabet, self.provenance)


def curve_zeta(g: int, N: int) -> ZetaSeries:
    """Zeta series of a smooth projective curve of genus ``g`` under mu_h.

    Symmetric powers of a curve are smooth, so each coefficient is the single
    basis element [Psi_h(C^(n))].
    """
    coeffs = tuple(
        RingElement.basis(hodge.sym_power(hodge.curve(g), n).polynomial()) for n in range(N + 1)
    )
    return ZetaSeries(coeffs, f"curve(g={g})")


def surface_leading_zeta(q: int, r: int, N: int) -> ZetaSeries:
    """Leading-term model of the mu_h zeta series of a surface with h^{1,0}=q, P_g=r.

    a_n is the basis element of Psi_h of the Hilbert scheme X^[n], the smooth
    model of X^(n).  The true mu_h(X^(n)) differs from this by classes of
    dimension < 2n, which never affect the top geometric genus used by the
    irrationality argument.  This is NOT the exact mu_h coefficient.
    """
    a = hodge.surface(q, r)
    coeffs = tuple(
        RingElement.basis(hodge.hilbert_scheme_h0(a, n).polynomial()) for n in range(N + 1)
    )
    return ZetaSeries(coeffs, f"surface(q={q},pg={r})", provenance=LEADING_TERM_MODEL)


def _L_poly(counts: dict[int, int]) -> RingElement:
    """The element sum counts[e] * L^e of Z[L, E]."""
    L = Atom.symbol("L")
    return RingElement({MonoidWord.of(L, e, LE): c for e, c in counts.items()}, LE)


def _projective_class(n: int) -> RingElement:
    return _L_poly({i: 1 for i in range(n + 1)})


def id_measure_series(variety: str, N: int) -> ZetaSeries:
    """Universal-measure zeta series of P1, P2 or an elliptic curve in Z[L, E]."""
    if variety == "P1":
        coeffs = [_projective_class(n) for n in range(N + 1)]
    elif variety == "elliptic":
        Ecls = RingElement.symbol("E", LE)
        coeffs = [RingElement.one(LE)] + [Ecls * _projective_class(n - 1) for n in range(1, N + 1)]
    elif variety == "P2":
        # [Sym^n P^2]: one monomial L^(j+2k) for each j+k <= n
        coeffs = []
        for n in range(N + 1):
            counts: dict[int, int] = {}
            for k in range(n + 1):
                for j in range(n - k + 1):
                    counts[j + 2 * k] = counts.get(j + 2 * k, 0) + 1
            coeffs.append(_L_poly(counts))
    else:
        raise ValueError(f"unknown variety {variety!r}; expected P1, P2 or elliptic")
    return ZetaSeries(tuple(coeffs), f"id({variety})", LE)


def id_rational_form(variety: str) -> tuple[list[RingElement], list[RingElement]]:
    """Numerator and denominator coefficient lists of the closed forms over Z[L, E]."""
    L = RingElement.symbol("L", LE)
    one = RingElement.one(LE)
    Q = poly_mul([one, -one], [one, -L])
    if variety == "P1":
        return [one], Q
    if variety == "elliptic":
        Ecls = RingElement.symbol("E", LE)
        return [one, Ecls - one - L, L], Q
    if variety == "P2":
        return [one], poly_mul(Q, [one, -(L ** 2)])
    raise ValueError(f"unknown variety {variety!r}")


def curve_rational_form(g: int) -> tuple[list[RingElement], list[RingElement]]:
    """P/Q for a genus-g curve: a_n is constant from n = g on, so Q = 1 - t."""
    S = curve_zeta(g, g)
    one = RingElement.one(C)
    P = [S[0]] + [S[n] - S[n - 1] for n in range(1, g + 1)]
    return P, [one, -one]


def poly_mul(a: Sequence, b: Sequence, N: int | None = None) -> list:
    """Product of coefficient lists, optionally truncated to degree N."""
    if not a or not b:
        return []
    size = len(a) + len(b) - 1 if N is None else min(len(a) + len(b) - 1, N + 1)
    out = [None] * size
    for i, x in enumerate(a):
        if i >= size:
            break
        for j, y in enumerate(b):
            if i + j >= size:
                break
            term = x * y
            out[i + j] = term if out[i + j] is None else out[i + j] + term
    zero = (a[0] - a[0])
    return [zero if c is None else c for c in out]


def rational_check_mul(S: ZetaSeries, P: Sequence, Q: Sequence) -> bool:
    """True iff Q*S == P modulo t^(N+1), exactly."""
    if not Q or Q[0] not in (1, -1):
        raise ValueError("Q must have a unit constant term")
    N = S.N
    prod = poly_mul(list(Q), list(S.coefficients), N)
    for n in range(N + 1):
        lhs = prod[n] if n < len(prod) else 0
        rhs = P[n] if n < len(P) else 0
        if not (lhs - rhs) == 0:
            return False
    return True


def series_tex(P: Sequence[RingElement], Q: Sequence[RingElement]) -> str:
    """TeX for the rational function P(t)/Q(t)."""
    return r"\frac{" + _poly_tex(P) + "}{" + _poly_tex(Q) + "}"


def _poly_tex(P: Sequence[RingElement]) -> str:
    parts = []
    for n, c in enumerate(P):
        if c.is_zero():
            continue
        mono = "" if n == 0 else ("t" if n == 1 else f"t^{{{n}}}")
        body = c.to_tex()
        if mono:
            if body == "1":
                body = mono
            elif body == "-1":
                body = "-" + mono
            elif len(c.terms) > 1:
                body = f"({body}){mono}"
            else:
                body = body + mono
        if parts and not body.startswith("-"):
            body = "+" + body
        parts.append(body)
    return "".join(parts) or "0"


# -- Hankel matrices and determinants ---------------------------------------


def hankel_matrix(S: ZetaSeries, m: int, n: int) -> list[list]:
    """The (n+1)x(n+1) matrix with entries a_{m+i+j}."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if m + 2 * n > S.N:
        raise IndexError(f"Hankel matrix needs a_{m + 2 * n} but the series stops at a_{S.N}")
    return [[S[m + i + j] for j in range(n + 1)] for i in range(n + 1)]


def _bareiss(M: list[list[RingElement]]) -> RingElement:
    n = len(M)
    alpha = M[0][0].alphabet
    A = [list(row) for row in M]
    sign = 1
    prev = RingElement.one(alpha)
    for k in range(n - 1):
        if A[k][k].is_zero():
            for i in range(k + 1, n):
                if not A[i][k].is_zero():
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return RingElement.zero(alpha)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = exact_divide(A[k][k] * A[i][j] - A[i][k] * A[k][j], prev)
        prev = A[k][k]
    return A[n - 1][n - 1] if sign > 0 else -A[n - 1][n - 1]


def det_exact(M: Sequence[Sequence[Scalar]]) -> FieldElement:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("det_exact needs a square matrix")
    if n == 0:
        return FieldElement(1)
    if all(isinstance(x, RingElement) for row in M for x in row):
        return FieldElement(_bareiss([list(r) for r in M]))
    rows = []
    scale = None
    for row in M:
        fe = [x if isinstance(x, FieldElement) else FieldElement(x) for x in row]
        d = fe[0].denominator
        for x in fe[1:]:
            if not x.denominator == d:
                d = d * x.denominator
        rows.append([exact_divide(x.numerator * d, x.denominator) for x in fe])
        scale = d if scale is None else scale * d
    return FieldElement(_bareiss(rows), scale)


def _fraction_det(A: list[list[Fraction]]) -> Fraction:
    A = [list(r) for r in A]
    n = len(A)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        det *= A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return det


def integer_det(A: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a matrix of rationals (Gaussian elimination)."""
    return _fraction_det([[Fraction(x) for x in row] for row in A])


def default_rng() -> random.Random:
    """RNG for probabilistic checks, seeded from ``MZETA_SEED`` when set."""
    seed = os.environ.get("MZETA_SEED")
    return random.Random(int(seed)) if seed is not None else random.Random()


def det_probabilistic(M: Sequence[Sequence[Scalar]], trials: int = 3, rng: random.Random | None = None) -> str:
    """One-sided Schwartz-Zippel test: ``"nonzero-certified"`` or ``"possibly-zero"``."""
    rng = rng or default_rng()
    atoms = set()
    for row in M:
        for x in row:
            atoms |= x.atoms()
    lucky = 0
    for _ in range(trials):
        point = random_assignment(atoms, rng)
        try:
            values = [[x.evaluate(point) for x in row] for row in M]
        except UnluckyEvaluation:
            continue
        lucky += 1
        if _fraction_det(values) != 0:
            return "nonzero-certified"
    if lucky == 0:
        raise UnluckyEvaluation("every evaluation point hit a vanishing denominator")
    return "possibly-zero"


# -- rationality scans ----------------------------------------------------


@dataclass
class HankelReport:
    n: int
    m_from: int
    m_to: int
    verdicts: list = field(default_factory=list)  # (m, verdict) pairs
    n0: int | None = None

    @property
    def classification(self) -> str:
        if self.n0 is None:
            return "no vanishing tail found"
        return f"consistent-with-rational at (n={self.n}, n0={self.n0})"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m_from": self.m_from,
            "m_to": self.m_to,
            "verdicts": [{"m": m, "verdict": v} for m, v in self.verdicts],
            "n0": self.n0,
            "classification": self.classification,
        }


def hankel_verdict(M, exact: bool = False, trials: int = 3, rng: random.Random | None = None) -> str:
    """``zero`` (always exact), ``nonzero-exact`` or ``nonzero-probabilistic(k)``."""
    if not exact:
        try:
            if det_probabilistic(M, trials, rng) == "nonzero-certified":
                return f"nonzero-probabilistic({trials})"
        except UnluckyEvaluation:
            pass
    return "zero" if det_exact(M).is_zero() else "nonzero-exact"


def rationality_scan(
    S: ZetaSeries,
    n_max: int,
    m_max: int,
    n_min: int = 1,
    m_min: int = 1,
    exact: bool = False,
    trials: int = 3,
    rng: random.Random | None = None,
) -> list[HankelReport]:
    """Hankel determinants of sizes n+1 <= n_max+1 at offsets m_min..m_max.

    ``n0`` is the least value such that every tested determinant with
    n0 < m <= m_max vanishes, or ``None`` when the one at m_max does not.
    A finite window can only show consistency with rationality.
    """
    if m_max + 2 * n_max > S.N:
        raise IndexError(f"scan needs {m_max + 2 * n_max} terms, series has N={S.N}")
    rng = rng or default_rng()
    reports = []
    for n in range(n_min, n_max + 1):
        rep = HankelReport(n, m_min, m_max)
        for m in range(m_min, m_max + 1):
            rep.verdicts.append((m, hankel_verdict(hankel_matrix(S, m, n), exact, trials, rng)))
        last_nonzero = max((m for m, v in rep.verdicts if v != "zero"), default=m_min - 1)
        rep.n0 = None if last_nonzero == m_max else last_nonzero
        reports.append(rep)
    return reports


def scan_report(S: ZetaSeries, reports: list[HankelReport]) -> dict:
    """The JSON-ready scan document ``{series, N, scans}``."""
    out = {"series": S.label, "N": S.N, "scans": [r.to_dict() for r in reports]}
    if S.provenance != "exact":
        out["provenance"] = S.provenance
    return out


def coefficients_csv(S: ZetaSeries) -> str:
    lines = ["n,coefficient"]
    for n, c in enumerate(S.coefficients):
        text = str(c)
        if "," in text or '"' in text:
            text = '"' + text.replace('"', '""') + '"'
        lines.append(f"{n},{text}")
    return "\n".join(lines) + "\n"
