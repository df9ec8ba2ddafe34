"""Irrationality certificates for mu_h zeta series of surfaces with P_g >= 2.

A vanishing Hankel determinant of size n+1 at offset m expands, by Leibniz,
into a signed sum of mu_h-classes of products

    X^(m-1+s(1)) x X^(m+s(2)) x ... x X^(m+n-1+s(n+1)),   s in S_{n+1}.

The identity term is the only one with index multiset {m, m+2, ..., m+2n}, and
its geometric genus differs from every other term's.  Any linear relation
among mu_h-classes of equidimensional varieties forces the target's P_g to
reappear among the others, so the determinant cannot vanish.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from itertools import permutations

from .hodge import pg_sym_formula

MAX_ENUMERATION_N = 7


class CertificateError(RuntimeError):
    """A check that the theorem guarantees has failed."""


class EnumerationBudgetExceeded(ValueError):
    pass


def perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class StarTerm:
    """One Leibniz summand: ``sigma`` is 1-based (sigma[j] is the image of j+1)."""

    sigma: tuple[int, ...]
    sign: int
    indices: tuple[int, ...]


def _indices(m: int, sigma: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(m + j - 1 + s for j, s in enumerate(sigma))


def star_expansion(m: int, n: int) -> list[StarTerm]:
    """All (n+1)! terms with their signs and symmetric-power indices."""
    if n < 1 or m < 1:
        raise ValueError("star_expansion needs n >= 1 and m >= 1")
    return [
        StarTerm(sigma, perm_sign(sigma), _indices(m, sigma))
        for sigma in permutations(range(1, n + 2))
    ]


def term_top_pg(r: int, m: int, n: int, sigma: tuple[int, ...]) -> int:
    """P_g of the product of symmetric powers indexed by ``sigma``."""
    if r < 1:
        raise ValueError("term_top_pg needs r >= 1")
    if len(sigma) != n + 1:
        raise ValueError("sigma must permute n+1 letters")
    return math.prod(pg_sym_formula(r, k) for k in _indices(m, sigma))


def multiset_signature(sigma: tuple[int, ...], n: int | None = None) -> tuple[int, ...]:
    """Sorted multiset {i + sigma(i)}."""
    if n is not None and len(sigma) != n + 1:
        raise ValueError("sigma must permute n+1 letters")
    return tuple(sorted(i + s for i, s in enumerate(sigma, start=1)))


def _multiset_distance(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Size of the multiset symmetric difference."""
    i = j = common = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            common += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return len(a) + len(b) - 2 * common


@dataclass
class UniquenessRecord:
    n: int
    permutations_enumerated: int
    identity_multiset: tuple[int, ...]
    unique: bool
    nearest_competitor: tuple[int, ...] | None
    nearest_distance: int | None


def identity_multiset_unique(n: int) -> UniquenessRecord:
    """Exhaustively check that only the identity of S_{n+1} has signature {2, 4, ..., 2n+2}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_ENUMERATION_N:
        raise EnumerationBudgetExceeded(f"n={n} exceeds the enumeration budget n <= {MAX_ENUMERATION_N}")
    ident = tuple(range(1, n + 2))
    target = multiset_signature(ident)
    count = 0
    unique = True
    best = None
    for sigma in permutations(ident):
        count += 1
        if sigma == ident:
            continue
        sig = multiset_signature(sigma)
        if sig == target:
            unique = False
        d = _multiset_distance(sig, target)
        if best is None or (d, sig) < best:
            best = (d, sig)
    return UniquenessRecord(
        n=n,
        permutations_enumerated=count,
        identity_multiset=target,
        unique=unique,
        nearest_competitor=best[1] if best else None,
        nearest_distance=best[0] if best else None,
    )


def _require_pg(r: int):
    if r < 2:
        raise ValueError(f"theorem requires P_g >= 2 (got P_g = {r})")


def claim_check(r: int, n: int, m: int) -> bool:
    """True iff the identity term's P_g differs from that of every other permutation."""
    _require_pg(r)
    ident = tuple(range(1, n + 2))
    target = term_top_pg(r, m, n, ident)
    return all(
        term_top_pg(r, m, n, sigma) != target
        for sigma in permutations(ident)
        if sigma != ident
    )


def nocancel_check(target: tuple[int, int], others: list[tuple[int, int]]) -> bool:
    """Whether a relation mu_h(Z) = sum n_i mu_h(Y_i) is impossible.

    ``target`` and ``others`` are ``(dimension, P_g)`` pairs.  Such a relation
    forces P_g(Z) to occur among the P_g(Y_i) whenever P_g(Z) != 0.
    """
    dim, pgz = target
    if any(d != dim for d, _ in others):
        raise ValueError("nocancel_check needs equidimensional varieties")
    return pgz != 0 and all(p != pgz for _, p in others)


@dataclass
class WindowCheck:
    n: int
    m: int
    dimension: int
    identity_pg: int
    nearest_other_pg: int
    claim: bool
    nocancel: bool

    @property
    def determinant(self) -> str:
        return "nonzero" if self.claim and self.nocancel else "undecided"


@dataclass
class IrrationalityCertificate:
    q: int
    r: int
    n_max: int
    m_window: tuple[int, int]
    uniqueness: list[UniquenessRecord] = field(default_factory=list)
    checks: list[WindowCheck] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return (
            self.r >= 2
            and len(self.uniqueness) == self.n_max
            and all(u.unique for u in self.uniqueness)
            and all(c.claim and c.nocancel for c in self.checks)
        )

    @property
    def conclusion(self) -> str:
        lo, hi = self.m_window
        if not self.valid:
            return "certificate INVALID: at least one check failed"
        return (
            f"For the surface with q={self.q}, P_g={self.r}: for every denominator degree "
            f"n <= {self.n_max} the identity index multiset is unique in S_(n+1), so the "
            f"identity term's geometric genus, a polynomial in m with roots determined by that "
            f"multiset, differs from every other term's for all but finitely many m; for "
            f"{lo} <= m <= {hi} it differs outright, and no integer relation among the "
            f"equidimensional mu_h-classes can cancel it. Every Hankel determinant of size "
            f"n+1 <= {self.n_max + 1} at these offsets is nonzero in H, so the zeta series has "
            f"no rational form with denominator degree <= {self.n_max} consistent with the window."
        )

    def to_json(self) -> dict:
        return {
            "surface": {"q": self.q, "r": self.r},
            "n_checked": [u.n for u in self.uniqueness],
            "identity_multisets": [
                {
                    "n": u.n,
                    "multiset": list(u.identity_multiset),
                    "unique": u.unique,
                    "permutations_enumerated": u.permutations_enumerated,
                    "nearest_competitor": list(u.nearest_competitor) if u.nearest_competitor else None,
                    "nearest_distance": u.nearest_distance,
                }
                for u in self.uniqueness
            ],
            "windows": [{"n": n, "m_from": self.m_window[0], "m_to": self.m_window[1]} for n in range(1, self.n_max + 1)],
            "verdicts": [dict(asdict(c), determinant=c.determinant) for c in self.checks],
            "valid": self.valid,
            "conclusion": self.conclusion,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def render_text(self) -> str:
        lines = [f"Irrationality certificate: surface q={self.q}, P_g={self.r}"]
        for u in self.uniqueness:
            lines.append(
                f"  n={u.n}: {u.permutations_enumerated} permutations, identity multiset "
                f"{list(u.identity_multiset)} {'unique' if u.unique else 'NOT unique'}; "
                f"nearest competitor {list(u.nearest_competitor or [])}"
            )
        lo, hi = self.m_window
        for n in range(1, self.n_max + 1):
            rows = [c for c in self.checks if c.n == n]
            ok = sum(c.claim and c.nocancel for c in rows)
            lines.append(f"  n={n}: {ok}/{len(rows)} offsets m in [{lo}, {hi}] certified nonzero")
        lines.append(self.conclusion)
        return "\n".join(lines)


def certify_irrational(q: int, r: int, n_max: int, m_window: tuple[int, int]) -> IrrationalityCertificate:
    """Build and verify an irrationality certificate; raises ``CertificateError`` on any failed check."""
    _require_pg(r)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > MAX_ENUMERATION_N:
        raise EnumerationBudgetExceeded(f"n_max={n_max} exceeds the enumeration budget {MAX_ENUMERATION_N}")
    lo, hi = m_window
    if lo < 1 or hi < lo:
        raise ValueError("m window must satisfy 1 <= m_from <= m_to")
    cert = IrrationalityCertificate(q, r, n_max, (lo, hi))
    for n in range(1, n_max + 1):
        rec = identity_multiset_unique(n)
        cert.uniqueness.append(rec)
        if not rec.unique:
            raise CertificateError(f"identity multiset not unique for n={n}")
        ident = tuple(range(1, n + 2))
        others = [s for s in permutations(ident) if s != ident]
        for m in range(lo, hi + 1):
            # every term is a product of symmetric powers of total dimension 2*sum(indices)
            dim = 2 * sum(_indices(m, ident))
            target = term_top_pg(r, m, n, ident)
            other_pgs = [term_top_pg(r, m, n, s) for s in others]
            claim = all(p != target for p in other_pgs)
            nocancel = nocancel_check((dim, target), [(2 * sum(_indices(m, s)), p) for s, p in zip(others, other_pgs)])
            nearest = min(other_pgs, key=lambda p: (abs(p - target), p))
            check = WindowCheck(n, m, dim, target, nearest, claim, nocancel)
            cert.checks.append(check)
            if not (claim and nocancel):
                raise CertificateError(
                    f"check failed for q={q}, r={r}, n={n}, m={m}: identity P_g {target}, nearest {nearest}"
                )
    return cert
