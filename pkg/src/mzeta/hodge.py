"""Holomorphic-form Hodge numbers h^{k,0} and the birational invariant Psi_h.

Only the first column (h^{0,0}, h^{1,0}, ..., h^{d,0}) of a Hodge diamond is
kept: it is all that Psi_h(X) = 1 + h^{1,0} t + ... + h^{d,0} t^d needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .intpoly import IntPolynomial
from .monoid_ring import MonoidWord, embed_poly


@dataclass(frozen=True)
class HodgeVector:
    dim: int
    h: tuple[int, ...]

    def __post_init__(self):
        h = tuple(int(x) for x in self.h)
        object.__setattr__(self, "h", h)
        if self.dim < 0 or len(h) != self.dim + 1:
            raise ValueError(f"Hodge vector of dimension {self.dim} needs {self.dim + 1} entries, got {h}")
        if h[0] != 1:
            raise ValueError("h^{0,0} must be 1 (connected variety)")
        if any(x < 0 for x in h):
            raise ValueError("Hodge numbers are nonnegative")

    @classmethod
    def of(cls, *h: int) -> "HodgeVector":
        return cls(len(h) - 1, h)

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.h)

    def to_json(self) -> list[int]:
        return list(self.h)

    def __str__(self):
        return "(" + ", ".join(map(str, self.h)) + ")"


def point() -> HodgeVector:
    return HodgeVector(0, (1,))


def projective(n: int) -> HodgeVector:
    return HodgeVector(n, (1,) + (0,) * n)


def curve(g: int) -> HodgeVector:
    return HodgeVector(1, (1, g))


def surface(q: int, pg: int) -> HodgeVector:
    return HodgeVector(2, (1, q, pg))


E = curve(1)


def kunneth_product(a: HodgeVector, b: HodgeVector) -> HodgeVector:
    h = [0] * (a.dim + b.dim + 1)
    for i, x in enumerate(a.h):
        for j, y in enumerate(b.h):
            h[i + j] += x * y
    return HodgeVector(a.dim + b.dim, tuple(h))


def sym_power(a: HodgeVector, n: int) -> HodgeVector:
    """h^{k,0} of the n-th symmetric product.

    Holomorphic forms on X^(n) are the S_n-invariants of those on X^n, where
    odd-degree forms anticommute.  Their generating function is
    prod_{k even} (1 - t^k s)^(-h_k) * prod_{k odd} (1 + t^k s)^(h_k);
    the answer is the coefficient of s^n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    top = n * a.dim
    # series[j][k]: coefficient of s^j t^k
    series = [[0] * (top + 1) for _ in range(n + 1)]
    series[0][0] = 1
    for k, hk in enumerate(a.h):
        if hk == 0:
            continue
        if k % 2:
            factor = [math.comb(hk, j) for j in range(min(hk, n) + 1)]
        else:
            factor = [math.comb(hk + j - 1, j) for j in range(n + 1)]
        new = [[0] * (top + 1) for _ in range(n + 1)]
        for j0 in range(n + 1):
            row = series[j0]
            if not any(row):
                continue
            for j1, c in enumerate(factor):
                if j0 + j1 > n:
                    break
                shift = k * j1
                dest = new[j0 + j1]
                for t in range(top + 1 - shift):
                    if row[t]:
                        dest[t + shift] += c * row[t]
        series = new
    return HodgeVector(top, tuple(series[n]))


def brute_force_sym_invariants(a: HodgeVector, n: int) -> HodgeVector:
    """Dimensions of S_n-invariants in the tensor power, computed by averaging traces.

    Builds a basis of the (k,0)-forms of X^n as tuples of basis forms of X,
    lets every permutation act with the Koszul sign on odd-degree factors, and
    averages the graded trace over S_n.  Slow; for n <= 4 only.
    """
    if n > 4:
        raise ValueError("brute-force oracle is limited to n <= 4")
    basis = [k for k, hk in enumerate(a.h) for _ in range(hk)]
    ids = range(len(basis))
    traces = [Fraction(0)] * (n * a.dim + 1)
    perms = list(permutations(range(n)))
    for sigma in perms:
        for tup in product(ids, repeat=n):
            if any(tup[sigma[i]] != tup[i] for i in range(n)):
                continue
            odd_pos = [i for i in range(n) if basis[tup[i]] % 2]
            sign = _perm_sign([odd_pos.index(sigma[i]) for i in odd_pos])
            traces[sum(basis[i] for i in tup)] += sign
    h = [tr / len(perms) for tr in traces]
    assert all(x.denominator == 1 for x in h)
    return HodgeVector(n * a.dim, tuple(int(x) for x in h))


def _perm_sign(perm: list[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def psi_h_polynomial(a: HodgeVector) -> IntPolynomial:
    return a.polynomial()


def psi_h(a: HodgeVector) -> MonoidWord:
    """Psi_h(X) as a factored word of the monoid C."""
    return embed_poly(a.polynomial())


def pg(a: HodgeVector) -> int:
    """Geometric genus h^{d,0}."""
    return a.h[-1]


def pg_sym_formula(r: int, n: int) -> int:
    """Geometric genus of the n-th symmetric product of a surface with P_g = r.

    ``binom(r+n-1, r-1)``; for r = 0 this is 0 when n >= 1 and 1 when n = 0.
    """
    if r < 0 or n < 0:
        raise ValueError("r and n must be nonnegative")
    if r == 0:
        return 1 if n == 0 else 0
    return math.comb(r + n - 1, r - 1)


def hilbert_scheme_h0(a: HodgeVector, n: int) -> HodgeVector:
    """(k,0)-Hodge numbers of the Hilbert scheme of n points on a surface.

    In the decomposition of H*(X^[n]) over partitions alpha of n, a (p,q)
    class of X^(alpha) lands in bidegree (p+n-|alpha|, q+n-|alpha|); q' = 0
    forces |alpha| = n, i.e. alpha = 1^n, the symmetric product itself.
    """
    if a.dim != 2:
        raise ValueError("hilbert_scheme_h0 expects a surface (dim 2)")
    return sym_power(a, n)
