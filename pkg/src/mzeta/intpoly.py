"""Univariate polynomials over the integers and their factorization.

The multiplicative monoid C of integer polynomials with positive leading
coefficient is free commutative on the prime integers and the primitive
irreducible polynomials.  :func:`factor_in_C` computes that decomposition with
a small-prime / Hensel-lifting / subset-recombination pipeline (Zassenhaus).
:func:`kronecker_factor` is an independent brute-force method kept as an
oracle for tests.
"""

from __future__ import annotations

import math
import random
import re
from fractions import Fraction
from itertools import combinations, product
from typing import NamedTuple, Sequence


class NotInC(ValueError):
    """Raised for polynomials outside the monoid C (zero or negative leading coefficient)."""


class IntPolynomial:
    """Immutable dense polynomial in ``t`` with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``; trailing zeros are stripped,
    so the zero polynomial has ``coeffs == ()`` and degree ``-1``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self._hash = None

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        return parse_poly(text)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("IntPolynomial", self.coeffs))
        return self._hash

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"IntPolynomial({format_poly(self)!r})"

    def sort_key(self):
        """Canonical atom order: degree first, then the coefficient sequence."""
        return (self.degree, self.coeffs)


def poly_arith(a: IntPolynomial, b: IntPolynomial, op: str) -> IntPolynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


# -- text format -------------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d*)(\*?t(?:\^(\d+))?)?")


def parse_poly(text: str) -> IntPolynomial:
    """Parse ``1+2t-3t^2`` style input; terms may come in any order."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, tpart, exp = m.group(1), m.group(2), m.group(3), m.group(4)
        if m.end() == pos or (not digits and not tpart):
            raise ValueError(f"cannot parse polynomial {text!r} at column {pos + 1}")
        if pos > 0 and not sign:
            raise ValueError(f"missing sign before term at column {pos + 1} in {text!r}")
        if tpart and tpart.startswith("*") and not digits:
            raise ValueError(f"dangling '*' at column {pos + 1} in {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        d = (int(exp) if exp else 1) if tpart else 0
        coeffs[d] = coeffs.get(d, 0) + c
        pos = m.end()
    top = max(coeffs)
    return IntPolynomial([coeffs.get(i, 0) for i in range(top + 1)])


def format_poly(p: IntPolynomial) -> str:
    """Ascending-degree canonical text, e.g. ``-1+t^2``."""
    if not p.coeffs:
        return "0"
    parts = []
    for d, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if d == 0:
            body = str(abs(c))
        else:
            mono = "t" if d == 1 else f"t^{d}"
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


# -- division and gcd over Z ----------------------------------------------


class ContentDecomposition(NamedTuple):
    content: int
    primitive: IntPolynomial
    sign: int


def content_primitive(p: IntPolynomial) -> ContentDecomposition:
    """Split ``p = sign * content * primitive`` with a positive-leading primitive part."""
    if not p:
        raise ValueError("zero has no content decomposition")
    c = p.content()
    sign = 1 if p.leading > 0 else -1
    return ContentDecomposition(c, IntPolynomial([sign * x // c for x in p.coeffs]), sign)


def primitive_part(p: IntPolynomial) -> IntPolynomial:
    return content_primitive(p).primitive


def divmod_exact(a: IntPolynomial, b: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Division in Z[t]; every quotient step must be integral.

    Returns ``(q, r)`` with ``a = q*b + r`` and ``deg r < deg b``; raises
    ``ArithmeticError`` when the leading coefficient does not divide.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    db, lb = b.degree, b.leading
    q = [0] * max(len(r) - db, 0)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if c == 0:
            continue
        if c % lb:
            raise ArithmeticError(f"{a} is not divisible by {b} over Z")
        f = c // lb
        q[k] = f
        for i, bc in enumerate(b.coeffs):
            r[k + i] -= f * bc
    return IntPolynomial(q), IntPolynomial(r)


def exact_quotient(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    q, r = divmod_exact(a, b)
    if r:
        raise ArithmeticError(f"{b} does not divide {a}")
    return q


def divides(b: IntPolynomial, a: IntPolynomial) -> bool:
    try:
        return not divmod_exact(a, b)[1]
    except ArithmeticError:
        return False


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    delta = a.degree - b.degree + 1
    if delta <= 0:
        return a
    return divmod_exact(a * (b.leading ** delta), b)[1]


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Gcd in Z[t] (primitive polynomial remainder sequence), positive leading coefficient."""
    if not a:
        return content_primitive(b).primitive * b.content() if b else IntPolynomial()
    if not b:
        return content_primitive(a).primitive * a.content()
    c = math.gcd(a.content(), b.content())
    u, v = primitive_part(a), primitive_part(b)
    if u.degree < v.degree:
        u, v = v, u
    while v:
        r = pseudo_remainder(u, v)
        u, v = v, (primitive_part(r) if r else r)
    return u * c


# -- integer primality / factoring ----------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; deterministic below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_integer(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer as ``{prime: exponent}``."""
    if n < 1:
        raise ValueError("factor_integer expects a positive integer")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    rng = random.Random(n)
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        d = _pollard_brent(m, rng)
        stack += [d, m // d]
    return dict(sorted(out.items()))


# -- arithmetic modulo a prime (ascending coefficient lists) -------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod(a, p):
    return _trim([x % p for x in a])


def _sub_p(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _mul_p(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod(out, p)


def _divmod_p(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] * inv % p
        q[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] = (a[k + i] - c * y) % p
    return _trim(q), _trim(a[:db])


def _monic_p(a, p):
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _gcd_p(a, b, p):
    while b:
        a, b = b, _divmod_p(a, b, p)[1]
    return _monic_p(a, p) if a else []


def _xgcd_p(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic mod p."""
    r0, r1 = a, b
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub_p(s0, _mul_p(q, s1, p), p)
        t0, t1 = t1, _sub_p(t0, _mul_p(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return ([x * inv % p for x in r0], [x * inv % p for x in s0], [x * inv % p for x in t0])


def _powmod_p(base, e, mod, p):
    result = [1]
    base = _divmod_p(base, mod, p)[1]
    while e:
        if e & 1:
            result = _divmod_p(_mul_p(result, base, p), mod, p)[1]
        base = _divmod_p(_mul_p(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _deriv_p(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def _distinct_degree(f, p):
    """Pairs (g, d): g is the product of all degree-d monic irreducible factors of squarefree monic f."""
    out = []
    h = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod_p(h, p, f, p)
        g = _gcd_p(f, _sub_p(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _divmod_p(f, g, p)[0]
            h = _divmod_p(h, f, p)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus split of monic squarefree f whose irreducible factors all have degree d."""
    if len(f) - 1 == d:
        return [f]
    n = len(f) - 1
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        g = _gcd_p(f, a, p)
        if len(g) > 1:
            break
        b = _powmod_p(a, (p ** d - 1) // 2, f, p)
        g = _gcd_p(f, _sub_p(b, [1], p), p)
        if 1 < len(g) < len(f):
            break
    return _equal_degree(g, d, p, rng) + _equal_degree(_divmod_p(f, g, p)[0], d, p, rng)


def factor_mod_p(f: Sequence[int], p: int, seed: int = 0) -> list[list[int]]:
    """Monic irreducible factors of a squarefree polynomial modulo an odd prime."""
    f = _monic_p(_mod(list(f), p), p)
    rng = random.Random(seed)
    out = []
    for g, d in _distinct_degree(f, p):
        out.extend(_equal_degree(g, d, p, rng))
    return sorted(out, key=lambda g: (len(g), g))


# -- Hensel lifting and recombination --------------------------------------


def _symmetric(a, m):
    half = m // 2
    return [x - m if x > half else x for x in (y % m for y in a)]


def _hensel_pair(f, g, h, p, k):
    """Lift ``f = g*h mod p`` (g monic, h carrying lc(f)) to modulus ``p**k``."""
    _, s, t = _xgcd_p(_mod(g, p), _mod(h, p), p)
    q_mod = p
    for _ in range(1, k):
        e = _trim([(a - b) // q_mod % p for a, b in _zip_pad(f, _mul_int(g, h))])
        quo, tau = _divmod_p(_mul_p(t, e, p), _mod(g, p), p)
        sigma = _trim([(a + b) % p for a, b in _zip_pad(_mul_p(s, e, p), _mul_p(quo, _mod(h, p), p))])
        g = [x + q_mod * y for x, y in _zip_pad(g, tau)]
        h = [x + q_mod * y for x, y in _zip_pad(h, sigma)]
        q_mod *= p
        g = _trim([x % q_mod for x in g])
        h = _trim([x % q_mod for x in h])
    return g, h


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)) for i in range(n)]


def _mul_int(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def hensel_lift(f: Sequence[int], factors: list[list[int]], p: int, k: int) -> list[list[int]]:
    """Lift monic factors with ``f = lc(f) * prod(factors) mod p`` to monic factors mod ``p**k``."""
    f = list(f)
    pk = p ** k
    if len(factors) == 1:
        inv = pow(f[-1], -1, pk)
        return [[x * inv % pk for x in f]]
    half = len(factors) // 2
    left, right = factors[:half], factors[half:]
    g = [1]
    for u in left:
        g = _mul_p(g, u, p)
    h = [f[-1] % p]
    for u in right:
        h = _mul_p(h, u, p)
    g_lift, h_lift = _hensel_pair(f, g, h, p, k)
    h_lift[-1] = f[-1] % pk
    return hensel_lift(g_lift, left, p, k) + hensel_lift(h_lift, right, p, k)


def _coeff_bound(f: IntPolynomial) -> int:
    """Mignotte-style bound on the coefficients of any factor of ``f`` in Z[t]."""
    norm2 = math.isqrt(sum(c * c for c in f.coeffs)) + 1
    return (1 << f.degree) * norm2


def _choose_prime(f: IntPolynomial) -> tuple[int, list[list[int]]]:
    best = None
    tried = 0
    p = 2
    while tried < 5:
        p += 1
        if not is_prime(p) or f.leading % p == 0:
            continue
        fp = _mod(list(f.coeffs), p)
        if len(_gcd_p(fp, _deriv_p(fp, p), p)) > 1:
            continue
        facs = factor_mod_p(fp, p, seed=p)
        tried += 1
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        if len(facs) == 1:
            break
    return best


def _zassenhaus(f: IntPolynomial) -> list[IntPolynomial]:
    """Irreducible factors of a primitive squarefree polynomial of degree >= 2."""
    p, modular = _choose_prime(f)
    if len(modular) == 1:
        return [f]
    bound = 2 * abs(f.leading) * _coeff_bound(f)
    k = 1
    while p ** k <= bound:
        k += 1
    pk = p ** k
    lifted = hensel_lift(list(f.coeffs), modular, p, k)

    found = []
    remaining = list(range(len(lifted)))
    cur = f
    s = 1
    while 2 * s <= len(remaining):
        for subset in combinations(remaining, s):
            lc = cur.leading
            g = [lc % pk]
            for i in subset:
                g = _mod(_mul_int(g, lifted[i]), pk)
            cand = IntPolynomial(_symmetric(g, pk))
            cand = primitive_part(cand)
            q, r = _try_divide(cur, cand)
            if q is not None and not r:
                found.append(cand)
                cur = q
                remaining = [i for i in remaining if i not in subset]
                break
        else:
            s += 1
    found.append(primitive_part(cur))
    return found


def _try_divide(a, b):
    try:
        return divmod_exact(a, b)
    except ArithmeticError:
        return None, None


# -- Kronecker brute force (oracle) ----------------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    pos = sorted(set(small + [n // d for d in small]))
    return pos + [-d for d in pos]


def _interpolate(xs, ys) -> list[Fraction]:
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    return coeffs


def kronecker_factor(f: IntPolynomial) -> IntPolynomial | None:
    """A nontrivial factor of positive degree found by Kronecker's exhaustive search, or ``None``.

    Exponential in the degree; intended for small inputs used as a test oracle.
    """
    n = f.degree
    if n < 2:
        return None
    xs, ys = [], []
    x = 0
    while len(xs) < n // 2 + 1:
        v = f(x)
        if v == 0:
            return primitive_part(IntPolynomial([-x, 1]))
        xs.append(x)
        ys.append(v)
        x = -x if x > 0 else -x + 1
    for s in range(1, n // 2 + 1):
        pts = xs[: s + 1]
        for vals in product(*[_divisors(y) for y in ys[: s + 1]]):
            coeffs = _interpolate(pts, list(vals))
            if any(c.denominator != 1 for c in coeffs):
                continue
            g = IntPolynomial([int(c) for c in coeffs])
            if g.degree < 1:
                continue
            if divides(g, f):
                return primitive_part(g)
    return None


def is_irreducible_bruteforce(f: IntPolynomial) -> bool:
    """Irreducibility of a primitive polynomial via exhaustive Kronecker search."""
    return f.degree >= 1 and kronecker_factor(f) is None


# -- factorization in C ---------------------------------------------------------


class Factorization(NamedTuple):
    unit_sign: int
    content_primes: tuple[tuple[int, int], ...]
    irreducible_factors: tuple[tuple[IntPolynomial, int], ...]

    def expand(self) -> IntPolynomial:
        out = IntPolynomial.constant(self.unit_sign)
        for p, e in self.content_primes:
            out = out * (p ** e)
        for g, e in self.irreducible_factors:
            out = out * g ** e
        return out

    def __str__(self):
        parts = [str(p) if e == 1 else f"{p}^{e}" for p, e in self.content_primes]
        parts += [f"({g})" if e == 1 else f"({g})^{e}" for g, e in self.irreducible_factors]
        return "{" + ", ".join(parts) + "}"


def factor_squarefree(f: IntPolynomial) -> list[IntPolynomial]:
    """Irreducible factors of a primitive squarefree polynomial (positive leading coefficient)."""
    if f.degree <= 1:
        return [f] if f.degree == 1 else []
    return sorted(_zassenhaus(f), key=IntPolynomial.sort_key)


def factor_in_C(p: IntPolynomial) -> Factorization:
    """Decompose an element of C into prime integers and primitive irreducible polynomials."""
    if not p or p.leading <= 0:
        raise NotInC(f"not an element of C: {p}")
    content, prim, _ = content_primitive(p)
    primes = tuple(factor_integer(content).items())
    if prim.degree <= 0:
        return Factorization(1, primes, ())
    g = poly_gcd(prim, prim.derivative())
    squarefree = exact_quotient(prim, g) if g.degree > 0 else prim
    squarefree = primitive_part(squarefree)
    factors = []
    rest = prim
    for q in factor_squarefree(squarefree):
        e = 0
        while True:
            quo, rem = _try_divide(rest, q)
            if quo is None or rem:
                break
            rest = quo
            e += 1
        factors.append((q, e))
    if rest != IntPolynomial.constant(1):
        raise ArithmeticError(f"factorization of {p} left cofactor {rest}")
    return Factorization(1, primes, tuple(factors))
