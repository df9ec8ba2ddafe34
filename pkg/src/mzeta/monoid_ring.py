"""Monoid rings Z[G] over free commutative monoids of atoms, and their fraction fields.

An :class:`Atom` is a free generator: a prime integer, a primitive irreducible
integer polynomial, or a named symbol.  A :class:`MonoidWord` is a finite
product of atoms, a :class:`RingElement` an integer combination of words and a
:class:`FieldElement` a quotient of ring elements.  With atoms drawn from the
primes of Z[t] this is Z[C] and its fraction field H; with symbol atoms it is a
plain polynomial ring such as Z[L, E].
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .intpoly import IntPolynomial, factor_in_C, format_poly, is_prime


class AlphabetMismatch(ValueError):
    pass


class UnluckyEvaluation(ZeroDivisionError):
    """The chosen evaluation point makes a denominator vanish; retry with another point."""


@dataclass(frozen=True)
class Atom:
    kind: str  # "prime" | "poly" | "symbol"
    value: Union[int, IntPolynomial, str]

    @classmethod
    def prime(cls, p: int) -> "Atom":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls("prime", p)

    @classmethod
    def poly(cls, f: IntPolynomial, check: bool = True) -> "Atom":
        if check:
            fac = factor_in_C(f)
            if fac.content_primes or len(fac.irreducible_factors) != 1 or fac.irreducible_factors[0] != (f, 1):
                raise ValueError(f"{f} is not a primitive irreducible polynomial with positive leading coefficient")
        return cls("poly", f)

    @classmethod
    def symbol(cls, name: str) -> "Atom":
        if not name.isidentifier() or not name.isascii():
            raise ValueError(f"bad symbol name {name!r}")
        return cls("symbol", name)

    @functools.cached_property
    def sort_key(self):
        if self.kind == "prime":
            return (0, self.value)
        if self.kind == "poly":
            return (1,) + self.value.sort_key()
        return (2, self.value)

    def __lt__(self, other: "Atom") -> bool:
        return self.sort_key < other.sort_key

    def __str__(self):
        if self.kind == "symbol":
            return self.value
        if self.kind == "prime":
            return f"[{self.value}]"
        return f"[{format_poly(self.value)}]"

    def as_polynomial(self) -> IntPolynomial:
        if self.kind == "prime":
            return IntPolynomial.constant(self.value)
        if self.kind == "poly":
            return self.value
        raise TypeError("symbol atoms have no polynomial value")


@dataclass(frozen=True)
class Alphabet:
    """Which atoms a ring instance admits.

    ``polynomial=True`` admits the prime elements of Z[t] (the monoid C);
    ``symbols`` lists admissible symbol names.
    """

    name: str
    polynomial: bool = False
    symbols: frozenset = frozenset()

    def admits(self, atom: Atom) -> bool:
        if atom.kind == "symbol":
            return atom.value in self.symbols
        return self.polynomial


C = Alphabet("C", polynomial=True)


def symbol_alphabet(*names: str, name: str | None = None) -> Alphabet:
    return Alphabet(name or "Z[" + ",".join(names) + "]", symbols=frozenset(names))


def _check_same(a: Alphabet, b: Alphabet):
    if a != b:
        raise AlphabetMismatch(f"alphabet mismatch: {a.name} vs {b.name}")


class MonoidWord:
    """Element of a free commutative monoid, stored as sorted ``(atom, exponent)`` pairs."""

    __slots__ = ("items", "alphabet", "_hash")

    def __init__(self, exponents: Mapping[Atom, int] | Iterable = (), alphabet: Alphabet = C):
        pairs = exponents.items() if isinstance(exponents, Mapping) else exponents
        merged: dict[Atom, int] = {}
        for atom, e in pairs:
            if e < 0:
                raise ValueError("negative exponent in monoid word")
            if e and not alphabet.admits(atom):
                raise AlphabetMismatch(f"atom {atom} not in alphabet {alphabet.name}")
            merged[atom] = merged.get(atom, 0) + e
        self.items = tuple(sorted(((a, e) for a, e in merged.items() if e), key=lambda p: p[0].sort_key))
        self.alphabet = alphabet
        self._hash = None

    @classmethod
    def one(cls, alphabet: Alphabet = C) -> "MonoidWord":
        return cls((), alphabet)

    @classmethod
    def of(cls, atom: Atom, e: int = 1, alphabet: Alphabet = C) -> "MonoidWord":
        return cls([(atom, e)], alphabet)

    @property
    def exponents(self) -> dict[Atom, int]:
        return dict(self.items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.items)

    def is_one(self) -> bool:
        return not self.items

    def __eq__(self, other):
        if not isinstance(other, MonoidWord):
            return NotImplemented
        return self.items == other.items and self.alphabet == other.alphabet

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.items, self.alphabet))
        return self._hash

    def __mul__(self, other: "MonoidWord") -> "MonoidWord":
        if not isinstance(other, MonoidWord):
            return NotImplemented
        _check_same(self.alphabet, other.alphabet)
        return MonoidWord(self.items + other.items, self.alphabet)

    def __pow__(self, k: int) -> "MonoidWord":
        return MonoidWord([(a, e * k) for a, e in self.items], self.alphabet)

    def divides(self, other: "MonoidWord") -> bool:
        exps = other.exponents
        return all(exps.get(a, 0) >= e for a, e in self.items)

    def quotient(self, other: "MonoidWord") -> "MonoidWord":
        """``self / other``; requires ``other`` to divide ``self``."""
        exps = self.exponents
        for a, e in other.items:
            if exps.get(a, 0) < e:
                raise ArithmeticError(f"{other} does not divide {self}")
            exps[a] -= e
        return MonoidWord(exps, self.alphabet)

    def gcd(self, other: "MonoidWord") -> "MonoidWord":
        exps = other.exponents
        return MonoidWord([(a, min(e, exps.get(a, 0))) for a, e in self.items], self.alphabet)

    def atoms(self) -> tuple[Atom, ...]:
        return tuple(a for a, _ in self.items)

    def evaluate(self, assignment: Mapping[Atom, Fraction]) -> Fraction:
        out = Fraction(1)
        for a, e in self.items:
            out *= Fraction(assignment[a]) ** e
        return out

    def as_polynomial(self) -> IntPolynomial:
        """The element of C this word names (polynomial alphabets only)."""
        out = IntPolynomial.constant(1)
        for a, e in self.items:
            out = out * a.as_polynomial() ** e
        return out

    def __str__(self):
        if not self.items:
            return "1"
        return "*".join(str(a) if e == 1 else f"{a}^{e}" for a, e in self.items)

    def __repr__(self):
        return f"MonoidWord({self})"


def word_mul(a: MonoidWord, b: MonoidWord) -> MonoidWord:
    return a * b


def embed_poly(p: IntPolynomial) -> MonoidWord:
    """The basis word ``[p]`` of Z[C] in factored form."""
    fac = factor_in_C(p)
    pairs = [(Atom("prime", q), e) for q, e in fac.content_primes]
    pairs += [(Atom("poly", g), e) for g, e in fac.irreducible_factors]
    return MonoidWord(pairs, C)


def _word_cmp(u: MonoidWord, v: MonoidWord) -> int:
    # graded; ties broken lexicographically with smaller atoms more significant
    du, dv = u.degree, v.degree
    if du != dv:
        return 1 if du > dv else -1
    for (a, e), (b, f) in zip(u.items, v.items):
        if a != b:
            return 1 if a.sort_key < b.sort_key else -1
        if e != f:
            return 1 if e > f else -1
    return 0


word_order_key = functools.cmp_to_key(_word_cmp)


Coercible = Union["RingElement", MonoidWord, int]


class RingElement:
    """Sparse element of the monoid ring Z[G]: a mapping word -> nonzero integer."""

    __slots__ = ("terms", "alphabet", "_hash")

    def __init__(self, terms: Mapping[MonoidWord, int] | Iterable = (), alphabet: Alphabet = C):
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[MonoidWord, int] = {}
        for w, c in pairs:
            _check_same(w.alphabet, alphabet)
            acc[w] = acc.get(w, 0) + c
        self.terms = {w: c for w, c in acc.items() if c}
        self.alphabet = alphabet
        self._hash = None

    @classmethod
    def zero(cls, alphabet: Alphabet = C) -> "RingElement":
        return cls((), alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet = C) -> "RingElement":
        return cls.from_int(1, alphabet)

    @classmethod
    def from_int(cls, n: int, alphabet: Alphabet = C) -> "RingElement":
        return cls([(MonoidWord.one(alphabet), n)], alphabet)

    @classmethod
    def from_word(cls, w: MonoidWord, coeff: int = 1) -> "RingElement":
        return cls([(w, coeff)], w.alphabet)

    @classmethod
    def basis(cls, p: IntPolynomial) -> "RingElement":
        """The basis element ``[p]`` of Z[C]."""
        return cls.from_word(embed_poly(p))

    @classmethod
    def symbol(cls, name: str, alphabet: Alphabet) -> "RingElement":
        return cls.from_word(MonoidWord.of(Atom.symbol(name), 1, alphabet))

    def _coerce(self, other) -> "RingElement | None":
        if isinstance(other, RingElement):
            _check_same(self.alphabet, other.alphabet)
            return other
        if isinstance(other, MonoidWord):
            return RingElement.from_word(other)
        if isinstance(other, int):
            return RingElement.from_int(other, self.alphabet)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, MonoidWord)):
            other = self._coerce(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.terms.items()), self.alphabet))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return RingElement(acc, self.alphabet)

    __radd__ = __add__

    def __neg__(self):
        return RingElement({w: -c for w, c in self.terms.items()}, self.alphabet)

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
        acc: dict[MonoidWord, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                acc[w] = acc.get(w, 0) + c1 * c2
        return RingElement(acc, self.alphabet)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = RingElement.one(self.alphabet)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        return FieldElement(self, other)

    def sorted_terms(self) -> list[tuple[MonoidWord, int]]:
        """Terms from leading to trailing under the graded order."""
        return sorted(self.terms.items(), key=lambda wc: word_order_key(wc[0]), reverse=True)

    def leading_term(self) -> tuple[MonoidWord, int]:
        if not self.terms:
            raise ValueError("zero has no leading term")
        return max(self.terms.items(), key=lambda wc: word_order_key(wc[0]))

    def content(self) -> int:
        return math.gcd(*self.terms.values()) if self.terms else 0

    def word_gcd(self) -> MonoidWord:
        """Largest word dividing every term."""
        words = iter(self.terms)
        g = next(words, MonoidWord.one(self.alphabet))
        for w in words:
            g = g.gcd(w)
        return g

    def atoms(self) -> set[Atom]:
        return {a for w in self.terms for a in w.atoms()}

    def scale_down(self, c: int, w: MonoidWord) -> "RingElement":
        """Divide every term by the integer ``c`` and the word ``w`` (both must divide exactly)."""
        return RingElement({t.quotient(w): k // c for t, k in self.terms.items()}, self.alphabet)

    def evaluate(self, assignment: Mapping[Atom, Fraction]) -> Fraction:
        return sum((c * w.evaluate(assignment) for w, c in self.terms.items()), Fraction(0))

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for w, c in self.sorted_terms():
            mag = abs(c)
            if w.is_one():
                body = str(mag)
            elif mag == 1:
                body = str(w)
            else:
                body = f"{mag}*{w}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"RingElement({self})"

    def to_tex(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for w, c in self.sorted_terms():
            mag = abs(c)
            mono = "".join(_atom_tex(a) if e == 1 else f"{_atom_tex(a)}^{{{e}}}" for a, e in w.items)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            sign = "-" if c < 0 else ("+" if out else "")
            out.append(sign + body)
        return "".join(out)


def _atom_tex(a: Atom) -> str:
    if a.kind == "symbol":
        return {"L": r"\mathbb{L}"}.get(a.value, a.value)
    return str(a)


def ring_arith(a: RingElement, b: RingElement, op: str) -> RingElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def exact_divide(a: RingElement, b: RingElement) -> RingElement:
    """Quotient ``q`` with ``q*b == a``; raises ``ArithmeticError`` if the division is not exact."""
    _check_same(a.alphabet, b.alphabet)
    if b.is_zero():
        raise ZeroDivisionError("exact_divide by zero")
    if len(b.terms) == 1:
        (w, c), = b.terms.items()
        out = {}
        for t, k in a.terms.items():
            if k % c or not w.divides(t):
                raise ArithmeticError(f"{b} does not divide {a}")
            out[t.quotient(w)] = k // c
        return RingElement(out, a.alphabet)
    lw, lc = b.leading_term()
    rem = dict(a.terms)
    quot: dict[MonoidWord, int] = {}
    while rem:
        tw, tc = max(rem.items(), key=lambda wc: word_order_key(wc[0]))
        if tc % lc or not lw.divides(tw):
            raise ArithmeticError(f"{b} does not divide {a}")
        qw, qc = tw.quotient(lw), tc // lc
        quot[qw] = quot.get(qw, 0) + qc
        for w, c in b.terms.items():
            m = w * qw
            v = rem.get(m, 0) - qc * c
            if v:
                rem[m] = v
            else:
                rem.pop(m, None)
    return RingElement(quot, a.alphabet)


class FieldElement:
    """Quotient ``numerator / denominator`` in the fraction field of a monoid ring.

    Stored reduced by the integer content and the common word factor of both
    parts, with a positive leading coefficient in the denominator.  Equality
    is decided by cross-multiplication, so instances are unhashable.
    """

    __slots__ = ("numerator", "denominator")
    __hash__ = None

    def __init__(self, numerator, denominator=1):
        if isinstance(numerator, FieldElement) or isinstance(denominator, FieldElement):
            q = _as_field(numerator) * _as_field(denominator).inverse()
            numerator, denominator = q.numerator, q.denominator
        if isinstance(numerator, MonoidWord):
            numerator = RingElement.from_word(numerator)
        if isinstance(denominator, MonoidWord):
            denominator = RingElement.from_word(denominator)
        if isinstance(numerator, int):
            alpha = denominator.alphabet if isinstance(denominator, RingElement) else C
            numerator = RingElement.from_int(numerator, alpha)
        if isinstance(denominator, int):
            denominator = RingElement.from_int(denominator, numerator.alphabet)
        _check_same(numerator.alphabet, denominator.alphabet)
        if denominator.is_zero():
            raise ZeroDivisionError("division by zero in the fraction field")
        self.numerator, self.denominator = _normalize(numerator, denominator)

    @property
    def alphabet(self) -> Alphabet:
        return self.numerator.alphabet

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(self.denominator, self.numerator)

    def __add__(self, other):
        other = _as_field(other, self.alphabet)
        if other is None:
            return NotImplemented
        if self.denominator == other.denominator:
            return FieldElement(self.numerator + other.numerator, self.denominator)
        return FieldElement(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = _as_field(other, self.alphabet)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_field(other, self.alphabet)
        if other is None:
            return NotImplemented
        return FieldElement(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_field(other, self.alphabet)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in the fraction field")
        return FieldElement(self.numerator * other.denominator, self.denominator * other.numerator)

    def __rtruediv__(self, other):
        return _as_field(other, self.alphabet) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElement(self.numerator ** k, self.denominator ** k)

    def __eq__(self, other):
        other = _as_field(other, self.alphabet)
        if other is None:
            return NotImplemented
        return (self.numerator * other.denominator - other.numerator * self.denominator).is_zero()

    def evaluate(self, assignment: Mapping[Atom, Fraction]) -> Fraction:
        d = self.denominator.evaluate(assignment)
        if d == 0:
            raise UnluckyEvaluation("unlucky evaluation point")
        return self.numerator.evaluate(assignment) / d

    def atoms(self) -> set[Atom]:
        return self.numerator.atoms() | self.denominator.atoms()

    def __str__(self):
        if self.denominator == 1:
            return str(self.numerator)
        num = str(self.numerator)
        den = str(self.denominator)
        if len(self.numerator.terms) > 1:
            num = f"({num})"
        if len(self.denominator.terms) > 1:
            den = f"({den})"
        return f"{num} / {den}"

    def __repr__(self):
        return f"FieldElement({self})"


def _as_field(x, alphabet: Alphabet = C) -> FieldElement | None:
    if isinstance(x, FieldElement):
        _check_same(x.alphabet, alphabet)
        return x
    if isinstance(x, RingElement):
        _check_same(x.alphabet, alphabet)
        return FieldElement(x)
    if isinstance(x, MonoidWord):
        return FieldElement(RingElement.from_word(x))
    if isinstance(x, int):
        return FieldElement(RingElement.from_int(x, alphabet))
    return None


def _normalize(num: RingElement, den: RingElement) -> tuple[RingElement, RingElement]:
    alpha = num.alphabet
    if num.is_zero():
        return num, RingElement.one(alpha)
    c = math.gcd(num.content(), den.content())
    w = num.word_gcd().gcd(den.word_gcd())
    if c != 1 or not w.is_one():
        num, den = num.scale_down(c, w), den.scale_down(c, w)
    if den.leading_term()[1] < 0:
        num, den = -num, -den
    return num, den


def field_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def is_zero(a) -> bool:
    return a.is_zero()


def evaluate(a, assignment: Mapping[Atom, Fraction]) -> Fraction:
    """Image of ``a`` under the ring homomorphism sending each atom to a rational."""
    return a.evaluate(assignment)


def random_rational(rng: random.Random, bound: int = 10**6) -> Fraction:
    num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def random_assignment(atoms: Iterable[Atom], rng: random.Random, bound: int = 10**6) -> dict[Atom, Fraction]:
    return {a: random_rational(rng, bound) for a in sorted(set(atoms), key=lambda a: a.sort_key)}
