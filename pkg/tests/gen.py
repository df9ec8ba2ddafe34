"""Seeded random generators shared by the test modules."""

import random

from mzeta import dsl
from mzeta.hodge import HodgeVector
from mzeta.intpoly import IntPolynomial, is_irreducible_bruteforce, primitive_part
from mzeta.monoid_ring import Atom, C, MonoidWord, RingElement

POLY_ATOMS = [
    Atom.poly(IntPolynomial.parse(s)) for s in ("1+t", "-1+t", "1+2t", "1+t^2", "1+t+t^2")
]
ATOMS5 = [Atom.prime(2), Atom.prime(3)] + POLY_ATOMS[:3]


def random_irreducible(rng: random.Random, max_deg: int = 3, bound: int = 9) -> IntPolynomial:
    """Primitive irreducible polynomial, positive leading coefficient, checked by brute force."""
    while True:
        d = rng.randint(1, max_deg)
        coeffs = [rng.randint(-bound, bound) for _ in range(d)] + [rng.randint(1, bound)]
        f = IntPolynomial(coeffs)
        if f.degree != d or f.content() != 1:
            continue
        if is_irreducible_bruteforce(f):
            return primitive_part(f)


def random_word(rng, atoms=ATOMS5, max_exp=2, max_atoms=3) -> MonoidWord:
    k = rng.randint(0, max_atoms)
    return MonoidWord([(rng.choice(atoms), rng.randint(1, max_exp)) for _ in range(k)], C)


def random_ring_element(rng, atoms=ATOMS5, max_terms=3, coeff=5, nonzero=False) -> RingElement:
    while True:
        terms = [(random_word(rng, atoms), rng.randint(-coeff, coeff)) for _ in range(rng.randint(1, max_terms))]
        a = RingElement(terms, C)
        if a or not nonzero:
            return a


def random_hodge(rng, max_dim=3, max_entry=3) -> HodgeVector:
    d = rng.randint(0, max_dim)
    return HodgeVector(d, (1,) + tuple(rng.randint(0, max_entry) for _ in range(d)))


def random_leaf(rng, allow_sym=False):
    kind = rng.choice(["point", "L", "E", "A", "P", "curve", "surface"])
    if kind == "A" or kind == "P":
        leaf = dsl.Leaf(kind, (rng.randint(0, 4),))
    elif kind == "curve":
        leaf = dsl.Leaf(kind, (rng.randint(0, 4),))
    elif kind == "surface":
        leaf = dsl.Leaf(kind, (rng.randint(0, 3), rng.randint(0, 3)))
    else:
        leaf = dsl.Leaf(kind)
    if allow_sym and leaf.kind in dsl.SYM_LEAVES and rng.random() < 0.3:
        return dsl.Sym(leaf, rng.randint(0, 4))
    return leaf


def random_tree(rng, depth=3, allow_sym=False):
    if depth == 0 or rng.random() < 0.3:
        return random_leaf(rng, allow_sym)
    r = rng.random()
    if r < 0.15:
        return dsl.Pow(random_tree(rng, depth - 1, allow_sym), rng.randint(0, 3))
    op = rng.choice("+-*")
    return dsl.BinOp(op, random_tree(rng, depth - 1, allow_sym), random_tree(rng, depth - 1, allow_sym))
