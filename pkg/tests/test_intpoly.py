import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import random_irreducible
from mzeta.intpoly import (
    IntPolynomial,
    NotInC,
    content_primitive,
    divmod_exact,
    factor_in_C,
    factor_integer,
    format_poly,
    is_irreducible_bruteforce,
    is_prime,
    kronecker_factor,
    parse_poly,
    poly_arith,
    poly_gcd,
)

P = IntPolynomial.parse


def test_poly_arith_examples():
    assert poly_arith(P("1+t"), P("1-t"), "mul") == P("1-t^2")
    assert poly_arith(P("3+t^4"), IntPolynomial(), "add") == P("3+t^4")
    assert poly_arith(P("1+t"), P("1+t"), "mul") == P("1+2t+t^2")
    assert poly_arith(P("1+t"), P("1+t"), "sub") == IntPolynomial()


def test_parse_any_order_and_format():
    assert parse_poly("-3t^2+1+2t") == IntPolynomial([1, 2, -3])
    assert parse_poly(" 2 * t ^ 3 - t ") == IntPolynomial([0, -1, 0, 2])
    assert parse_poly("t+t") == IntPolynomial([0, 2])
    assert format_poly(IntPolynomial([1, 2, -3])) == "1+2t-3t^2"
    assert format_poly(IntPolynomial([0, -1])) == "-t"
    assert format_poly(IntPolynomial()) == "0"
    for bad in ("", "1+", "t^", "2t3", "x"):
        with pytest.raises(ValueError):
            parse_poly(bad)


@given(st.lists(st.integers(-50, 50), max_size=8))
def test_format_parse_roundtrip(coeffs):
    p = IntPolynomial(coeffs)
    assert parse_poly(format_poly(p)) == p


def test_content_primitive():
    assert content_primitive(P("6t+6"))[:2] == (6, P("t+1"))
    assert content_primitive(P("t^2-1"))[:2] == (1, P("t^2-1"))
    c, prim, sign = content_primitive(P("-2t"))
    assert (c, prim, sign) == (2, P("t"), -1)
    with pytest.raises(ValueError, match="zero has no content decomposition"):
        content_primitive(IntPolynomial())


def test_factor_examples():
    f = factor_in_C(P("6t+6"))
    assert f.content_primes == ((2, 1), (3, 1))
    assert f.irreducible_factors == ((P("1+t"), 1),)
    assert factor_in_C(P("t^2-1")).irreducible_factors == ((P("t-1"), 1), (P("t+1"), 1))
    assert factor_in_C(P("1+t+t^2")).irreducible_factors == ((P("1+t+t^2"), 1),)
    one = factor_in_C(P("1"))
    assert one.content_primes == () and one.irreducible_factors == ()


def test_irreducible_quadratic_by_root_search():
    # degree 2 is reducible over Q iff it has a rational root; the candidates are +-1
    f = P("1+t+t^2")
    assert all(f(x) != 0 for x in (1, -1))
    assert is_irreducible_bruteforce(f)


def test_not_in_C():
    with pytest.raises(NotInC, match="not an element of C"):
        factor_in_C(IntPolynomial())
    with pytest.raises(NotInC):
        factor_in_C(P("1-t"))


def test_repeated_and_content_factors():
    f = P("12") * P("1+t") ** 3 * P("2t-3") ** 2 * P("1+t^2")
    fac = factor_in_C(f)
    assert fac.content_primes == ((2, 2), (3, 1))
    assert dict(fac.irreducible_factors) == {P("1+t"): 3, P("-3+2t"): 2, P("1+t^2"): 1}
    assert fac.expand() == f


def test_cyclotomic_splitting():
    fac = factor_in_C(P("t^16-1"))
    assert [g for g, _ in fac.irreducible_factors] == [P(s) for s in ("-1+t", "1+t", "1+t^2", "1+t^4", "1+t^8")]


def test_swinnerton_dyer_stays_irreducible():
    # irreducible over Q but splits modulo every prime
    fac = factor_in_C(P("1-10t^2+t^4"))
    assert fac.irreducible_factors == ((P("1-10t^2+t^4"), 1),)


def test_roundtrip_random_products():
    rng = random.Random(7)
    for _ in range(60):
        factors = [random_irreducible(rng) for _ in range(rng.randint(1, 4))]
        prod = IntPolynomial.constant(1)
        for g in factors:
            prod = prod * g
        fac = factor_in_C(prod)
        assert Counter(dict(fac.irreducible_factors)) == Counter(factors)
        assert fac.content_primes == ()


small_c = st.lists(st.integers(-6, 6), min_size=1, max_size=4).map(IntPolynomial).filter(
    lambda p: bool(p) and p.leading > 0
)


@settings(max_examples=60, deadline=None)
@given(small_c, small_c)
def test_multiplicativity(p, q):
    def multiset(f):
        return Counter(dict(f.content_primes)) + Counter(dict(f.irreducible_factors))

    assert multiset(factor_in_C(p * q)) == multiset(factor_in_C(p)) + multiset(factor_in_C(q))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=5).map(IntPolynomial).filter(
    lambda p: p.degree >= 1 and p.leading > 0))
def test_factors_irreducible_by_bruteforce(p):
    fac = factor_in_C(p)
    for g, _ in fac.irreducible_factors:
        assert g.content() == 1 and g.leading > 0
        assert is_irreducible_bruteforce(g)
    assert fac.expand() == p


def test_against_sympy_high_degree():
    sympy = pytest.importorskip("sympy")
    t = sympy.Symbol("t")
    rng = random.Random(11)
    for _ in range(15):
        f = IntPolynomial.constant(1)
        for _ in range(rng.randint(2, 5)):
            f = f * IntPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [rng.randint(1, 3)])
        if f.leading <= 0:
            continue
        ours = Counter({str(g): e for g, e in factor_in_C(f).irreducible_factors})
        expr = sum(c * t ** i for i, c in enumerate(f.coeffs))
        _, theirs_raw = sympy.factor_list(expr)
        theirs = Counter()
        for g, e in theirs_raw:
            coeffs = [int(c) for c in reversed(sympy.Poly(g, t).all_coeffs())]
            if coeffs[-1] < 0:
                coeffs = [-c for c in coeffs]
            if len(coeffs) > 1:
                theirs[str(IntPolynomial(coeffs))] += e
        assert ours == theirs


def test_kronecker_finds_factor():
    g = kronecker_factor(P("t^4+4"))
    assert g is not None and divmod_exact(P("t^4+4"), g)[1] == IntPolynomial()
    assert kronecker_factor(P("t^4+1")) is None


def test_gcd():
    a = P("1+t") ** 2 * P("2-t")
    b = P("1+t") * P("3+t")
    assert poly_gcd(a, b) == P("1+t")


def test_integer_primes():
    sieve = [p for p in range(2, 2000) if all(p % d for d in range(2, int(p ** 0.5) + 1))]
    assert [n for n in range(2000) if is_prime(n)] == sieve
    for n in (1, 2, 360, 2 ** 61 - 1, (2 ** 31 - 1) * (2 ** 13 - 1) * 9):
        fac = factor_integer(n)
        assert all(is_prime(p) for p in fac)
        prod = 1
        for p, e in fac.items():
            prod *= p ** e
        assert prod == n
