import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from schubert_git.poly import Poly, monomial

from conftest import random_poly


def small_poly(seed: int) -> Poly:
    return random_poly(random.Random(seed), n=6, max_terms=4, max_degree=3)


@given(st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_ring_axioms(sa, sb, sc):
    a, b, c = small_poly(sa), small_poly(sb), small_poly(sc)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.zero()


def test_annihilation_and_units():
    a = small_poly(7)
    assert (a * 0).is_zero
    assert a * Poly.zero() == Poly.zero()
    assert a * Poly.const(1) == a
    assert -(-a) == a
    assert a * Fraction(1, 2) * 2 == a


def test_monomial_canonicalization():
    m = monomial([(3, 4), (1, 2), (3, 4)])
    assert m == ((1, 2), (3, 4), (3, 4))
    p = Poly.from_monomial([(3, 4), (1, 2)]) - Poly.from_monomial([(1, 2), (3, 4)])
    assert p.is_zero


def test_power_and_degree():
    x = Poly.variable("a")
    y = Poly.variable("b")
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert ((x + y) ** 2).total_degree() == 2
    assert Poly.zero().total_degree() == 0


def test_evaluate_exact():
    x = Poly.variable("a")
    y = Poly.variable("b")
    p = x * x - y
    assert p.evaluate({"a": Fraction(2, 3), "b": Fraction(1, 9)}) == Fraction(1, 3)


def test_format_graded_lex():
    x = Poly.variable("a")
    y = Poly.variable("b")
    p = y * y - x + Poly.const(2)
    assert p.format(str) == "2 - a + b^2"
    assert Poly.zero().format(str) == "0"
