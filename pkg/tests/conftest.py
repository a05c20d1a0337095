import random
from fractions import Fraction

import pytest

from schubert_git.plucker import pmono
from schubert_git.poly import Poly
from schubert_git.straightening import SupportRange


@pytest.fixture(scope="session")
def g26_support() -> SupportRange:
    return SupportRange(6, (1, 2), (5, 6))


@pytest.fixture(scope="session")
def x68_support() -> SupportRange:
    return SupportRange(8, (1, 2), (6, 8))


@pytest.fixture(scope="session")
def x710_support() -> SupportRange:
    return SupportRange(10, (1, 2), (7, 10))


def random_pair(rng: random.Random, n: int) -> tuple[int, int]:
    i = rng.randint(1, n - 1)
    j = rng.randint(i + 1, n)
    return (i, j)


def random_poly(
    rng: random.Random,
    n: int,
    max_terms: int = 3,
    max_degree: int = 3,
    coeff_bound: int = 5,
) -> Poly:
    """Small random Pluecker polynomial with exact integer coefficients."""
    out = Poly.zero()
    for _ in range(rng.randint(1, max_terms)):
        degree = rng.randint(1, max_degree)
        pairs = [random_pair(rng, n) for _ in range(degree)]
        coeff = 0
        while coeff == 0:
            coeff = rng.randint(-coeff_bound, coeff_bound)
        out = out + pmono(pairs, Fraction(coeff))
    return out
