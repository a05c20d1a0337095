from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import pytest

from schubert_git import case_studies, linalg
from schubert_git.case_studies import projective_generator, toric_generator
from schubert_git.formal import format_formal, substitute
from schubert_git.invariants import (
    content,
    degree_one_generation_check,
    hilbert_count,
    invariant_basis,
    multiplication_kernel,
    product_normal_forms,
    projective_window_products_standard,
)
from schubert_git.plucker import evaluate, random_schubert_point
from schubert_git.straightening import SupportRange, is_standard, straighten


def test_content_examples():
    assert content(((1, 4), (2, 5), (3, 6)), 6) == (1, 1, 1, 1, 1, 1)
    assert content(((1, 2), (1, 2)), 4) == (2, 2, 0, 0)
    for n in (6, 8, 10):
        diag = tuple((k, n // 2 + k) for k in range(1, n // 2 + 1))
        assert content(diag, n) == (1,) * n


def _brute_force_invariants(support: SupportRange, d: int):
    length = d * support.n // 2
    target = (d,) * support.n
    out = []
    for multiset in combinations_with_replacement(support.variables(), length):
        if content(multiset, support.n) != target:
            continue
        if is_standard(multiset, support):
            out.append(tuple(sorted(multiset)))
    return out


def test_invariant_basis_brute_force_oracle(g26_support, x68_support):
    # Independent enumeration over unordered factor multisets.
    assert sorted(invariant_basis(g26_support, 1).monomials) == sorted(
        _brute_force_invariants(g26_support, 1)
    )
    assert sorted(invariant_basis(g26_support, 2).monomials) == sorted(
        _brute_force_invariants(g26_support, 2)
    )
    assert sorted(invariant_basis(x68_support, 1).monomials) == sorted(
        _brute_force_invariants(x68_support, 1)
    )
    small = SupportRange.schubert(6, (4, 6))
    assert sorted(invariant_basis(small, 2).monomials) == sorted(
        _brute_force_invariants(small, 2)
    )


def test_invariant_basis_matches_recorded_generators(
    g26_support, x68_support, x710_support
):
    for support, case in (
        (g26_support, case_studies.G26),
        (x68_support, case_studies.X68),
        (x710_support, case_studies.X710),
    ):
        gens = invariant_basis(support, 1)
        assert gens.labels == tuple(label for label, _ in case.generators)
        assert gens.monomials == case.generator_monomials
        for mono in gens.monomials:
            assert is_standard(mono, support)
            assert content(mono, support.n) == (1,) * support.n


def test_hilbert_counts(g26_support, x68_support, x710_support):
    assert hilbert_count(g26_support, 1) == 5
    assert hilbert_count(g26_support, 2) == 15
    assert hilbert_count(x68_support, 1) == 9
    assert hilbert_count(x68_support, 2) == 40
    assert hilbert_count(x710_support, 1) == 14
    for n in (6, 8, 10):
        assert hilbert_count(SupportRange.schubert(n, (n // 2, n)), 1) == 1
        assert hilbert_count(SupportRange.schubert(n, (n // 2 + 1, n)), 1) == n // 2


def test_unique_invariant_on_minimal_semistable():
    for n in (6, 8, 10):
        gens = invariant_basis(SupportRange.schubert(n, (n // 2, n)), 1)
        diag = tuple((k, n // 2 + k) for k in range(1, n // 2 + 1))
        assert gens.monomials == (diag,)


def test_projective_window_generators():
    assert projective_generator(6, 2) == tuple(sorted([(1, 2), (3, 5), (4, 6)]))
    assert projective_generator(6, 4) == tuple(sorted([(1, 4), (2, 5), (3, 6)]))
    for n in (6, 8, 10):
        for k in range(1, n // 2 + 1):
            support = SupportRange(n, (1, k + 1), (n // 2 + 1, n))
            gens = invariant_basis(support, 1)
            expected = tuple(
                projective_generator(n, t) for t in range(k + 1, n // 2 + 2)
            )
            assert gens.monomials == expected
            assert gens.labels == tuple(
                f"X_{t}" for t in range(k + 1, n // 2 + 2)
            )


@pytest.mark.parametrize("n", [6, 8, 10])
def test_projective_window_dimension_formula(n):
    for k in range(2, n // 2 + 1):
        support = SupportRange(n, (1, k + 1), (n // 2 + 1, n))
        for d in (1, 2, 3):
            assert hilbert_count(support, d) == comb(n // 2 - k + d, d)


@pytest.mark.parametrize("n", [6, 8, 10])
def test_projective_window_products_standard(n):
    for k in range(2, n // 2 + 1):
        assert projective_window_products_standard(n, k, d=2)
        assert projective_window_products_standard(n, k, d=3)


def test_toric_window_basis():
    for n, k in ((8, 2), (10, 2), (10, 3)):
        support = SupportRange(n, (1, k + 1), (n // 2 + 2, n))
        gens = invariant_basis(support, 1)
        expected = {
            toric_generator(n, i, j)
            for i in range(k + 1, n // 2 + 2)
            for j in range(i + 1, n // 2 + 3)
        }
        assert set(gens.monomials) == expected
        for mono in gens.monomials:
            assert is_standard(mono, support)


def test_widest_toric_window_is_projective_plane():
    # At k = n/2 - 1 the window has three generators whose powers are all
    # standard, so the quotient is a projective plane.
    for n in (6, 8, 10):
        k = n // 2 - 1
        support = SupportRange(n, (1, k + 1), (n // 2 + 2, n))
        gens = invariant_basis(support, 1)
        assert len(gens) == 3
        for d in (2, 3):
            products = set()
            for combo in combinations_with_replacement(gens.monomials, d):
                product = tuple(sorted(sum(combo, ())))
                assert is_standard(product, support)
                products.add(product)
            assert len(products) == comb(d + 2, 2)
            assert hilbert_count(support, d) == comb(d + 2, 2)


def test_invariant_basis_parameter_errors(g26_support):
    with pytest.raises(ValueError):
        invariant_basis(SupportRange.full(5), 1)
    with pytest.raises(ValueError):
        invariant_basis(g26_support, 0)
    with pytest.raises(ValueError):
        multiplication_kernel(g26_support, 4)
    with pytest.raises(ValueError):
        degree_one_generation_check(g26_support, 1)


def test_g26_kernel_degree_two_empty(g26_support):
    assert multiplication_kernel(g26_support, 2) == []


def test_g26_kernel_degree_three_is_hypersurface(g26_support):
    kernel = multiplication_kernel(g26_support, 3)
    assert len(kernel) == 1
    (rel,) = kernel
    (cubic,) = case_studies.G26.presentation
    lead = rel.terms[min(rel.terms)]
    target = cubic.terms[min(cubic.terms)]
    assert rel * target == cubic * lead  # equal up to scalar


def _relation_vector(rel, combos):
    index = {c: i for i, c in enumerate(combos)}
    vec = [Fraction(0)] * len(combos)
    for mono, coeff in rel.terms.items():
        key = tuple(sorted(t[1] - 1 for t in mono))
        vec[index[key]] = coeff
    return vec


@pytest.mark.parametrize("name,num_gens,expected_dim", [("x68", 9, 5), ("x710", 14, 21)])
def test_kernels_contain_recorded_relations(name, num_gens, expected_dim):
    case = case_studies.CASES[name]
    support = SupportRange(case.n, case.v, case.w)
    kernel = multiplication_kernel(support, 2)
    assert len(kernel) == expected_dim
    combos = list(combinations_with_replacement(range(num_gens), 2))
    kernel_vectors = [_relation_vector(p, combos) for p in kernel]
    base_rank = linalg.rank(kernel_vectors)
    assert base_rank == expected_dim
    for rel in case.presentation:
        vec = _relation_vector(rel, combos)
        assert linalg.rank(kernel_vectors + [vec]) == base_rank


@pytest.mark.parametrize("name", ["g26", "x68", "x710"])
def test_kernel_soundness_and_completeness(name):
    case = case_studies.CASES[name]
    support = SupportRange(case.n, case.v, case.w)
    d = case.presentation_degree
    kernel = multiplication_kernel(support, d)
    values = case.generator_values()
    table = {("x", k): values[k - 1] for k in range(1, len(values) + 1)}
    matrices = [random_schubert_point(support, seed) for seed in range(20)]
    for rel in kernel:
        substituted = substitute(rel, table)
        assert straighten(substituted, support).is_zero
        for A in matrices:
            assert evaluate(substituted, A) == 0
    # Rank-nullity at desk scale.
    gens, nfs = product_normal_forms(support, d)
    combos = sorted(nfs)
    basis = invariant_basis(support, d)
    index = {m: i for i, m in enumerate(basis.monomials)}
    rows = []
    for combo in combos:
        vec = [Fraction(0)] * len(basis)
        for mono, coeff in nfs[combo].items():
            vec[index[mono]] = coeff
        rows.append(vec)
    assert linalg.rank(rows) + len(kernel) == len(combos)


def test_degree_one_generation(g26_support, x68_support, x710_support):
    for support in (g26_support, x68_support, x710_support):
        assert degree_one_generation_check(support, 2)
        assert degree_one_generation_check(support, 3)


def test_degree_one_generation_richardson_windows():
    windows = [
        SupportRange(6, (1, 3), (5, 6)),
        SupportRange(6, (1, 4), (4, 6)),
        SupportRange(8, (1, 3), (6, 8)),
        SupportRange(8, (1, 4), (6, 8)),
        SupportRange(10, (1, 3), (7, 10)),
    ]
    for support in windows:
        assert degree_one_generation_check(support, 2)
        assert degree_one_generation_check(support, 3)


def test_kernel_output_format(g26_support):
    kernel = multiplication_kernel(g26_support, 3)
    assert format_formal(kernel[0]) == (
        "x_1*x_2*x_5 - x_1*x_3*x_4 + x_2*x_3*x_4 - x_2*x_3*x_5 - x_3*x_4^2 "
        "+ x_3*x_4*x_5"
    )


def test_invariant_basis_elements_are_invariant_and_standard(x710_support):
    for d in (1, 2):
        gens = invariant_basis(x710_support, d)
        for mono in gens.monomials:
            assert content(mono, 10) == (d,) * 10
            assert is_standard(mono, x710_support)


_PRIME = 2**31 - 1


def _evaluation_rank(monomials, matrices) -> int:
    """Rank (mod a large prime) of the matrix of monomial values at the
    given points; a lower bound for the rank of the monomials in R_d."""
    minors_per_matrix = [A.minors() for A in matrices]
    rows = []
    for mono in monomials:
        row = []
        for minors in minors_per_matrix:
            value = Fraction(1)
            for pair in mono:
                value *= minors[pair]
            row.append(
                value.numerator % _PRIME * pow(value.denominator, _PRIME - 2, _PRIME)
                % _PRIME
            )
        rows.append(row)
    return linalg.rank_mod(rows, _PRIME)


@pytest.mark.parametrize("name,d", [("g26", 2), ("g26", 3), ("x68", 2), ("x710", 2)])
def test_basis_independence_certified_by_evaluation(name, d):
    # Evaluation at random points gives a straightening-free certificate
    # that the enumerated invariant monomials are linearly independent.
    case = case_studies.CASES[name]
    support = SupportRange(case.n, case.v, case.w)
    basis = invariant_basis(support, d).monomials
    matrices = [
        random_schubert_point(support, seed) for seed in range(len(basis) + 20)
    ]
    assert _evaluation_rank(basis, matrices) == len(basis)


@pytest.mark.parametrize("name,expected_kernel", [("g26", 1), ("x68", 5), ("x710", 21)])
def test_kernel_dimension_cross_validated_by_evaluation(name, expected_kernel):
    # Dual route: the evaluation rank of the generator products bounds the
    # relation space from above without using straightening at all, and the
    # straightening route must land on the same dimension.
    case = case_studies.CASES[name]
    support = SupportRange(case.n, case.v, case.w)
    d = case.presentation_degree
    gens = invariant_basis(support, 1).monomials
    combos = list(combinations_with_replacement(range(len(gens)), d))
    products = [
        tuple(sorted(sum((gens[i] for i in combo), ()))) for combo in combos
    ]
    matrices = [
        random_schubert_point(support, seed) for seed in range(len(combos) + 20)
    ]
    evaluation_rank = _evaluation_rank(products, matrices)
    assert len(combos) - evaluation_rank == expected_kernel
    assert len(multiplication_kernel(support, d)) == expected_kernel
