"""Torus-invariant sections on a window: content vectors, invariant
standard-monomial bases, Hilbert counts, relation kernels of the
multiplication maps, and the degree-one generation test.

A monomial of Pluecker degree ``d*n/2`` is torus invariant for the degree
``d`` polarization exactly when every row index ``1..n`` occurs ``d``
times among its factors, i.e. its content vector is ``(d, ..., d)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from . import case_studies, linalg
from .formal import x_monomial
from .poly import Monomial, Poly
from .straightening import SupportRange, _monomial_normal_form
from .weyl import check_pair


def content(factors: Monomial, n: int) -> tuple[int, ...]:
    """Occurrence counts of each row index 1..n among the factors.

    >>> content(((1, 4), (2, 5), (3, 6)), 6)
    (1, 1, 1, 1, 1, 1)
    """
    counts = [0] * n
    for pair in factors:
        check_pair(pair, n)
        counts[pair[0] - 1] += 1
        counts[pair[1] - 1] += 1
    return tuple(counts)


@dataclass(frozen=True)
class GeneratorSet:
    """Labeled invariant standard monomials of one degree on a window."""

    support: SupportRange
    degree: int
    labels: tuple[str, ...]
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def values(self) -> list[Poly]:
        from .plucker import pmono

        return [pmono(m) for m in self.monomials]


def _enumerate_invariant_chains(support: SupportRange, d: int) -> list[Monomial]:
    """Depth-first chain extension with content pruning.

    Each new factor must start at the first row index whose count is still
    below ``d``: later factors are componentwise larger, so a skipped index
    could never be completed.
    """
    n, v, w = support.n, support.v, support.w
    length = d * n // 2
    counts = [0] * (n + 1)
    out: list[Monomial] = []
    chain: list[tuple[int, int]] = []

    def first_incomplete() -> int:
        for i in range(1, n + 1):
            if counts[i] < d:
                return i
        return n + 1

    def extend(remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(chain))
            return
        a = first_incomplete()
        prev = chain[-1] if chain else v
        # The next factor (a, b) must dominate prev componentwise, so the
        # forced first entry rules the branch out when it lags behind.
        if a < prev[0] or a > w[0]:
            return
        for b in range(max(a + 1, prev[1]), min(n, w[1]) + 1):
            if counts[b] >= d:
                continue
            counts[a] += 1
            counts[b] += 1
            chain.append((a, b))
            extend(remaining - 1)
            chain.pop()
            counts[a] -= 1
            counts[b] -= 1

    extend(length)
    return out


def invariant_basis(support: SupportRange, d: int) -> GeneratorSet:
    """All invariant standard monomials of polarization degree ``d``.

    For the windows with a pinned label table (the explicit case studies
    and the projective-space and toric families) the elements are ordered
    and named by that table; otherwise labels are ``m_1, m_2, ...`` in
    enumeration order.
    """
    if support.n % 2:
        raise ValueError(f"invariants need even n, got n={support.n}")
    if d < 1:
        raise ValueError(f"polarization degree must be >= 1, got {d}")
    found = _enumerate_invariant_chains(support, d)
    table = case_studies.generator_labels(support.n, support.v, support.w) if d == 1 else None
    if table is not None:
        expected = {mono: label for label, mono in table}
        if set(found) != set(expected):
            raise RuntimeError(
                f"enumerated degree-1 invariants disagree with the pinned "
                f"label table for window {support}: "
                f"enumerated {len(found)}, pinned {len(expected)}"
            )
        ordered = tuple(mono for _, mono in table)
        labels = tuple(label for label, _ in table)
        return GeneratorSet(support, d, labels, ordered)
    labels = tuple(f"m_{k}" for k in range(1, len(found) + 1))
    return GeneratorSet(support, d, labels, tuple(found))


def hilbert_count(support: SupportRange, d: int) -> int:
    """Dimension of the degree-d invariant section space of the window."""
    return len(invariant_basis(support, d))


def _nf_times_monomial(
    nf: dict[Monomial, Fraction], factor: Monomial, support: SupportRange
) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in nf.items():
        product = tuple(sorted(mono + factor))
        for nf_mono, nf_coeff in _monomial_normal_form(product, support).items():
            out[nf_mono] = out.get(nf_mono, Fraction(0)) + coeff * nf_coeff
    return {m: c for m, c in out.items() if c}


def product_normal_forms(
    support: SupportRange, d: int
) -> tuple[GeneratorSet, dict[tuple[int, ...], dict[Monomial, Fraction]]]:
    """Straightened d-fold products of the degree-one generators.

    Returns the generator set and a map from index combinations (0-based,
    nondecreasing, lexicographic) to normal-form expansions.  Products are
    built one factor at a time so partial products are shared.
    """
    gens = invariant_basis(support, 1)
    level: dict[tuple[int, ...], dict[Monomial, Fraction]] = {
        (): {(): Fraction(1)}
    }
    for _ in range(d):
        nxt: dict[tuple[int, ...], dict[Monomial, Fraction]] = {}
        for combo, nf in level.items():
            start = combo[-1] if combo else 0
            for idx in range(start, len(gens)):
                key = combo + (idx,)
                if key in nxt:
                    continue
                nxt[key] = _nf_times_monomial(nf, gens.monomials[idx], support)
        level = nxt
    return gens, level


def _product_matrix(
    support: SupportRange, d: int
) -> tuple[GeneratorSet, list[tuple[int, ...]], list[list[Fraction]], list[Monomial]]:
    gens, nfs = product_normal_forms(support, d)
    basis = invariant_basis(support, d).monomials
    index = {mono: k for k, mono in enumerate(basis)}
    combos = sorted(nfs)
    rows = []
    for combo in combos:
        vec = [Fraction(0)] * len(basis)
        for mono, coeff in nfs[combo].items():
            vec[index[mono]] = coeff
        rows.append(vec)
    return gens, combos, rows, list(basis)


def multiplication_kernel(support: SupportRange, d_target: int) -> list[Poly]:
    """Kernel of the multiplication map from degree-``d_target`` monomials
    in the degree-one generators onto the invariant sections.

    Returns a reduced-row-echelon basis of the relations, as formal
    polynomials in ``x_k`` (``x_k`` standing for the k-th generator),
    with monomial columns in lexicographic order.
    """
    if d_target not in (2, 3):
        raise ValueError(f"relation degree must be 2 or 3, got {d_target}")
    _, combos, rows, _ = _product_matrix(support, d_target)
    kernel = linalg.left_nullspace(rows)
    out = []
    for vec in kernel:
        poly = Poly.zero()
        for combo, coeff in zip(combos, vec):
            if coeff:
                poly = poly + x_monomial(tuple(i + 1 for i in combo), coeff)
        out.append(poly)
    return out


def degree_one_generation_check(support: SupportRange, d: int) -> bool:
    """True iff d-fold products of degree-one invariants span the whole
    degree-d invariant space (exact rank comparison).

    A modular rank is computed first: since the product span always sits
    inside the degree-d space, full modular rank already certifies full
    rational rank.  Only a modular shortfall falls back to exact
    elimination.
    """
    if d < 2:
        raise ValueError(f"generation degree must be >= 2, got {d}")
    _, _, rows, basis = _product_matrix(support, d)
    target = len(basis)
    if not rows:
        return target == 0
    if all(x.denominator == 1 for row in rows for x in row):
        int_rows = [[x.numerator for x in row] for row in rows]
        if linalg.rank_mod(int_rows) == target:
            return True
    return linalg.rank(rows) == target


def projective_window_products_standard(n: int, k: int, d: int = 2) -> bool:
    """Polynomiality witness for the projective-space windows: all d-fold
    products of the X_t generators are already standard and distinct."""
    from .straightening import is_standard

    support = SupportRange(n, (1, k + 1), (n // 2 + 1, n))
    gens = invariant_basis(support, 1)
    seen: set[Monomial] = set()
    for combo in combinations_with_replacement(range(len(gens)), d):
        product: tuple = ()
        for idx in combo:
            product = tuple(sorted(product + gens.monomials[idx]))
        if not is_standard(product, support) or product in seen:
            return False
        seen.add(product)
    return True
