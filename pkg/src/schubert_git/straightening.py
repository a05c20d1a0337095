"""Standard monomials and the straightening normal form.

A monomial in Pluecker variables is standard for a window ``(n, v, w)``
when its factors can be sorted into a weakly increasing chain
``t_1 <= t_2 <= ... <= t_m`` (componentwise) with ``v <= t_1`` and
``t_m <= w``.  Standard monomials form a basis of the section spaces of
the corresponding Schubert or Richardson variety, and every Pluecker
polynomial has a unique expansion in that basis, computed here by
rewriting with the quadratic relations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal

from .poly import Monomial, Poly
from .weyl import Pair, bruhat_leq, check_pair, coset_reps

MAX_REWRITE_STEPS = 10**6


class StraighteningLimit(RuntimeError):
    """Raised if the rewrite step ceiling is exceeded (bug guard)."""


@dataclass(frozen=True)
class SupportRange:
    """A window ``(n, v, w)`` with ``v <= w``: the pairs surviving
    restriction are exactly those between ``v`` and ``w``."""

    n: int
    v: Pair
    w: Pair

    def __post_init__(self) -> None:
        check_pair(self.v, self.n)
        check_pair(self.w, self.n)
        if not bruhat_leq(self.v, self.w):
            raise ValueError(f"empty window: {self.v} is not below {self.w}")

    @classmethod
    def full(cls, n: int) -> "SupportRange":
        """The whole Grassmannian of 2-planes in C^n."""
        return cls(n, (1, 2), (n - 1, n))

    @classmethod
    def schubert(cls, n: int, w: Pair) -> "SupportRange":
        return cls(n, (1, 2), w)

    @property
    def is_schubert(self) -> bool:
        return self.v == (1, 2)

    def variables(self) -> list[Pair]:
        """Pairs in the window, in lexicographic order."""
        return [
            t
            for t in coset_reps(self.n, 2)
            if bruhat_leq(self.v, t) and bruhat_leq(t, self.w)
        ]


def sort_factors(factors: Iterable[Pair]) -> Monomial:
    return tuple(sorted(factors))


def _is_chain(sorted_factors: Monomial) -> bool:
    # Lexicographically sorted factors form a chain iff consecutive ones
    # are componentwise comparable.
    for a, b in zip(sorted_factors, sorted_factors[1:]):
        if not (a[0] <= b[0] and a[1] <= b[1]):
            return False
    return True


def is_standard(factors: Iterable[Pair], support: SupportRange) -> bool:
    """True iff the factors sort into a chain bounded by the window.

    >>> is_standard([(1, 4), (2, 5), (3, 6)], SupportRange.full(6))
    True
    >>> is_standard([(1, 4), (2, 3)], SupportRange.full(4))
    False
    """
    fs = sort_factors(check_pair(f, support.n) for f in factors)
    if not _is_chain(fs):
        return False
    if not fs:
        return True
    return bruhat_leq(support.v, fs[0]) and bruhat_leq(fs[-1], support.w)


Strategy = Literal["leftmost", "random"]

# Normal forms of single monomials, keyed by (n, v, w, factors).  Only the
# deterministic leftmost strategy populates it.
_NF_CACHE: dict[tuple, dict[Monomial, Fraction]] = {}


def clear_cache() -> None:
    _NF_CACHE.clear()


def _find_bad_pair(
    factors: Monomial, strategy: Strategy, rng: random.Random | None
) -> tuple[int, int] | None:
    if strategy == "leftmost":
        for k in range(len(factors) - 1):
            a, b = factors[k], factors[k + 1]
            if not (a[0] <= b[0] and a[1] <= b[1]):
                return (k, k + 1)
        return None
    bad = [
        (k, l)
        for k in range(len(factors))
        for l in range(k + 1, len(factors))
        if not (
            (factors[k][0] <= factors[l][0] and factors[k][1] <= factors[l][1])
            or (factors[l][0] <= factors[k][0] and factors[l][1] <= factors[k][1])
        )
    ]
    if not bad:
        return None
    return bad[rng.randrange(len(bad))] if rng else bad[0]


def _monomial_normal_form(
    factors: Monomial,
    support: SupportRange,
    strategy: Strategy = "leftmost",
    rng: random.Random | None = None,
) -> dict[Monomial, Fraction]:
    """Expansion of a single monomial in the standard basis of the window.

    Rewrites an incomparable factor pair ``(a,b), (c,d)`` (normalized so
    ``a < c < d < b``) into ``(a,d)(c,b) - (a,c)(d,b)``; each step strictly
    decreases the integer ``sum (j - i)^2`` over the factors, so the loop
    terminates.  Factors not below ``w`` kill a monomial eagerly; the lower
    bound ``v`` is enforced on the fully sorted output chains only.
    """
    cacheable = strategy == "leftmost"
    key = (support.n, support.v, support.w, factors)
    if cacheable:
        hit = _NF_CACHE.get(key)
        if hit is not None:
            return hit

    w, v = support.w, support.v
    done: dict[Monomial, Fraction] = {}
    pending: dict[Monomial, Fraction] = {}
    if all(bruhat_leq(f, w) for f in factors):
        pending[sort_factors(factors)] = Fraction(1)
    steps = 0
    while pending:
        nxt: dict[Monomial, Fraction] = {}
        for mono, coeff in pending.items():
            pos = _find_bad_pair(mono, strategy, rng)
            if pos is None:
                if not mono or bruhat_leq(v, mono[0]):
                    done[mono] = done.get(mono, Fraction(0)) + coeff
                continue
            steps += 1
            if steps > MAX_REWRITE_STEPS:
                raise StraighteningLimit(
                    f"exceeded {MAX_REWRITE_STEPS} rewrite steps on {factors}"
                )
            k, l = pos
            (a, b), (c, d) = mono[k], mono[l]
            rest = mono[:k] + mono[k + 1 : l] + mono[l + 1 :]
            for new_pair, sign in ((((a, d), (c, b)), 1), (((a, c), (d, b)), -1)):
                if bruhat_leq(new_pair[0], w) and bruhat_leq(new_pair[1], w):
                    nm = tuple(sorted(rest + new_pair))
                    nxt[nm] = nxt.get(nm, Fraction(0)) + sign * coeff
        pending = {m: c for m, c in nxt.items() if c}
    result = {m: c for m, c in done.items() if c}
    if cacheable:
        _NF_CACHE[key] = result
    return result


def straighten(
    p: Poly,
    support: SupportRange,
    strategy: Strategy = "leftmost",
    seed: int | None = None,
) -> Poly:
    """Unique expansion of ``p`` in the standard-monomial basis of the
    window; the identity modulo the defining ideal of the restriction.

    ``strategy="random"`` picks the rewritten factor pair at random (from
    ``seed``) instead of leftmost; the normal form is the same either way.

    >>> from .plucker import pmono, format_plucker
    >>> nf = straighten(pmono([(2, 5), (3, 4)]), SupportRange.full(6))
    >>> format_plucker(nf)
    '-p[2,3]*p[4,5] + p[2,4]*p[3,5]'
    """
    rng = random.Random(seed) if strategy == "random" else None
    out: dict[Monomial, Fraction] = {}
    for mono, coeff in p.terms.items():
        for t in mono:
            check_pair(t, support.n)
        for nf_mono, nf_coeff in _monomial_normal_form(
            mono, support, strategy, rng
        ).items():
            out[nf_mono] = out.get(nf_mono, Fraction(0)) + coeff * nf_coeff
    return Poly(out)


def standard_basis(support: SupportRange, degree: int) -> list[Monomial]:
    """All standard monomials of the given degree for the window, as
    chains enumerated in lexicographic order.

    >>> len(standard_basis(SupportRange.full(4), 2))
    20
    """
    if degree < 0:
        raise ValueError(f"degree must be nonnegative, got {degree}")
    variables = support.variables()
    out: list[Monomial] = []

    def extend(chain: list[Pair], start: int, remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(chain))
            return
        for idx in range(start, len(variables)):
            t = variables[idx]
            if chain and not bruhat_leq(chain[-1], t):
                continue
            chain.append(t)
            extend(chain, idx, remaining - 1)
            chain.pop()

    extend([], 0, degree)
    return out
