"""Commutative monomial rewriting and exhaustive confluence checking.

A reduction system is a finite list of rules (monomial -> polynomial).
A rule applies to a term whose monomial is divisible by the rule's left
side; one step replaces that term accordingly.  The confluence check
explores every reduction sequence breadth-first and reports the set of
normal forms per probe: the system is confluent on the probes iff each
set is a singleton.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .formal import format_formal, ytoken
from .poly import Monomial, Poly


class RewriteGraphLimit(RuntimeError):
    """Raised when the explored rewrite graph exceeds the state cap."""


@dataclass(frozen=True)
class ReductionSystem:
    rules: tuple[tuple[Monomial, Poly], ...]

    def __post_init__(self) -> None:
        for lhs, rhs in self.rules:
            if not lhs:
                raise ValueError("rule left sides must be nonconstant monomials")
            for mono in rhs.terms:
                if _divide(mono, lhs) is not None:
                    raise ValueError(
                        f"rule {lhs} -> {format_formal(rhs)} reproduces its "
                        "own left side; trivial loop"
                    )


def _divide(mono: Monomial, divisor: Monomial) -> Monomial | None:
    """Multiset quotient mono / divisor, or None when not divisible."""
    remaining = list(mono)
    for token in divisor:
        try:
            remaining.remove(token)
        except ValueError:
            return None
    return tuple(remaining)


def reduce_steps(system: ReductionSystem, state: Poly) -> list[Poly]:
    """All polynomials reachable from ``state`` in one reduction step."""
    out: dict[tuple, Poly] = {}
    for mono, coeff in state.terms.items():
        for lhs, rhs in system.rules:
            quotient = _divide(mono, lhs)
            if quotient is None:
                continue
            replaced = state - Poly({mono: coeff}) + (rhs * coeff) * Poly(
                {quotient: Fraction(1)}
            )
            out[replaced.key()] = replaced
    return list(out.values())


@dataclass(frozen=True)
class ProbeResult:
    probe: Monomial
    normal_forms: tuple[str, ...]
    states_explored: int

    @property
    def confluent(self) -> bool:
        return len(self.normal_forms) == 1


@dataclass(frozen=True)
class ConfluenceReport:
    results: tuple[ProbeResult, ...]

    @property
    def confluent(self) -> bool:
        return all(r.confluent for r in self.results)


def confluence_check(
    system: ReductionSystem,
    probes: list[Monomial],
    state_cap: int = 10_000,
) -> ConfluenceReport:
    """Explore all reduction sequences from each probe monomial.

    The search is a cycle-safe breadth-first walk over the rewrite graph;
    rule order cannot affect the result because every applicable step is
    taken.  Raises :class:`RewriteGraphLimit` past ``state_cap`` states.
    """
    results = []
    for probe in probes:
        start = Poly({tuple(sorted(probe)): Fraction(1)})
        seen: dict[tuple, Poly] = {start.key(): start}
        frontier = [start]
        normal: dict[tuple, Poly] = {}
        while frontier:
            nxt: list[Poly] = []
            for state in frontier:
                successors = reduce_steps(system, state)
                if not successors:
                    normal[state.key()] = state
                    continue
                for succ in successors:
                    key = succ.key()
                    if key not in seen:
                        if len(seen) >= state_cap:
                            raise RewriteGraphLimit(
                                f"more than {state_cap} states from probe {probe}"
                            )
                        seen[key] = succ
                        nxt.append(succ)
            frontier = nxt
        forms = tuple(sorted(format_formal(p) for p in normal.values()))
        results.append(ProbeResult(tuple(sorted(probe)), forms, len(seen)))
    return ConfluenceReport(tuple(results))


def nesting_reduction_system(symbols: int) -> ReductionSystem:
    """The pair-rewriting system of the toric windows on a symbol range.

    For every i < j < m < s the side-by-side product y[i,j]y[m,s] rewrites
    to the crossing product y[i,m]y[j,s], and the crossing product to the
    nested product y[i,s]y[j,m].  Nested pairs are irreducible.
    """
    if symbols < 4:
        raise ValueError(f"need at least 4 symbols, got {symbols}")
    rules: list[tuple[Monomial, Poly]] = []
    for i, j, m, s in combinations(range(1, symbols + 1), 4):
        rules.append(
            (
                tuple(sorted((ytoken(i, j), ytoken(m, s)))),
                Poly.from_monomial([ytoken(i, m), ytoken(j, s)]),
            )
        )
        rules.append(
            (
                tuple(sorted((ytoken(i, m), ytoken(j, s)))),
                Poly.from_monomial([ytoken(i, s), ytoken(j, m)]),
            )
        )
    return ReductionSystem(tuple(rules))


def matching_probes(symbols: int) -> list[Monomial]:
    """All degree-(symbols/2) products of disjoint pair variables: the
    perfect matchings of the symbol range."""
    if symbols % 2:
        raise ValueError(f"need an even symbol count, got {symbols}")

    def matchings(values: tuple[int, ...]) -> list[list[tuple[int, int]]]:
        if not values:
            return [[]]
        first, rest = values[0], values[1:]
        out = []
        for idx, second in enumerate(rest):
            left = rest[:idx] + rest[idx + 1 :]
            for tail in matchings(left):
                out.append([(first, second)] + tail)
        return out

    return [
        tuple(sorted(ytoken(i, j) for i, j in match))
        for match in matchings(tuple(range(1, symbols + 1)))
    ]


def nested_normal_form(symbols: int) -> Monomial:
    """The fully nested perfect matching: (1,n)(2,n-1)...(n/2, n/2+1)."""
    if symbols % 2:
        raise ValueError(f"need an even symbol count, got {symbols}")
    half = symbols // 2
    return tuple(sorted(ytoken(k, symbols + 1 - k) for k in range(1, half + 1)))


def is_binomial_presentation(relations: list[Poly]) -> bool:
    """True iff every relation is a difference of two monomials with unit
    coefficients (the shape that certifies a toric quotient).

    >>> from .formal import yvar
    >>> is_binomial_presentation([yvar(1, 2) * yvar(3, 4) - yvar(1, 3) * yvar(2, 4)])
    True
    """
    for rel in relations:
        if len(rel.terms) != 2:
            return False
        if sorted(rel.terms.values()) != [Fraction(-1), Fraction(1)]:
            return False
    return True
