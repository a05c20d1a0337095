"""Verification of recorded identities and Jacobian singularity tests.

Identity verification is ground truth: when a recorded equality fails to
straighten to zero, the report carries both recomputed normal forms side
by side; nothing is silently patched.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import case_studies, linalg
from .case_studies import Identity
from .formal import partial_derivative
from .plucker import format_plucker
from .poly import Poly
from .straightening import SupportRange, straighten


def verify_identity(lhs: Poly, rhs: Poly, support: SupportRange) -> bool:
    """True iff lhs and rhs agree on the window, i.e. their difference
    straightens to zero."""
    return straighten(lhs - rhs, support).is_zero


@dataclass(frozen=True)
class IdentityRecord:
    case: str
    relation_label: str
    status: str  # "pass" or "fail"
    lhs_normal_form: str
    rhs_normal_form: str

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class SuiteReport:
    case: str
    records: tuple[IdentityRecord, ...]

    @property
    def all_ok(self) -> bool:
        return all(r.ok for r in self.records)

    def failures(self) -> list[IdentityRecord]:
        return [r for r in self.records if not r.ok]


def _check_one(case_name: str, identity: Identity, support: SupportRange) -> IdentityRecord:
    lhs_nf = straighten(identity.lhs, support)
    rhs_nf = straighten(identity.rhs, support)
    status = "pass" if lhs_nf == rhs_nf else "fail"
    return IdentityRecord(
        case=case_name,
        relation_label=identity.label,
        status=status,
        lhs_normal_form=format_plucker(lhs_nf),
        rhs_normal_form=format_plucker(rhs_nf),
    )


def _run_checks(
    case_name: str,
    identities: Iterable[Identity],
    support: SupportRange,
    threads: int = 1,
) -> SuiteReport:
    items = list(identities)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(
                pool.map(lambda ident: _check_one(case_name, ident, support), items)
            )
    else:
        records = [_check_one(case_name, ident, support) for ident in items]
    return SuiteReport(case_name, tuple(records))


def case_suite(name: str, threads: int = 1) -> SuiteReport:
    """Verify every recorded identity of one explicit case study,
    including its presentation relations."""
    case = case_studies.CASES.get(name)
    if case is None:
        raise ValueError(
            f"unknown case {name!r}; expected one of {sorted(case_studies.CASES)}"
        )
    support = SupportRange(case.n, case.v, case.w)
    identities = list(case.identities) + case_studies.case_kernel_identities(case)
    return _run_checks(case.name, identities, support, threads)


def toric_suite(n: int, k: int, threads: int = 1) -> SuiteReport:
    """Verify both identity families of the toric window v=(1,k+1),
    w=(n/2+2,n)."""
    support = SupportRange(n, (1, k + 1), (n // 2 + 2, n))
    identities = case_studies.toric_identities(n, k)
    return _run_checks(f"richardson-n{n}-k{k}", identities, support, threads)


@dataclass(frozen=True)
class JacobianReport:
    matrix: tuple[tuple[Fraction, ...], ...]
    rank: int
    codim_target: int

    @property
    def singular(self) -> bool:
        return self.rank < self.codim_target


def jacobian(
    relations: Sequence[Poly],
    point: Sequence[Fraction | int],
    codim_target: int,
) -> JacobianReport:
    """Exact Jacobian matrix of formal relations at a point, its rank, and
    the singularity verdict rank < codim_target.

    ``point[k-1]`` is the value of ``x_k``; every variable occurring in
    the relations must be covered.
    """
    values = [Fraction(x) for x in point]
    assignment = {("x", k): values[k - 1] for k in range(1, len(values) + 1)}
    for rel in relations:
        for mono in rel.terms:
            for token in mono:
                if token not in assignment:
                    raise ValueError(
                        f"point of length {len(values)} does not cover {token}"
                    )
    rows = []
    for rel in relations:
        rows.append(
            tuple(
                partial_derivative(rel, ("x", k)).evaluate(assignment)
                for k in range(1, len(values) + 1)
            )
        )
    rank = linalg.rank([list(r) for r in rows]) if rows else 0
    return JacobianReport(tuple(rows), rank, codim_target)


def case_jacobian(name: str, point: Sequence[Fraction | int]) -> JacobianReport:
    """Jacobian of a case study's presentation at a point, with the
    codimension target #generators - dim(quotient) built in."""
    case = case_studies.CASES.get(name)
    if case is None:
        raise ValueError(
            f"unknown case {name!r}; expected one of {sorted(case_studies.CASES)}"
        )
    if len(point) != len(case.generators):
        raise ValueError(
            f"case {name} has {len(case.generators)} generators, "
            f"got a point of length {len(point)}"
        )
    return jacobian(case.presentation, point, case.codim_target)
