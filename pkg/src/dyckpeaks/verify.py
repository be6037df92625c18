"""Bulk self-verification sweeps behind the CLI's verify commands.

``verify_identity`` checks, over a parameter rectangle, that the refined
and original forms of the identity hold and that the original form at
``r`` equals the refined closed form at ``r + 1``.  ``verify_bijection``
checks, path by path up to a semilength bound, that peak deletion and
insertion invert each other, that plateau counts transport to base peak
counts, that the fibers over all bases partition each fixed-peak-count
stratum with the predicted binomial sizes, and that the exhaustive joint
tally matches the per-stratum formula.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from . import counting
from .bijection import expand, fiber, plan_of
from .paths import (
    DEFAULT_ENUMERATION_CAP,
    DyckPath,
    _check_enumeration_args,
    _iter_texts,
    _peak_positions,
    _plateau_spans,
)


@dataclass(frozen=True)
class Failure:
    """One failed check: what was being checked, and both values."""

    parameters: dict[str, Any]
    expected: str
    actual: str


@dataclass
class VerificationSummary:
    checked_cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def _mismatch(
    summary: VerificationSummary,
    expected: object,
    actual: object,
    **parameters: Any,
) -> None:
    summary.checked_cases += 1
    if expected != actual:
        summary.failures.append(
            Failure(parameters=parameters, expected=str(expected), actual=str(actual))
        )


def identity_report_payload(report: counting.IdentityReport) -> dict[str, Any]:
    """JSON-ready form of an :class:`~dyckpeaks.counting.IdentityReport`.

    Counts are decimal strings; they outgrow 64-bit integers long before
    the n = 200 sweep ends.
    """
    return {
        "n": report.n,
        "r": report.r,
        "lhs": str(report.lhs),
        "rhs": str(report.rhs),
        "terms": [{"s": s, "count": str(count)} for s, count in report.terms],
        "equal": report.equal,
    }


def verify_identity(n_max: int, r_max: int) -> VerificationSummary:
    """Check both identity forms and the shift relation over
    ``1 <= n <= n_max`` with ``r`` up to ``r_max`` (from 0 for the original
    form, from 1 for the refined form)."""
    if n_max < 1 or r_max < 1:
        raise ValueError("n_max and r_max must be positive")
    summary = VerificationSummary()
    start = time.perf_counter()
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            report = counting.refined_rhs(n, r)
            summary.checked_cases += 1
            if not report.equal:
                # failure rows carry the per-stratum terms for diagnosis
                summary.failures.append(
                    Failure(
                        parameters={
                            "check": "refined",
                            "n": n,
                            "r": r,
                            "report": identity_report_payload(report),
                        },
                        expected=str(report.lhs),
                        actual=str(report.rhs),
                    )
                )
        for r in range(r_max + 1):
            lhs = counting.kreweras_lhs(n, r)
            _mismatch(
                summary, lhs, counting.kreweras_rhs(n, r), check="original", n=n, r=r
            )
            _mismatch(
                summary,
                lhs,
                counting.refined_lhs(n, r + 1),
                check="shift",
                n=n,
                r=r,
            )
    summary.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return summary


def verify_bijection(
    semilength_max: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> VerificationSummary:
    """Exhaustively check the bijection for every semilength up to
    ``semilength_max``."""
    if semilength_max < 0:
        raise ValueError("semilength_max must be nonnegative")
    _check_enumeration_args(semilength_max, cap)
    summary = VerificationSummary()
    start = time.perf_counter()
    for m in range(semilength_max + 1):
        _verify_one_semilength(summary, m, cap)
    summary.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return summary


def _verify_one_semilength(summary: VerificationSummary, m: int, cap: int) -> None:
    joint: dict[tuple[int, int], int] = {}
    by_peaks: dict[int, set[str]] = {}
    for text in _iter_texts(m):
        r = text.count("UD")
        s = len(_plateau_spans(text))
        joint[r, s] = joint.get((r, s), 0) + 1
        by_peaks.setdefault(r, set()).add(text)
        path = DyckPath(text)
        plan = plan_of(path)
        _mismatch(
            summary, text, expand(plan).text, check="round_trip", m=m, path=text
        )
        _mismatch(
            summary,
            s,
            len(_peak_positions(plan.base.text)),
            check="statistic_transport",
            m=m,
            path=text,
        )

    for r in range(1, m):
        n = m - r
        stratum = by_peaks.get(r, set())
        seen: set[str] = set()
        for base_text in _iter_texts(n):
            base = DyckPath(base_text)
            s = len(_peak_positions(base_text))
            if s > r:
                continue
            expected_size = counting.binomial(2 * n + r - s, r - s)
            size = 0
            for path in fiber(base, r):
                size += 1
                if path.text in seen:
                    summary.checked_cases += 1
                    summary.failures.append(
                        Failure(
                            parameters={
                                "check": "fiber_disjoint",
                                "m": m,
                                "r": r,
                                "base": base_text,
                                "path": path.text,
                            },
                            expected="unique preimage",
                            actual="duplicate",
                        )
                    )
                else:
                    seen.add(path.text)
                _mismatch(
                    summary,
                    s,
                    len(_plateau_spans(path.text)),
                    check="stratum_purity",
                    m=m,
                    r=r,
                    base=base_text,
                    path=path.text,
                )
            _mismatch(
                summary,
                expected_size,
                size,
                check="fiber_size",
                m=m,
                r=r,
                base=base_text,
            )
        missing = stratum - seen
        extra = seen - stratum
        _mismatch(
            summary,
            "",
            next(iter(sorted(missing | extra)), ""),
            check="fiber_union",
            m=m,
            r=r,
        )
        for s in range(1, r + 1):
            _mismatch(
                summary,
                counting.refined_count(n, r, s),
                joint.get((r, s), 0),
                check="joint_vs_formula",
                m=m,
                r=r,
                s=s,
            )
