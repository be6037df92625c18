"""Exact integer counting: binomials, Narayana and Catalan numbers, and the
Kreweras convolution identity in both of its forms.

Everything is computed in exact arbitrary-precision arithmetic.  Divisions
are done as multiply-then-divide with a remainder check; a nonzero
remainder raises ``InexactDivision`` and signals a bug, never bad input.

The identity relates two ways of counting Dyck paths of semilength
``n + r`` with ``r`` peaks.  Its original form, for ``n >= 1`` and
``r >= 0``, reads

    binom(n+r+1, r) * binom(n+r+1, n) / (n+r+1)
        = sum over s in 0..r of
          binom(n, r-s) * binom(n, r-s+1) / n * binom(2n+s, 2n)

and replacing ``r`` by ``r - 1`` turns it into the refined form

    narayana(n+r, r) = sum over s in 1..r of
                       narayana(n, s) * binom(2n+r-s, r-s)

whose s-th term counts the paths in the stratum with exactly ``s`` peak
plateaus.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import InexactDivision

_BINOMIAL_CACHE: dict[tuple[int, int], int] = {}


def binomial(a: int, b: int) -> int:
    """C(a, b) with the convention C(a, b) = 0 for b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    key = (a, b)
    value = _BINOMIAL_CACHE.get(key)
    if value is None:
        # math.comb is deterministic, so a concurrent duplicate store is
        # harmless; the cache matters for the big identity sweeps.
        value = math.comb(a, b)
        _BINOMIAL_CACHE[key] = value
    return value


def _exact_div(numerator: int, divisor: int, context: str) -> int:
    quotient, remainder = divmod(numerator, divisor)
    if remainder:
        raise InexactDivision(
            f"{context}: {numerator} is not divisible by {divisor}"
        )
    return quotient


@functools.cache
def narayana(n: int, k: int) -> int:
    """Number of Dyck n-paths with exactly k peaks.

    ``narayana(0, 0) == 1`` by the empty-path convention; any out-of-range
    ``k`` gives 0.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0 or k > n:
        return 0
    return _exact_div(binomial(n, k) * binomial(n, k - 1), n, "narayana")


def catalan(n: int) -> int:
    """Total number of Dyck n-paths."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _exact_div(binomial(2 * n, n), n + 1, "catalan")


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")


def kreweras_lhs(n: int, r: int) -> int:
    """Closed-form side of the identity's original form."""
    _require_positive("n", n)
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    return _exact_div(
        binomial(n + r + 1, r) * binomial(n + r + 1, n), n + r + 1, "kreweras_lhs"
    )


def kreweras_rhs(n: int, r: int) -> int:
    """Summation side of the identity's original form, s running 0..r."""
    _require_positive("n", n)
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    total = 0
    for s in range(r + 1):
        pair = binomial(n, r - s) * binomial(n, r - s + 1)
        total += _exact_div(pair, n, "kreweras_rhs") * binomial(2 * n + s, 2 * n)
    return total


def refined_lhs(n: int, r: int) -> int:
    """Closed-form side of the refined form: all Dyck (n+r)-paths with r
    peaks, regardless of plateau count."""
    _require_positive("n", n)
    _require_positive("r", r)
    return narayana(n + r, r)


def refined_count(n: int, r: int, s: int) -> int:
    """Predicted number of Dyck (n+r)-paths with ``r`` peaks and exactly
    ``s`` peak plateaus; 0 outside ``1 <= s <= min(n, r)``."""
    _require_positive("n", n)
    _require_positive("r", r)
    if s < 1 or s > n or s > r:
        return 0
    return narayana(n, s) * binomial(2 * n + r - s, r - s)


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of the refined identity at one ``(n, r)``, with the
    per-stratum terms retained for diagnostics.

    ``terms`` holds ``(s, count)`` for every ``s`` in ``1..r``, zero terms
    included; ``rhs`` is their sum and ``equal`` records ``lhs == rhs``.
    """

    n: int
    r: int
    lhs: int
    rhs: int
    terms: tuple[tuple[int, int], ...]
    equal: bool


def refined_rhs(n: int, r: int) -> IdentityReport:
    """Summation side of the refined form, reported term by term."""
    _require_positive("n", n)
    _require_positive("r", r)
    terms = []
    rhs = 0
    for s in range(1, r + 1):
        term = refined_count(n, r, s)
        terms.append((s, term))
        rhs += term
    lhs = refined_lhs(n, r)
    return IdentityReport(
        n=n, r=r, lhs=lhs, rhs=rhs, terms=tuple(terms), equal=lhs == rhs
    )
