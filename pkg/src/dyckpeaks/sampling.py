"""Exactly uniform sampling of Dyck paths with a prescribed peak count.

A sample of the class "semilength n + r, exactly r peaks" is drawn in three
stages, each an exact big-integer draw, so the overall distribution is
uniform with no floating-point involved:

1. pick the plateau count ``s`` with probability proportional to the size
   of its stratum, ``refined_count(n, r, s)``;
2. pick a base path uniformly among the Dyck n-paths with ``s`` peaks by
   unranking a uniform ordinal;
3. pick the free insertion multiplicities uniformly among the weak
   compositions of ``r - s`` into ``2n + 1`` slots, again by unranking;

and expand the resulting plan.

Randomness comes from a self-contained SHA-256 counter stream so samples
reproduce bit-for-bit everywhere: block ``j`` for sample ``i`` is
``SHA-256(b"dyckpeaks.sampler.v1" || seed || i || j)`` with the three
integers big-endian 64-bit (the seed is reduced mod 2**64), bits are
consumed most significant first, and a bounded draw takes
``bound.bit_length()`` bits and rejects until the value is below the bound.
Sample ``i`` depends only on ``(seed, i)``, so any prefix of a stream, or a
parallel split of it, yields the same paths.
"""

from __future__ import annotations

import hashlib
from bisect import bisect_right
from itertools import accumulate
from typing import Iterator

from .bijection import InsertionPlan, expand
from .compositions import composition_count, unrank_composition
from .counting import narayana, refined_count, refined_lhs
from .errors import EmptySupport
from .paths import DyckPath, unrank_by_peaks

_DOMAIN = b"dyckpeaks.sampler.v1"
_U64 = (1 << 64) - 1


class _Sha256Stream:
    """Deterministic bit source for one sample."""

    __slots__ = ("_prefix", "_counter", "_acc", "_bits")

    def __init__(self, seed: int, index: int) -> None:
        self._prefix = (
            _DOMAIN
            + (seed & _U64).to_bytes(8, "big")
            + (index & _U64).to_bytes(8, "big")
        )
        self._counter = 0
        self._acc = 0
        self._bits = 0

    def getrandbits(self, k: int) -> int:
        while self._bits < k:
            block = hashlib.sha256(
                self._prefix + self._counter.to_bytes(8, "big")
            ).digest()
            self._counter += 1
            self._acc = (self._acc << 256) | int.from_bytes(block, "big")
            self._bits += 256
        spare = self._bits - k
        value = self._acc >> spare
        self._acc &= (1 << spare) - 1
        self._bits = spare
        return value

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection on top chunks."""
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        if bound == 1:
            return 0
        k = bound.bit_length()
        while True:
            value = self.getrandbits(k)
            if value < bound:
                return value


def sample_uniform(n: int, r: int, seed: int, count: int) -> Iterator[DyckPath]:
    """``count`` independent uniform samples of Dyck (n+r)-paths with
    exactly ``r`` peaks, deterministic in ``(seed, n, r, count)``.

    Raises ``EmptySupport`` when no such path exists (``n`` or ``r`` below
    1 is the only way that happens).
    """
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    if n < 1 or r < 1:
        raise EmptySupport(f"no sampling class for n={n}, r={r}")
    total = refined_lhs(n, r)
    if total == 0:
        raise EmptySupport(f"class n={n}, r={r} is empty")
    strata = list(range(1, min(n, r) + 1))
    cumulative = list(accumulate(refined_count(n, r, s) for s in strata))
    assert cumulative[-1] == total, "stratum weights do not add up"
    slots = 2 * n + 1

    def emit() -> Iterator[DyckPath]:
        for index in range(count):
            stream = _Sha256Stream(seed, index)
            pick = stream.randbelow(total)
            s = strata[bisect_right(cumulative, pick)]
            base = unrank_by_peaks(n, s, stream.randbelow(narayana(n, s)))
            spare = r - s
            ordinal = stream.randbelow(composition_count(spare, slots))
            vector = unrank_composition(ordinal, spare, slots)
            yield expand(InsertionPlan(base=base, multiplicities=vector))

    return emit()
