"""Weak compositions in ascending lexicographic order, with rank/unrank.

A weak composition of ``total`` into ``parts`` slots is a tuple of
nonnegative integers of length ``parts`` summing to ``total``.  There are
``C(total + parts - 1, total)`` of them.  The order used everywhere is
ascending lexicographic with the leftmost slot most significant, so the
stream starts at ``(0, ..., 0, total)`` and ends at ``(total, 0, ..., 0)``.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

from .errors import OrdinalOutOfRange


def _check_shape(total: int, parts: int) -> None:
    if total < 0:
        raise ValueError(f"total must be nonnegative, got {total}")
    if parts < 1:
        raise ValueError(f"parts must be positive, got {parts}")


def composition_count(total: int, parts: int) -> int:
    """Number of weak compositions of ``total`` into ``parts`` slots."""
    _check_shape(total, parts)
    return math.comb(total + parts - 1, total)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All weak compositions, in ascending lexicographic order."""
    _check_shape(total, parts)

    def walk(prefix: tuple[int, ...], left: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield prefix + (left,)
            return
        for value in range(left + 1):
            yield from walk(prefix + (value,), left - value, slots - 1)

    return walk((), total, parts)


def rank_composition(composition: Sequence[int]) -> int:
    """Position of ``composition`` in the stream over its own total and
    number of slots.

    Sums, slot by slot, the completion counts of every smaller leading value.
    """
    if not composition:
        raise ValueError("composition must have at least one slot")
    if any(v < 0 for v in composition):
        raise ValueError("composition entries must be nonnegative")
    remaining = sum(composition)
    parts = len(composition)
    ordinal = 0
    for slot, value in enumerate(composition[:-1]):
        slots_after = parts - slot - 1
        for smaller in range(value):
            ordinal += composition_count(remaining - smaller, slots_after)
        remaining -= value
    return ordinal


def unrank_composition(ordinal: int, total: int, parts: int) -> tuple[int, ...]:
    """Composition at position ``ordinal``; inverse of
    :func:`rank_composition`.

    Raises ``OrdinalOutOfRange`` when ``ordinal`` is not in
    ``[0, composition_count(total, parts))``.
    """
    size = composition_count(total, parts)
    if ordinal < 0 or ordinal >= size:
        raise OrdinalOutOfRange(
            f"ordinal {ordinal} outside [0, {size}) for compositions of "
            f"{total} into {parts} slots"
        )
    out: list[int] = []
    remaining = total
    for slot in range(parts - 1):
        slots_after = parts - slot - 1
        for value in range(remaining + 1):
            below = composition_count(remaining - value, slots_after)
            if ordinal < below:
                out.append(value)
                remaining -= value
                break
            ordinal -= below
    out.append(remaining)
    assert ordinal == 0, "ordinal accounting is broken"
    return tuple(out)
