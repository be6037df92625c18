"""Peak deletion, its insertion inverse, fibers, and the joint tally.

``reduce`` deletes both steps of every peak of a path simultaneously.  What
survives is a shorter Dyck path whose own peak count equals the plateau
count of the input: a plateau ``U(UD)^i D`` collapses to the new peak
``UD``, while every other deleted peak leaves no peak behind.

``expand`` inverts this.  Starting from a base path of semilength ``n``, it
inserts the block ``(UD)^e`` at each of the 2n+1 vertices, where ``e`` is a
caller-chosen multiplicity plus a mandatory extra 1 at each apex of the
base (the mandatory insertions split the base's own peaks, so they are the
only place a plateau can form).  The caller-chosen multiplicities form a
weak composition, which makes the set of paths reducing to a fixed base
with ``s`` peaks and a target of ``r`` peaks exactly as large as the number
of weak compositions of ``r - s`` into 2n+1 slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .compositions import compositions
from .errors import InvalidPlan, PeakDeficit
from .paths import (
    DEFAULT_ENUMERATION_CAP,
    DyckPath,
    PathStats,
    _check_enumeration_args,
    _iter_texts,
    _peak_positions,
    _plateau_spans,
    stats,
)


@dataclass(frozen=True, slots=True)
class InsertionPlan:
    """A base path plus one insertion multiplicity per base vertex.

    The vector has ``2 * base.semilength + 1`` entries; entry ``v`` is the
    number of freely inserted UD blocks at vertex ``v``, not counting the
    mandatory apex insertions.
    """

    base: DyckPath
    multiplicities: tuple[int, ...]

    @property
    def inserted(self) -> int:
        return sum(self.multiplicities)


@dataclass(frozen=True, slots=True)
class ReduceResult:
    """Outcome of peak deletion: the surviving base, the statistics of the
    input, and the plan that rebuilds the input."""

    base: DyckPath
    original_stats: PathStats
    plan: InsertionPlan


def _split_peaks(text: str) -> tuple[str, list[int]]:
    """Delete every UD factor of ``text`` in one pass.

    Returns the surviving word and the raw per-vertex tally of deleted
    peaks, indexed by how many surviving steps preceded each deletion.
    """
    raw = [0]
    kept: list[str] = []
    i = 0
    end = len(text)
    while i < end:
        if text[i] == "U" and i + 1 < end and text[i + 1] == "D":
            raw[-1] += 1
            i += 2
        else:
            kept.append(text[i])
            raw.append(0)
            i += 1
    return "".join(kept), raw


def plan_of(path: DyckPath) -> InsertionPlan:
    """Decompose ``path`` into its reduced base and free multiplicities.

    The raw tally counts every deleted peak at the vertex it collapses
    onto; subtracting one at each apex of the base removes the mandatory
    insertions.  The result is never negative: the two base steps flanking
    an apex were separated by at least one deleted peak in the input,
    otherwise they would have formed a peak themselves and been deleted.
    """
    base_text, raw = _split_peaks(path.text)
    for position in _peak_positions(base_text):
        raw[position + 1] -= 1
        assert raw[position + 1] >= 0, "apex attribution is broken"
    return InsertionPlan(base=DyckPath(base_text), multiplicities=tuple(raw))


def reduce(path: DyckPath) -> ReduceResult:
    """Delete all peaks of ``path`` at once.

    The base's semilength is the input's minus its peak count, and the
    base's peak count equals the input's plateau count.
    """
    plan = plan_of(path)
    return ReduceResult(base=plan.base, original_stats=stats(path), plan=plan)


def expand(plan: InsertionPlan) -> DyckPath:
    """Rebuild the path encoded by ``plan``; inverse of :func:`plan_of`.

    Raises ``InvalidPlan`` on a negative entry or a wrong vector length.
    """
    base_text = plan.base.text
    slots = len(base_text) + 1
    if len(plan.multiplicities) != slots:
        raise InvalidPlan(
            f"multiplicity vector has {len(plan.multiplicities)} entries, "
            f"base with {slots - 1} steps needs {slots}"
        )
    if any(v < 0 for v in plan.multiplicities):
        raise InvalidPlan("multiplicities must be nonnegative")
    blocks = list(plan.multiplicities)
    for position in _peak_positions(base_text):
        blocks[position + 1] += 1
    pieces: list[str] = []
    for vertex, count in enumerate(blocks):
        if count:
            pieces.append("UD" * count)
        if vertex < len(base_text):
            pieces.append(base_text[vertex])
    return DyckPath("".join(pieces))


def fiber(base: DyckPath, peak_count: int) -> Iterator[DyckPath]:
    """Every path with ``peak_count`` peaks whose reduction is ``base``.

    Streams in ascending lexicographic order of the multiplicity vector
    (leftmost vertex most significant).  Raises ``PeakDeficit`` when the
    base already has more than ``peak_count`` peaks.
    """
    if peak_count < 0:
        raise ValueError(f"peak count must be nonnegative, got {peak_count}")
    own = len(_peak_positions(base.text))
    if peak_count < own:
        raise PeakDeficit(
            f"base has {own} peaks, cannot reach only {peak_count}"
        )
    slots = len(base.text) + 1
    return (
        expand(InsertionPlan(base=base, multiplicities=vector))
        for vector in compositions(peak_count - own, slots)
    )


def joint_distribution(
    semilength: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> dict[tuple[int, int], int]:
    """Tally of (peak count, plateau count) over all paths of the given
    semilength, by exhaustive enumeration."""
    _check_enumeration_args(semilength, cap)
    table: dict[tuple[int, int], int] = {}
    for text in _iter_texts(semilength):
        key = (text.count("UD"), len(_plateau_spans(text)))
        table[key] = table.get(key, 0) + 1
    return table
