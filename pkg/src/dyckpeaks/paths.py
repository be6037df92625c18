"""Dyck path values, peak statistics, enumeration, and peak-class ranking.

A Dyck path of semilength ``m`` is a word of ``m`` upsteps ``U`` and ``m``
downsteps ``D`` in which every prefix contains at least as many upsteps as
downsteps.  Conventions used throughout the package:

* step indices are 1-based (step ``i`` is the i-th letter of the word),
* vertex indices are 0-based: vertex ``v`` is the point reached after step
  ``v`` (vertex 0 is the origin), so a path of semilength ``m`` has the
  2m+1 vertices ``0..2m``,
* a peak is a ``UD`` factor; its apex is the vertex between the two steps,
* a peak plateau is a maximal run of consecutive peaks immediately preceded
  by an upstep and immediately followed by a downstep, i.e. a factor
  ``U(UD)^i D`` with ``i >= 1``; runs touching either end of the word never
  qualify,
* every stream of paths is emitted in lexicographic order of the step text
  (plain string order, in which ``D`` sorts before ``U``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .errors import (
    CapExceeded,
    DipsBelowZero,
    EmptyRange,
    IllegalCharacter,
    OrdinalOutOfRange,
    Unbalanced,
)

#: Largest semilength the exhaustive enumerators accept unless overridden.
DEFAULT_ENUMERATION_CAP = 16

EMPTY_PATH_TOKEN = "ε"  # printed for the empty path in text output


class Step(enum.Enum):
    """One lattice step, up or down."""

    U = "U"
    D = "D"


def _check_text(text: str) -> None:
    """Validate a candidate path word.

    Error precedence: illegal characters first, then the whole-word balance
    check, then the prefix scan.  A word such as ``UDD`` is therefore
    reported as unbalanced even though its prefix also dips below zero.
    """
    ups = text.count("U")
    downs = text.count("D")
    if ups + downs != len(text):
        for i, ch in enumerate(text):
            if ch not in "UD":
                raise IllegalCharacter(f"character {ch!r} is not U or D", i + 1)
    if ups != downs:
        raise Unbalanced(f"{ups} upsteps vs {downs} downsteps", len(text))
    height = 0
    for i, ch in enumerate(text):
        height += 1 if ch == "U" else -1
        if height < 0:
            raise DipsBelowZero("prefix has more downsteps than upsteps", i + 1)


@dataclass(frozen=True, slots=True)
class DyckPath:
    """An immutable Dyck path, stored as its step word.

    Construction validates the word; the empty path is valid.
    """

    text: str = ""

    def __post_init__(self) -> None:
        _check_text(self.text)

    @property
    def semilength(self) -> int:
        return len(self.text) // 2

    @property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step(ch) for ch in self.text)

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True, slots=True)
class PlateauSpan:
    """One peak plateau: the factor ``U(UD)^run_length D``.

    ``first_step`` is the 1-based index of the opening upstep, so the
    ``2*run_length + 2`` steps starting there spell the whole factor.
    """

    first_step: int
    run_length: int


@dataclass(frozen=True, slots=True)
class PathStats:
    """Peak and peak-plateau statistics of one path.

    ``peak_apexes`` are 0-based vertex indices, ascending.  ``plateau_count``
    is the number of plateaus, not the number of peaks they contain.
    """

    peak_count: int
    plateau_count: int
    peak_apexes: tuple[int, ...]
    plateaus: tuple[PlateauSpan, ...]


def parse_path(text: str) -> DyckPath:
    """Parse a step word into a validated path.

    Raises ``IllegalCharacter``, ``Unbalanced`` or ``DipsBelowZero``, each
    carrying the 1-based offending index.
    """
    return DyckPath(text)


def render_path(path: DyckPath) -> str:
    """Inverse of :func:`parse_path`."""
    return path.text


def _peak_positions(text: str) -> list[int]:
    """0-based positions of the U in every UD factor, ascending."""
    out: list[int] = []
    i = text.find("UD")
    while i != -1:
        out.append(i)
        i = text.find("UD", i + 2)
    return out


def _plateau_spans(text: str) -> list[PlateauSpan]:
    """Plateaus of a step word, left to right.

    Peaks at positions ``a, a+2, ...`` form one maximal run; the run is a
    plateau iff a step exists on each side and they are U and D respectively.
    """
    spans: list[PlateauSpan] = []
    positions = _peak_positions(text)
    j = 0
    while j < len(positions):
        k = j
        while k + 1 < len(positions) and positions[k + 1] == positions[k] + 2:
            k += 1
        first, last = positions[j], positions[k]
        if (
            first >= 1
            and text[first - 1] == "U"
            and last + 2 < len(text)
            and text[last + 2] == "D"
        ):
            spans.append(PlateauSpan(first_step=first, run_length=k - j + 1))
        j = k + 1
    return spans


def peaks(path: DyckPath) -> list[int]:
    """Apex vertices of every peak, ascending."""
    return [i + 1 for i in _peak_positions(path.text)]


def peak_plateaus(path: DyckPath) -> list[PlateauSpan]:
    """Peak plateaus of ``path``, left to right."""
    return _plateau_spans(path.text)


def stats(path: DyckPath) -> PathStats:
    """Bundle peak and plateau statistics of ``path``."""
    apexes = peaks(path)
    spans = peak_plateaus(path)
    return PathStats(
        peak_count=len(apexes),
        plateau_count=len(spans),
        peak_apexes=tuple(apexes),
        plateaus=tuple(spans),
    )


def _check_enumeration_args(semilength: int, cap: int) -> None:
    if semilength < 0:
        raise ValueError(f"semilength must be nonnegative, got {semilength}")
    if semilength > cap:
        raise CapExceeded(
            f"semilength {semilength} exceeds the enumeration cap {cap}"
        )


def _iter_texts(semilength: int) -> Iterator[str]:
    """All Dyck words of the given semilength in ascending string order.

    Depth-first generation trying D before U at every point where both keep
    the prefix valid; this is exactly ascending order because D < U.
    """
    buf: list[str] = []

    def walk(up_left: int, down_left: int) -> Iterator[str]:
        if up_left == 0 and down_left == 0:
            yield "".join(buf)
            return
        if down_left > up_left:
            buf.append("D")
            yield from walk(up_left, down_left - 1)
            buf.pop()
        if up_left > 0:
            buf.append("U")
            yield from walk(up_left - 1, down_left)
            buf.pop()

    return walk(semilength, semilength)


def enumerate_paths(
    semilength: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[DyckPath]:
    """Every Dyck path of the given semilength, in ascending text order.

    Raises ``CapExceeded`` when ``semilength`` is above ``cap``.
    """
    _check_enumeration_args(semilength, cap)
    return (DyckPath(text) for text in _iter_texts(semilength))


def enumerate_paths_with_peaks(
    semilength: int, peak_count: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[DyckPath]:
    """Every Dyck path of the given semilength with exactly ``peak_count``
    peaks, in ascending text order.

    Raises ``EmptyRange`` unless ``1 <= peak_count <= semilength``.
    """
    _check_enumeration_args(semilength, cap)
    if peak_count < 1 or peak_count > semilength:
        raise EmptyRange(
            f"no path of semilength {semilength} has {peak_count} peaks"
        )
    return (
        DyckPath(text)
        for text in _iter_texts(semilength)
        if text.count("UD") == peak_count
    )


# Completion counts for the ranking walk, keyed by
# (upsteps left, downsteps left, peaks still required, last step was U).
_COMPLETIONS: dict[tuple[int, int, int, bool], int] = {}


def _completions(up_left: int, down_left: int, need: int, after_up: bool) -> int:
    """Number of valid continuations of a partial walk.

    A continuation may take U whenever upsteps remain, and D whenever doing
    so keeps the prefix valid (``down_left > up_left``); taking D right
    after a U closes one required peak.  Evaluated iteratively so deep
    states cannot overflow the recursion limit; memo writes are idempotent.
    """
    memo = _COMPLETIONS
    root = (up_left, down_left, need, after_up)
    stack = [root]
    while stack:
        state = stack[-1]
        if state in memo:
            stack.pop()
            continue
        u, d, k, up = state
        if k < 0:
            memo[state] = 0
            stack.pop()
            continue
        if u == 0 and d == 0:
            memo[state] = 1 if k == 0 else 0
            stack.pop()
            continue
        deps = []
        if d > u:
            deps.append((u, d - 1, k - 1 if up else k, False))
        if u > 0:
            deps.append((u - 1, d, k, True))
        pending = [dep for dep in deps if dep not in memo]
        if pending:
            stack.extend(pending)
        else:
            memo[state] = sum(memo[dep] for dep in deps)
            stack.pop()
    return memo[root]


def rank_by_peaks(path: DyckPath) -> int:
    """0-based position of ``path`` among the paths that share its
    semilength and peak count, in ascending text order.

    At every step the rank accumulates, from the memoized completion table,
    the number of words that branch off with the smaller letter D where the
    path takes U.
    """
    if not path.text:
        raise ValueError("the empty path does not belong to a peak class")
    m = path.semilength
    up_left, down_left = m, m
    need = path.text.count("UD")
    after_up = False
    ordinal = 0
    for ch in path.text:
        if ch == "U":
            if down_left > up_left:
                ordinal += _completions(
                    up_left, down_left - 1, need - 1 if after_up else need, False
                )
            up_left -= 1
            after_up = True
        else:
            if after_up:
                need -= 1
            down_left -= 1
            after_up = False
    return ordinal


def unrank_by_peaks(semilength: int, peak_count: int, ordinal: int) -> DyckPath:
    """Inverse of :func:`rank_by_peaks` for the class
    ``(semilength, peak_count)``.

    Raises ``OrdinalOutOfRange`` when ``ordinal`` is not in
    ``[0, narayana(semilength, peak_count))``.
    """
    if semilength < 0:
        raise ValueError(f"semilength must be nonnegative, got {semilength}")
    total = _completions(semilength, semilength, peak_count, False)
    if ordinal < 0 or ordinal >= total:
        raise OrdinalOutOfRange(
            f"ordinal {ordinal} outside [0, {total}) for semilength "
            f"{semilength} with {peak_count} peaks"
        )
    up_left = down_left = semilength
    need = peak_count
    after_up = False
    chars: list[str] = []
    for _ in range(2 * semilength):
        if down_left > up_left:
            k = need - 1 if after_up else need
            below = _completions(up_left, down_left - 1, k, False)
            if ordinal < below:
                chars.append("D")
                down_left -= 1
                need = k
                after_up = False
                continue
            ordinal -= below
        assert up_left > 0, "ordinal accounting is broken"
        chars.append("U")
        up_left -= 1
        after_up = True
    return DyckPath("".join(chars))
