"""Independent brute-force oracles shared by the test suite.

Everything here is deliberately written from first principles (itertools
filtering, regex scanning, pairwise checks) so it exercises none of the
package's own enumeration or statistics code.
"""

from __future__ import annotations

import itertools
import re

# A plateau is a factor U(UD)^i D with i >= 1.  At any fixed start position
# at most one i can match (the run inside cannot extend past the flanking
# steps), so counting match starts counts plateaus.
_PLATEAU_AT = re.compile(r"(?=U(?:UD)+D)")


def is_dyck_text(text: str) -> bool:
    height = 0
    for ch in text:
        if ch == "U":
            height += 1
        elif ch == "D":
            height -= 1
        else:
            return False
        if height < 0:
            return False
    return height == 0


def brute_dyck_texts(semilength: int) -> list[str]:
    """All Dyck words of a semilength, by filtering every U/D word."""
    words = (
        "".join(letters)
        for letters in itertools.product("UD", repeat=2 * semilength)
    )
    return sorted(word for word in words if is_dyck_text(word))


def peak_count_oracle(text: str) -> int:
    return sum(
        1 for a, b in zip(text, text[1:]) if a == "U" and b == "D"
    )


def plateau_count_oracle(text: str) -> int:
    return len(_PLATEAU_AT.findall(text))


def reverse_complement(text: str) -> str:
    swap = {"U": "D", "D": "U"}
    return "".join(swap[ch] for ch in reversed(text))
