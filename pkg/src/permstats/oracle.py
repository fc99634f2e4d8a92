"""Exhaustive verification over small symmetric groups.

Every closed form in this package can be checked directly for small n by
walking all n! permutations (or all (n-1)! n-cycles for the cycle statistic)
and recomputing the statistic from its definition.  The reports are fully
deterministic: maximizers come back sorted in one-line lexicographic order,
so runs are comparable byte for byte.

The walk is capped.  The default limit of 9 keeps every check under a few
seconds; 10 and 11 are allowed when requested explicitly, and anything above
11 (two hundred million permutations and up) is refused outright.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .core import Permutation
from .stretch import ProductValue

__all__ = ["HARD_CAP", "STATISTICS", "ArgmaxReport", "brute_argmax", "brute_average_displacement"]

HARD_CAP = 11

STATISTICS = (
    "displacement",
    "additive-stretch",
    "multiplicative-stretch",
    "cycle-stat",
)


@dataclass(frozen=True)
class ArgmaxReport:
    """Maximum of a statistic over S_n together with every maximizer."""

    n: int
    statistic: str
    max_value: Fraction | ProductValue
    maximizers: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "maximizers", tuple(self.maximizers))

    @property
    def count(self) -> int:
        return len(self.maximizers)


def _check_n(n: int, limit: int) -> None:
    cap = min(limit, HARD_CAP)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > cap:
        raise ValueError(
            f"n = {n} exceeds the enumeration limit {cap}"
            f" (hard cap {HARD_CAP}); pass limit explicitly for 10 or 11"
        )


def _argmax_words(n: int, key) -> tuple[int, list[tuple[int, ...]]]:
    # key maps a one-line word to a comparable integer score.
    best: int | None = None
    top: list[tuple[int, ...]] = []
    for word in permutations(range(1, n + 1)):
        score = key(word)
        if best is None or score > best:
            best, top = score, [word]
        elif score == best:
            top.append(word)
    assert best is not None
    return best, top


def _gap_sum(word: tuple[int, ...]) -> int:
    return sum(abs(a - b) for a, b in zip(word, word[1:]))


def _gap_product(word: tuple[int, ...]) -> int:
    out = 1
    for a, b in zip(word, word[1:]):
        out *= abs(a - b)
    return out


def _cycle_argmax(n: int) -> tuple[int, list[tuple[int, ...]]]:
    # Walk all (n-1)! n-cycles as circular orders anchored at 1; score each by
    # its full jump-length product divided by its shortest jump.
    if n == 1:
        return 1, [(1,)]
    best: int | None = None
    top: list[tuple[int, ...]] = []
    for rest in permutations(range(2, n + 1)):
        order = (1,) + rest
        succ = [0] * n
        for k in range(n):
            succ[order[k] - 1] = order[(k + 1) % n]
        full, low = 1, n
        for i, v in enumerate(succ, 1):
            ln = abs(i - v)
            full *= ln
            if ln < low:
                low = ln
        score = full // low
        if best is None or score > best:
            best, top = score, [tuple(succ)]
        elif score == best:
            top.append(tuple(succ))
    assert best is not None
    return best, top


def brute_argmax(n: int, statistic: str, limit: int = 9) -> ArgmaxReport:
    """Maximize one of the named statistics by exhaustive enumeration.

    statistic is one of "displacement", "additive-stretch",
    "multiplicative-stretch" (all over S_n) or "cycle-stat" (over all
    n-cycles, reported as successor tables).  Stretch statistics need n >= 2.
    """
    _check_n(n, limit)
    if statistic not in STATISTICS:
        raise ValueError(f"unknown statistic {statistic!r}; expected one of {STATISTICS}")
    if statistic in ("additive-stretch", "multiplicative-stretch") and n < 2:
        raise ValueError(f"{statistic} needs n >= 2, got {n}")

    max_value: Fraction | ProductValue
    if statistic == "displacement":
        best, words = _argmax_words(
            n, lambda w: sum(abs(i - v) for i, v in enumerate(w, 1))
        )
        max_value = Fraction(best, n)
    elif statistic == "additive-stretch":
        best, words = _argmax_words(n, _gap_sum)
        max_value = Fraction(best, n - 1)
    elif statistic == "multiplicative-stretch":
        best, words = _argmax_words(n, _gap_product)
        max_value = ProductValue(Fraction(best), n - 1)
    else:
        best, words = _cycle_argmax(n)
        max_value = ProductValue(Fraction(best), max(n - 1, 1))

    maximizers = tuple(Permutation(w) for w in sorted(words))
    return ArgmaxReport(n=n, statistic=statistic, max_value=max_value, maximizers=maximizers)


def brute_average_displacement(n: int, limit: int = 9) -> Fraction:
    """Mean displacement over all of S_n, computed by direct enumeration.

    >>> brute_average_displacement(3)
    Fraction(8, 9)
    """
    _check_n(n, limit)
    total = 0
    for word in permutations(range(1, n + 1)):
        total += sum(abs(i - v) for i, v in enumerate(word, 1))
    return Fraction(total, math.factorial(n) * n)
