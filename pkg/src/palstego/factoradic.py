"""Factorial number system: m = sum over k of a_k * (k-1)!.

A register of n factorial digits (a_1 .. a_n, where 0 <= a_k <= k-1) stores
any integer in [0, n!-1].  Digits are kept ascending-weight internally
(a_1 first, weight 0!); the display form reads most-significant-first,
``(a_n,...,a_1)_!``, so ``str(to_factoradic(253, 6))`` is ``(2,0,2,0,1,0)_!``.

All arithmetic uses Python's built-in arbitrary-precision integers, so
values at and beyond 256! (about 2**1684) are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DigitRangeError

__all__ = ["FactoradicDigits", "factorial", "to_factoradic", "from_factoradic"]


def factorial(n: int) -> int:
    """Return n! exactly for any non-negative n."""
    if n < 0:
        raise ValueError("factorial is undefined for negative n")
    return math.factorial(n)


@dataclass(frozen=True, slots=True)
class FactoradicDigits:
    """A bounded digit vector (a_1 .. a_n) in the factorial number system.

    ``digits[k-1]`` holds a_k, the digit of weight (k-1)!.  Construction
    validates the bound 0 <= a_k <= k-1 (so a_1 is always 0).
    """

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.digits) < 1:
            raise ValueError("at least one digit is required")
        for k, a in enumerate(self.digits, start=1):
            if not 0 <= a <= k - 1:
                raise DigitRangeError(f"digit a_{k} = {a} outside 0..{k - 1}")

    @classmethod
    def from_most_significant(cls, digits: Sequence[int]) -> "FactoradicDigits":
        """Build from display order (a_n, ..., a_1)."""
        return cls(tuple(reversed(tuple(digits))))

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def most_significant_first(self) -> tuple[int, ...]:
        """Digits in display order (a_n, ..., a_1)."""
        return tuple(reversed(self.digits))

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.most_significant_first) + ")_!"


def to_factoradic(m: int, n: int) -> FactoradicDigits:
    """Convert a natural number m < n! to its n factorial digits.

    Raises OverflowError when m does not fit the n-digit register.
    """
    if n < 1:
        raise ValueError("digit count n must be >= 1")
    if m < 0:
        raise ValueError("m must be non-negative")

    digits = []
    rest = m
    for k in range(1, n + 1):
        rest, a = divmod(rest, k)
        digits.append(a)
    if rest:
        raise OverflowError(f"{m} >= {n}! and does not fit {n} factorial digits")
    return FactoradicDigits(tuple(digits))


def from_factoradic(d: FactoradicDigits | Sequence[int]) -> int:
    """Evaluate factorial digits back to the integer they represent.

    Accepts a FactoradicDigits value or a raw ascending-weight sequence
    (a_1 first); raw sequences are bound-checked and raise DigitRangeError.
    """
    if not isinstance(d, FactoradicDigits):
        d = FactoradicDigits(tuple(d))
    value = 0
    weight = 1
    for k, a in enumerate(d.digits, start=1):
        value += a * weight
        weight *= k
    return value
