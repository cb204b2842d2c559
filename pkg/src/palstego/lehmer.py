"""Lehmer code: permutations <-> inversion vectors <-> integer ranks.

A permutation (x_1 .. x_n) of {0..n-1} is described by its inversion
vector (t_1 .. t_n), where t_k counts the positions j > k with x_j < x_k.
Since x_k has n-k items to its right, 0 <= t_k <= n-k and t_n = 0.

Aligning t_k with the factorial digit of weight (n-k)! gives the ranking
bijection: rank(p) is the index of p in the lexicographic order of all n!
permutations, with the identity at rank 0 and the full reversal
(n-1,...,1,0) at rank n!-1.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidPermutationError, InversionRangeError
from .factoradic import from_factoradic, to_factoradic

__all__ = [
    "Permutation",
    "InversionVector",
    "identity_permutation",
    "check_permutation",
    "inversions_of",
    "permutation_from_inversions",
    "rank",
    "unrank",
    "format_permutation",
    "parse_permutation",
]

Permutation = tuple[int, ...]
InversionVector = tuple[int, ...]


def identity_permutation(n: int) -> Permutation:
    """The identity (0, 1, ..., n-1)."""
    return tuple(range(n))


def check_permutation(p: Sequence[int]) -> Permutation:
    """Validate that p is a permutation of 0..n-1 and return it as a tuple."""
    p = tuple(p)
    n = len(p)
    seen = [False] * n
    for x in p:
        if not 0 <= x < n:
            raise InvalidPermutationError(f"entry {x} outside 0..{n - 1}")
        if seen[x]:
            raise InvalidPermutationError(f"duplicate entry {x}")
        seen[x] = True
    return p


def inversions_of(p: Sequence[int]) -> InversionVector:
    """Inversion vector of a permutation: t_k = #{j > k : x_j < x_k}."""
    p = check_permutation(p)
    n = len(p)
    return tuple(
        sum(1 for j in range(k + 1, n) if p[j] < p[k]) for k in range(n)
    )


def permutation_from_inversions(t: Sequence[int]) -> Permutation:
    """Rebuild the permutation whose inversion vector is t.

    x_k is the (t_k+1)-th smallest value not yet used; the bounds
    0 <= t_k <= n-k guarantee the choice always exists.
    """
    t = tuple(t)
    n = len(t)
    for k, c in enumerate(t, start=1):
        if not 0 <= c <= n - k:
            raise InversionRangeError(f"t_{k} = {c} outside 0..{n - k}")
    remaining = list(range(n))
    return tuple(remaining.pop(c) for c in t)


def rank(p: Sequence[int]) -> int:
    """Lexicographic rank of a permutation among all n! of its degree.

    The inversion count t_k carries weight (n-k)!, i.e. it becomes the
    factorial digit a_{n+1-k}.
    """
    t = inversions_of(p)
    return from_factoradic(tuple(reversed(t)))


def unrank(m: int, n: int) -> Permutation:
    """The permutation of degree n at lexicographic rank m (m < n!)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if m < 0:
        raise ValueError("rank must be non-negative")
    if n == 0:
        if m:
            raise OverflowError("rank 0 is the only permutation of degree 0")
        return ()
    digits = to_factoradic(m, n)  # raises OverflowError when m >= n!
    return permutation_from_inversions(digits.most_significant_first)


def format_permutation(p: Sequence[int]) -> str:
    """One-line textual form: space-separated decimal indices."""
    return " ".join(str(x) for x in p)


def parse_permutation(text: str) -> Permutation:
    """Inverse of format_permutation, validating the result."""
    try:
        entries = tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise InvalidPermutationError(f"not a permutation: {text!r}") from exc
    return check_permutation(entries)
