"""Embedding and blind extraction via palette permutations.

A palette of n distinct used colors has n! orderings, so it can carry any
message of up to capacity(n) bits, the largest N with 2**N <= n!.  The
framed message bits, read first-bit-most-significant, form an integer m;
the cover's identity ordering is permuted by the permutation of rank m.
Pixels are reindexed along the way, so the stego image renders exactly
like the cover.

Extraction is blind: the identity ordering is rebuilt from the stego
image alone, either by rendering it and re-quantizing (first-occurrence
mode) or by sorting the used palette colors by their natural key.  The
permutation carrying the identity ordering to the stored palette order is
ranked back to m, and m's bits are unframed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .bitops import Bits, bits_to_int, ensure_bits, int_to_bits
from .errors import (
    CapacityExceededError,
    DimensionMismatchError,
    DuplicateColorError,
    FramingError,
    LengthError,
    PaletteMismatchError,
)
from .factoradic import factorial
from .lehmer import rank, unrank
from .palette_image import (
    IndexedImage,
    apply_permutation,
    canonicalize,
    natural_key,
    quantize_first_occurrence,
    render,
    used_palette_entries,
)

__all__ = [
    "Message",
    "BinaryImage",
    "IdentityMode",
    "Framing",
    "StegoConfig",
    "capacity",
    "embed",
    "extract",
    "pack_binary_image",
    "unpack_binary_image",
]

Message = Bits


class IdentityMode(enum.Enum):
    """How embedder and extractor agree on the reference palette order."""

    FIRST_OCCURRENCE = "first-occurrence"
    NATURAL_SORT = "natural-sort"


class Framing(enum.Enum):
    """How the extractor learns the message length.

    RAW embeds the bare bits and needs the length out of band.
    LENGTH_PREFIXED frames are self-delimiting: payload, a terminator 1
    bit, then zero fill out to the full capacity.  Only one bit of
    capacity goes to delimiting, so a 1681-bit 41x41 pattern still fits a
    256-color palette; extraction strips the fill and terminator from the
    right.
    """

    RAW = "raw"
    LENGTH_PREFIXED = "length-prefixed"


@dataclass(frozen=True, slots=True)
class StegoConfig:
    identity_mode: IdentityMode = IdentityMode.FIRST_OCCURRENCE
    framing: Framing = Framing.RAW


@dataclass(frozen=True, slots=True)
class BinaryImage:
    """A two-color bit matrix, row-major, top-left first."""

    width: int
    height: int
    bits: Bits

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("dimensions must be positive")
        if len(self.bits) != self.width * self.height:
            raise DimensionMismatchError(
                f"{len(self.bits)} bits for {self.width}x{self.height} pixels"
            )
        ensure_bits(self.bits)


def capacity(n: int) -> int:
    """Largest N with 2**N <= n!, by exact integer comparison.

    This is the guaranteed-embeddable bit count of a palette with n
    distinct used colors; n = 256 gives 1683.
    """
    if not 1 <= n <= 256:
        raise ValueError("color count must be in 1..256")
    # For v with bit_length b, 2**(b-1) <= v < 2**b, so N = b - 1 exactly.
    return factorial(n).bit_length() - 1


def _identity_ordered(canonical: IndexedImage, mode: IdentityMode) -> IndexedImage:
    """Reorder a canonical image so its palette is in identity order."""
    if mode is IdentityMode.FIRST_OCCURRENCE:
        return canonical
    n = len(canonical.palette)
    by_key = sorted(range(n), key=lambda i: natural_key(canonical.palette[i]))
    q = [0] * n
    for slot, i in enumerate(by_key):
        q[i] = slot
    return apply_permutation(canonical, tuple(q))


def _frame(msg: Message, framing: Framing, cap: int) -> tuple[int, int]:
    """Return (framed bit length, message integer m) for embedding."""
    if framing is Framing.RAW:
        if len(msg) > cap:
            raise CapacityExceededError(f"{len(msg)} bits > capacity {cap}")
        return len(msg), bits_to_int(msg)
    if len(msg) + 1 > cap:
        raise CapacityExceededError(
            f"{len(msg)} bits + terminator > capacity {cap}"
        )
    fill = cap - len(msg) - 1
    return cap, bits_to_int(msg + (1,)) << fill


def embed(
    cover: IndexedImage,
    msg: Message,
    cfg: StegoConfig,
    *,
    strict: bool = False,
) -> IndexedImage:
    """Hide *msg* in the palette order of *cover*.

    The cover is canonicalized first (duplicate colors merged, unused
    entries dropped) and reordered per cfg.identity_mode; the framed
    message's integer selects the permutation applied on top.  The result
    renders pixel-identically to the cover.

    With strict=True, a cover whose data set references two palette slots
    holding the same color raises DuplicateColorError instead of merging
    them silently.
    """
    msg = ensure_bits(msg)
    if strict:
        _, used_colors = used_palette_entries(cover)
        if len(set(used_colors)) != len(used_colors):
            raise DuplicateColorError("cover references duplicate palette colors")
    base = _identity_ordered(canonicalize(cover), cfg.identity_mode)
    n = len(base.palette)
    _, m = _frame(msg, cfg.framing, capacity(n))
    return apply_permutation(base, unrank(m, n))


def extract(
    stego: IndexedImage,
    cfg: StegoConfig,
    expected_bits: int | None = None,
) -> Message:
    """Recover the message from a stego image alone (blind extraction).

    Step 1 rebuilds the identity ordering: render the stego image and
    re-quantize it (first-occurrence mode) or sort its used colors by
    natural key (natural-sort mode).  Step 2 finds the permutation that
    carries the identity ordering to the stored palette order.  Step 3
    ranks that permutation back to the integer m and unframes its bits.

    expected_bits is required for RAW framing and ignored otherwise.
    Unused palette entries (e.g. GIF padding) carry no information and
    are skipped.
    """
    _, stored = used_palette_entries(stego)
    n = len(stored)
    if len(set(stored)) != n:
        raise PaletteMismatchError("stego image references duplicate palette colors")

    if cfg.identity_mode is IdentityMode.FIRST_OCCURRENCE:
        identity = quantize_first_occurrence(render(stego)).palette
    else:
        identity = tuple(sorted(stored, key=natural_key))

    slot_of = {color: j for j, color in enumerate(stored)}
    try:
        p = tuple(slot_of[color] for color in identity)
    except KeyError as missing:
        raise PaletteMismatchError(
            f"stego palette is missing identity color {missing.args[0]}"
        ) from None
    if len(p) != n:
        raise PaletteMismatchError(
            f"identity ordering has {len(p)} colors, stego palette {n}"
        )
    m = rank(p)

    cap = capacity(n)
    if cfg.framing is Framing.RAW:
        if expected_bits is None:
            raise ValueError("RAW framing requires expected_bits")
        if expected_bits > cap:
            raise LengthError(f"expected {expected_bits} bits > capacity {cap}")
        return int_to_bits(m, expected_bits)

    framed = int_to_bits(m, cap)
    terminator = len(framed) - 1
    while terminator >= 0 and framed[terminator] == 0:
        terminator -= 1
    if terminator < 0:
        raise FramingError("no terminator bit: palette order carries no framed message")
    return framed[:terminator]


def pack_binary_image(img: BinaryImage) -> Message:
    """Message bits of a binary image, row-major from the top-left.

    The first bit is the most significant in the integer interpretation.
    """
    return img.bits


def unpack_binary_image(msg: Message, width: int, height: int) -> BinaryImage:
    """Inverse of pack_binary_image; bit count must equal width*height."""
    return BinaryImage(width, height, ensure_bits(msg))
