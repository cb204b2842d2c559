"""Palette (indexed) images and the transformations the embedding rides on.

An indexed image is a row-major index array plus an ordered palette;
rendering replaces each index with its palette color.  Reordering palette
and indexes together leaves the rendered RGB untouched, which is the
covert channel: the palette ORDER carries information, the pixels do not.

The deterministic inverse of rendering is first-occurrence quantization:
scan the RGB pixels row-major from the top-left and collect distinct
colors in the order first seen.  Its fixed points are the "canonical"
images (palette in first-occurrence order, no duplicates, no unused
entries), and every permuted version of a canonical image quantizes back
to the canonical one.  That round trip is what makes extraction blind.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    DegreeMismatchError,
    IndexOutOfRangeError,
    PaletteSizeError,
    TooManyColorsError,
)
from .lehmer import check_permutation

__all__ = [
    "Rgb",
    "Palette",
    "IndexedImage",
    "RgbImage",
    "render",
    "quantize_first_occurrence",
    "canonicalize",
    "natural_key",
    "apply_permutation",
    "negative",
    "used_palette_entries",
]

Rgb = tuple[int, int, int]
Palette = tuple[Rgb, ...]

MAX_PALETTE = 256


def _check_color(c: Rgb) -> None:
    if len(c) != 3 or not all(isinstance(v, int) and 0 <= v <= 255 for v in c):
        raise ValueError(f"not an RGB color: {c!r}")


@dataclass(frozen=True, slots=True)
class IndexedImage:
    """Index array plus ordered palette; immutable value semantics.

    ``indices`` is a row-major bytes object of length width*height, each
    entry referencing a palette slot.
    """

    width: int
    height: int
    indices: bytes
    palette: Palette

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("dimensions must be positive")
        if len(self.indices) != self.width * self.height:
            raise ValueError(
                f"{len(self.indices)} indices for {self.width}x{self.height} pixels"
            )
        if not 1 <= len(self.palette) <= MAX_PALETTE:
            raise PaletteSizeError(f"palette length {len(self.palette)} outside 1..{MAX_PALETTE}")
        for c in self.palette:
            _check_color(c)
        if max(self.indices) >= len(self.palette):
            raise IndexOutOfRangeError(
                f"index {max(self.indices)} outside palette of {len(self.palette)}"
            )

    def index_at(self, x: int, y: int) -> int:
        return self.indices[y * self.width + x]


@dataclass(frozen=True, slots=True)
class RgbImage:
    """Row-major RGB pixels, three bytes per pixel."""

    width: int
    height: int
    pixels: bytes

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("dimensions must be positive")
        if len(self.pixels) != 3 * self.width * self.height:
            raise ValueError(
                f"{len(self.pixels)} pixel bytes for {self.width}x{self.height} pixels"
            )

    def pixel_at(self, x: int, y: int) -> Rgb:
        o = 3 * (y * self.width + x)
        return (self.pixels[o], self.pixels[o + 1], self.pixels[o + 2])

    def iter_pixels(self) -> Iterator[Rgb]:
        px = self.pixels
        for o in range(0, len(px), 3):
            yield (px[o], px[o + 1], px[o + 2])


def render(img: IndexedImage) -> RgbImage:
    """RGB appearance of an indexed image: pixel = palette[index]."""
    triples = [bytes(c) for c in img.palette]
    pixels = b"".join(map(triples.__getitem__, img.indices))
    return RgbImage(img.width, img.height, pixels)


def quantize_first_occurrence(rgb: RgbImage) -> IndexedImage:
    """Deterministic lossless inverse of render.

    The palette lists the distinct colors in row-major first-occurrence
    order; rendering the result reproduces *rgb* exactly.  More than 256
    distinct colors cannot be indexed losslessly and raise
    TooManyColorsError (lossy quantization is out of scope).
    """
    slot_of: dict[bytes, int] = {}
    palette: list[Rgb] = []
    indices = bytearray(rgb.width * rgb.height)
    px = rgb.pixels
    for i in range(rgb.width * rgb.height):
        triple = px[3 * i : 3 * i + 3]
        slot = slot_of.get(triple)
        if slot is None:
            slot = len(palette)
            if slot >= MAX_PALETTE:
                raise TooManyColorsError(f"more than {MAX_PALETTE} distinct colors")
            slot_of[triple] = slot
            palette.append((triple[0], triple[1], triple[2]))
        indices[i] = slot
    return IndexedImage(rgb.width, rgb.height, bytes(indices), tuple(palette))


def canonicalize(img: IndexedImage) -> IndexedImage:
    """Canonical cover form: quantize_first_occurrence(render(img)).

    Renders identically to *img*; duplicate palette colors are merged and
    unused entries dropped, since neither carries recoverable order
    information.  Idempotent.
    """
    return quantize_first_occurrence(render(img))


def natural_key(c: Rgb) -> int:
    """GIF-Shuffle-compatible total order on colors: 65536*R + 256*G + B."""
    _check_color(c)
    return (c[0] << 16) | (c[1] << 8) | c[2]


def apply_permutation(img: IndexedImage, p: Sequence[int]) -> IndexedImage:
    """Move the color in palette slot i to slot p(i), reindexing the data set.

    Old index i becomes new index p(i), so the rendered RGB is unchanged
    pixel-for-pixel.  The degree of p must equal the palette length.
    """
    p = check_permutation(p)
    n = len(img.palette)
    if len(p) != n:
        raise DegreeMismatchError(f"permutation degree {len(p)} != palette length {n}")
    new_palette: list[Rgb | None] = [None] * n
    for i, color in enumerate(img.palette):
        new_palette[p[i]] = color
    table = bytes(p) + bytes(range(n, 256))
    return IndexedImage(
        img.width, img.height, img.indices.translate(table), tuple(new_palette)
    )


def negative(img: IndexedImage) -> IndexedImage:
    """The negative of a 256-color image: slot and index i -> 255 - i.

    An involution, and the full-reversal special case of
    apply_permutation; the rendered RGB appearance is unchanged.
    """
    if len(img.palette) != 256:
        raise PaletteSizeError("negative requires a 256-entry palette")
    return apply_permutation(img, tuple(255 - i for i in range(256)))


def used_palette_entries(img: IndexedImage) -> tuple[tuple[int, ...], Palette]:
    """Palette slots actually referenced by the data set, in stored order.

    Returns (slots, colors).  GIF writers pad palettes to power-of-two
    sizes; the pads are never referenced, so this is the stored palette
    order restricted to entries that can carry information.
    """
    used = sorted(set(img.indices))
    return tuple(used), tuple(img.palette[i] for i in used)
