"""Shared generators for the test suite."""

from __future__ import annotations

import random

from palstego import IndexedImage

ALL_DISTINCT = object()


def random_palette(rng: random.Random, n: int) -> tuple[tuple[int, int, int], ...]:
    """n pairwise-distinct random colors."""
    packed = rng.sample(range(1 << 24), n)
    return tuple(((c >> 16) & 255, (c >> 8) & 255, c & 255) for c in packed)


def random_indexed_image(
    rng: random.Random,
    width: int | None = None,
    height: int | None = None,
    palette_len: int | None = None,
    pow2_palette: bool = False,
) -> IndexedImage:
    """An arbitrary valid image: palette order random, entries may go unused."""
    width = width or rng.randrange(1, 24)
    height = height or rng.randrange(1, 24)
    if palette_len is None:
        palette_len = rng.choice([1, 2, 3, 4, 5, 8, 13, 16, 40, 100, 200, 255, 256])
    if pow2_palette:
        palette_len = 1 << (palette_len - 1).bit_length() if palette_len > 1 else 2
    indices = bytes(rng.randrange(palette_len) for _ in range(width * height))
    return IndexedImage(width, height, indices, random_palette(rng, palette_len))


def random_canonical_cover(
    rng: random.Random, width: int, height: int, colors: int
) -> IndexedImage:
    """A canonical cover: distinct colors, all used, first-occurrence order.

    The first `colors` pixels enumerate the palette so first occurrences
    are in ascending slot order; the tail is random.
    """
    if colors > width * height:
        raise ValueError("more colors than pixels")
    if colors == 256:
        tail = rng.randbytes(width * height - 256)
    else:
        tail = bytes(rng.randrange(colors) for _ in range(width * height - colors))
    indices = bytes(range(colors)) + tail
    return IndexedImage(width, height, indices, random_palette(rng, colors))


def make_test_card(width: int = 128, height: int = 128) -> IndexedImage:
    """Deterministic canonical 256-distinct-color image."""
    palette = tuple((i, (i * 3) % 256, 255 - i) for i in range(256))
    indices = bytes((y * width + x) % 256 for y in range(height) for x in range(width))
    return IndexedImage(width, height, indices, palette)


def random_message(rng: random.Random, length: int) -> tuple[int, ...]:
    return tuple(rng.randrange(2) for _ in range(length))
