"""Shared codec types.

The palette ORDER is the covert channel: codecs must round-trip palette
order, palette values and the index array bit-exactly, and must never
re-sort, deduplicate or prune palettes.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..palette_image import IndexedImage

__all__ = ["CodecImage"]


@dataclass(frozen=True, slots=True)
class CodecImage:
    """An IndexedImage plus the format metadata seen on the wire."""

    image: IndexedImage
    format: str
    bit_depth: int | None = None  # PNG: stored bit depth (1/2/4/8)
    gif_version: str | None = None  # GIF: "87a" or "89a"
    gct_size_exp: int | None = None  # GIF: global color table holds 2**exp entries
