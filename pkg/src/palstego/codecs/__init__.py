"""Bit-exact serialization of indexed images (PNG, GIF, PALIMG text)."""

from __future__ import annotations

import os

from ..errors import CodecError
from ..palette_image import IndexedImage
from .common import CodecImage
from .gif import lzw_decode, lzw_encode, read_gif, write_gif
from .palimg import read_palimg, write_palimg
from .png import PNG_SIGNATURE, read_png, write_png

__all__ = [
    "CodecImage",
    "read_png",
    "write_png",
    "read_gif",
    "write_gif",
    "read_palimg",
    "write_palimg",
    "lzw_encode",
    "lzw_decode",
    "PNG_SIGNATURE",
    "FORMATS",
    "format_from_path",
    "read_image",
    "write_image",
]

FORMATS = ("png", "gif", "palimg")


def format_from_path(path: str | os.PathLike) -> str | None:
    """Infer a codec format from the file extension, or None."""
    ext = os.path.splitext(os.fspath(path))[1].lower().lstrip(".")
    return ext if ext in FORMATS else None


def _resolve(path: str | os.PathLike, fmt: str | None) -> str:
    resolved = fmt or format_from_path(path)
    if resolved is None:
        raise CodecError(
            f"cannot infer format of {os.fspath(path)!r}; pass one of {', '.join(FORMATS)}"
        )
    if resolved not in FORMATS:
        raise CodecError(f"unknown format {resolved!r}")
    return resolved


def read_image(path: str | os.PathLike, fmt: str | None = None) -> CodecImage:
    """Read an indexed image file, inferring the format from the extension."""
    fmt = _resolve(path, fmt)
    if fmt == "palimg":
        with open(path, "r", encoding="utf-8") as fh:
            return read_palimg(fh.read())
    with open(path, "rb") as fh:
        data = fh.read()
    return read_png(data) if fmt == "png" else read_gif(data)


def write_image(
    path: str | os.PathLike, img: CodecImage | IndexedImage, fmt: str | None = None
) -> None:
    """Write an indexed image file, inferring the format from the extension."""
    fmt = _resolve(path, fmt)
    if fmt == "palimg":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(write_palimg(img))
        return
    data = write_png(img) if fmt == "png" else write_gif(img)
    with open(path, "wb") as fh:
        fh.write(data)
