"""PALIMG: a line-oriented text format for indexed images, used in tests.

    PALIMG 1
    <width> <height> <palette_len>
    <r> <g> <b>          one line per palette entry
    <i> <i> ... <i>      one line per pixel row, width indices each

Fields are whitespace-insensitive on read; the writer emits canonical
single-space separation.  A trailing newline is required.
"""

from __future__ import annotations

import re

from ..errors import ParseError
from ..palette_image import IndexedImage
from .common import CodecImage

__all__ = ["read_palimg", "write_palimg"]

_TOKEN = re.compile(r"\S+")


class _Lines:
    """Line cursor that turns shortfalls and bad tokens into ParseError."""

    def __init__(self, text: str):
        if not text.endswith("\n"):
            raise ParseError("missing trailing newline", text.count("\n") + 1)
        self.lines = text.split("\n")[:-1]
        self.pos = 0

    def next_tokens(self, expect: int, what: str) -> list[tuple[str, int]]:
        if self.pos >= len(self.lines):
            raise ParseError(f"unexpected end of document, expected {what}", self.pos + 1)
        line_no = self.pos + 1
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(self.lines[self.pos])]
        self.pos += 1
        if len(tokens) != expect:
            col = tokens[expect][1] if len(tokens) > expect else len(self.lines[line_no - 1]) + 1
            raise ParseError(
                f"expected {expect} field(s) for {what}, found {len(tokens)}", line_no, col
            )
        return tokens

    def next_ints(self, expect: int, what: str, lo: int, hi: int) -> list[int]:
        values = []
        line_no = self.pos + 1
        for tok, col in self.next_tokens(expect, what):
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"bad integer {tok!r} in {what}", line_no, col) from None
            if not lo <= v <= hi:
                raise ParseError(f"{what} value {v} outside {lo}..{hi}", line_no, col)
            values.append(v)
        return values

    def expect_end(self) -> None:
        if self.pos != len(self.lines):
            raise ParseError("trailing content after pixel rows", self.pos + 1)


def read_palimg(text: str) -> CodecImage:
    """Parse a PALIMG document."""
    cur = _Lines(text)

    magic = cur.next_tokens(2, "magic line")
    if magic[0][0] != "PALIMG" or magic[1][0] != "1":
        raise ParseError("expected 'PALIMG 1'", 1, magic[0][1])

    header_line = cur.pos + 1
    width, height, palette_len = cur.next_ints(3, "header", 1, 2**31 - 1)
    if palette_len > 256:
        raise ParseError(f"palette length {palette_len} exceeds 256", header_line)

    palette = tuple(
        tuple(cur.next_ints(3, f"palette entry {i}", 0, 255)) for i in range(palette_len)
    )
    rows = [
        bytes(cur.next_ints(width, f"pixel row {y}", 0, palette_len - 1))
        for y in range(height)
    ]
    cur.expect_end()

    image = IndexedImage(width, height, b"".join(rows), palette)
    return CodecImage(image, "palimg")


def write_palimg(img: CodecImage | IndexedImage) -> str:
    """Serialize an image canonically (single spaces, trailing newline)."""
    image = img.image if isinstance(img, CodecImage) else img
    lines = [
        "PALIMG 1",
        f"{image.width} {image.height} {len(image.palette)}",
    ]
    lines.extend(f"{r} {g} {b}" for r, g, b in image.palette)
    for y in range(image.height):
        row = image.indices[y * image.width : (y + 1) * image.width]
        lines.append(" ".join(str(i) for i in row))
    return "\n".join(lines) + "\n"
