"""Single-frame GIF reader/writer with a global color table.

The LZW code stream uses variable code widths, starting at minimum code
size + 1 bits and growing up to 12; codes are packed into bytes
least-significant-bit first and wrapped in sub-blocks of at most 255
bytes.  The writer emits GIF89a with no extensions; color tables are
padded to a power-of-two size with black entries (the pads are never
referenced by pixel data).

Multi-frame files, local color tables and interlacing are rejected:
palette semantics would be ambiguous for the stego channel.
"""

from __future__ import annotations

import struct

from ..errors import (
    CodecError,
    HeaderError,
    LocalColorTableUnsupportedError,
    LzwError,
    MultiFrameError,
    PaletteSizeError,
)
from ..palette_image import IndexedImage
from .common import CodecImage

__all__ = ["read_gif", "write_gif", "lzw_encode", "lzw_decode"]

_MAX_CODE = 1 << 12

_TRAILER = 0x3B
_EXTENSION = 0x21
_IMAGE_SEPARATOR = 0x2C


def lzw_encode(indices: bytes, min_code_size: int) -> bytes:
    """GIF-variant LZW compression of an index stream.

    Every symbol must be below 2**min_code_size.  When the code table
    fills (4096 entries) a clear code is emitted and the table restarts.
    """
    if not 2 <= min_code_size <= 8:
        raise ValueError("minimum code size must be in 2..8")
    clear = 1 << min_code_size
    end = clear + 1

    out = bytearray()
    acc = 0
    nbits = 0

    def emit(code: int, width: int) -> None:
        nonlocal acc, nbits
        acc |= code << nbits
        nbits += width
        while nbits >= 8:
            out.append(acc & 0xFF)
            acc >>= 8
            nbits -= 8

    width = min_code_size + 1
    table: dict[int, int] = {}
    next_code = end + 1
    emit(clear, width)

    prefix = -1
    for sym in indices:
        if sym >= clear:
            raise LzwError(f"symbol {sym} outside {clear}-entry alphabet")
        if prefix < 0:
            prefix = sym
            continue
        key = (prefix << 8) | sym
        code = table.get(key)
        if code is not None:
            prefix = code
            continue
        emit(prefix, width)
        if next_code < _MAX_CODE:
            table[key] = next_code
            next_code += 1
            # the encoder runs one table entry ahead of the decoder
            if next_code == (1 << width) + 1 and width < 12:
                width += 1
        else:
            emit(clear, width)
            width = min_code_size + 1
            table.clear()
            next_code = end + 1
        prefix = sym

    if prefix >= 0:
        emit(prefix, width)
        # the decoder registers one more entry after this final code and may
        # widen before reading the end code; mirror its bookkeeping
        if next_code < _MAX_CODE:
            next_code += 1
            if next_code == (1 << width) + 1 and width < 12:
                width += 1
    emit(end, width)
    if nbits:
        out.append(acc & 0xFF)
    return bytes(out)


def lzw_decode(data: bytes, min_code_size: int) -> bytes:
    """Inverse of lzw_encode; raises LzwError on any invalid code stream."""
    if not 2 <= min_code_size <= 8:
        raise ValueError("minimum code size must be in 2..8")
    clear = 1 << min_code_size
    end = clear + 1
    literals = [bytes((i,)) for i in range(clear)] + [b"", b""]

    acc = 0
    nbits = 0
    pos = 0

    def read(width: int) -> int:
        nonlocal acc, nbits, pos
        while nbits < width:
            if pos >= len(data):
                raise LzwError("code stream ended without an end code")
            acc |= data[pos] << nbits
            pos += 1
            nbits += 8
        code = acc & ((1 << width) - 1)
        acc >>= width
        nbits -= width
        return code

    width = min_code_size + 1
    table = list(literals)
    next_code = end + 1
    prev = b""
    out = bytearray()

    while True:
        code = read(width)
        if code == clear:
            width = min_code_size + 1
            table = list(literals)
            next_code = end + 1
            prev = b""
            continue
        if code == end:
            return bytes(out)
        if prev:
            if code < next_code:
                entry = table[code]
            elif code == next_code:
                entry = prev + prev[:1]
            else:
                raise LzwError(f"code {code} beyond table of {next_code}")
        else:
            if code >= clear:
                raise LzwError(f"first code {code} after clear is not a literal")
            entry = table[code]
        out += entry
        if prev and next_code < _MAX_CODE:
            table.append(prev + entry[:1])
            next_code += 1
            if next_code == (1 << width) and width < 12:
                width += 1
        prev = entry


def _read_subblocks(data: bytes, pos: int) -> tuple[bytes, int]:
    chunks = []
    while True:
        if pos >= len(data):
            raise CodecError("truncated sub-block sequence")
        size = data[pos]
        pos += 1
        if size == 0:
            return b"".join(chunks), pos
        if pos + size > len(data):
            raise CodecError("truncated sub-block")
        chunks.append(data[pos : pos + size])
        pos += size


def read_gif(data: bytes) -> CodecImage:
    """Decode a single-frame GIF with a global color table."""
    if len(data) < 13 or data[:3] != b"GIF":
        raise HeaderError("not a GIF: bad magic")
    version = data[3:6].decode("latin-1")
    if version not in ("87a", "89a"):
        raise HeaderError(f"unknown GIF version {version!r}")

    screen_w, screen_h, flags, _bg, _aspect = struct.unpack_from("<HHBBB", data, 6)
    if not flags & 0x80:
        raise HeaderError("no global color table")
    gct_exp = (flags & 0x07) + 1
    entries = 1 << gct_exp
    pos = 13
    if pos + 3 * entries > len(data):
        raise CodecError("truncated global color table")
    palette = tuple(
        (data[pos + 3 * i], data[pos + 3 * i + 1], data[pos + 3 * i + 2])
        for i in range(entries)
    )
    pos += 3 * entries

    image: IndexedImage | None = None
    while True:
        if pos >= len(data):
            raise CodecError("missing GIF trailer")
        block = data[pos]
        pos += 1
        if block == _TRAILER:
            break
        if block == _EXTENSION:
            pos += 1  # label byte; all extension bodies are sub-block chains
            _, pos = _read_subblocks(data, pos)
        elif block == _IMAGE_SEPARATOR:
            if image is not None:
                raise MultiFrameError("multi-frame GIF is not supported")
            left, top, width, height, iflags = struct.unpack_from("<HHHHB", data, pos)
            pos += 9
            if width < 1 or height < 1:
                raise CodecError(f"empty image area {width}x{height}")
            if iflags & 0x80:
                raise LocalColorTableUnsupportedError("local color table is not supported")
            if iflags & 0x40:
                raise CodecError("interlaced GIF is not supported")
            if (left, top) != (0, 0) or (width, height) != (screen_w, screen_h):
                raise CodecError("partial-frame GIF is not supported")
            min_code_size = data[pos]
            pos += 1
            if not 2 <= min_code_size <= 8:
                raise LzwError(f"invalid LZW minimum code size {min_code_size}")
            stream, pos = _read_subblocks(data, pos)
            indices = lzw_decode(stream, min_code_size)
            if len(indices) != width * height:
                raise LzwError(f"decoded {len(indices)} pixels, expected {width * height}")
            if max(indices) >= entries:
                raise LzwError(f"pixel index {max(indices)} outside {entries}-entry color table")
            image = IndexedImage(width, height, indices, palette)
        else:
            raise CodecError(f"unknown GIF block 0x{block:02x}")

    if image is None:
        raise CodecError("GIF contains no image")
    return CodecImage(image, "gif", gif_version=version, gct_size_exp=gct_exp)


def write_gif(img: CodecImage | IndexedImage) -> bytes:
    """Encode as GIF89a: global color table, one full frame, no extensions."""
    image = img.image if isinstance(img, CodecImage) else img
    n = len(image.palette)
    if n > 256:
        raise PaletteSizeError(f"{n} palette entries exceed 256")

    gct_exp = max(1, (n - 1).bit_length())  # table sizes are 2**k, minimum 2
    entries = 1 << gct_exp
    palette = list(image.palette) + [(0, 0, 0)] * (entries - n)

    out = bytearray()
    out += b"GIF89a"
    out += struct.pack("<HHBBB", image.width, image.height, 0xF0 | (gct_exp - 1), 0, 0)
    for color in palette:
        out += bytes(color)
    out += struct.pack("<BHHHHB", _IMAGE_SEPARATOR, 0, 0, image.width, image.height, 0)

    min_code_size = max(2, gct_exp)
    out.append(min_code_size)
    stream = lzw_encode(image.indices, min_code_size)
    for i in range(0, len(stream), 255):
        block = stream[i : i + 255]
        out.append(len(block))
        out += block
    out.append(0)
    out.append(_TRAILER)
    return bytes(out)
