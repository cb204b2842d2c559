"""Indexed PNG (color type 3) reader/writer.

Reads bit depths 1/2/4/8 (widened to 8), all five scanline filters, and
multiple IDAT chunks; every chunk's CRC-32 is verified.  Writes bit depth
8, filter 0 on every scanline, a single IDAT, and the PLTE in the image's
palette order, byte-for-byte deterministically.
"""

from __future__ import annotations

import struct
import zlib

from ..errors import (
    ChecksumError,
    CodecError,
    PaletteSizeError,
    SignatureError,
    UnsupportedColorTypeError,
)
from ..palette_image import IndexedImage, Palette
from .common import CodecImage

__all__ = ["read_png", "write_png", "PNG_SIGNATURE"]

PNG_SIGNATURE = bytes((137, 80, 78, 71, 13, 10, 26, 10))

_COLOR_TYPE_INDEXED = 3


def _iter_chunks(data: bytes):
    pos = len(PNG_SIGNATURE)
    while pos < len(data):
        if pos + 8 > len(data):
            raise CodecError("truncated chunk header")
        (length,) = struct.unpack_from(">I", data, pos)
        ctype = data[pos + 4 : pos + 8]
        body = data[pos + 8 : pos + 8 + length]
        if len(body) != length or pos + 12 + length > len(data):
            raise CodecError(f"truncated {ctype!r} chunk")
        (stored_crc,) = struct.unpack_from(">I", data, pos + 8 + length)
        if zlib.crc32(ctype + body) != stored_crc:
            raise ChecksumError(f"CRC mismatch in {ctype.decode('latin-1')} chunk")
        yield ctype, body
        pos += 12 + length


def _unfilter(raw: bytes, height: int, stride: int) -> bytearray:
    """Undo per-scanline filtering; previous row is all zeros for row 0.

    For sub-byte depths the 'left' distance is one byte, per the standard.
    """
    if len(raw) != height * (stride + 1):
        raise CodecError(f"decompressed data is {len(raw)} bytes, expected {height * (stride + 1)}")
    out = bytearray(height * stride)
    for y in range(height):
        ftype = raw[y * (stride + 1)]
        row = raw[y * (stride + 1) + 1 : (y + 1) * (stride + 1)]
        o = y * stride
        if ftype == 0:
            out[o : o + stride] = row
        elif ftype == 1:  # Sub
            prev = 0
            for x in range(stride):
                prev = (row[x] + prev) & 0xFF
                out[o + x] = prev
        elif ftype == 2:  # Up
            for x in range(stride):
                out[o + x] = (row[x] + out[o - stride + x]) & 0xFF if y else row[x]
        elif ftype == 3:  # Average
            for x in range(stride):
                a = out[o + x - 1] if x else 0
                b = out[o - stride + x] if y else 0
                out[o + x] = (row[x] + (a + b) // 2) & 0xFF
        elif ftype == 4:  # Paeth
            for x in range(stride):
                a = out[o + x - 1] if x else 0
                b = out[o - stride + x] if y else 0
                c = out[o - stride + x - 1] if y and x else 0
                p = a + b - c
                pa, pb, pc = abs(p - a), abs(p - b), abs(p - c)
                if pa <= pb and pa <= pc:
                    pred = a
                elif pb <= pc:
                    pred = b
                else:
                    pred = c
                out[o + x] = (row[x] + pred) & 0xFF
        else:
            raise CodecError(f"unknown filter type {ftype} on scanline {y}")
    return out


def _widen(rows: bytearray, width: int, height: int, depth: int, stride: int) -> bytes:
    """Expand packed sub-byte indices to one byte per pixel."""
    if depth == 8:
        return bytes(rows)
    per_byte = 8 // depth
    mask = (1 << depth) - 1
    out = bytearray(width * height)
    for y in range(height):
        base = y * stride
        for x in range(width):
            byte = rows[base + x // per_byte]
            shift = 8 - depth * (x % per_byte + 1)
            out[y * width + x] = (byte >> shift) & mask
    return bytes(out)


def read_png(data: bytes) -> CodecImage:
    """Decode an indexed PNG, preserving palette order exactly."""
    if data[:8] != PNG_SIGNATURE:
        raise SignatureError("not a PNG: bad 8-byte signature")

    header = None
    palette: Palette | None = None
    idat = bytearray()
    for ctype, body in _iter_chunks(data):
        if ctype == b"IHDR":
            header = struct.unpack(">IIBBBBB", body)
        elif ctype == b"PLTE":
            if len(body) % 3 or not 3 <= len(body) <= 768:
                raise CodecError(f"PLTE length {len(body)} is not a valid palette")
            palette = tuple(
                (body[i], body[i + 1], body[i + 2]) for i in range(0, len(body), 3)
            )
        elif ctype == b"IDAT":
            idat.extend(body)
        elif ctype == b"IEND":
            break
        elif not ctype[0] & 0x20:
            raise CodecError(f"unsupported critical chunk {ctype.decode('latin-1')}")
        # ancillary chunks (tRNS, tEXt, ...) are skipped

    if header is None:
        raise CodecError("missing IHDR chunk")
    width, height, depth, color_type, compression, filter_method, interlace = header
    if width < 1 or height < 1:
        raise CodecError(f"empty image area {width}x{height}")
    if color_type != _COLOR_TYPE_INDEXED:
        raise UnsupportedColorTypeError(f"color type {color_type}, expected indexed (3)")
    if depth not in (1, 2, 4, 8):
        raise CodecError(f"bit depth {depth} is invalid for an indexed PNG")
    if compression != 0 or filter_method != 0:
        raise CodecError("unknown compression/filter method")
    if interlace != 0:
        raise CodecError("interlaced PNG is not supported")
    if palette is None:
        raise CodecError("missing PLTE chunk")
    if not idat:
        raise CodecError("missing IDAT data")

    try:
        raw = zlib.decompress(bytes(idat))
    except zlib.error as exc:
        raise CodecError(f"bad zlib stream: {exc}") from None

    stride = (width * depth + 7) // 8
    indices = _widen(_unfilter(raw, height, stride), width, height, depth, stride)
    if max(indices) >= len(palette):
        raise CodecError(f"pixel index {max(indices)} outside {len(palette)}-entry palette")

    image = IndexedImage(width, height, indices, palette)
    return CodecImage(image, "png", bit_depth=depth)


def _chunk(ctype: bytes, body: bytes) -> bytes:
    return struct.pack(">I", len(body)) + ctype + body + struct.pack(">I", zlib.crc32(ctype + body))


def write_png(img: CodecImage | IndexedImage) -> bytes:
    """Encode as color type 3, depth 8, filter 0, single IDAT."""
    image = img.image if isinstance(img, CodecImage) else img
    if len(image.palette) > 256:
        raise PaletteSizeError(f"{len(image.palette)} palette entries exceed 256")

    ihdr = struct.pack(">IIBBBBB", image.width, image.height, 8, _COLOR_TYPE_INDEXED, 0, 0, 0)
    plte = b"".join(bytes(c) for c in image.palette)
    raw = b"".join(
        b"\x00" + image.indices[y * image.width : (y + 1) * image.width]
        for y in range(image.height)
    )
    # fixed compression level: output must be deterministic for golden tests
    idat = zlib.compress(raw, 9)
    return (
        PNG_SIGNATURE
        + _chunk(b"IHDR", ihdr)
        + _chunk(b"PLTE", plte)
        + _chunk(b"IDAT", idat)
        + _chunk(b"IEND", b"")
    )
