"""Bit-string helpers shared by the stego, otp and cli modules.

A bit string is a tuple of ints, each 0 or 1, first bit most significant
wherever an integer interpretation is taken.  Packing into bytes is
MSB-first within each byte with the final partial byte zero-padded.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Bits = tuple[int, ...]


def ensure_bits(bits: Iterable[int]) -> Bits:
    """Return *bits* as a tuple, rejecting anything that is not 0 or 1."""
    out = tuple(bits)
    for b in out:
        if b not in (0, 1):
            raise ValueError(f"not a bit: {b!r}")
    return out


def bits_to_int(bits: Sequence[int]) -> int:
    """Interpret a bit string as a big-endian integer (empty string -> 0)."""
    value = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"not a bit: {b!r}")
        value = (value << 1) | b
    return value


def int_to_bits(value: int, length: int) -> Bits:
    """Big-endian bits of ``value mod 2**length``, left-padded with zeros.

    Values wider than *length* are truncated to their low *length* bits;
    this is the documented behavior when a palette permutation encodes
    more entropy than the caller asked to read back.
    """
    if value < 0:
        raise ValueError("value must be non-negative")
    if length < 0:
        raise ValueError("length must be non-negative")
    value &= (1 << length) - 1
    return tuple((value >> (length - 1 - i)) & 1 for i in range(length))


def pack_bits(bits: Sequence[int]) -> bytes:
    """Pack bits into bytes, MSB-first, zero-padding the final byte."""
    out = bytearray((len(bits) + 7) // 8)
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"not a bit: {b!r}")
        if b:
            out[i >> 3] |= 0x80 >> (i & 7)
    return bytes(out)


def unpack_bits(data: bytes, bit_count: int) -> Bits:
    """Inverse of pack_bits: the first *bit_count* bits of *data*, MSB-first."""
    if bit_count < 0:
        raise ValueError("bit_count must be non-negative")
    if bit_count > 8 * len(data):
        raise ValueError(f"{bit_count} bits requested from {len(data)} bytes")
    return tuple((data[i >> 3] >> (7 - (i & 7))) & 1 for i in range(bit_count))
