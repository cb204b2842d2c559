"""One-time pad over bit messages: bitwise addition mod 2.

Padding the message with an equal-length random key before embedding
gives the scheme its secret; the key must come from a secure source and
must never be reused (documented, not enforced).

Key file format: 8-byte magic "OTPKEY\\x00\\x01", 8-byte big-endian bit
length, then the key bits packed MSB-first with the final partial byte
zero-padded.
"""

from __future__ import annotations

import random
import secrets

from .bitops import Bits, ensure_bits, pack_bits, unpack_bits
from .errors import EntropyUnavailableError, KeyFileError, LengthMismatchError

__all__ = [
    "PadKey",
    "keygen",
    "keygen_seeded",
    "apply_pad",
    "encode_key_file",
    "decode_key_file",
]

PadKey = Bits

KEY_MAGIC = b"OTPKEY\x00\x01"


def keygen(length: int) -> PadKey:
    """Draw *length* key bits from the OS's cryptographic random source."""
    if length < 0:
        raise ValueError("key length must be non-negative")
    try:
        raw = secrets.token_bytes((length + 7) // 8)
    except (NotImplementedError, OSError) as exc:
        raise EntropyUnavailableError("secure random source unavailable") from exc
    return unpack_bits(raw, length)


def keygen_seeded(length: int, seed: int) -> PadKey:
    """Deterministic key stream for tests ONLY; never pad real traffic with it."""
    if length < 0:
        raise ValueError("key length must be non-negative")
    rng = random.Random(seed)
    return tuple(rng.getrandbits(1) for _ in range(length))


def apply_pad(msg: Bits, key: PadKey) -> Bits:
    """XOR message and key bit by bit; self-inverse for equal lengths."""
    msg = ensure_bits(msg)
    key = ensure_bits(key)
    if len(msg) != len(key):
        raise LengthMismatchError(f"message has {len(msg)} bits, key {len(key)}")
    return tuple(a ^ b for a, b in zip(msg, key))


def encode_key_file(key: PadKey) -> bytes:
    """Serialize a pad key: magic, 64-bit big-endian bit length, packed bits."""
    key = ensure_bits(key)
    return KEY_MAGIC + len(key).to_bytes(8, "big") + pack_bits(key)


def decode_key_file(data: bytes) -> PadKey:
    """Parse a key file produced by encode_key_file."""
    if data[:8] != KEY_MAGIC:
        raise KeyFileError("bad key file magic")
    if len(data) < 16:
        raise KeyFileError("truncated key file header")
    length = int.from_bytes(data[8:16], "big")
    body = data[16:]
    if len(body) != (length + 7) // 8:
        raise KeyFileError(f"key body is {len(body)} bytes, expected {(length + 7) // 8}")
    return unpack_bits(body, length)
