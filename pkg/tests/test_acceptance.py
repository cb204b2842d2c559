"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; plain `pytest -v` shows the same pass/fail status per test.
"""

import itertools
import math
import random
import struct
import time

from palstego import (
    Framing,
    IdentityMode,
    IndexedImage,
    StegoConfig,
    apply_permutation,
    apply_pad,
    canonicalize,
    capacity,
    embed,
    extract,
    from_factoradic,
    inversions_of,
    keygen,
    negative,
    pack_binary_image,
    permutation_from_inversions,
    rank,
    render,
    to_factoradic,
    unpack_binary_image,
    unrank,
)
from palstego.bitops import bits_to_int
from palstego.codecs import (
    lzw_decode,
    lzw_encode,
    read_gif,
    read_png,
    write_gif,
    write_png,
)
from helpers import (
    random_canonical_cover,
    random_indexed_image,
    random_message,
)

ALL_CONFIGS = [
    StegoConfig(mode, framing) for mode in IdentityMode for framing in Framing
]


def report(number: int, text: str) -> None:
    print(f"\nACCEPTANCE {number}: PASS - {text}")


def test_criterion_1_lehmer_factoradic_exhaustive_bijection():
    """rank/unrank and digits/inversions round-trip over all n! permutations
    for n <= 8; rank equals the brute-force lexicographic index for n <= 7."""
    start = time.monotonic()
    for n in range(1, 9):
        fact = math.factorial(n)
        # itertools.permutations enumerates in lexicographic order, which is
        # the independent rank oracle (asserted per-index for n <= 7)
        for i, p in enumerate(itertools.permutations(range(n))):
            if n <= 7:
                assert rank(p) == i
            assert unrank(rank(p), n) == p
            assert permutation_from_inversions(inversions_of(p)) == p
        for m in range(fact):
            assert rank(unrank(m, n)) == m
        for m in range(fact):
            assert from_factoradic(to_factoradic(m, n)) == m
    elapsed = time.monotonic() - start
    assert elapsed < 30.0, f"took {elapsed:.1f}s"
    report(1, f"exhaustive bijections for n<=8, lex oracle for n<=7 ({elapsed:.1f}s)")


def test_criterion_2_worked_example_253_not_251():
    """The worked example: inversions of (2,0,4,1,5,3) are (2,0,2,0,1,0)
    and its rank is 253.  The value 251 sometimes quoted for this digit
    vector is arithmetically wrong: 2*5! + 2*3! + 1*1! = 253, and 251's
    digits are (2,0,1,2,1,0).  The tests follow the arithmetic."""
    p = (2, 0, 4, 1, 5, 3)
    assert inversions_of(p) == (2, 0, 2, 0, 1, 0)
    enumeration_rank = sorted(itertools.permutations(range(6))).index(p)
    assert enumeration_rank == 253
    assert rank(p) == 253
    # documentation of the erroneous printed value, not an assertion of it:
    assert rank(p) != 251
    assert to_factoradic(251, 6).most_significant_first == (2, 0, 1, 2, 1, 0)
    report(2, "inversions (2,0,2,0,1,0); rank 253 by enumeration (the quoted 251 is a misprint)")


def test_criterion_3_full_inversion_identity():
    """unrank(n!-1, n) is the full reversal, exactly, for n in 2..9 and 256."""
    for n in list(range(2, 10)) + [256]:
        reversal = tuple(range(n - 1, -1, -1))
        assert unrank(math.factorial(n) - 1, n) == reversal
        assert rank(reversal) == math.factorial(n) - 1
    report(3, "n!-1 <-> full reversal for n in 2..9 and n=256")


def test_criterion_4_capacity():
    """capacity(256) = 1683 by exact comparison; its bit-length bound is
    1684; a 1681-bit (41x41) message fits; all n <= 256 match the oracle."""
    start = time.monotonic()
    f256 = math.factorial(256)
    assert (1 << 1683) <= f256 < (1 << 1684)
    assert capacity(256) == 1683
    assert f256.bit_length() == 1684  # the ceiling-style bound
    assert 41 * 41 <= capacity(256)

    for n in range(1, 257):
        f = math.factorial(n)
        bits = 0
        while (1 << (bits + 1)) <= f:
            bits += 1
        assert capacity(n) == bits
    elapsed = time.monotonic() - start
    assert elapsed < 5.0, f"took {elapsed:.1f}s"
    report(4, f"capacity(256)=1683; oracle agreement for n<=256 ({elapsed:.1f}s)")


def test_criterion_5_and_6_full_scale_end_to_end():
    """100 randomized trials at full scale:
    256-distinct-color canonical covers (128x128), random 41x41 binary
    messages, all four identity/framing combinations, stored to PNG and
    GIF, re-read, extracted blindly, with pixel-exact stealth; and (6)
    the stego image canonicalizes back to the cover."""
    rng = random.Random(0xACC5)
    start = time.monotonic()
    eq2_checked = 0
    for trial in range(100):
        cfg = ALL_CONFIGS[trial % 4]
        cover = random_canonical_cover(rng, 128, 128, 256)
        pattern = unpack_binary_image(random_message(rng, 41 * 41), 41, 41)
        msg = pack_binary_image(pattern)
        stego = embed(cover, msg, cfg)
        assert render(stego) == render(cover)

        for codec_write, codec_read in ((write_png, read_png), (write_gif, read_gif)):
            reread = codec_read(codec_write(stego)).image
            expected = len(msg) if cfg.framing is Framing.RAW else None
            got = extract(reread, cfg, expected)  # no cover in sight
            assert got == msg
            assert unpack_binary_image(got, 41, 41) == pattern
            assert render(reread) == render(cover)
            if cfg.identity_mode is IdentityMode.FIRST_OCCURRENCE:
                assert canonicalize(reread) == canonicalize(cover)
                eq2_checked += 1
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    report(5, f"100 blind PNG+GIF round trips at 256 colors ({elapsed:.1f}s)")
    report(6, f"stego canonicalizes to cover in all {eq2_checked} first-occurrence reads")


def test_criterion_7_negative_properties():
    """The negative of a canonical 256-color image renders identically,
    equals apply_permutation with i -> 255-i, and extracting it raw at
    full capacity yields the bits of 256!-1.  Note 256!-1 spans 1684 bits
    while the capacity is 1683, so the readable message is its low 1683
    bits (rank itself is asserted exactly)."""
    rng = random.Random(0xACC7)
    cover = random_canonical_cover(rng, 128, 128, 256)
    neg = negative(cover)
    assert render(neg) == render(cover)
    assert neg == apply_permutation(cover, tuple(255 - i for i in range(256)))
    assert negative(neg) == cover

    slot_of = {c: j for j, c in enumerate(neg.palette)}
    p = tuple(slot_of[c] for c in cover.palette)
    assert rank(p) == math.factorial(256) - 1

    cfg = StegoConfig(IdentityMode.FIRST_OCCURRENCE, Framing.RAW)
    bits = extract(neg, cfg, capacity(256))
    assert len(bits) == 1683
    assert bits_to_int(bits) == (math.factorial(256) - 1) % (1 << 1683)
    report(7, "negative: render-exact, i->255-i, reads the bits of 256!-1")


def test_criterion_8_codec_bit_exactness():
    """PNG and GIF round trips on 1000 randomized images (unsorted
    palettes included); independent CRC-32 verification of PNG chunks;
    LZW decode(encode(s)) = s on random index streams, alphabets 2..256."""
    rng = random.Random(0xACC8)

    def crc32_reference(data: bytes) -> int:
        crc = 0xFFFFFFFF
        for byte in data:
            crc ^= byte
            for _ in range(8):
                crc = (0xEDB88320 ^ (crc >> 1)) if crc & 1 else crc >> 1
        return crc ^ 0xFFFFFFFF

    start = time.monotonic()
    for trial in range(1000):
        n = rng.choice([1, 2, 3, 4, 7, 8, 16, 31, 32, 100, 128, 200, 255, 256])
        img = random_indexed_image(
            rng, width=rng.randrange(1, 16), height=rng.randrange(1, 16), palette_len=n
        )
        if trial % 3 == 0:
            # deliberately unsorted: descending natural order
            pal = tuple(sorted(img.palette, key=lambda c: -(c[0] << 16 | c[1] << 8 | c[2])))
            img = IndexedImage(img.width, img.height, img.indices, pal)

        png = write_png(img)
        assert read_png(png).image == img
        if trial % 50 == 0:
            pos = 8
            while pos < len(png):
                (length,) = struct.unpack_from(">I", png, pos)
                ctype = png[pos + 4 : pos + 8]
                (stored,) = struct.unpack_from(">I", png, pos + 8 + length)
                assert stored == crc32_reference(png[pos + 4 : pos + 8 + length])
                pos += 12 + length

        back = read_gif(write_gif(img)).image
        if n & (n - 1) == 0 and n > 1:
            assert back == img  # power-of-two tables round-trip exactly
        else:
            # non-power-of-two palettes come back padded with black; order,
            # values and indices are otherwise untouched
            assert back.indices == img.indices
            assert back.palette[:n] == img.palette
            assert all(c == (0, 0, 0) for c in back.palette[n:])

    for _ in range(200):
        alphabet = rng.randrange(2, 257)
        mcs = max(2, (alphabet - 1).bit_length())
        seq = bytes(rng.randrange(alphabet) for _ in range(rng.randrange(0, 3000)))
        assert lzw_decode(lzw_encode(seq, mcs), mcs) == seq
    elapsed = time.monotonic() - start
    report(8, f"1000 PNG/GIF round trips, CRCs verified, 200 LZW streams ({elapsed:.1f}s)")


def test_criterion_9_otp():
    """Involution on 10000 random (message, key) pairs, and a padded
    embed/extract recovers the plaintext end to end."""
    rng = random.Random(0xACC9)
    for _ in range(10000):
        n = rng.randrange(0, 257)
        m = random_message(rng, n)
        k = random_message(rng, n)
        assert apply_pad(apply_pad(m, k), k) == m
    # a full-length pair as well
    m = random_message(rng, 1681)
    k = random_message(rng, 1681)
    assert apply_pad(apply_pad(m, k), k) == m

    cover = random_canonical_cover(rng, 128, 128, 256)
    msg = random_message(rng, 1681)
    key = keygen(1681)
    cfg = StegoConfig(IdentityMode.NATURAL_SORT, Framing.RAW)
    stego_bytes = write_gif(embed(cover, apply_pad(msg, key), cfg))
    ciphertext = extract(read_gif(stego_bytes).image, cfg, 1681)
    assert ciphertext != msg  # the pad actually changed something
    assert apply_pad(ciphertext, key) == msg
    report(9, "involution on 10000 pairs; padded embed/extract end-to-end")
