"""One-time pad: keygen, involution, key file format."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from palstego import (
    Framing,
    IdentityMode,
    KeyFileError,
    LengthMismatchError,
    StegoConfig,
    apply_pad,
    decode_key_file,
    embed,
    encode_key_file,
    extract,
    keygen,
    keygen_seeded,
)
from palstego.bitops import pack_bits
from helpers import random_canonical_cover, random_message


class TestKeygen:
    def test_empty(self):
        assert keygen(0) == ()

    def test_length_contract(self):
        key = keygen(1681)
        assert len(key) == 1681
        assert all(b in (0, 1) for b in key)

    def test_negative_length(self):
        with pytest.raises(ValueError):
            keygen(-1)

    def test_seeded_mode_reproducible_golden(self):
        key = keygen_seeded(64, 1234)
        assert pack_bits(key).hex() == "c3ec8668559cd9a4"
        assert keygen_seeded(64, 1234) == key

    def test_seeded_differs_by_seed(self):
        assert keygen_seeded(64, 1) != keygen_seeded(64, 2)


class TestApplyPad:
    def test_zero_key_is_identity(self):
        msg = (1, 0, 1, 1)
        assert apply_pad(msg, (0, 0, 0, 0)) == msg

    def test_self_key_zeroes(self):
        msg = (1, 0, 1, 1)
        assert apply_pad(msg, msg) == (0, 0, 0, 0)

    def test_involution_random(self):
        rng = random.Random(40)
        for _ in range(50):
            n = rng.randrange(0, 300)
            m, k = random_message(rng, n), random_message(rng, n)
            assert apply_pad(apply_pad(m, k), k) == m

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            apply_pad((1, 0), (1,))

    def test_rejects_non_bits(self):
        with pytest.raises(ValueError):
            apply_pad((2,), (0,))


def test_uniformity_smoke():
    """Chi-square sanity check: padded output bits are ~50/50.

    Pooled over 200 keys x 1024 bits; threshold 23.9 is the 1e-6 tail of
    chi-square with 1 dof, so a false failure is essentially impossible.
    """
    rng = random.Random(41)
    msg = random_message(random.Random(999), 1024)
    ones = 0
    total = 0
    for _ in range(200):
        key = random_message(rng, 1024)
        out = apply_pad(msg, key)
        ones += sum(out)
        total += len(out)
    expected = total / 2
    chi2 = (ones - expected) ** 2 / expected + ((total - ones) - expected) ** 2 / expected
    assert chi2 < 23.9


class TestKeyFile:
    def test_round_trip(self):
        key = keygen_seeded(131, 7)
        assert decode_key_file(encode_key_file(key)) == key

    def test_golden_bytes(self):
        data = encode_key_file(keygen_seeded(12, 99))
        assert data.hex() == "4f54504b45590001000000000000000c1090"

    def test_empty_key_file(self):
        data = encode_key_file(())
        assert decode_key_file(data) == ()
        assert len(data) == 16

    def test_header_layout(self):
        data = encode_key_file((1, 0, 1))
        assert data[:8] == b"OTPKEY\x00\x01"
        assert int.from_bytes(data[8:16], "big") == 3
        assert data[16:] == bytes([0b10100000])

    def test_bad_magic(self):
        with pytest.raises(KeyFileError):
            decode_key_file(b"NOTAKEY\x01" + bytes(8))

    def test_truncated_body(self):
        good = encode_key_file(keygen_seeded(64, 3))
        with pytest.raises(KeyFileError):
            decode_key_file(good[:-1])


def test_pad_then_embed_then_extract_recovers_plaintext():
    rng = random.Random(42)
    cfg = StegoConfig(IdentityMode.FIRST_OCCURRENCE, Framing.LENGTH_PREFIXED)
    cover = random_canonical_cover(rng, 20, 20, 256)
    msg = random_message(rng, 600)
    key = keygen_seeded(600, 1717)
    stego = embed(cover, apply_pad(msg, key), cfg)
    assert apply_pad(extract(stego, cfg), key) == msg


@given(st.lists(st.integers(0, 1)).map(tuple), st.data())
def test_involution_property(msg, data):
    key = tuple(data.draw(st.lists(st.integers(0, 1), min_size=len(msg), max_size=len(msg))))
    assert apply_pad(apply_pad(msg, key), key) == msg
