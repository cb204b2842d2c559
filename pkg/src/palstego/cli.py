"""Command-line surface: embed, extract, capacity, inspect, negative, keygen.

Exit codes: 0 success, 2 capacity exceeded, 3 codec error, 4 duplicate
colors in strict mode, 5 palette mismatch on extraction, 1 anything else.
Diagnostics go to stderr; data goes to files or stdout only.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import re
import sys

from . import codecs
from .bitops import pack_bits, unpack_bits
from .errors import (
    CapacityExceededError,
    CodecError,
    DuplicateColorError,
    PalstegoError,
    PaletteMismatchError,
)
from .lehmer import format_permutation, rank
from .otp import apply_pad, decode_key_file, encode_key_file, keygen, keygen_seeded
from .palette_image import (
    IndexedImage,
    canonicalize,
    natural_key,
    negative,
    render,
    used_palette_entries,
)
from .stego import (
    Framing,
    IdentityMode,
    StegoConfig,
    capacity,
    embed,
    extract,
    pack_binary_image,
    unpack_binary_image,
)

SEED_ENV = "PALSTEGO_SEED"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CAPACITY = 2
EXIT_CODEC = 3
EXIT_DUPLICATE = 4
EXIT_MISMATCH = 5

BINARY_PALETTE = ((0, 0, 0), (255, 255, 255))


def _parse_shape(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)x(\d+)", text)
    if not m or int(m.group(1)) < 1 or int(m.group(2)) < 1:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}, expected WxH")
    return int(m.group(1)), int(m.group(2))


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--identity",
        choices=[m.value for m in IdentityMode],
        default=IdentityMode.FIRST_OCCURRENCE.value,
        help="identity ordering convention (default: %(default)s)",
    )
    p.add_argument(
        "--framing",
        choices=[f.value for f in Framing],
        default=Framing.RAW.value,
        help="message framing (default: %(default)s)",
    )
    p.add_argument("--otp", metavar="KEYFILE", help="one-time-pad key file")
    p.add_argument("--format", choices=codecs.FORMATS, help="override format inference")


def _config(args: argparse.Namespace) -> StegoConfig:
    return StegoConfig(IdentityMode(args.identity), Framing(args.framing))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palstego",
        description="Hide bit strings in the palette order of indexed images.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="embed a message into a cover image")
    p.add_argument("cover")
    p.add_argument("-m", "--message", required=True, help="message file")
    p.add_argument("-o", "--output", required=True, help="stego image file")
    length = p.add_mutually_exclusive_group()
    length.add_argument("--bits", type=int,
                        help="message length in bits (message file is raw bytes)")
    length.add_argument("--shape", type=_parse_shape, metavar="WxH",
                        help="message file is a two-color indexed image of this size")
    p.add_argument("--strict", action="store_true",
                   help="fail instead of merging duplicate used palette colors")
    _add_config_flags(p)

    p = sub.add_parser("extract", help="blindly extract a message from a stego image")
    p.add_argument("stego")
    p.add_argument("-o", "--output", required=True, help="output file ('-' for stdout)")
    length = p.add_mutually_exclusive_group()
    length.add_argument("--bits", type=int, help="expected message length (raw framing)")
    length.add_argument("--shape", type=_parse_shape, metavar="WxH",
                        help="write the message as a WxH binary image")
    _add_config_flags(p)

    p = sub.add_parser("capacity", help="print distinct color count and bit capacity")
    p.add_argument("image")
    p.add_argument("--format", choices=codecs.FORMATS)

    p = sub.add_parser("inspect", help="show image structure")
    p.add_argument("image")
    p.add_argument("--palette", action="store_true", help="list palette entries")
    p.add_argument("--natural-keys", action="store_true", help="include natural keys")
    p.add_argument("--render-hash", action="store_true",
                   help="print only the SHA-256 of the rendered RGB pixels")
    p.add_argument("--permutation", choices=[m.value for m in IdentityMode],
                   help="print the permutation from this identity ordering to the stored order")
    p.add_argument("--format", choices=codecs.FORMATS)

    p = sub.add_parser("negative", help="write the 256-color negative of an image")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--format", choices=codecs.FORMATS)

    p = sub.add_parser("keygen", help="write a one-time-pad key file")
    p.add_argument("length", type=int, help="key length in bits")
    p.add_argument("output")
    return parser


def _read_message_bits(args: argparse.Namespace) -> tuple[int, ...]:
    if args.shape is not None:
        w, h = args.shape
        mimg = codecs.read_image(args.message, args.format).image
        if (mimg.width, mimg.height) != (w, h):
            raise PalstegoError(
                f"message image is {mimg.width}x{mimg.height}, expected {w}x{h}"
            )
        if max(mimg.indices) > 1:
            raise PalstegoError("message image is not two-color (indices must be 0/1)")
        return pack_binary_image(unpack_binary_image(tuple(mimg.indices), w, h))
    with open(args.message, "rb") as fh:
        data = fh.read()
    bits = args.bits if args.bits is not None else 8 * len(data)
    return unpack_bits(data, bits)


def _load_pad(args: argparse.Namespace) -> tuple[int, ...] | None:
    if not args.otp:
        return None
    with open(args.otp, "rb") as fh:
        return decode_key_file(fh.read())


def _cmd_embed(args: argparse.Namespace) -> int:
    cover = codecs.read_image(args.cover, args.format).image
    msg = _read_message_bits(args)
    key = _load_pad(args)
    if key is not None:
        msg = apply_pad(msg, key)
    stego = embed(cover, msg, _config(args), strict=args.strict)
    codecs.write_image(args.output, stego, args.format)
    n = len(canonicalize(cover).palette)
    print(f"embedded {len(msg)} of {capacity(n)} available bits "
          f"({n} distinct colors)", file=sys.stderr)
    return EXIT_OK


def _binary_image_file(bits: tuple[int, ...], w: int, h: int) -> IndexedImage:
    img = unpack_binary_image(bits, w, h)
    return IndexedImage(w, h, bytes(img.bits), BINARY_PALETTE)


def _cmd_extract(args: argparse.Namespace) -> int:
    stego = codecs.read_image(args.stego, args.format).image
    expected = None
    if args.bits is not None:
        expected = args.bits
    elif args.shape is not None:
        expected = args.shape[0] * args.shape[1]
    msg = extract(stego, _config(args), expected)
    key = _load_pad(args)
    if key is not None:
        msg = apply_pad(msg, key)
    if args.shape is not None:
        w, h = args.shape
        codecs.write_image(args.output, _binary_image_file(msg, w, h), args.format)
    elif args.output == "-":
        sys.stdout.buffer.write(pack_bits(msg))
    else:
        with open(args.output, "wb") as fh:
            fh.write(pack_bits(msg))
    print(f"extracted {len(msg)} bits", file=sys.stderr)
    return EXIT_OK


def _cmd_capacity(args: argparse.Namespace) -> int:
    image = codecs.read_image(args.image, args.format).image
    n = len(canonicalize(image).palette)
    print(f"distinct colors: {n}")
    print(f"capacity: {capacity(n)} bits")
    return EXIT_OK


def _render_digest(image: IndexedImage) -> str:
    rgb = render(image)
    return hashlib.sha256(
        f"{rgb.width}x{rgb.height}:".encode() + rgb.pixels
    ).hexdigest()


def _identity_palette(image: IndexedImage, mode: IdentityMode):
    if mode is IdentityMode.FIRST_OCCURRENCE:
        return canonicalize(image).palette
    _, stored = used_palette_entries(image)
    return tuple(sorted(stored, key=natural_key))


def _cmd_inspect(args: argparse.Namespace) -> int:
    decoded = codecs.read_image(args.image, args.format)
    image = decoded.image
    if args.render_hash:
        print(_render_digest(image))
        return EXIT_OK
    slots, stored = used_palette_entries(image)
    n = len(set(stored))
    print(f"format: {decoded.format}")
    print(f"size: {image.width}x{image.height}")
    print(f"palette: {len(image.palette)} entries, {len(slots)} used, {n} distinct used")
    print(f"capacity: {capacity(n)} bits")
    if args.palette:
        for i, (r, g, b) in enumerate(image.palette):
            suffix = f"  key={natural_key((r, g, b))}" if args.natural_keys else ""
            print(f"  [{i:3d}] {r:3d} {g:3d} {b:3d}{suffix}")
    if args.permutation:
        identity = _identity_palette(image, IdentityMode(args.permutation))
        slot_of = {c: j for j, c in enumerate(stored)}
        if len(set(stored)) == len(stored) == len(identity):
            p = tuple(slot_of[c] for c in identity)
            print(f"permutation ({args.permutation}): {format_permutation(p)}")
            print(f"rank: {rank(p)}")
        else:
            print(f"permutation ({args.permutation}): not recoverable "
                  "(duplicate used palette colors)")
    print(f"render sha256: {_render_digest(image)}")
    return EXIT_OK


def _cmd_negative(args: argparse.Namespace) -> int:
    image = codecs.read_image(args.input, args.format).image
    codecs.write_image(args.output, negative(image), args.format)
    return EXIT_OK


def _cmd_keygen(args: argparse.Namespace) -> int:
    seed = os.environ.get(SEED_ENV)
    if seed is not None:
        key = keygen_seeded(args.length, int(seed))
        print(f"WARNING: deterministic key from {SEED_ENV} (test mode)", file=sys.stderr)
    else:
        key = keygen(args.length)
    with open(args.output, "wb") as fh:
        fh.write(encode_key_file(key))
    print(f"wrote {len(key)}-bit key to {args.output}", file=sys.stderr)
    return EXIT_OK


_HANDLERS = {
    "embed": _cmd_embed,
    "extract": _cmd_extract,
    "capacity": _cmd_capacity,
    "inspect": _cmd_inspect,
    "negative": _cmd_negative,
    "keygen": _cmd_keygen,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except CapacityExceededError as exc:
        print(f"palstego: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except DuplicateColorError as exc:
        print(f"palstego: duplicate colors: {exc}", file=sys.stderr)
        return EXIT_DUPLICATE
    except PaletteMismatchError as exc:
        print(f"palstego: palette mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except CodecError as exc:
        print(f"palstego: codec error: {exc}", file=sys.stderr)
        return EXIT_CODEC
    except (PalstegoError, OSError, ValueError, OverflowError) as exc:
        print(f"palstego: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
