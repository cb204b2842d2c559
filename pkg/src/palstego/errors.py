"""Exception hierarchy for palstego.

Every error raised on purpose by this package derives from PalstegoError,
so callers can catch the whole family with one clause.  Number-range
violations additionally derive from ValueError, and codec failures share
the CodecError base used by the CLI for its exit-code mapping.
"""


class PalstegoError(Exception):
    """Base class for all palstego errors."""


# --- factoradic / lehmer ---------------------------------------------------

class DigitRangeError(PalstegoError, ValueError):
    """A factorial digit a_k lies outside 0..k-1."""


class InvalidPermutationError(PalstegoError, ValueError):
    """A sequence is not a permutation of 0..n-1 (duplicate or out of range)."""


class InversionRangeError(PalstegoError, ValueError):
    """An inversion count t_k lies outside 0..n-k."""


# --- palette images --------------------------------------------------------

class IndexOutOfRangeError(PalstegoError, ValueError):
    """An index in the data set does not reference a palette entry."""


class TooManyColorsError(PalstegoError, ValueError):
    """An RGB image has more than 256 distinct colors; lossless indexing is impossible."""


class DegreeMismatchError(PalstegoError, ValueError):
    """A permutation's degree does not match the palette length."""


class PaletteSizeError(PalstegoError, ValueError):
    """A palette has an unsupported length for the requested operation."""


# --- stego -----------------------------------------------------------------

class CapacityExceededError(PalstegoError, ValueError):
    """The framed message does not fit in the palette's bit capacity."""


class DuplicateColorError(PalstegoError, ValueError):
    """Strict mode: two used palette slots carry the same color."""


class PaletteMismatchError(PalstegoError, ValueError):
    """The stego palette is not a permutation of the recovered identity palette."""


class FramingError(PalstegoError, ValueError):
    """A length prefix is inconsistent with the palette capacity."""


class LengthError(PalstegoError, ValueError):
    """A requested message length exceeds the palette capacity."""


class DimensionMismatchError(PalstegoError, ValueError):
    """Bit count and width*height disagree for a binary image."""


# --- one-time pad ----------------------------------------------------------

class LengthMismatchError(PalstegoError, ValueError):
    """Message and pad key lengths differ."""


class EntropyUnavailableError(PalstegoError, RuntimeError):
    """The operating system's secure random source is unavailable."""


class KeyFileError(PalstegoError, ValueError):
    """An OTP key file is malformed."""


# --- codecs ----------------------------------------------------------------

class CodecError(PalstegoError, ValueError):
    """Base class for image serialization failures."""


class SignatureError(CodecError):
    """The PNG signature bytes are wrong."""


class ChecksumError(CodecError):
    """A PNG chunk's CRC-32 does not match its contents."""


class UnsupportedColorTypeError(CodecError):
    """The PNG is not an indexed (color type 3) image this codec handles."""


class HeaderError(CodecError):
    """The GIF magic/header is wrong."""


class LzwError(CodecError):
    """The GIF LZW code stream is invalid."""


class LocalColorTableUnsupportedError(CodecError):
    """The GIF uses a local color table; only global tables are supported."""


class MultiFrameError(CodecError):
    """The GIF contains more than one image frame."""


class ParseError(CodecError):
    """A PALIMG document is malformed; message carries line/column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
