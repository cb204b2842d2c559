"""palstego: steganography in the palette order of indexed images.

Embeds bit strings by permuting palette colors via the Lehmer code and
extracts them blindly, reconstructing the cover's identity ordering from
the stego image's own RGB appearance.
"""

from .bitops import Bits, bits_to_int, int_to_bits, pack_bits, unpack_bits
from .errors import (
    CapacityExceededError,
    ChecksumError,
    CodecError,
    DegreeMismatchError,
    DigitRangeError,
    DimensionMismatchError,
    DuplicateColorError,
    EntropyUnavailableError,
    FramingError,
    HeaderError,
    IndexOutOfRangeError,
    InvalidPermutationError,
    InversionRangeError,
    KeyFileError,
    LengthError,
    LengthMismatchError,
    LocalColorTableUnsupportedError,
    LzwError,
    MultiFrameError,
    PaletteMismatchError,
    PaletteSizeError,
    PalstegoError,
    ParseError,
    SignatureError,
    TooManyColorsError,
    UnsupportedColorTypeError,
)
from .factoradic import FactoradicDigits, factorial, from_factoradic, to_factoradic
from .lehmer import (
    InversionVector,
    Permutation,
    format_permutation,
    identity_permutation,
    inversions_of,
    parse_permutation,
    permutation_from_inversions,
    rank,
    unrank,
)
from .otp import PadKey, apply_pad, decode_key_file, encode_key_file, keygen, keygen_seeded
from .palette_image import (
    IndexedImage,
    Palette,
    Rgb,
    RgbImage,
    apply_permutation,
    canonicalize,
    natural_key,
    negative,
    quantize_first_occurrence,
    render,
    used_palette_entries,
)
from .stego import (
    BinaryImage,
    Framing,
    IdentityMode,
    Message,
    StegoConfig,
    capacity,
    embed,
    extract,
    pack_binary_image,
    unpack_binary_image,
)

__version__ = "0.1.0"
