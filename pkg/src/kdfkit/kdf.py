"""Key derivation functions built on the MAC constructions.

Three families:

* counter-mode KDF in the style of NIST SP 800-108, with HMAC-SHA256 or
  AES-128-CMAC as the pluggable PRF
* KMAC-based KDF: KMAC with customization string "KDF"
* the IEEE 1609.2.1 counter KDF used for butterfly key expansion, built
  directly on AES-128 in ECB fashion

All functions are pure; no derived material is cached.
"""

import enum

from . import cmac as cmac_mod
from . import hmac as hmac_mod
from . import kmac as kmac_mod
from .primitives import AesBlockCipher

KDF_LABEL = b"KDF"

# Binary widths of the counter and length fields inside each PRF input.
# Both are big-endian; other profiles can pass different widths.
COUNTER_WIDTH = 4
LENGTH_WIDTH = 4

PURPOSE_SIGNING = 1
PURPOSE_ENCRYPTION = 2

# Four-byte expansion pads selected by the purpose flag. The encryption pad
# byte is a named constant so a different profile needs only this edit.
SIGNING_PAD = b"\x00" * 4
ENCRYPTION_PAD = b"\x11" * 4

IEEE_INDEX_LEN = 4
IEEE_OUTPUT_LEN = 48


class PrfChoice(enum.Enum):
    """PRF selector for the counter-mode KDF, with output block size B."""

    HMAC_SHA256 = 32
    CMAC_AES128 = 16

    @property
    def block_len(self) -> int:
        return self.value

    def __call__(self, key: bytes, msg: bytes) -> bytes:
        if self is PrfChoice.HMAC_SHA256:
            return hmac_mod.hmac(key, msg)
        return cmac_mod.cmac(key, msg)


def counter_kdf(
    prf: PrfChoice,
    key: bytes,
    msg: bytes,
    out_len: int,
    counter_width: int = COUNTER_WIDTH,
    length_width: int = LENGTH_WIDTH,
) -> bytes:
    """Counter-mode KDF: concatenated PRF outputs, truncated to ``out_len`` bytes.

    Block i (1-based) is PRF(key, counter(i) || "KDF" || 0x00 || msg || enc(out_len))
    with counter and length as big-endian fields of the given widths.
    """
    if out_len < 1:
        raise ValueError("requested output length must be at least 1 byte")
    try:
        length_field = out_len.to_bytes(length_width, "big")
    except OverflowError:
        raise ValueError(f"output length {out_len} does not fit in {length_width} bytes") from None
    n_blocks = -(-out_len // prf.block_len)
    out = bytearray()
    for i in range(1, n_blocks + 1):
        block_input = i.to_bytes(counter_width, "big") + KDF_LABEL + b"\x00" + msg + length_field
        out += prf(key, block_input)
    return bytes(out[:out_len])


def kmac_kdf(key: bytes, msg: bytes, out_len_bits: int,
             variant: kmac_mod.KmacVariant = kmac_mod.KmacVariant.KMAC128) -> bytes:
    """KMAC with customization "KDF": one sponge pass for any output length."""
    params = kmac_mod.KmacParams(variant, out_len_bits, KDF_LABEL)
    return kmac_mod.kmac(key, msg, params)


def ieee_kdf(key: bytes, i_value: bytes, j_value: bytes, purpose: int) -> bytes:
    """IEEE 1609.2.1-style counter KDF; always 48 bytes.

    The base block is pad(purpose) || i_value || j_value || 0x00000000; for
    i in 1..3 the block plus i (128-bit big-endian addition, wrapping) is
    encrypted with AES-128 and XORed back onto itself. AES runs in raw ECB
    fashion here by construction; the inputs are public indices, not secrets.
    """
    if len(i_value) != IEEE_INDEX_LEN or len(j_value) != IEEE_INDEX_LEN:
        raise ValueError(f"i_value and j_value must be {IEEE_INDEX_LEN} bytes each")
    if purpose == PURPOSE_SIGNING:
        pad = SIGNING_PAD
    elif purpose == PURPOSE_ENCRYPTION:
        pad = ENCRYPTION_PAD
    else:
        raise ValueError(f"purpose must be {PURPOSE_SIGNING} or {PURPOSE_ENCRYPTION}")
    cipher = AesBlockCipher(key)
    base = int.from_bytes(pad + i_value + j_value + bytes(4), "big")
    out = bytearray()
    for i in (1, 2, 3):
        block = ((base + i) % (1 << 128)).to_bytes(16, "big")
        encrypted = cipher.encrypt_block(block)
        out += bytes(a ^ b for a, b in zip(encrypted, block))
    return bytes(out)
