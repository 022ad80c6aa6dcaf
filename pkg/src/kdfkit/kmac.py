"""cSHAKE and KMAC per NIST SP 800-185.

cSHAKE prepends a bytepad-framed function name N and customization string S
to the message and switches the sponge domain byte to 0x04; with N and S
both empty it degrades to plain SHAKE. KMAC feeds the bytepad-framed key,
the message, and the right-encoded output bit length through cSHAKE with
N = "KMAC". Outputs are byte-aligned only.
"""

import enum
from dataclasses import dataclass

from .primitives import CSHAKE_PAD, SHAKE_PAD, sponge_absorb_squeeze

FUNCTION_NAME = b"KMAC"


class KmacVariant(enum.Enum):
    """Security variants and their sponge rates in bytes."""

    KMAC128 = 168
    KMAC256 = 136

    @property
    def rate(self) -> int:
        return self.value


@dataclass(frozen=True)
class KmacParams:
    variant: KmacVariant = KmacVariant.KMAC128
    out_len_bits: int = 256
    customization: bytes = b""

    def __post_init__(self):
        if self.out_len_bits <= 0:
            raise ValueError("output length must be positive")
        if self.out_len_bits % 8 != 0:
            raise ValueError("output length must be a whole number of bytes")


def left_encode(n: int) -> bytes:
    """Minimal big-endian bytes of ``n`` prefixed with their byte count."""
    if n < 0 or n >= 1 << 2040:
        raise ValueError("value out of encodable range")
    body = n.to_bytes(max(1, (n.bit_length() + 7) // 8), "big")
    return bytes([len(body)]) + body


def right_encode(n: int) -> bytes:
    """Minimal big-endian bytes of ``n`` suffixed with their byte count."""
    if n < 0 or n >= 1 << 2040:
        raise ValueError("value out of encodable range")
    body = n.to_bytes(max(1, (n.bit_length() + 7) // 8), "big")
    return body + bytes([len(body)])


def encode_string(s: bytes) -> bytes:
    """Length-prefixed string encoding: left_encode(bit length) || s."""
    return left_encode(8 * len(s)) + s


def bytepad(x: bytes, w: int) -> bytes:
    """Prefix ``x`` with left_encode(w) and zero-fill to a multiple of w."""
    padded = left_encode(w) + x
    remainder = len(padded) % w
    if remainder:
        padded += bytes(w - remainder)
    return padded


def cshake(msg: bytes, out_len_bits: int, n: bytes, s: bytes, rate: int) -> bytes:
    """cSHAKE at the given rate; equals SHAKE when N and S are both empty."""
    if out_len_bits <= 0 or out_len_bits % 8 != 0:
        raise ValueError("output length must be a positive whole number of bytes")
    out_len = out_len_bits // 8
    if not n and not s:
        return sponge_absorb_squeeze(msg, rate, SHAKE_PAD, out_len)
    prefix = bytepad(encode_string(n) + encode_string(s), rate)
    return sponge_absorb_squeeze(prefix + msg, rate, CSHAKE_PAD, out_len)


def kmac(key: bytes, msg: bytes, params: KmacParams = KmacParams()) -> bytes:
    """KMAC tag of ``msg`` under ``key``; ``out_len_bits/8`` bytes.

    The output length is absorbed via right_encode, so tags of different
    lengths are unrelated rather than truncations of each other.
    """
    rate = params.variant.rate
    framed = bytepad(encode_string(key), rate) + msg + right_encode(params.out_len_bits)
    return cshake(framed, params.out_len_bits, FUNCTION_NAME, params.customization, rate)


def kmac128(key: bytes, msg: bytes, out_len_bits: int = 256, customization: bytes = b"") -> bytes:
    return kmac(key, msg, KmacParams(KmacVariant.KMAC128, out_len_bits, customization))


def kmac256(key: bytes, msg: bytes, out_len_bits: int = 512, customization: bytes = b"") -> bytes:
    return kmac(key, msg, KmacParams(KmacVariant.KMAC256, out_len_bits, customization))
