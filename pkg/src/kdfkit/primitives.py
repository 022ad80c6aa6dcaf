"""Low-level primitives behind narrow, byte-oriented interfaces.

Three primitives back every construction in this package:

* AES-128 forward block cipher (FIPS 197), via the ``cryptography`` package
* SHA-256 (FIPS 180-4), via ``hashlib``
* the Keccak-f[1600] permutation (FIPS 202), implemented here because no
  maintained Python library exposes the bare permutation

Everything above these (sponge framing, padding, MAC and KDF constructions)
lives in the sibling modules. All inputs and outputs are whole bytes;
bit-granular messages are not supported.
"""

import hashlib
from dataclasses import dataclass

from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

AES_BLOCK_LEN = 16
AES_KEY_LEN = 16

# Sponge rates used by the SHAKE/cSHAKE-128 (168) and -256 (136) variants.
VALID_RATES = (168, 136)

# Multi-rate padding domain bytes per FIPS 202 / SP 800-185.
SHAKE_PAD = 0x1F
CSHAKE_PAD = 0x04


@dataclass(frozen=True)
class HashSpec:
    """Parameters of a hash function usable inside HMAC.

    ``block_len`` is the input block size of the hash (64 bytes for
    SHA-256, not the 32-byte digest size), ``digest_len`` its output size.
    """

    name: str
    block_len: int
    digest_len: int

    def __post_init__(self):
        if not self.block_len > self.digest_len > 0:
            raise ValueError(
                "hash spec requires block_len > digest_len > 0, got "
                f"{self.block_len}/{self.digest_len}"
            )

    def digest(self, data: bytes) -> bytes:
        return hashlib.new(self.name, data).digest()

    def new(self):
        """Fresh incremental hash object (hashlib interface)."""
        return hashlib.new(self.name)


SHA256 = HashSpec("sha256", block_len=64, digest_len=32)


def sha256(data: bytes) -> bytes:
    """SHA-256 digest of ``data`` (FIPS 180-4)."""
    return hashlib.sha256(data).digest()


class AesBlockCipher:
    """AES-128 forward cipher bound to one key, for repeated block calls."""

    def __init__(self, key: bytes):
        if len(key) != AES_KEY_LEN:
            raise ValueError(f"AES-128 key must be {AES_KEY_LEN} bytes, got {len(key)}")
        # ECB has no chaining state, so one streaming encryptor can serve
        # any number of independent 16-byte blocks.
        self._encryptor = Cipher(algorithms.AES(key), modes.ECB()).encryptor()

    def encrypt_block(self, block: bytes) -> bytes:
        if len(block) != AES_BLOCK_LEN:
            raise ValueError(f"AES block must be {AES_BLOCK_LEN} bytes, got {len(block)}")
        return self._encryptor.update(block)


def aes_encrypt_block(key: bytes, plaintext: bytes) -> bytes:
    """AES-128 forward cipher of a single 16-byte block."""
    return AesBlockCipher(key).encrypt_block(plaintext)


# ---------------------------------------------------------------------------
# Keccak-f[1600] permutation (FIPS 202, section 3). State is 25 64-bit lanes,
# lane (x, y) stored little-endian at flat index x + 5*y.
# ---------------------------------------------------------------------------

_MASK64 = (1 << 64) - 1

_ROUND_CONSTANTS = (
    0x0000000000000001, 0x0000000000008082, 0x800000000000808A, 0x8000000080008000,
    0x000000000000808B, 0x0000000080000001, 0x8000000080008081, 0x8000000000008009,
    0x000000000000008A, 0x0000000000000088, 0x0000000080008009, 0x000000008000000A,
    0x000000008000808B, 0x800000000000008B, 0x8000000000008089, 0x8000000000008003,
    0x8000000000008002, 0x8000000000000080, 0x000000000000800A, 0x800000008000000A,
    0x8000000080008081, 0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
)

# Rho rotation offsets, flat index x + 5*y.
_ROTATIONS = (
    0, 1, 62, 28, 27,
    36, 44, 6, 55, 20,
    3, 10, 43, 25, 39,
    41, 45, 15, 21, 8,
    18, 2, 61, 56, 14,
)


def _rotl64(v, n):
    return ((v << n) | (v >> (64 - n))) & _MASK64 if n else v


def keccak_f1600(lanes: list) -> list:
    """One Keccak-f[1600] permutation over 25 64-bit lanes (new list returned)."""
    a = list(lanes)
    for rc in _ROUND_CONSTANTS:
        # theta
        c = [a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20] for x in range(5)]
        d = [c[(x - 1) % 5] ^ _rotl64(c[(x + 1) % 5], 1) for x in range(5)]
        for x in range(5):
            dx = d[x]
            for y in range(0, 25, 5):
                a[x + y] ^= dx
        # rho + pi
        b = [0] * 25
        for x in range(5):
            for y in range(5):
                i = x + 5 * y
                b[y + 5 * ((2 * x + 3 * y) % 5)] = _rotl64(a[i], _ROTATIONS[i])
        # chi
        for y in range(0, 25, 5):
            row = b[y:y + 5]
            for x in range(5):
                a[x + y] = row[x] ^ ((row[(x + 1) % 5] ^ _MASK64) & row[(x + 2) % 5])
        # iota
        a[0] ^= rc
    return a


def _permute_bytes(state: bytearray) -> bytearray:
    lanes = [int.from_bytes(state[8 * i:8 * i + 8], "little") for i in range(25)]
    lanes = keccak_f1600(lanes)
    out = bytearray(200)
    for i, lane in enumerate(lanes):
        out[8 * i:8 * i + 8] = lane.to_bytes(8, "little")
    return out


class KeccakSponge:
    """Incremental Keccak sponge over a 200-byte state.

    Single-owner: absorb in any number of calls, finalize once with a domain
    byte, then squeeze any number of output bytes. Not thread-safe.
    """

    def __init__(self, rate: int):
        if rate not in VALID_RATES:
            raise ValueError(f"sponge rate must be one of {VALID_RATES}, got {rate}")
        self.rate = rate
        self._state = bytearray(200)
        self._offset = 0  # absorb/squeeze position within the current rate block
        self._finalized = False

    def absorb(self, data: bytes) -> None:
        if self._finalized:
            raise ValueError("cannot absorb after finalize")
        state, rate = self._state, self.rate
        off = self._offset
        for byte in data:
            state[off] ^= byte
            off += 1
            if off == rate:
                self._state = state = _permute_bytes(state)
                off = 0
        self._offset = off

    def finalize(self, domain_pad: int) -> None:
        """Apply pad10*1 with the given domain byte and close absorption."""
        if self._finalized:
            raise ValueError("sponge already finalized")
        state = self._state
        state[self._offset] ^= domain_pad
        state[self.rate - 1] ^= 0x80
        self._state = _permute_bytes(state)
        self._offset = 0
        self._finalized = True

    def squeeze(self, out_len: int) -> bytes:
        if not self._finalized:
            raise ValueError("finalize before squeezing")
        out = bytearray()
        while len(out) < out_len:
            take = min(self.rate - self._offset, out_len - len(out))
            out += self._state[self._offset:self._offset + take]
            self._offset += take
            if self._offset == self.rate:
                self._state = _permute_bytes(self._state)
                self._offset = 0
        return bytes(out)


def sponge_absorb_squeeze(data: bytes, rate: int, domain_pad: int, out_len: int) -> bytes:
    """One-shot sponge: pad10*1 with ``domain_pad``, absorb at ``rate``, squeeze.

    ``domain_pad`` is 0x1F for SHAKE and 0x04 for cSHAKE with non-empty
    framing. Output is prefix-stable in ``out_len``.
    """
    if out_len <= 0:
        raise ValueError("output length must be positive")
    sponge = KeccakSponge(rate)
    sponge.absorb(data)
    sponge.finalize(domain_pad)
    return sponge.squeeze(out_len)
