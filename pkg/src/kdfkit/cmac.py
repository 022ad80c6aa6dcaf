"""AES-CMAC per NIST SP 800-38B / RFC 4493.

Two subkeys are derived from AES(key, 0^128) by doubling in GF(2^128)
(left shift with a conditional XOR of 0x87 into the last byte), the message
is cut into 16-byte blocks with 10* padding on a short final block, and the
blocks are folded through a CBC-style chain whose last ciphertext is the tag.
"""

from dataclasses import dataclass

from .primitives import AES_BLOCK_LEN, AesBlockCipher

_MSB = 0x80
_REDUCTION = 0x87  # x^128 + x^7 + x^2 + x + 1


def dbl(block: bytes) -> bytes:
    """Multiply a 16-byte block by x in GF(2^128)."""
    if len(block) != AES_BLOCK_LEN:
        raise ValueError(f"dbl needs a {AES_BLOCK_LEN}-byte block, got {len(block)}")
    shifted = (int.from_bytes(block, "big") << 1) & ((1 << 128) - 1)
    if block[0] & _MSB:
        shifted ^= _REDUCTION
    return shifted.to_bytes(16, "big")


@dataclass(frozen=True)
class SubkeyPair:
    k1: bytes
    k2: bytes


@dataclass(frozen=True)
class MessageBlocks:
    """Message split into 16-byte blocks, final block already masked."""

    blocks: tuple
    last_was_complete: bool


def derive_subkeys(key: bytes) -> SubkeyPair:
    """K1 = dbl(AES(key, 0^128)), K2 = dbl(K1)."""
    k1 = dbl(AesBlockCipher(key).encrypt_block(bytes(AES_BLOCK_LEN)))
    return SubkeyPair(k1=k1, k2=dbl(k1))


def _xor(a: bytes, b: bytes) -> bytes:
    return bytes(x ^ y for x, y in zip(a, b))


def split_and_pad(msg: bytes, subkeys: SubkeyPair) -> MessageBlocks:
    """Cut ``msg`` into blocks and mask the final one.

    A complete final block is XORed with K1; a short (or empty) final block
    gets one 0x80 byte, zero fill to 16 bytes, and an XOR with K2. The empty
    message yields the single block (80 00..00) ^ K2.
    """
    complete = len(msg) > 0 and len(msg) % AES_BLOCK_LEN == 0
    n_full = len(msg) // AES_BLOCK_LEN if complete else len(msg) // AES_BLOCK_LEN + 1
    blocks = [msg[i * AES_BLOCK_LEN:(i + 1) * AES_BLOCK_LEN] for i in range(n_full - 1)]
    last = msg[(n_full - 1) * AES_BLOCK_LEN:]
    if complete:
        blocks.append(_xor(last, subkeys.k1))
    else:
        padded = last + b"\x80" + bytes(AES_BLOCK_LEN - len(last) - 1)
        blocks.append(_xor(padded, subkeys.k2))
    return MessageBlocks(blocks=tuple(blocks), last_was_complete=complete)


def cmac(key: bytes, msg: bytes) -> bytes:
    """AES-CMAC tag of ``msg`` under a 16-byte ``key``; always 16 bytes."""
    cipher = AesBlockCipher(key)
    k1 = dbl(cipher.encrypt_block(bytes(AES_BLOCK_LEN)))
    split = split_and_pad(msg, SubkeyPair(k1=k1, k2=dbl(k1)))
    chain = bytes(AES_BLOCK_LEN)
    for block in split.blocks:
        chain = cipher.encrypt_block(_xor(chain, block))
    return chain
