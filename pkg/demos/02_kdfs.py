#!/usr/bin/env python3
"""Derive 48 pseudorandom bytes with each of the four KDF families.

Shows what each family feeds its underlying primitive: the counter-mode
block structure, the KMAC customization shortcut, and the IEEE-style
AES-and-XOR expansion blocks used for butterfly key expansion.
"""

from kdfkit.cmac import cmac
from kdfkit.hmac import hmac
from kdfkit.kdf import (
    PURPOSE_ENCRYPTION,
    PURPOSE_SIGNING,
    PrfChoice,
    counter_kdf,
    ieee_kdf,
    kmac_kdf,
)
from kdfkit.kmac import kmac128

key = bytes.fromhex("8899aabbccddeeff0011223344556677")
context = b"session context"

print("== four KDFs, 48 bytes each ==")
hmac_out = counter_kdf(PrfChoice.HMAC_SHA256, key, context, 48)
cmac_out = counter_kdf(PrfChoice.CMAC_AES128, key, context, 48)
kmac_out = kmac_kdf(key, context, 384)
ieee_out = ieee_kdf(key, b"\x00\x00\x00\x07", b"\x00\x00\x00\x2a", PURPOSE_SIGNING)
print("counter mode, HMAC PRF :", hmac_out.hex())
print("counter mode, CMAC PRF :", cmac_out.hex())
print("KMAC based             :", kmac_out.hex())
print("IEEE 1609.2.1 style    :", ieee_out.hex())
print()

# Counter mode: block i is PRF(key, counter || "KDF" || 0x00 || msg || length).
# 48 bytes from a 32-byte PRF means two blocks, the second truncated.
print("== counter-mode block structure (HMAC PRF) ==")
for i in (1, 2):
    block_input = i.to_bytes(4, "big") + b"KDF" + b"\x00" + context + (48).to_bytes(4, "big")
    print(f"block {i} input :", block_input.hex())
    print(f"block {i} tag   :", hmac(key, block_input).hex())
manual = (hmac(key, (1).to_bytes(4, "big") + b"KDF\x00" + context + (48).to_bytes(4, "big"))
          + hmac(key, (2).to_bytes(4, "big") + b"KDF\x00" + context + (48).to_bytes(4, "big")))
assert hmac_out == manual[:48]
print("concatenate and truncate to 48: OK")
print()

# The CMAC PRF emits 16-byte blocks, so the same 48 bytes need three calls.
blocks = [cmac(key, i.to_bytes(4, "big") + b"KDF\x00" + context + (48).to_bytes(4, "big"))
          for i in (1, 2, 3)]
assert cmac_out == b"".join(blocks)
print("CMAC PRF: three 16-byte blocks, no truncation needed: OK")
print()

# The KMAC KDF is just KMAC with customization string "KDF" -- one sponge
# pass no matter how much output is requested.
assert kmac_out == kmac128(key, context, 384, b"KDF")
print('KMAC KDF == KMAC128 with S="KDF": OK')
print()

# The IEEE construction derives three blocks as AES(k, block) XOR block,
# where the block encodes purpose, period index i and key index j.
print("== IEEE expansion values across key indices ==")
for j in range(3):
    out = ieee_kdf(key, b"\x00\x00\x00\x07", j.to_bytes(4, "big"), PURPOSE_SIGNING)
    print(f"i=7 j={j} :", out[:16].hex(), "...")

signing = ieee_kdf(key, bytes(4), bytes(4), PURPOSE_SIGNING)
encryption = ieee_kdf(key, bytes(4), bytes(4), PURPOSE_ENCRYPTION)
assert signing != encryption
print("signing vs encryption purpose flags give unrelated outputs: OK")
