"""Test-only reference implementations, independent of the package's backends.

The AES-128 here is pure Python with the S-box built from the GF(2^8)
inverse and affine transform rather than a transcribed table, so it shares
no code or data with the OpenSSL-backed production path. Slow, but only
used as a cross-check oracle.
"""


def _gf_mul(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        if a & 0x100:
            a ^= 0x11B
        b >>= 1
    return out


def _build_sbox():
    # multiplicative inverse then the affine transform; 0 maps to 0x63
    inverse = [0] * 256
    for x in range(1, 256):
        for y in range(1, 256):
            if _gf_mul(x, y) == 1:
                inverse[x] = y
                break
    sbox = []
    for x in range(256):
        b = inverse[x]
        s = b
        for shift in (1, 2, 3, 4):
            s ^= ((b << shift) | (b >> (8 - shift))) & 0xFF
        sbox.append(s ^ 0x63)
    return sbox


_SBOX = _build_sbox()
_RCON = [0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36]


def _expand_key(key):
    words = [list(key[4 * i:4 * i + 4]) for i in range(4)]
    for i in range(4, 44):
        temp = list(words[i - 1])
        if i % 4 == 0:
            temp = temp[1:] + temp[:1]
            temp = [_SBOX[b] for b in temp]
            temp[0] ^= _RCON[i // 4 - 1]
        words.append([a ^ b for a, b in zip(words[i - 4], temp)])
    return words


def _xtime(b):
    b <<= 1
    return (b ^ 0x1B) & 0xFF if b & 0x100 else b


def aes128_encrypt_block(key, block):
    """Reference AES-128 forward cipher of one 16-byte block."""
    assert len(key) == 16 and len(block) == 16
    words = _expand_key(key)
    # flat state indexed 4*c + r, matching the input byte order
    state = list(block)

    def add_round_key(s, rnd):
        for c in range(4):
            for r in range(4):
                s[4 * c + r] ^= words[4 * rnd + c][r]

    def sub_shift(s):
        s = [_SBOX[b] for b in s]
        # ShiftRows: row r (bytes r, r+4, r+8, r+12) rotates left by r
        out = list(s)
        for r in range(1, 4):
            row = [s[r + 4 * c] for c in range(4)]
            row = row[r:] + row[:r]
            for c in range(4):
                out[r + 4 * c] = row[c]
        return out

    def mix_columns(s):
        for c in range(4):
            col = s[4 * c:4 * c + 4]
            t = col[0] ^ col[1] ^ col[2] ^ col[3]
            u = col[0]
            s[4 * c + 0] ^= t ^ _xtime(col[0] ^ col[1])
            s[4 * c + 1] ^= t ^ _xtime(col[1] ^ col[2])
            s[4 * c + 2] ^= t ^ _xtime(col[2] ^ col[3])
            s[4 * c + 3] ^= t ^ _xtime(col[3] ^ u)

    add_round_key(state, 0)
    for rnd in range(1, 10):
        state = sub_shift(state)
        mix_columns(state)
        add_round_key(state, rnd)
    state = sub_shift(state)
    add_round_key(state, 10)
    return bytes(state)


def cmac_reference(key, msg):
    """Brute-force CMAC: materialize every block explicitly, fold the chain.

    Uses the reference AES above, so both the chaining logic and the cipher
    are independent of the production path.
    """
    zero = bytes(16)

    def double(block):
        value = int.from_bytes(block, "big") << 1
        if value >> 128:
            value = (value & ((1 << 128) - 1)) ^ 0x87
        return value.to_bytes(16, "big")

    k1 = double(aes128_encrypt_block(key, zero))
    k2 = double(k1)
    n = max(1, -(-len(msg) // 16))
    blocks = [msg[16 * i:16 * i + 16] for i in range(n)]
    if len(blocks[-1]) == 16:
        blocks[-1] = bytes(a ^ b for a, b in zip(blocks[-1], k1))
    else:
        padded = blocks[-1] + b"\x80" + bytes(15 - len(blocks[-1]))
        blocks[-1] = bytes(a ^ b for a, b in zip(padded, k2))
    chain = zero
    for block in blocks:
        chain = aes128_encrypt_block(key, bytes(a ^ b for a, b in zip(chain, block)))
    return chain
