"""Classical reference implementations of AES-128 and S-AES (encryption only).

Everything the circuit builders claim to compute is checked against this
module.  It also exports the finite-field constants and matrices the
builders share, so there is exactly one place where bit conventions live.

Conventions (used consistently by builders, simulator helpers and tests):

* AES block/key: 16 bytes.  State byte ``i`` sits at row ``i % 4``,
  column ``i // 4`` (column-major, as in the standard).
* Bits inside a byte are most-significant-first whenever a byte is
  expanded into a vector or onto circuit wires: component 0 = bit 7.
* S-AES block/key: 16 bits, four nibbles ``n0..n3`` most-significant
  first; the 2x2 nibble state is column-major ``[[n0, n2], [n1, n3]]``.
* Nibble vectors are most-significant-first: component 0 = bit 3.
"""

from __future__ import annotations

import numpy as np

# --------------------------------------------------------------------------
# GF(2^8), modulus x^8 + x^4 + x^3 + x + 1 (0x11B)

AES_MODULUS = 0x11B


def gf256_mul(a: int, b: int) -> int:
    """Multiply in GF(2^8) modulo 0x11B."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        if a & 0x100:
            a ^= AES_MODULUS
        b >>= 1
    return r


def gf256_inv(a: int) -> int:
    """Multiplicative inverse in GF(2^8), with inv(0) = 0."""
    if a == 0:
        return 0
    # a^254 = a^-1 in GF(2^8)
    r = 1
    p = a
    e = 254
    while e:
        if e & 1:
            r = gf256_mul(r, p)
        p = gf256_mul(p, p)
        e >>= 1
    return r


def _rotl8(b: int, n: int) -> int:
    return ((b << n) | (b >> (8 - n))) & 0xFF


def _aes_sbox_entry(v: int) -> int:
    b = gf256_inv(v)
    return b ^ _rotl8(b, 1) ^ _rotl8(b, 2) ^ _rotl8(b, 3) ^ _rotl8(b, 4) ^ 0x63


# Hard-coded copy of the standard table, used only as a cross-check against
# the field-arithmetic construction above (see sbox_tables()).
AES_SBOX_TABLE = bytes((
    0x63, 0x7C, 0x77, 0x7B, 0xF2, 0x6B, 0x6F, 0xC5, 0x30, 0x01, 0x67, 0x2B, 0xFE, 0xD7, 0xAB, 0x76,
    0xCA, 0x82, 0xC9, 0x7D, 0xFA, 0x59, 0x47, 0xF0, 0xAD, 0xD4, 0xA2, 0xAF, 0x9C, 0xA4, 0x72, 0xC0,
    0xB7, 0xFD, 0x93, 0x26, 0x36, 0x3F, 0xF7, 0xCC, 0x34, 0xA5, 0xE5, 0xF1, 0x71, 0xD8, 0x31, 0x15,
    0x04, 0xC7, 0x23, 0xC3, 0x18, 0x96, 0x05, 0x9A, 0x07, 0x12, 0x80, 0xE2, 0xEB, 0x27, 0xB2, 0x75,
    0x09, 0x83, 0x2C, 0x1A, 0x1B, 0x6E, 0x5A, 0xA0, 0x52, 0x3B, 0xD6, 0xB3, 0x29, 0xE3, 0x2F, 0x84,
    0x53, 0xD1, 0x00, 0xED, 0x20, 0xFC, 0xB1, 0x5B, 0x6A, 0xCB, 0xBE, 0x39, 0x4A, 0x4C, 0x58, 0xCF,
    0xD0, 0xEF, 0xAA, 0xFB, 0x43, 0x4D, 0x33, 0x85, 0x45, 0xF9, 0x02, 0x7F, 0x50, 0x3C, 0x9F, 0xA8,
    0x51, 0xA3, 0x40, 0x8F, 0x92, 0x9D, 0x38, 0xF5, 0xBC, 0xB6, 0xDA, 0x21, 0x10, 0xFF, 0xF3, 0xD2,
    0xCD, 0x0C, 0x13, 0xEC, 0x5F, 0x97, 0x44, 0x17, 0xC4, 0xA7, 0x7E, 0x3D, 0x64, 0x5D, 0x19, 0x73,
    0x60, 0x81, 0x4F, 0xDC, 0x22, 0x2A, 0x90, 0x88, 0x46, 0xEE, 0xB8, 0x14, 0xDE, 0x5E, 0x0B, 0xDB,
    0xE0, 0x32, 0x3A, 0x0A, 0x49, 0x06, 0x24, 0x5C, 0xC2, 0xD3, 0xAC, 0x62, 0x91, 0x95, 0xE4, 0x79,
    0xE7, 0xC8, 0x37, 0x6D, 0x8D, 0xD5, 0x4E, 0xA9, 0x6C, 0x56, 0xF4, 0xEA, 0x65, 0x7A, 0xAE, 0x08,
    0xBA, 0x78, 0x25, 0x2E, 0x1C, 0xA6, 0xB4, 0xC6, 0xE8, 0xDD, 0x74, 0x1F, 0x4B, 0xBD, 0x8B, 0x8A,
    0x70, 0x3E, 0xB5, 0x66, 0x48, 0x03, 0xF6, 0x0E, 0x61, 0x35, 0x57, 0xB9, 0x86, 0xC1, 0x1D, 0x9E,
    0xE1, 0xF8, 0x98, 0x11, 0x69, 0xD9, 0x8E, 0x94, 0x9B, 0x1E, 0x87, 0xE9, 0xCE, 0x55, 0x28, 0xDF,
    0x8C, 0xA1, 0x89, 0x0D, 0xBF, 0xE6, 0x42, 0x68, 0x41, 0x99, 0x2D, 0x0F, 0xB0, 0x54, 0xBB, 0x16,
))

SBOX256 = bytes(_aes_sbox_entry(v) for v in range(256))

AES_RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)


def aes128_key_schedule(key: bytes) -> list[bytes]:
    """Expand a 16-byte key into the 44 schedule words (4 bytes each)."""
    if len(key) != 16:
        raise ValueError("AES-128 key must be 16 bytes")
    words = [key[4 * i:4 * i + 4] for i in range(4)]
    for i in range(4, 44):
        t = words[i - 1]
        if i % 4 == 0:
            t = bytes(SBOX256[t[(j + 1) % 4]] for j in range(4))
            t = bytes([t[0] ^ AES_RCON[i // 4 - 1], t[1], t[2], t[3]])
        words.append(bytes(a ^ b for a, b in zip(words[i - 4], t)))
    return words


def _aes_sub_bytes(s: bytes) -> bytes:
    return bytes(SBOX256[b] for b in s)


def _aes_shift_rows(s: bytes) -> bytes:
    # state[r + 4c] -> picks up the byte from column (c + r) mod 4
    out = bytearray(16)
    for c in range(4):
        for r in range(4):
            out[r + 4 * c] = s[r + 4 * ((c + r) % 4)]
    return bytes(out)


def shiftrows_byte_permutation() -> list[int]:
    """dest[i] = src[perm[i]] for the ShiftRows byte shuffle."""
    return [(i % 4) + 4 * (((i // 4) + (i % 4)) % 4) for i in range(16)]


def _aes_mix_single_column(col: bytes) -> bytes:
    a0, a1, a2, a3 = col
    return bytes((
        gf256_mul(2, a0) ^ gf256_mul(3, a1) ^ a2 ^ a3,
        a0 ^ gf256_mul(2, a1) ^ gf256_mul(3, a2) ^ a3,
        a0 ^ a1 ^ gf256_mul(2, a2) ^ gf256_mul(3, a3),
        gf256_mul(3, a0) ^ a1 ^ a2 ^ gf256_mul(2, a3),
    ))


def _aes_mix_columns(s: bytes) -> bytes:
    out = bytearray()
    for c in range(4):
        out += _aes_mix_single_column(s[4 * c:4 * c + 4])
    return bytes(out)


def _xor_bytes(a: bytes, b: bytes) -> bytes:
    return bytes(x ^ y for x, y in zip(a, b))


def aes128_round_states(key: bytes, pt: bytes) -> list[bytes]:
    """All intermediate states: entry i is the state at the start of round i+1.

    Index 0 is the state after the initial AddRoundKey; index 10 is the
    ciphertext.
    """
    words = aes128_key_schedule(key)
    round_keys = [b"".join(words[4 * i:4 * i + 4]) for i in range(11)]
    s = _xor_bytes(pt, round_keys[0])
    states = [s]
    for rnd in range(1, 10):
        s = _aes_mix_columns(_aes_shift_rows(_aes_sub_bytes(s)))
        s = _xor_bytes(s, round_keys[rnd])
        states.append(s)
    s = _xor_bytes(_aes_shift_rows(_aes_sub_bytes(s)), round_keys[10])
    states.append(s)
    return states


def aes128_encrypt(key: bytes, pt: bytes) -> bytes:
    """Standard AES-128 encryption of one 16-byte block."""
    if len(pt) != 16:
        raise ValueError("AES-128 block must be 16 bytes")
    return aes128_round_states(key, pt)[10]


# --------------------------------------------------------------------------
# GF(2^4), modulus x^4 + x + 1 (0x13)

SAES_MODULUS = 0x13


def gf16_mul(a: int, b: int) -> int:
    """Multiply in GF(2^4) modulo 0x13."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        if a & 0x10:
            a ^= SAES_MODULUS
        b >>= 1
    return r


def gf16_inv(a: int) -> int:
    """Multiplicative inverse in GF(2^4), with inv(0) = 0."""
    if a == 0:
        return 0
    for b in range(1, 16):
        if gf16_mul(a, b) == 1:
            return b
    raise AssertionError("unreachable")


# S-AES S-box = affine transform of the GF(2^4) inverse.  The affine part is
# written column-wise: out = SAES_AFFINE_C ^ xor of SAES_AFFINE_COLS[j] over
# set bits j of the inverse.
SAES_AFFINE_COLS = (0xD, 0xB, 0x7, 0xE)  # images of bits 0..3
SAES_AFFINE_C = 0x9

# Hard-coded copy of the standard table, cross-check only.
SAES_SBOX_TABLE = (0x9, 0x4, 0xA, 0xB, 0xD, 0x1, 0x8, 0x5,
                   0x6, 0x2, 0x0, 0x3, 0xC, 0xE, 0xF, 0x7)


def _saes_sbox_entry(v: int) -> int:
    b = gf16_inv(v)
    out = SAES_AFFINE_C
    for j in range(4):
        if (b >> j) & 1:
            out ^= SAES_AFFINE_COLS[j]
    return out


SBOX16 = tuple(_saes_sbox_entry(v) for v in range(16))


def sbox_tables() -> tuple[bytes, tuple[int, ...]]:
    """(SBOX256, SBOX16), both computed from field inversion + affine map.

    Raises if either disagrees with its hard-coded standard table.
    """
    if SBOX256 != AES_SBOX_TABLE:
        raise AssertionError("constructed AES S-box disagrees with the standard table")
    if SBOX16 != SAES_SBOX_TABLE:
        raise AssertionError("constructed S-AES S-box disagrees with the standard table")
    return SBOX256, SBOX16


SAES_RCON = (0x80, 0x30)


def saes_key_schedule(key: int) -> tuple[int, int, int]:
    """Round keys (K0, K1, K2) for a 16-bit S-AES key."""
    if not 0 <= key <= 0xFFFF:
        raise ValueError("S-AES key must be 16 bits")
    w = [key >> 8, key & 0xFF]

    def g(byte: int, rcon: int) -> int:
        rot = ((byte << 4) | (byte >> 4)) & 0xFF
        sub = (SBOX16[rot >> 4] << 4) | SBOX16[rot & 0xF]
        return sub ^ rcon

    w.append(w[0] ^ g(w[1], SAES_RCON[0]))
    w.append(w[2] ^ w[1])
    w.append(w[2] ^ g(w[3], SAES_RCON[1]))
    w.append(w[4] ^ w[3])
    return ((w[0] << 8) | w[1], (w[2] << 8) | w[3], (w[4] << 8) | w[5])


def _saes_nibbles(block: int) -> list[int]:
    return [(block >> 12) & 0xF, (block >> 8) & 0xF, (block >> 4) & 0xF, block & 0xF]


def _saes_block(n: list[int]) -> int:
    return (n[0] << 12) | (n[1] << 8) | (n[2] << 4) | n[3]


def saes_encrypt(key: int, pt: int) -> int:
    """Standard 2-round S-AES encryption of a 16-bit block."""
    if not 0 <= pt <= 0xFFFF:
        raise ValueError("S-AES block must be 16 bits")
    k0, k1, k2 = saes_key_schedule(key)

    n = _saes_nibbles(pt ^ k0)
    # round 1: SubNibbles, ShiftRow, MixColumns, AddRoundKey
    n = [SBOX16[v] for v in n]
    n[1], n[3] = n[3], n[1]
    n = [n[0] ^ gf16_mul(4, n[1]), gf16_mul(4, n[0]) ^ n[1],
         n[2] ^ gf16_mul(4, n[3]), gf16_mul(4, n[2]) ^ n[3]]
    s = _saes_block(n) ^ k1
    # round 2: SubNibbles, ShiftRow, AddRoundKey (no MixColumns)
    n = [SBOX16[v] for v in _saes_nibbles(s)]
    n[1], n[3] = n[3], n[1]
    return _saes_block(n) ^ k2


# --------------------------------------------------------------------------
# Normal-basis GF(2^4) inversion and the basis-mapping matrix.
#
# Nibble vectors are most-significant-first: component 0 = bit 3.

# Polynomial basis -> normal basis.
POLY_TO_NORMAL = ((0, 1, 1, 1),
                  (0, 1, 0, 1),
                  (1, 0, 0, 1),
                  (0, 0, 1, 1))


def _mat4_apply(m: tuple, v: int) -> int:
    """Apply a 4x4 GF(2) matrix to a nibble (MSB-first components)."""
    out = 0
    for i in range(4):
        bit = 0
        for j in range(4):
            bit ^= m[i][j] & (v >> (3 - j))
        out |= (bit & 1) << (3 - i)
    return out


def _mat4_inverse(m: tuple) -> tuple:
    rows = [list(r) + [1 if i == j else 0 for j in range(4)] for i, r in enumerate(m)]
    for col in range(4):
        piv = next(r for r in range(col, 4) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        for r in range(4):
            if r != col and rows[r][col]:
                rows[r] = [a ^ b for a, b in zip(rows[r], rows[col])]
    return tuple(tuple(r[4:]) for r in rows)


NORMAL_TO_POLY = _mat4_inverse(POLY_TO_NORMAL)


def poly_to_normal(v: int) -> int:
    return _mat4_apply(POLY_TO_NORMAL, v)


def normal_to_poly(v: int) -> int:
    return _mat4_apply(NORMAL_TO_POLY, v)


def gf16_inverse_normal_basis(x: int) -> int:
    """GF(2^4) inversion expressed in the normal basis.

    Input and output nibbles are normal-basis coordinate vectors
    (x1..x4 = bits 3..0).  Evaluates the four Boolean coordinate
    formulas directly; inv(0) = 0 because every monomial vanishes.
    """
    x1, x2, x3, x4 = (x >> 3) & 1, (x >> 2) & 1, (x >> 1) & 1, x & 1
    y1 = (x2 & x3 & x4) ^ (x1 & x3) ^ (x2 & x3) ^ x3 ^ x4
    y2 = (x1 & x3 & x4) ^ (x1 & x3) ^ (x2 & x3) ^ (x2 & x4) ^ x4
    y3 = (x1 & x2 & x4) ^ (x1 & x3) ^ (x1 & x4) ^ x1 ^ x2
    y4 = (x1 & x2 & x3) ^ (x1 & x3) ^ (x1 & x4) ^ (x2 & x4) ^ x2
    return (y1 << 3) | (y2 << 2) | (y3 << 1) | y4


# --------------------------------------------------------------------------
# MixColumns as GF(2) matrices (bit-level, MSB-first within each byte/nibble)


def _byte_mul_matrix(c: int) -> np.ndarray:
    """8x8 GF(2) matrix of multiplication by c in GF(2^8)."""
    m = np.zeros((8, 8), dtype=np.uint8)
    for j in range(8):
        col = gf256_mul(c, 1 << (7 - j))
        for i in range(8):
            m[i, j] = (col >> (7 - i)) & 1
    return m


def aes_mixcolumns_matrix() -> np.ndarray:
    """32x32 GF(2) matrix of MixColumns on one column (4 bytes, MSB-first)."""
    coeffs = ((2, 3, 1, 1), (1, 2, 3, 1), (1, 1, 2, 3), (3, 1, 1, 2))
    m = np.zeros((32, 32), dtype=np.uint8)
    for br in range(4):
        for bc in range(4):
            m[8 * br:8 * br + 8, 8 * bc:8 * bc + 8] = _byte_mul_matrix(coeffs[br][bc])
    return m


def _nibble_mul_matrix(c: int) -> np.ndarray:
    m = np.zeros((4, 4), dtype=np.uint8)
    for j in range(4):
        col = gf16_mul(c, 1 << (3 - j))
        for i in range(4):
            m[i, j] = (col >> (3 - i)) & 1
    return m


def saes_mixcolumns_matrix() -> np.ndarray:
    """8x8 GF(2) matrix of S-AES MixColumns on one column (2 nibbles)."""
    m = np.zeros((8, 8), dtype=np.uint8)
    m[0:4, 0:4] = _nibble_mul_matrix(1)
    m[0:4, 4:8] = _nibble_mul_matrix(4)
    m[4:8, 0:4] = _nibble_mul_matrix(4)
    m[4:8, 4:8] = _nibble_mul_matrix(1)
    return m
