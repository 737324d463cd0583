"""Low-level convolution and reciprocal kernels on plain coefficient lists.

Multiplication uses Kronecker substitution: coefficients are packed into
fixed-width fields of one large integer, the two integers are multiplied
once, and the convolution values are read back out of the product fields.
The big multiply goes through gmpy2 (GMP) when available; plain Python
ints are a correct, slower fallback.

Residues mod 2 additionally get a bit-packed path: a series over Z/2 is a
single integer bit mask, squaring is a bit spread (Frobenius), and Newton
reciprocal iteration needs one convolution per doubling step.
"""

from __future__ import annotations

import numpy as np

try:
    from gmpy2 import mpz

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    mpz = int
    HAVE_GMPY2 = False

# Below this many output terms a direct double loop beats packing overhead.
_SCHOOLBOOK_WORK = 1 << 13


def big_mul(x: int, y: int) -> int:
    return int(mpz(x) * mpz(y))


# ---------------------------------------------------------------------------
# Exact integer convolution


def _conv_schoolbook(a: list[int], b: list[int], out_len: int) -> list[int]:
    if len(b) < len(a):
        a, b = b, a
    res = [0] * out_len
    for i, ai in enumerate(a):
        if ai == 0 or i >= out_len:
            continue
        hi = min(len(b), out_len - i)
        for j in range(hi):
            res[i + j] += ai * b[j]
    return res


def _pack_nonneg(vals: list[int], fbytes: int) -> int:
    buf = b"".join(v.to_bytes(fbytes, "little") for v in vals)
    return int.from_bytes(buf, "little")


def conv_exact(a: list[int], b: list[int], out_len: int) -> list[int]:
    """Truncated integer convolution of two coefficient lists."""
    if out_len <= 0:
        return []
    if min(len(a), len(b)) * out_len <= _SCHOOLBOOK_WORK:
        return _conv_schoolbook(a, b, out_len)

    ap = [x if x > 0 else 0 for x in a]
    an = [-x if x < 0 else 0 for x in a]
    bp = [x if x > 0 else 0 for x in b]
    bn = [-x if x < 0 else 0 for x in b]
    ma = max(max(ap), max(an))
    mb = max(max(bp), max(bn))
    if ma == 0 or mb == 0:
        return [0] * out_len

    bound = ma * mb * min(len(a), len(b))
    fbytes = bound.bit_length() // 8 + 1
    n = min(out_len, len(a) + len(b) - 1)
    total = (len(a) + len(b)) * fbytes
    res = [0] * out_len
    for x, y, sign in ((ap, bp, 1), (an, bn, 1), (ap, bn, -1), (an, bp, -1)):
        if max(x) == 0 or max(y) == 0:
            continue
        prod = big_mul(_pack_nonneg(x, fbytes), _pack_nonneg(y, fbytes))
        raw = prod.to_bytes(total, "little")
        for i in range(n):
            v = int.from_bytes(raw[i * fbytes : (i + 1) * fbytes], "little")
            if v:
                res[i] += sign * v
    return res


# ---------------------------------------------------------------------------
# Convolution of canonical residues mod 2^w


def _field_bytes(w: int, min_len: int) -> int:
    bound = ((1 << w) - 1) ** 2 * min_len
    return bound.bit_length() // 8 + 1


def conv_mod(a: list[int], b: list[int], out_len: int, w: int) -> list[int]:
    """Truncated convolution of residues in [0, 2^w), reduced mod 2^w."""
    if out_len <= 0:
        return []
    if min(len(a), len(b)) * out_len <= _SCHOOLBOOK_WORK:
        mask = (1 << w) - 1
        return [v & mask for v in _conv_schoolbook(a, b, out_len)]

    fbytes = _field_bytes(w, min(len(a), len(b)))
    n = min(out_len, len(a) + len(b) - 1)
    if w <= 63 and fbytes <= 8:
        pa = _pack_np(a, fbytes)
        pb = _pack_np(b, fbytes)
        prod = big_mul(pa, pb)
        raw = prod.to_bytes((len(a) + len(b)) * fbytes, "little")
        arr = np.frombuffer(raw, dtype=np.uint8)[: n * fbytes]
        wide = np.zeros((n, 8), dtype=np.uint8)
        wide[:, :fbytes] = arr.reshape(n, fbytes)
        vals = wide.view("<u8").ravel() & ((1 << w) - 1)
        out = vals.tolist()
    else:
        pa = _pack_nonneg(a, fbytes)
        pb = _pack_nonneg(b, fbytes)
        raw = big_mul(pa, pb).to_bytes((len(a) + len(b)) * fbytes, "little")
        mask = (1 << w) - 1
        out = [
            int.from_bytes(raw[i * fbytes : (i + 1) * fbytes], "little") & mask
            for i in range(n)
        ]
    if out_len > n:
        out.extend([0] * (out_len - n))
    return out


def _pack_np(vals: list[int], fbytes: int) -> int:
    arr = np.asarray(vals, dtype=np.uint64)
    buf = arr.astype("<u8").view(np.uint8).reshape(len(vals), 8)[:, :fbytes]
    return int.from_bytes(buf.tobytes(), "little")


# ---------------------------------------------------------------------------
# Bit-mask helpers for series over Z/2


def bits_to_mask(bits: list[int]) -> int:
    arr = np.asarray(bits, dtype=np.uint8)
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def mask_to_bits(mask: int, n: int) -> list[int]:
    raw = mask.to_bytes((n + 7) // 8, "little")
    arr = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n]
    return arr.tolist()


def _spread_fields(mask: int, n: int, fbytes: int) -> int:
    raw = mask.to_bytes((n + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n]
    wide = np.zeros((n, fbytes), dtype=np.uint8)
    wide[:, 0] = bits
    return int.from_bytes(wide.tobytes(), "little")


def gf2_mul_masks(a: int, na: int, b: int, nb: int, out_n: int) -> int:
    """Carryless product of bit masks, truncated to out_n bits."""
    if out_n <= 0 or a == 0 or b == 0:
        return 0
    if min(na, nb) <= 256:
        if na > nb:
            a, na, b, nb = b, nb, a, na
        res = 0
        rest = a
        while rest:
            low = rest & -rest
            res ^= b << low.bit_length() - 1
            rest ^= low
        return res & ((1 << out_n) - 1)

    fbytes = min(na, nb).bit_length() // 8 + 1
    prod = big_mul(_spread_fields(a, na, fbytes), _spread_fields(b, nb, fbytes))
    n = min(out_n, na + nb - 1)
    raw = prod.to_bytes((na + nb) * fbytes, "little")
    parity = np.frombuffer(raw, dtype=np.uint8)[0 : n * fbytes : fbytes] & 1
    packed = np.packbits(parity, bitorder="little").tobytes()
    return int.from_bytes(packed, "little")


def gf2_square_mask(mask: int, n: int, out_n: int) -> int:
    """Frobenius square over Z/2: bit e moves to bit 2e."""
    if mask == 0 or out_n <= 0:
        return 0
    raw = mask.to_bytes((n + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n]
    spread = np.zeros(2 * n, dtype=np.uint8)
    spread[0::2] = bits
    spread = spread[:out_n]
    packed = np.packbits(spread, bitorder="little").tobytes()
    return int.from_bytes(packed, "little")


def gf2_invert_mask(a: int, n: int) -> int:
    """Newton reciprocal of a bit mask with constant bit 1, to n bits."""
    if not a & 1:
        raise ValueError("constant term must be 1 over Z/2")
    b = 1
    k = 1
    while k < n:
        k2 = min(2 * k, n)
        bsq = gf2_square_mask(b, k, k2)
        b = gf2_mul_masks(a & ((1 << k2) - 1), k2, bsq, k2, k2)
        k = k2
    return b


# ---------------------------------------------------------------------------
# Reciprocals


def invert_naive(a: list[int], n: int, w: int | None = None) -> list[int]:
    """Reference reciprocal by quadratic back-substitution.

    Solves b[m] from the Cauchy-product rows of a*b = 1 one exponent at a
    time.  Zero coefficients of a contribute nothing, so the inner sum
    runs over the precomputed support; the arithmetic is identical to the
    textbook O(n^2) loop.
    """
    a0 = a[0]
    if w is None:
        if a0 not in (1, -1):
            raise ValueError("constant term must be a unit (+1 or -1)")
        inv0 = a0
        modulus = None
    else:
        modulus = 1 << w
        if a0 % 2 == 0:
            raise ValueError("constant term must be odd")
        inv0 = pow(a0, -1, modulus)
    support = [k for k in range(1, min(len(a), n)) if a[k]]
    b = [0] * n
    b[0] = inv0 if modulus is None else inv0 % modulus
    for m in range(1, n):
        acc = 0
        for k in support:
            if k > m:
                break
            acc += a[k] * b[m - k]
        v = -inv0 * acc
        b[m] = v if modulus is None else v % modulus
    return b


def invert_exact(a: list[int], n: int) -> list[int]:
    """Newton reciprocal over exact integers, constant term +-1."""
    if a[0] not in (1, -1):
        raise ValueError("constant term must be a unit (+1 or -1)")
    b = [a[0]]
    k = 1
    while k < n:
        k2 = min(2 * k, n)
        ab = conv_exact(a[:k2], b, k2)
        t = [-x for x in ab]
        t[0] += 2
        b = conv_exact(b, t, k2)
        k = k2
    return b


def invert_mod(a: list[int], n: int, w: int) -> list[int]:
    """Newton reciprocal of canonical residues mod 2^w, constant term odd."""
    if a[0] % 2 == 0:
        raise ValueError("constant term must be odd")
    if w == 1:
        mask = gf2_invert_mask(bits_to_mask(a[:n]), n)
        return mask_to_bits(mask, n)
    modulus = 1 << w
    b = [pow(a[0], -1, modulus)]
    k = 1
    while k < n:
        k2 = min(2 * k, n)
        ab = conv_mod(a[:k2], b, k2, w)
        t = [(modulus - x) % modulus for x in ab]
        t[0] = (t[0] + 2) % modulus
        b = conv_mod(b, t, k2, w)
        k = k2
    return b
