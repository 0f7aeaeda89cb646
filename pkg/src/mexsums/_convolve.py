"""Exact polynomial convolution backends.

Two strategies, chosen by estimated work:

* support-pair loop: iterate nonzero terms only; wins whenever one operand
  is sparse (pentagonal series have O(sqrt N) support);
* Kronecker substitution: pack coefficients into fixed-width slots of one
  huge integer and let GMP multiply.  Exact for any coefficient size; this
  is what makes censuses at N = 10^6 run in seconds.

All arithmetic is integer arithmetic; numpy is used only as an exact
byte-shuffling layer for packing/unpacking small residues.
"""

from __future__ import annotations

from typing import Sequence

import gmpy2
import numpy as np

# pair-loop budget before switching to Kronecker substitution
_PAIR_WORK_LIMIT = 250_000

# triangular-recurrence budget (modular inverses switch to Newton above it)
_TRIANGULAR_WORK_LIMIT = 2_000_000


def _support(seq: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, v) for i, v in enumerate(seq) if v]


def _pair_convolve(
    sa: list[tuple[int, int]],
    sb: list[tuple[int, int]],
    out_len: int,
) -> list[int]:
    out = [0] * out_len
    for i, ai in sa:
        if i >= out_len:
            break
        for j, bj in sb:
            k = i + j
            if k >= out_len:
                break
            out[k] += ai * bj
    return out


def _pack_nonneg(vals: Sequence[int], slot_bytes: int) -> gmpy2.mpz:
    n = len(vals)
    if n == 0:
        return gmpy2.mpz(0)
    if max(vals) < 256:
        arr = np.zeros((n, slot_bytes), dtype=np.uint8)
        arr[:, 0] = vals
        return gmpy2.mpz(int.from_bytes(arr.tobytes(), "little"))
    buf = b"".join(v.to_bytes(slot_bytes, "little") for v in vals)
    return gmpy2.mpz(int.from_bytes(buf, "little"))


def _unpack_raw(value: gmpy2.mpz, out_len: int, slot_bytes: int) -> list[int]:
    buf = int(value).to_bytes(out_len * slot_bytes, "little")
    if slot_bytes <= 8:
        arr = np.frombuffer(buf, dtype=np.uint8).reshape(out_len, slot_bytes)
        powers = np.array([1 << (8 * i) for i in range(slot_bytes)], dtype=np.uint64)
        return (arr.astype(np.uint64) @ powers).tolist()
    return [
        int.from_bytes(buf[i * slot_bytes : (i + 1) * slot_bytes], "little")
        for i in range(out_len)
    ]


def _slot_bytes(bound: int) -> int:
    return bound.bit_length() // 8 + 1


def convolve_exact(a: Sequence[int], b: Sequence[int], out_len: int) -> list[int]:
    """Truncated Cauchy product of two exact integer coefficient lists."""
    if out_len <= 0 or not a or not b:
        return []
    sa, sb = _support(a), _support(b)
    if not sa or not sb:
        return [0] * out_len
    if len(sa) * len(sb) <= _PAIR_WORK_LIMIT:
        return _pair_convolve(sa, sb, out_len)

    # Kronecker substitution with sign splitting: a*b = (a+ b+ + a- b-) - (a+ b- + a- b+)
    max_a = max(abs(v) for _, v in sa)
    max_b = max(abs(v) for _, v in sb)
    overlap = min(len(a), len(b))
    slot_bytes = _slot_bytes(2 * max_a * max_b * overlap)
    a_pos = [v if v > 0 else 0 for v in a]
    a_neg = [-v if v < 0 else 0 for v in a]
    b_pos = [v if v > 0 else 0 for v in b]
    b_neg = [-v if v < 0 else 0 for v in b]
    pap, pan = _pack_nonneg(a_pos, slot_bytes), _pack_nonneg(a_neg, slot_bytes)
    pbp, pbn = _pack_nonneg(b_pos, slot_bytes), _pack_nonneg(b_neg, slot_bytes)
    plus = _unpack_raw(pap * pbp + pan * pbn, out_len, slot_bytes)
    minus = _unpack_raw(pap * pbn + pan * pbp, out_len, slot_bytes)
    return [p - q for p, q in zip(plus, minus)]


def convolve_mod(a: Sequence[int], b: Sequence[int], m: int, out_len: int) -> list[int]:
    """Truncated Cauchy product of residue lists, reduced mod m.

    Inputs must already be canonical residues in [0, m).
    """
    if out_len <= 0 or not a or not b:
        return []
    sa, sb = _support(a), _support(b)
    if not sa or not sb:
        return [0] * out_len
    if len(sa) * len(sb) <= _PAIR_WORK_LIMIT:
        return [v % m for v in _pair_convolve(sa, sb, out_len)]

    overlap = min(len(a), len(b))
    slot_bytes = _slot_bytes((m - 1) * (m - 1) * overlap)
    prod = _pack_nonneg(a, slot_bytes) * _pack_nonneg(b, slot_bytes)
    buf = int(prod).to_bytes(out_len * slot_bytes, "little")
    if slot_bytes <= 8:
        arr = np.frombuffer(buf, dtype=np.uint8).reshape(out_len, slot_bytes)
        powers = np.array([1 << (8 * i) for i in range(slot_bytes)], dtype=np.uint64)
        vals = (arr.astype(np.uint64) @ powers) % np.uint64(m)
        return vals.tolist()
    return [v % m for v in _unpack_raw(prod, out_len, slot_bytes)]


def inverse_triangular(coeffs: Sequence[int], out_len: int, m: int | None = None) -> list[int]:
    """Series inverse by the standard triangular recurrence.

    Iterates only the nonzero terms of the divisor, so a pentagonal divisor
    costs O(N sqrt N).  Exact mode requires a leading +-1; modular mode any
    unit (the caller validates both).
    """
    a0 = coeffs[0]
    inv0 = a0 if m is None else pow(a0, -1, m)
    support = [(j, v) for j, v in enumerate(coeffs) if v and 0 < j < out_len]
    out = [0] * out_len
    out[0] = inv0 if m is None else inv0 % m
    if m is None:
        for n in range(1, out_len):
            acc = 0
            for j, aj in support:
                if j > n:
                    break
                acc += aj * out[n - j]
            out[n] = -inv0 * acc
    else:
        for n in range(1, out_len):
            acc = 0
            for j, aj in support:
                if j > n:
                    break
                acc += aj * out[n - j]
            out[n] = (-inv0 * acc) % m
    return out


def inverse_mod_newton(coeffs: Sequence[int], out_len: int, m: int) -> list[int]:
    """Series inverse mod m by Newton iteration (quadratic q-adic convergence).

    Each step doubles the correct prefix: B <- B(2 - AB).  Bit-identical to
    the triangular recurrence, at Kronecker-multiplication speed.
    """
    inv0 = pow(coeffs[0], -1, m)
    b = [inv0 % m]
    k = 1
    while k < out_len:
        k2 = min(2 * k, out_len)
        t = convolve_mod(coeffs[:k2], b, m, k2)
        t[0] = (2 - t[0]) % m
        for i in range(1, len(t)):
            t[i] = -t[i] % m
        b = convolve_mod(b, t, m, k2)
        k = k2
    return b[:out_len]


def inverse_mod(coeffs: Sequence[int], out_len: int, m: int) -> list[int]:
    """Modular series inverse; picks triangular or Newton by estimated work."""
    nnz = sum(1 for v in coeffs if v)
    if out_len * max(nnz, 1) <= _TRIANGULAR_WORK_LIMIT:
        return inverse_triangular(coeffs, out_len, m)
    return inverse_mod_newton(coeffs, out_len, m)
