"""The specific generating functions this package is about.

q-Pochhammer products, Euler's sparse pentagonal expansion of (q;q)_inf,
the sigma-mex and sigma-moex series, and the mod-2 partition parity series
that powers the large censuses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .series import ModQSeries, QSeries

__all__ = [
    "PochhammerSpec",
    "pochhammer",
    "euler_pentagonal",
    "pentagonal_exponents",
    "partition_numbers",
    "sigma_mex_series",
    "sigma_mex_series_mod",
    "sigma_moex_series",
    "partition_parity_series",
]


@dataclass(frozen=True)
class PochhammerSpec:
    """Product spec for (sign * q^first; q^step)_inf, i.e. prod (1 - sign*q^(first+k*step)).

    sign=+1 gives the plain q-shifted factorial (q^a; q^b)_inf,
    sign=-1 the variant with all plus signs, (-q^a; q^b)_inf.
    """

    sign: int
    first: int
    step: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.first < 1 or self.step < 1:
            raise ValueError("first and step must be >= 1")


def pochhammer(spec: PochhammerSpec, prec: int) -> QSeries:
    """Truncated expansion of the infinite product described by spec.

    Only factors with exponent <= prec contribute; each is folded in with
    one O(prec) pass, so the whole product costs O(prec^2 / step).
    """
    if prec < 0:
        raise ValueError("prec must be >= 0")
    out = [0] * (prec + 1)
    out[0] = 1
    sign = spec.sign
    j = spec.first
    while j <= prec:
        # multiply in place by (1 - sign * q^j), descending so each source
        # coefficient is read before it is overwritten
        for i in range(prec, j - 1, -1):
            out[i] -= sign * out[i - j]
        j += spec.step
    return QSeries(out, offset=0, prec=prec)


def pentagonal_exponents(limit: int) -> Iterator[tuple[int, int]]:
    """Generalized pentagonal pairs (k(3k-1)/2, (-1)^k) with exponent <= limit.

    Yields the k = 0 term first, then k = 1, -1, 2, -2, ... in order.
    """
    if limit >= 0:
        yield 0, 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > limit and g2 > limit:
            return
        sign = -1 if k % 2 else 1
        if g1 <= limit:
            yield g1, sign
        if g2 <= limit:
            yield g2, sign
        k += 1


def euler_pentagonal(prec: int, scale: int = 1) -> QSeries:
    """Euler's expansion of (q^scale; q^scale)_inf: sparse, O(sqrt prec) terms.

    scale substitutes q -> q^scale, which is how eta-quotient building
    blocks (q^delta; q^delta)_inf are produced.
    """
    if prec < 0:
        raise ValueError("prec must be >= 0")
    if scale < 1:
        raise ValueError("scale must be >= 1")
    out = [0] * (prec + 1)
    for g, sign in pentagonal_exponents(prec // scale):
        out[g * scale] = sign
    return QSeries(out, offset=0, prec=prec)


def partition_numbers(prec: int) -> QSeries:
    """1/(q;q)_inf: coefficients are the partition numbers p(0..prec)."""
    return euler_pentagonal(prec).inverse()


def sigma_mex_series(prec: int) -> QSeries:
    """Generating function of the mex sums: (-q;q)_inf^2.

    Computed through the sparse quotient form (q^2;q^2)^2 / (q;q)^2 so the
    numerator has O(sqrt prec) terms; the underlying product identity
    (-q;q) = (q^2;q^2)/(q;q) is itself acceptance-tested against the direct
    Pochhammer product.
    """
    numerator = euler_pentagonal(prec, scale=2)
    inv = euler_pentagonal(prec).inverse()
    return numerator * numerator * inv * inv


def sigma_mex_series_mod(prec: int, modulus: int) -> ModQSeries:
    """Mex-sum series with all arithmetic mod `modulus`, end to end.

    Same quotient form as sigma_mex_series; residue coefficients keep the
    large congruence censuses at small constant word size.
    """
    numerator = euler_pentagonal(prec, scale=2).reduce_mod(modulus)
    inv = euler_pentagonal(prec).reduce_mod(modulus).inverse()
    return numerator * numerator * inv * inv


def sigma_moex_series(prec: int) -> QSeries:
    """Generating function of the moex sums: (-q;q)_inf * (-q;q^2)_inf^2."""
    distinct = pochhammer(PochhammerSpec(-1, 1, 1), prec)
    odd_distinct = pochhammer(PochhammerSpec(-1, 1, 2), prec)
    return distinct * (odd_distinct * odd_distinct)


def partition_parity_series(prec: int) -> ModQSeries:
    """1/(q;q)_inf mod 2: the parity of p(n), which is also the parity of
    the moex sums (cross-checked against sigma_moex_series in the tests)."""
    return euler_pentagonal(prec).reduce_mod(2).inverse()
