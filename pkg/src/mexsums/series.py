"""Exact truncated power series in q.

A QSeries knows its coefficients for every exponent in [offset, prec] and
*nothing* beyond: asking past prec is an error, not zero.  Truncation bugs
are the dominant failure mode in q-series work, so precision only ever
shrinks through arithmetic, never silently extends.

ModQSeries carries the same window with coefficients stored as canonical
residues mod m; it exists so congruence censuses can run at large N without
thousand-bit integers.
"""

from __future__ import annotations

import json
from math import gcd
from typing import Iterable, Sequence

from . import _convolve
from .errors import (
    BadModulus,
    NonUnitLeadingCoefficient,
    OutOfPrecision,
)

__all__ = ["QSeries", "ModQSeries"]


class QSeries:
    """Truncated formal power series with exact integer coefficients.

    coeffs[i] is the coefficient of q^(offset + i); coefficients are correct
    for all exponents <= prec.  Values are immutable after construction and
    safe to share across threads.
    """

    __slots__ = ("offset", "coeffs", "prec")

    def __init__(self, coeffs: Iterable[int], offset: int = 0, prec: int | None = None):
        coeffs = tuple(coeffs)
        if offset < 0:
            raise ValueError("negative offsets are not produced by this package")
        if prec is None:
            prec = offset + len(coeffs) - 1
        if prec >= offset:
            if len(coeffs) != prec - offset + 1:
                raise ValueError(
                    f"coeffs length {len(coeffs)} != prec - offset + 1 = {prec - offset + 1}"
                )
        elif coeffs:
            raise ValueError("series with prec < offset must have no coefficients")
        if any(not isinstance(v, int) for v in coeffs):
            raise TypeError("coefficients must be exact integers")
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    # --- constructors -------------------------------------------------

    @classmethod
    def from_polynomial(
        cls, coeffs: Sequence[int], prec: int | None = None, offset: int = 0
    ) -> "QSeries":
        """Series for an exact polynomial, zero-padded out to prec."""
        natural = offset + len(coeffs) - 1
        if prec is None:
            prec = natural
        if prec >= natural:
            coeffs = tuple(coeffs) + (0,) * (prec - natural)
        else:
            coeffs = tuple(coeffs[: max(prec - offset + 1, 0)])
        return cls(coeffs, offset=offset, prec=prec)

    @classmethod
    def one(cls, prec: int) -> "QSeries":
        return cls.from_polynomial([1], prec=prec)

    @classmethod
    def zero(cls, prec: int) -> "QSeries":
        return cls.from_polynomial([0], prec=prec)

    # --- coefficient access -------------------------------------------

    def coefficient(self, n: int) -> int:
        """The coefficient of q^n; errors outside the known window."""
        if n > self.prec or n < self.offset:
            raise OutOfPrecision(
                f"coefficient of q^{n} unknown: window is [{self.offset}, {self.prec}]"
            )
        return self.coeffs[n - self.offset]

    def at(self, n: int) -> int:
        """Like coefficient(), but exponents below the offset read as zero.

        A series with offset o represents a function holomorphic at q = 0
        whose expansion starts at q^o, so coefficients below o are known
        zeros; only exponents beyond prec are unknown.
        """
        if n > self.prec:
            raise OutOfPrecision(f"coefficient of q^{n} unknown: prec is {self.prec}")
        if n < self.offset:
            return 0
        return self.coeffs[n - self.offset]

    def coefficients(self, lo: int = 0, hi: int | None = None) -> list[int]:
        """Coefficients of q^lo .. q^hi as a list (below-offset entries are 0)."""
        if hi is None:
            hi = self.prec
        return [self.at(n) for n in range(lo, hi + 1)]

    def support(self) -> tuple[int, ...]:
        return tuple(self.offset + i for i, v in enumerate(self.coeffs) if v)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # --- arithmetic -----------------------------------------------------

    def _check_compatible(self, other: "QSeries") -> None:
        if type(self) is not type(other):
            raise TypeError("cannot mix exact and modular series; reduce first")

    def _make(self, coeffs, offset, prec):
        return QSeries(coeffs, offset=offset, prec=prec)

    def __add__(self, other: "QSeries") -> "QSeries":
        self._check_compatible(other)
        offset = min(self.offset, other.offset)
        prec = min(self.prec, other.prec)
        if prec < offset:
            return self._make((), offset, prec)
        out = [self.at(n) + other.at(n) for n in range(offset, prec + 1)]
        return self._make(out, offset, prec)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __neg__(self) -> "QSeries":
        return self._make([-v for v in self.coeffs], self.offset, self.prec)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._make([other * v for v in self.coeffs], self.offset, self.prec)
        self._check_compatible(other)
        offset = self.offset + other.offset
        prec = min(self.prec + other.offset, other.prec + self.offset)
        out_len = prec - offset + 1
        if out_len <= 0:
            return self._make((), offset, prec)
        out = self._convolve(self.coeffs, other.coeffs, out_len)
        return self._make(out, offset, prec)

    __rmul__ = __mul__

    def _convolve(self, a, b, out_len):
        return _convolve.convolve_exact(a, b, out_len)

    def __pow__(self, k: int) -> "QSeries":
        if not isinstance(k, int):
            raise TypeError("series powers must be integers")
        if k < 0:
            return self.inverse() ** (-k)
        result = self._make([1] + [0] * (self.prec if self.prec > 0 else 0), 0, max(self.prec, 0))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "QSeries":
        """Multiplicative inverse up to prec, by the triangular recurrence.

        Requires offset 0 and an invertible leading coefficient (+-1 in
        exact mode, any unit in modular mode).
        """
        if self.offset != 0 or not self.coeffs:
            raise NonUnitLeadingCoefficient(
                "inverse needs offset 0 and a known leading coefficient"
            )
        self._check_unit(self.coeffs[0])
        out = self._inverse_coeffs()
        return self._make(out, 0, self.prec)

    def _check_unit(self, lead: int) -> None:
        if lead not in (1, -1):
            raise NonUnitLeadingCoefficient(f"leading coefficient {lead} is not +-1")

    def _inverse_coeffs(self):
        return _convolve.inverse_triangular(self.coeffs, self.prec + 1)

    def truncate(self, prec: int) -> "QSeries":
        """Shrink the precision window; extending it is an error."""
        if prec > self.prec:
            raise OutOfPrecision(f"cannot extend prec {self.prec} to {prec}")
        if prec < self.offset:
            return self._make((), self.offset, prec)
        return self._make(self.coeffs[: prec - self.offset + 1], self.offset, prec)

    def reduce_mod(self, m: int) -> "ModQSeries":
        if m < 2:
            raise BadModulus(f"modulus must be >= 2, got {m}")
        return ModQSeries([v % m for v in self.coeffs], m, offset=self.offset, prec=self.prec)

    # --- comparison / formatting ----------------------------------------

    def _key(self):
        return (type(self).__name__, self.offset, self.prec, self.coeffs)

    def __eq__(self, other):
        return isinstance(other, QSeries) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        nnz = sum(1 for v in self.coeffs if v)
        return f"{type(self).__name__}(offset={self.offset}, prec={self.prec}, nonzero={nnz})"

    def pretty(self, max_terms: int = 12) -> str:
        """Human-readable polynomial prefix like '1 + 2*q + 3*q^2 + ...'."""
        terms = []
        for e in range(self.offset, self.prec + 1):
            v = self.coeffs[e - self.offset]
            if not v:
                continue
            if e == 0:
                t = str(abs(v))
            else:
                mag = "" if abs(v) == 1 else f"{abs(v)}*"
                t = f"{mag}q" if e == 1 else f"{mag}q^{e}"
            terms.append(("- " if v < 0 else "+ ") + t)
            if len(terms) >= max_terms:
                terms.append("+ ...")
                break
        if not terms:
            return "0"
        head = terms[0].removeprefix("+ ")
        if head.startswith("- "):
            head = "-" + head[2:]
        return " ".join([head] + terms[1:])

    # --- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "offset": self.offset,
            "prec": self.prec,
            "coeffs": [str(v) for v in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: dict) -> "QSeries":
        coeffs = [int(s) for s in data["coeffs"]]
        if "modulus" in data:
            return ModQSeries(
                coeffs, int(data["modulus"]), offset=int(data["offset"]), prec=int(data["prec"])
            )
        return QSeries(coeffs, offset=int(data["offset"]), prec=int(data["prec"]))


class ModQSeries(QSeries):
    """QSeries with coefficients stored as canonical residues in [0, m)."""

    __slots__ = ("modulus",)

    def __init__(
        self, coeffs: Iterable[int], modulus: int, offset: int = 0, prec: int | None = None
    ):
        if modulus < 2:
            raise BadModulus(f"modulus must be >= 2, got {modulus}")
        coeffs = tuple(coeffs)
        if coeffs and not (0 <= min(coeffs) and max(coeffs) < modulus):
            coeffs = tuple(v % modulus for v in coeffs)
        object.__setattr__(self, "modulus", modulus)
        super().__init__(coeffs, offset=offset, prec=prec)

    def _check_compatible(self, other):
        if not isinstance(other, ModQSeries) or other.modulus != self.modulus:
            raise TypeError("modular arithmetic requires matching moduli")

    def _make(self, coeffs, offset, prec):
        return ModQSeries(coeffs, self.modulus, offset=offset, prec=prec)

    def _convolve(self, a, b, out_len):
        return _convolve.convolve_mod(a, b, self.modulus, out_len)

    def _check_unit(self, lead: int) -> None:
        if gcd(lead, self.modulus) != 1:
            raise NonUnitLeadingCoefficient(
                f"leading coefficient {lead} is not a unit mod {self.modulus}"
            )

    def _inverse_coeffs(self):
        return _convolve.inverse_mod(self.coeffs, self.prec + 1, self.modulus)

    def reduce_mod(self, m: int) -> "ModQSeries":
        if m < 2:
            raise BadModulus(f"modulus must be >= 2, got {m}")
        if self.modulus % m != 0:
            raise BadModulus(
                f"cannot reduce mod-{self.modulus} residues to incompatible modulus {m}"
            )
        return ModQSeries([v % m for v in self.coeffs], m, offset=self.offset, prec=self.prec)

    def _key(self):
        return (type(self).__name__, self.modulus, self.offset, self.prec, self.coeffs)

    def to_json_dict(self) -> dict:
        data = super().to_json_dict()
        data["modulus"] = self.modulus
        return data
