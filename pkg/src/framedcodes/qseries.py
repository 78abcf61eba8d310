"""Truncated q-series with exact integer coefficients.

Exponents are integers counting units of q^{1/48}, which covers both the
q^{-c/24} prefactor of a central charge 1/2 character and the half-integral
powers in its product formula.  A series carries a precision ``prec``: every
coefficient with exponent <= prec is exact, nothing beyond it is stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .gf2 import WeightEnumerator

UNIT = 48
DEFAULT_PREC = 8 * UNIT


def _clean(coeffs: Mapping[int, int], prec: int) -> dict[int, int]:
    return {e: c for e, c in coeffs.items() if c and e <= prec}


@dataclass(frozen=True)
class QSeries:
    prec: int
    coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _clean(self.coeffs, self.prec))

    @classmethod
    def one(cls, prec: int) -> "QSeries":
        return cls(prec, {0: 1})

    @property
    def valuation(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def _val_or_prec(self) -> int:
        v = self.valuation
        return self.prec if v is None else v

    def __getitem__(self, e: int) -> int:
        if e > self.prec:
            raise IndexError(f"exponent {e}/48 is beyond the precision {self.prec}/48")
        return self.coeffs.get(e, 0)

    def coefficient(self, power: Fraction | int) -> int:
        """Coefficient of q^power for a rational power."""
        e = Fraction(power) * UNIT
        if e.denominator != 1:
            return 0
        return self[int(e)]

    def __add__(self, other: "QSeries") -> "QSeries":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QSeries(min(self.prec, other.prec), out)

    def __neg__(self) -> "QSeries":
        return QSeries(self.prec, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, int):
            return QSeries(self.prec, {e: c * other for e, c in self.coeffs.items()})
        prec = min(self.prec + other._val_or_prec(), other.prec + self._val_or_prec())
        out: dict[int, int] = {}
        for ea, ca in self.coeffs.items():
            limit = prec - ea
            for eb, cb in other.coeffs.items():
                if eb <= limit:
                    out[ea + eb] = out.get(ea + eb, 0) + ca * cb
        return QSeries(prec, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return QSeries.one(self.prec) if result is None else result

    def exact_div(self, d: int) -> "QSeries":
        out = {}
        for e, c in self.coeffs.items():
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"coefficient {c} at q^({e}/48) is not divisible by {d}")
            out[e] = q
        return QSeries(self.prec, out)

    def shift(self, e: int) -> "QSeries":
        """Multiply by q^{e/48}."""
        return QSeries(self.prec + e, {k + e: c for k, c in self.coeffs.items()})

    def truncate(self, prec: int) -> "QSeries":
        if prec > self.prec:
            raise ValueError("cannot raise the precision of a series")
        return QSeries(prec, self.coeffs)

    def terms(self) -> list[tuple[Fraction, int]]:
        return [(Fraction(e, UNIT), c) for e, c in sorted(self.coeffs.items())]

    def pairs(self) -> list[tuple[int, int]]:
        """(exponent in 48ths, coefficient), the machine-readable form."""
        return sorted(self.coeffs.items())

    def lines(self) -> list[str]:
        return [f"{c} q^{{{p}}}" for p, c in self.terms()]

    def __str__(self) -> str:
        body = " + ".join(f"{c}*q^({p})" for p, c in self.terms()) or "0"
        return f"{body} + O(q^({Fraction(self.prec + 1, UNIT)}))"


def _unshifted_product(sign: int, prec: int) -> QSeries:
    """prod_{n>=0} (1 + sign * q^{n+1/2}), exact through q^{prec/48}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    coeffs = [0] * (max(prec, 0) + 1)
    coeffs[0] = 1
    step = UNIT // 2
    e = step
    while e <= prec:
        for k in range(prec, e - 1, -1):
            if coeffs[k - e]:
                coeffs[k] += sign * coeffs[k - e]
        e += UNIT
    return QSeries(prec, dict(enumerate(coeffs)))


def product_half_odd(sign: int, prec: int = DEFAULT_PREC) -> QSeries:
    """q^{-1/48} prod_{n>=0} (1 + sign * q^{n+1/2}), i.e. ch L(1/2,0) +/- ch L(1/2,1/2)."""
    return _unshifted_product(sign, prec + 1).shift(-1)


HALF = UNIT // 2


def _dense_product(sign: int, length: int) -> list[int]:
    """prod (1 + sign * t^{2n+1}) as a list of length ``length``, t = q^{1/2}."""
    c = [0] * length
    c[0] = 1
    for e in range(1, length, 2):
        for k in range(length - 1, e - 1, -1):
            c[k] += sign * c[k - e]
    return c


def _dense_mul(a: list[int], b: list[int]) -> list[int]:
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j in range(n - i):
                out[i + j] += x * b[j]
    return out


def _homogeneous(terms: Mapping[int, int], n: int, x: list[int], y: list[int]) -> list[int]:
    """sum_w a_w x^{n-w} y^w for truncated power series in t given as lists."""
    length = len(x)
    unit = [1] + [0] * (length - 1)
    xp, yp = [unit], [unit]
    for _ in range(n):
        xp.append(_dense_mul(xp[-1], x))
        yp.append(_dense_mul(yp[-1], y))
    total = [0] * length
    for w, a in terms.items():
        for k, c in enumerate(_dense_mul(xp[n - w], yp[w])):
            total[k] += a * c
    return total


def _eval_on_products(terms: Mapping[int, int], n: int, prec: int, direct: bool) -> QSeries:
    # every factor is a series in t = q^{1/2} times q^{-1/48}; evaluate in t and
    # restore the prefactor q^{-n/48} at the end
    inner = prec + n
    length = max(inner, 0) // HALF + 1
    a = _dense_product(1, length)
    b = _dense_product(-1, length)
    if direct:
        a, b = [(u + v) // 2 for u, v in zip(a, b)], [(u - v) // 2 for u, v in zip(a, b)]
    vals = _homogeneous(terms, n, a, b)
    return QSeries(inner, {k * HALF: c for k, c in enumerate(vals)}).shift(-n)


def code_voa_character(we: WeightEnumerator, prec: int = DEFAULT_PREC) -> QSeries:
    """ch V_C from the weight enumerator of C: W_C(x, y) at the two Ising characters."""
    return _eval_on_products(we.terms(), we.n, prec, direct=True)


def code_voa_character_from_dual(we_dual: WeightEnumerator, prec: int = DEFAULT_PREC) -> QSeries:
    """ch V_C from the enumerator of D = C^perp: W_D(A, B) / |D|."""
    s = _eval_on_products(we_dual.terms(), we_dual.n, prec, direct=False)
    return s.exact_div(we_dual.total)


def mckay_thompson(
    we_d: WeightEnumerator, we_d_xi: WeightEnumerator, prec: int = DEFAULT_PREC
) -> QSeries:
    """2 ch V_{C^0} - ch V_C, via f = W_{D+<xi>} - W_D evaluated at the products, over |D|."""
    if we_d.n != we_d_xi.n:
        raise ValueError("enumerators have different lengths")
    f = {w: we_d_xi[w] - we_d[w] for w in range(we_d.n + 1) if we_d_xi[w] != we_d[w]}
    s = _eval_on_products(f, we_d.n, prec, direct=False)
    return s.exact_div(we_d.total)


def trunc_to_prec(power: int) -> int:
    """Precision in 48ths for 'exact through q^power'."""
    return power * UNIT


__all__ = [
    "UNIT",
    "DEFAULT_PREC",
    "QSeries",
    "product_half_odd",
    "code_voa_character",
    "code_voa_character_from_dual",
    "mckay_thompson",
    "trunc_to_prec",
]
