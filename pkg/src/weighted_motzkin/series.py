"""Exact truncated formal power series over the rationals.

A series of order ``N`` stores ``c_0 .. c_N``.  Binary operations truncate
to the smaller order of their operands, so precision is never invented.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import MotzkinError, ParameterError

DEFAULT_ORDER = 64


class CompositionDomainError(MotzkinError, ValueError):
    """Inner series of a composition has a nonzero constant term."""


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not accepted")
    return Fraction(c)


@dataclass(frozen=True)
class TruncatedSeries:
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(_frac(c) for c in self.coefficients)
        if not coeffs:
            raise ParameterError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable, order: int | None = None) -> "TruncatedSeries":
        """Pad with zeros (or truncate) to ``order`` when it is given."""
        cs = [_frac(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(tuple(cs))

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((Fraction(0),) * (order + 1))

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coefficients([c], order)

    @classmethod
    def x(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coefficients([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(n)
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coefficients[n]

    def __len__(self) -> int:
        return len(self.coefficients)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ParameterError("cannot raise the order of a truncated series")
        return TruncatedSeries(self.coefficients[: order + 1])

    def integer_coefficients(self) -> list[int]:
        out = []
        for n, c in enumerate(self.coefficients):
            if c.denominator != 1:
                raise ValueError(f"coefficient {n} is not an integer: {c}")
            out.append(c.numerator)
        return out

    def __add__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coefficients[i] + other.coefficients[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coefficients))

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def scale(self, c) -> "TruncatedSeries":
        c = _frac(c)
        return TruncatedSeries(tuple(c * a for a in self.coefficients))

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coefficients, other.coefficients
        out = []
        for k in range(n + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)))
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        if not isinstance(e, int) or e < 0:
            raise ParameterError("series powers must be nonnegative integers")
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``x**k``, keeping the order."""
        return TruncatedSeries.from_coefficients([0] * k + list(self.coefficients), self.order)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        if inner.coefficients[0] != 0:
            raise CompositionDomainError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = TruncatedSeries.constant(self.coefficients[n], n)
        for c in reversed(self.coefficients[:n]):
            result = result * inner + c
        return result

    def __call__(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return self.compose(inner)

    def to_json(self) -> dict:
        return {"coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coefficients]}

    @classmethod
    def from_json(cls, obj: dict) -> "TruncatedSeries":
        return cls(tuple(Fraction(c) for c in obj["coeffs"]))

    def __str__(self) -> str:
        return ", ".join(str(c) for c in self.coefficients)


def series_arith(op: str, *operands):
    """Dispatch ``add``, ``mul``, ``scale`` or ``power`` on series operands."""
    if op == "add":
        a, b = operands
        return a + b
    if op == "mul":
        a, b = operands
        return a * b
    if op == "scale":
        s, c = operands
        return s.scale(c)
    if op == "power":
        s, e = operands
        return s**e
    raise ParameterError(f"unknown series operation {op!r}")


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    return outer.compose(inner)


def polynomial_product(*polys: Sequence[int]) -> list[int]:
    """Coefficient list (constant term first) of a product of polynomials."""
    out = [1]
    for p in polys:
        nxt = [0] * (len(out) + len(p) - 1)
        for i, a in enumerate(out):
            for j, b in enumerate(p):
                nxt[i + j] += a * b
        out = nxt
    return out


def rational_series(numer: Sequence, denom: Sequence, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Expand ``numer(x) / denom(x)``; polynomials are coefficient lists, constant first."""
    d = [_frac(c) for c in denom]
    if not d or d[0] == 0:
        raise ZeroDivisionError("denominator must have a nonzero constant term")
    num = [_frac(c) for c in numer] + [Fraction(0)] * (order + 1)
    out: list[Fraction] = []
    for n in range(order + 1):
        acc = num[n]
        for k in range(1, min(n, len(d) - 1) + 1):
            acc -= d[k] * out[n - k]
        out.append(acc / d[0])
    return TruncatedSeries(tuple(out))


def solve_motzkin_gf(alpha: int, beta: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The series with ``f_0 = 1`` solving ``f = 1 + alpha*x*f + beta*x**2*f**2``.

    Coefficients satisfy ``f_n = alpha f_{n-1} + beta sum_{p+q=n-2} f_p f_q``
    and count Motzkin paths of length ``n`` with horizontal weight ``alpha``
    and down weight ``beta``.
    """
    if order < 0:
        raise ParameterError("order must be >= 0")
    f = [1]
    for n in range(1, order + 1):
        v = alpha * f[n - 1]
        if n >= 2:
            v += beta * sum(f[p] * f[n - 2 - p] for p in range(n - 1))
        f.append(v)
    return TruncatedSeries(tuple(f))
