"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` is known through a declared order ``N``: it stores
the coefficients of ``t^0, ..., t^N`` and nothing else. Binary operations
insist on equal orders; use :meth:`TruncatedSeries.truncate` to change order
explicitly.

    >>> f = TruncatedSeries([0, 1], order=3)
    >>> exp(f).coeffs
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 2), Fraction(1, 6))
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .errors import SeriesDomainError, UsageError

__all__ = [
    "Rational",
    "TruncatedSeries",
    "add",
    "sub",
    "mul",
    "inverse",
    "exp",
    "log",
    "int_pow",
    "product_form",
    "coeff",
]

Rational = Fraction


def _as_rational(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(x)


class TruncatedSeries:
    """Power series ``sum_k c_k t^k`` known through ``t^order``.

    Instances are immutable. ``coeffs`` always has length ``order + 1``; a
    shorter input is padded with zeros, a longer one is rejected.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        cs = [_as_rational(c) for c in coeffs]
        if order is None:
            if not cs:
                raise UsageError("order is required for an empty coefficient list")
            order = len(cs) - 1
        if order < 0:
            raise UsageError(f"order must be nonnegative, got {order}")
        if len(cs) > order + 1:
            raise UsageError(
                f"{len(cs)} coefficients do not fit in a series of order {order}"
            )
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._order = order
        self._coeffs = tuple(cs)

    @classmethod
    def from_function(cls, fn: Callable[[int], object], order: int) -> TruncatedSeries:
        return cls((fn(k) for k in range(order + 1)), order)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls((1,), order)

    @classmethod
    def monomial(cls, k: int, order: int, c=1) -> TruncatedSeries:
        if not 0 <= k:
            raise UsageError(f"negative exponent {k}")
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(cs, order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        return coeff(self, n)

    def __len__(self) -> int:
        return self._order + 1

    def __iter__(self):
        return iter(self._coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        """Re-truncate to ``order``.

        Raising the order is only allowed when it adds no information, which
        is never the case for a truncated series, so it is refused.
        """
        if order > self._order:
            raise UsageError(
                f"cannot extend a series known to order {self._order} to order {order}"
            )
        return TruncatedSeries(self._coeffs[: order + 1], order)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._order, self._coeffs))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self._coeffs]}, order={self._order})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"({c})*t")
            else:
                terms.append(f"({c})*t^{k}")
        return (" + ".join(terms) or "0") + f" + O(t^{self._order + 1})"

    def __neg__(self):
        return TruncatedSeries((-c for c in self._coeffs), self._order)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return add(self, other)
        return add(self, _scalar(other, self._order))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return sub(self, other)
        return sub(self, _scalar(other, self._order))

    def __rsub__(self, other):
        return sub(_scalar(other, self._order), self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        c = _as_rational(other)
        return TruncatedSeries((c * x for x in self._coeffs), self._order)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return int_pow(self, e)


def _scalar(c, order: int) -> TruncatedSeries:
    return TruncatedSeries((c,), order)


def _check_orders(f: TruncatedSeries, h: TruncatedSeries) -> int:
    if f.order != h.order:
        raise UsageError(f"order mismatch: {f.order} vs {h.order}")
    return f.order


def add(f: TruncatedSeries, h: TruncatedSeries) -> TruncatedSeries:
    _check_orders(f, h)
    return TruncatedSeries((a + b for a, b in zip(f.coeffs, h.coeffs)), f.order)


def sub(f: TruncatedSeries, h: TruncatedSeries) -> TruncatedSeries:
    _check_orders(f, h)
    return TruncatedSeries((a - b for a, b in zip(f.coeffs, h.coeffs)), f.order)


def mul(f: TruncatedSeries, h: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the common order."""
    n = _check_orders(f, h)
    a, b = f.coeffs, h.coeffs
    # skip zero coefficients: product-form series are sparse at low order
    nz_a = [(i, x) for i, x in enumerate(a) if x]
    out = [Fraction(0)] * (n + 1)
    for i, x in nz_a:
        for j in range(n + 1 - i):
            y = b[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(out, n)


def inverse(f: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires a nonzero constant term."""
    a = f.coeffs
    if a[0] == 0:
        raise SeriesDomainError("cannot invert a series with zero constant term")
    inv0 = 1 / a[0]
    out = [inv0]
    for n in range(1, f.order + 1):
        s = sum((a[k] * out[n - k] for k in range(1, n + 1) if a[k]), Fraction(0))
        out.append(-s * inv0)
    return TruncatedSeries(out, f.order)


def exp(f: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with zero constant term.

    Uses ``h' = f' h``: ``n h_n = sum_{k=1}^{n} k f_k h_{n-k}``.
    """
    a = f.coeffs
    if a[0] != 0:
        raise SeriesDomainError("exp needs a zero constant term")
    h = [Fraction(1)]
    ka = [k * c for k, c in enumerate(a)]
    for n in range(1, f.order + 1):
        s = sum((ka[k] * h[n - k] for k in range(1, n + 1) if ka[k]), Fraction(0))
        h.append(s / n)
    return TruncatedSeries(h, f.order)


def log(f: TruncatedSeries) -> TruncatedSeries:
    """Formal logarithm of a series with constant term 1.

    Inverts the recurrence used by :func:`exp`:
    ``n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}``.
    """
    a = f.coeffs
    if a[0] != 1:
        raise SeriesDomainError(f"log needs constant term 1, got {a[0]}")
    kg = [Fraction(0)]  # kg[k] = k * g_k
    for n in range(1, f.order + 1):
        s = sum((kg[k] * a[n - k] for k in range(1, n) if a[n - k]), Fraction(0))
        kg.append(n * a[n] - s)
    return TruncatedSeries((c / k if k else c for k, c in enumerate(kg)), f.order)


def int_pow(f: TruncatedSeries, e: int) -> TruncatedSeries:
    """``f**e`` for any integer ``e``; negative powers go through :func:`inverse`."""
    if isinstance(e, bool) or not isinstance(e, int):
        raise UsageError(f"exponent must be an integer, got {e!r}")
    if e < 0:
        f = inverse(f)
        e = -e
    result = TruncatedSeries.one(f.order)
    base = f
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def product_form(exponents: Mapping[int, int] | Callable[[int], int], order: int) -> TruncatedSeries:
    """``prod_{k=1}^{order} (1 - t^k)^(-e_k)`` truncated to ``order``.

    ``exponents`` is a mapping ``k -> e_k`` (missing keys mean 0) or a callable.
    """
    if order < 0:
        raise UsageError(f"order must be nonnegative, got {order}")
    get = exponents if callable(exponents) else (lambda k: exponents.get(k, 0))
    h = [1] + [0] * order
    for k in range(1, order + 1):
        e = int(get(k))
        if e > 0:
            # divide by (1 - t^k), e times
            for _ in range(e):
                for n in range(k, order + 1):
                    h[n] += h[n - k]
        elif e < 0:
            for _ in range(-e):
                for n in range(order, k - 1, -1):
                    h[n] -= h[n - k]
    return TruncatedSeries(h, order)


def coeff(f: TruncatedSeries, n: int) -> Fraction:
    if not 0 <= n <= f.order:
        raise UsageError(f"index {n} outside 0..{f.order}")
    return f.coeffs[n]
