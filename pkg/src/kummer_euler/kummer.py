"""Euler characteristics of generalized Kummer schemes ``K_n(A x Y)``.

Everything is a function of ``g = dim A``, ``r = dim Y`` and the integer
``chi(Y)``. The main generating function identity reads

    exp(sum_n chi(K_n) / n^(2g) t^n) = (sum_k P_{r+g}(k) t^k)^chi(Y)

so ``chi(K_n) = n^(2g) chi(Y) [t^n] log(sum_k P_{r+g}(k) t^k)``. A second,
independent route goes through ``chi(W^n_m)``, the weighted partition sum
with weights ``e(alpha)``, and ``chi(K_n) = n^(2g-2) chi(Y) chi(W^n_{g+r-1})``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import partitions
from .errors import ConsistencyError, UsageError
from .series import int_pow, log
from .weights import WeightCache, a_from_b_partition_sum

__all__ = [
    "KummerParams",
    "KummerTable",
    "kummer_euler_table",
    "kummer_euler_table_via_power",
    "w_euler_series",
    "w_euler_partition_sum",
    "kummer_euler_via_w",
    "orbifold_euler",
    "divisor_sum",
    "closed_form_g2",
    "closed_form_g1r1",
    "closed_form_dim3",
    "dt_degree_zero",
]


@dataclass(frozen=True)
class KummerParams:
    """``g = dim A >= 1``, ``r = dim Y >= 0``, ``chi_y = chi(Y)``, truncation ``order``."""

    g: int
    r: int
    chi_y: int
    order: int = 12

    def __post_init__(self):
        for name in ("g", "r", "chi_y", "order"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise UsageError(f"{name} must be an integer, got {v!r}")
        if self.g < 1:
            raise UsageError(f"g must be at least 1, got {self.g}")
        if self.r < 0:
            raise UsageError(f"r must be nonnegative, got {self.r}")
        if self.order < 1:
            raise UsageError(f"order must be at least 1, got {self.order}")

    @property
    def m(self) -> int:
        """Dimension of the partitions in the generating function, ``r + g``."""
        return self.r + self.g

    @property
    def w_dim(self) -> int:
        """Index ``g + r - 1`` of the ``W`` invariant that computes ``chi(K_n)``."""
        return self.r + self.g - 1


@dataclass(frozen=True)
class KummerTable:
    """``chi[n] = chi(K_n)`` and ``orbifold[n] = chi(K_n)/n^(2g)`` for ``n = 1..order``.

    Index 0 of both tuples is a placeholder 0.
    """

    params: KummerParams
    chi: tuple[int, ...]
    orbifold: tuple[Fraction, ...]

    def __post_init__(self):
        g = self.params.g
        for n in range(1, len(self.chi)):
            if self.orbifold[n] * n ** (2 * g) != self.chi[n]:
                raise ConsistencyError(f"orbifold value at n={n} does not match chi")

    def rows(self):
        for n in range(1, len(self.chi)):
            yield n, self.chi[n], self.orbifold[n]


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConsistencyError(f"{what} = {x} is not an integer")
    return x.numerator


def kummer_euler_table(params: KummerParams, cache=None) -> KummerTable:
    """Evaluate the main identity through ``log`` of the partition series.

    ``chi(Y)`` passes through the logarithm as a scalar factor. Raises
    :class:`ConsistencyError` if any ``chi(K_n)`` is not an integer.
    """
    N = params.order
    logp = log(partitions.pm_series(params.m, N, cache=cache))
    orb = [Fraction(0)] + [params.chi_y * logp.coeffs[n] for n in range(1, N + 1)]
    chi = [0] + [
        _integral(orb[n] * n ** (2 * params.g), f"chi(K_{n}) for {params}")
        for n in range(1, N + 1)
    ]
    return KummerTable(params, tuple(chi), tuple(orb))


def kummer_euler_table_via_power(params: KummerParams, cache=None) -> KummerTable:
    """Same values, computed as ``log(F^chi(Y))`` with an explicit integer power
    (through the series inverse when ``chi(Y) < 0``)."""
    N = params.order
    F = partitions.pm_series(params.m, N, cache=cache)
    logp = log(int_pow(F, params.chi_y))
    orb = [Fraction(0)] + [logp.coeffs[n] for n in range(1, N + 1)]
    chi = [0] + [
        _integral(orb[n] * n ** (2 * params.g), f"chi(K_{n}) for {params}")
        for n in range(1, N + 1)
    ]
    return KummerTable(params, tuple(chi), tuple(orb))


def _check_w_dim(m: int):
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise UsageError(f"W index must be a nonnegative integer, got {m!r}")


def w_euler_series(m: int, N: int, cache=None) -> list[int]:
    """``chi(W^n_m) = n^2 [t^n] log(sum_k P_{m+1}(k) t^k)`` for ``n = 1..N``.

    ``m = 0`` is accepted and uses ``P_1``. Index 0 of the result is 0.
    """
    _check_w_dim(m)
    logp = log(partitions.pm_series(m + 1, N, cache=cache))
    return [0] + [_integral(n * n * logp.coeffs[n], f"chi(W^{n}_{m})") for n in range(1, N + 1)]


def w_euler_partition_sum(
    m: int,
    n: int,
    cache=None,
    weight_cache: WeightCache | None = None,
    weight=None,
    counts=None,
) -> Fraction:
    """``chi(W^n_m) = sum_alpha e(alpha) prod_i P_{m+1}(i)^alpha_i``.

    ``counts`` may supply ``P_{m+1}(0..n)`` directly; otherwise they come
    from :func:`partitions.pm_series`.
    """
    _check_w_dim(m)
    if counts is None:
        counts = partitions.pm_series(m + 1, n, cache=cache).coeffs
    return a_from_b_partition_sum(counts, n, weight_cache, weight)


def kummer_euler_via_w(params: KummerParams, n: int, cache=None, weight_cache=None) -> Fraction:
    """``n^(2g-2) chi(Y) chi(W^n_{g+r-1})`` with ``chi(W)`` from the partition sum.

    For ``g = 1, r = 0`` the index is 0 and ``P_1`` is used. Nothing
    independent pins down that edge, so verification reports flag it.
    """
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    w = w_euler_partition_sum(params.w_dim, n, cache=cache, weight_cache=weight_cache)
    return n ** (2 * params.g - 2) * params.chi_y * w


def orbifold_euler(params: KummerParams, n: int, cache=None) -> Fraction:
    """``chi(K_n)/n^(2g)``, the Euler characteristic of the quotient stack by ``A[n]``."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    logp = log(partitions.pm_series(params.m, n, cache=cache))
    return params.chi_y * logp.coeffs[n]


def divisor_sum(n: int, s: int) -> int:
    """``sigma_s(n) = sum_{d | n} d^s`` by trial division up to ``sqrt(n)``."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    if s < 0:
        raise UsageError(f"s must be nonnegative, got {s}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**s
            e = n // d
            if e != d:
                total += e**s
        d += 1
    return total


def closed_form_g2(n: int) -> int:
    """``chi(K_n(A))`` for an abelian surface: ``n^3 sigma_1(n)``."""
    return n**3 * divisor_sum(n, 1)


def closed_form_g1r1(chi_y: int, n: int) -> int:
    """Elliptic curve times a curve ``Y``: ``chi(Y) n sigma_1(n)``."""
    return chi_y * n * divisor_sum(n, 1)


def closed_form_dim3(g: int, chi_y: int, n: int) -> int:
    """``g + r = 3``: ``chi(Y) n^(2g-1) sigma_2(n)``."""
    if g < 1:
        raise UsageError(f"g must be at least 1, got {g}")
    return chi_y * n ** (2 * g - 1) * divisor_sum(n, 2)


def dt_degree_zero(n: int) -> Fraction:
    """Degree-zero DT invariant of an abelian 3-fold, ``(-1)^(n-1)/n * sigma_2(n)``."""
    return Fraction((-1) ** (n - 1) * divisor_sum(n, 2), n)
