"""Partition weights ``e(alpha)`` and the two equivalent ways of turning a
sequence ``b_0 = 1, b_1, b_2, ...`` into a sequence ``a_1, a_2, ...``:

* the weighted partition sum ``a_n = sum_alpha e(alpha) prod_i b_i^alpha_i``,
* the exponential relation ``exp(sum_n a_n / n^2 t^n) = sum_k b_k t^k``.

Sequences indexed from 1 are passed around as lists whose entry ``[0]`` is a
placeholder 0, so ``a[n]`` is always ``a_n``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, MutableMapping, Sequence

from .errors import UsageError
from .partitions import PartitionMult, enumerate_partitions
from .series import TruncatedSeries, exp, log

__all__ = [
    "WeightCache",
    "e_weight",
    "e_weight_uncached",
    "a_from_b_partition_sum",
    "a_from_b_series",
    "a_from_b_recurrence",
    "b_from_a",
]

WeightCache = MutableMapping[PartitionMult, Fraction]

_default_cache: dict[PartitionMult, Fraction] = {}


def e_weight(alpha: PartitionMult, cache: WeightCache | None = None) -> Fraction:
    """The weight ``e(alpha)``.

    ``e((n^1)) = n^2``; otherwise
    ``e(alpha) = -sum_i n/(n-i) * e(alpha minus one part i)`` where ``i``
    runs over the distinct part sizes of ``alpha``, each counted once.
    Results are memoized in ``cache`` (a module-level dict by default).

    >>> e_weight(PartitionMult.from_parts([2, 1]))
    Fraction(-9, 1)
    """
    if cache is None:
        cache = _default_cache
    hit = cache.get(alpha)
    if hit is not None:
        return hit
    # iterative post-order walk keeps deep partitions like (1^n) off the C stack
    stack = [alpha]
    while stack:
        top = stack[-1]
        if top in cache:
            stack.pop()
        elif top.mult[top.n - 1] == 1:
            cache[top] = Fraction(top.n * top.n)
            stack.pop()
        else:
            missing = [c for c in map(top.remove_part, top.sizes()) if c not in cache]
            if missing:
                stack.extend(missing)
            else:
                cache[top] = _recursion_step(top, cache.__getitem__)
                stack.pop()
    return cache[alpha]


def _recursion_step(alpha: PartitionMult, lookup: Callable[[PartitionMult], Fraction]) -> Fraction:
    n = alpha.n
    total = Fraction(0)
    for i in alpha.sizes():
        total += Fraction(n, n - i) * lookup(alpha.remove_part(i))
    return -total


def e_weight_uncached(alpha: PartitionMult) -> Fraction:
    """Plain recursive evaluation, no memo. Exponential time; for cross-checks."""
    n = alpha.n
    if alpha.mult[n - 1] == 1:
        return Fraction(n * n)
    return _recursion_step(alpha, e_weight_uncached)


def _check_b(b: Sequence, n: int) -> list[Fraction]:
    if len(b) <= n:
        raise UsageError(f"b must be given through index {n}, got {len(b)} entries")
    if b[0] != 1:
        raise UsageError(f"b_0 must be 1, got {b[0]}")
    return [Fraction(x) for x in b[: n + 1]]


def a_from_b_partition_sum(
    b: Sequence,
    n: int,
    cache: WeightCache | None = None,
    weight: Callable[..., Fraction] | None = None,
) -> Fraction:
    """``a_n = sum over partitions alpha of n of e(alpha) * prod_i b_i^alpha_i``.

    ``weight`` replaces :func:`e_weight` (used for fault injection in checks).
    """
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    bs = _check_b(b, n)
    if weight is None:
        weight = e_weight
    total = Fraction(0)
    for alpha in enumerate_partitions(n):
        term = Fraction(1)
        for i, k in enumerate(alpha.mult, 1):
            if k:
                term *= bs[i] ** k
                if not term:
                    break
        if term:
            total += weight(alpha, cache) * term
    return total


def a_from_b_series(b: Sequence, N: int) -> list[Fraction]:
    """``a_n = n^2 [t^n] log(sum_k b_k t^k)`` for ``n = 1..N``; index 0 is 0."""
    bs = _check_b(b, N)
    g = log(TruncatedSeries(bs, N))
    return [Fraction(0)] + [n * n * g.coeffs[n] for n in range(1, N + 1)]


def a_from_b_recurrence(b: Sequence, N: int) -> list[Fraction]:
    """Solve for ``a`` by comparing coefficients after applying ``t d/dt``:

    ``a_n = n (n b_n - sum_{j=1}^{n-1} a_j/j * b_{n-j})``.
    """
    bs = _check_b(b, N)
    a = [Fraction(0)]
    for n in range(1, N + 1):
        s = sum((a[j] / j * bs[n - j] for j in range(1, n)), Fraction(0))
        a.append(n * (n * bs[n] - s))
    return a


def b_from_a(a: Sequence, N: int) -> list[Fraction]:
    """Coefficients ``b_0..b_N`` of ``exp(sum_n a_n/n^2 t^n)``; ``a[0]`` is ignored."""
    if len(a) <= N:
        raise UsageError(f"a must be given through index {N}, got {len(a)} entries")
    f = TruncatedSeries([0] + [Fraction(a[n]) / (n * n) for n in range(1, N + 1)], N)
    return list(exp(f).coeffs)
