"""Cross-route consistency checks.

Every identity the engine relies on can be computed at least two ways. Each
check here evaluates two routes term by term and records the first index
where they disagree.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import partitions, series
from .errors import ConsistencyError
from .kummer import (
    KummerParams,
    closed_form_dim3,
    closed_form_g1r1,
    closed_form_g2,
    divisor_sum,
    dt_degree_zero,
    kummer_euler_table,
    kummer_euler_table_via_power,
    kummer_euler_via_w,
    orbifold_euler,
    w_euler_partition_sum,
    w_euler_series,
)
from .weights import (
    a_from_b_partition_sum,
    a_from_b_recurrence,
    a_from_b_series,
    b_from_a,
    e_weight,
    e_weight_uncached,
)

SUITES = ("series", "partitions", "weights", "kummer")
CHI_VALUES = (-2, -1, 0, 1, 2, 3)


@dataclass
class CheckResult:
    name: str
    suite: str
    routes: tuple[str, str]
    passed: bool
    first_bad: int | None = None
    detail: str = ""


@dataclass
class VerificationReport:
    N: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "N": self.N,
            "passed": self.passed,
            "checks": [
                {**asdict(c), "routes": list(c.routes)} for c in self.checks
            ],
        }

    def format_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {c.name}: {c.routes[0]} vs {c.routes[1]}"
            if not c.passed and c.first_bad is not None:
                line += f" (first disagreement at n={c.first_bad})"
            if c.detail:
                line += f" -- {c.detail}"
            lines.append(line)
        n_fail = len(self.failures)
        lines.append(
            f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed at N={self.N}"
        )
        return "\n".join(lines)


def _compare(name, suite, routes, pairs: Iterable[tuple[int, object, object]], detail=""):
    """Walk ``(n, left, right)`` triples and stop at the first mismatch."""
    try:
        for n, left, right in pairs:
            if left != right:
                return CheckResult(
                    name, suite, routes, False, n, f"{routes[0]}={left}, {routes[1]}={right}"
                )
    except ConsistencyError as exc:
        return CheckResult(name, suite, routes, False, None, f"non-integral value: {exc}")
    return CheckResult(name, suite, routes, True, None, detail)


def _random_series(rng: random.Random, order: int, const) -> series.TruncatedSeries:
    cs = [const] + [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(order)]
    return series.TruncatedSeries(cs, order)


# -- suites -------------------------------------------------------------------


def _series_checks(N: int, rng: random.Random) -> list[CheckResult]:
    S = "series"
    out = []
    order = min(N, 16)
    fs = [_random_series(rng, order, 0) for _ in range(5)]
    out.append(_compare(
        "series.log_exp_roundtrip", S, ("log(exp(f))", "f"),
        ((i, series.log(series.exp(f)), f) for i, f in enumerate(fs)),
    ))
    hs = [_random_series(rng, order, 1) for _ in range(5)]
    out.append(_compare(
        "series.exp_log_roundtrip", S, ("exp(log(f))", "f"),
        ((i, series.exp(series.log(h)), h) for i, h in enumerate(hs)),
    ))
    out.append(_compare(
        "series.inverse", S, ("f*inverse(f)", "1"),
        ((i, h * series.inverse(h), series.TruncatedSeries.one(order)) for i, h in enumerate(hs)),
    ))
    for label, exps, s in (("euler", lambda k: 1, 1), ("macmahon", lambda k: k, 2)):
        lg = series.log(series.product_form(exps, N))
        out.append(_compare(
            f"series.log_{label}_product", S, ("log(product)", f"sigma_{s}(n)/n"),
            ((n, lg[n], Fraction(divisor_sum(n, s), n)) for n in range(1, N + 1)),
        ))
    ex = series.exp(series.TruncatedSeries(
        [0] + [Fraction(divisor_sum(n, 1), n) for n in range(1, N + 1)], N))
    out.append(_compare(
        "series.exp_sigma1_partitions", S, ("exp(sum sigma_1(n)/n t^n)", "partition listing"),
        ((n, ex[n], len(partitions.enumerate_partitions(n))) for n in range(1, N + 1)),
    ))
    return out


def _partition_checks(N: int, plane_exponents: Callable[[int], int]) -> list[CheckResult]:
    S = "partitions"
    out = []
    K = min(N, 10)
    euler = series.product_form(lambda k: 1, K)
    mac = series.product_form(plane_exponents, K)
    for m, prod, label in ((2, euler, "euler product"), (3, mac, "macmahon product")):
        brute = partitions.order_ideal_counts(m, K, "tree")
        out.append(_compare(
            f"partitions.m{m}_oracle", S, (label, "order-ideal enumeration"),
            ((k, prod[k], brute[k]) for k in range(K + 1)),
        ))
    K8 = min(N, 8)
    for m in range(1, 5):
        tree = partitions.order_ideal_counts(m, K8, "tree")
        dedup = partitions.order_ideal_counts(m, K8, "dedup")
        out.append(_compare(
            f"partitions.strategies_m{m}", S, ("tree", "dedup"),
            ((k, tree[k], dedup[k]) for k in range(K8 + 1)),
        ))
    out.append(_compare(
        "partitions.listing_count", S, ("len(enumerate_partitions)", "euler product"),
        ((n, len(partitions.enumerate_partitions(n)), euler[n]) for n in range(1, K + 1)),
    ))
    p4 = partitions.order_ideal_counts(4, K8, "tree")
    out.append(_compare(
        "partitions.monotone_in_m", S, ("min(P_3(k), P_4(k))", "P_3(k)"),
        ((k, min(mac[k], p4[k]), mac[k]) for k in range(K8 + 1)),
    ))
    return out


def _weight_checks(N: int, rng: random.Random, weight, n_random: int) -> list[CheckResult]:
    S = "weights"
    out = []
    cache: dict = {}

    def wfn(alpha, _cache=None):
        return weight(alpha, cache)

    bs = [[1] + [rng.randint(-3, 3) for _ in range(N)] for _ in range(n_random)]

    def equivalence():
        for b in bs:
            ser = a_from_b_series(b, N)
            for n in range(1, N + 1):
                yield n, a_from_b_partition_sum(b, n, weight=wfn), ser[n]

    out.append(_compare(
        "weights.equivalence", S, ("partition sum", "series log"), equivalence(),
        f"{n_random} random sequences",
    ))

    def recurrence():
        for b in bs:
            ser = a_from_b_series(b, N)
            rec = a_from_b_recurrence(b, N)
            for n in range(1, N + 1):
                yield n, rec[n], ser[n]

    out.append(_compare("weights.recurrence", S, ("t d/dt recurrence", "series log"), recurrence()))

    def roundtrip():
        for b in bs:
            back = b_from_a(a_from_b_series(b, N), N)
            for k in range(N + 1):
                yield k, back[k], Fraction(b[k])

    out.append(_compare("weights.b_roundtrip", S, ("b_from_a(a_from_b(b))", "b"), roundtrip()))

    for m, s in ((2, 1), (3, 2)):
        b = partitions.pm_series(m, N).coeffs
        out.append(_compare(
            f"weights.identity_P{m}", S, (f"sum e(alpha) prod P_{m}", f"n sigma_{s}(n)"),
            ((n, a_from_b_partition_sum(b, n, weight=wfn), n * divisor_sum(n, s))
             for n in range(1, N + 1)),
        ))
    ones = [1] * (N + 1)
    out.append(_compare(
        "weights.sum_of_weights", S, ("sum_alpha e(alpha)", "n"),
        ((n, a_from_b_partition_sum(ones, n, weight=wfn), n) for n in range(1, N + 1)),
    ))
    out.append(_compare(
        "weights.memo", S, ("memoized e", "plain recursion"),
        ((alpha.n, wfn(alpha), e_weight_uncached(alpha))
         for n in range(1, min(N, 10) + 1) for alpha in partitions.enumerate_partitions(n)),
    ))
    return out


def kummer_grid(max_m: int = 4):
    """``(g, r)`` pairs with ``g >= 1`` and ``2 <= g + r <= max_m``."""
    return [(g, m - g) for m in range(2, max_m + 1) for g in range(1, m + 1)]


def _kummer_checks(N: int, weight, cache, max_m: int) -> list[CheckResult]:
    S = "kummer"
    out = []
    wcache: dict = {}

    def wfn(alpha, _cache=None):
        return weight(alpha, wcache)

    w_sum: dict[tuple[int, int], Fraction] = {}

    def w_partition(m, n):
        if (m, n) not in w_sum:
            w_sum[m, n] = w_euler_partition_sum(m, n, cache=cache, weight=wfn)
        return w_sum[m, n]

    for m in range(1, 4):
        ser = w_euler_series(m, N, cache=cache)
        out.append(_compare(
            f"kummer.w_routes_m{m}", S, ("log series", "e(alpha) partition sum"),
            ((n, ser[n], w_partition(m, n)) for n in range(1, N + 1)),
        ))

    def grid():
        for g, r in kummer_grid(max_m):
            for chi in CHI_VALUES:
                p = KummerParams(g, r, chi, N)
                main = kummer_euler_table(p, cache=cache)
                power = kummer_euler_table_via_power(p, cache=cache)
                for n in range(1, N + 1):
                    via_w = n ** (2 * g - 2) * chi * w_partition(p.w_dim, n)
                    yield n, (main.chi[n], main.chi[n]), (power.chi[n], via_w)
                    if g == 2 and r == 0 and chi == 1:
                        yield n, main.chi[n], closed_form_g2(n)
                    if g == 1 and r == 1:
                        yield n, main.chi[n], closed_form_g1r1(chi, n)
                    if g + r == 3:
                        yield n, main.chi[n], closed_form_dim3(g, chi, n)
                    yield n, orbifold_euler(p, n, cache=cache) * n ** (2 * g), main.chi[n]

    out.append(_compare(
        "kummer.route_agreement", S, ("log of partition series", "power/W-route/closed forms"),
        grid(), f"(g, r) with 2 <= g+r <= {max_m}, chi(Y) in {list(CHI_VALUES)}",
    ))

    M = max(N, 20)
    g2 = kummer_euler_table(KummerParams(2, 0, 1, M), cache=cache)
    out.append(_compare(
        "kummer.g2_closed_form", S, ("engine", "n^3 sigma_1(n)"),
        ((n, g2.chi[n], closed_form_g2(n)) for n in range(1, M + 1)),
    ))

    def dim3():
        for g in (1, 2, 3):
            for chi in (-2, 1, 2):
                t = kummer_euler_table(KummerParams(g, 3 - g, chi, M), cache=cache)
                for n in range(1, M + 1):
                    yield n, t.chi[n], closed_form_dim3(g, chi, n)

    out.append(_compare("kummer.dim3_closed_form", S, ("engine", "chi n^(2g-1) sigma_2(n)"), dim3()))

    K = min(N, 10)
    t3 = kummer_euler_table(KummerParams(3, 0, 1, K), cache=cache)
    out.append(_compare(
        "kummer.dt_degree_zero", S, ("(-1)^(n-1)/n^6 chi(K_n)", "(-1)^(n-1)/n sigma_2(n)"),
        ((n, Fraction((-1) ** (n - 1) * t3.chi[n], n**6), dt_degree_zero(n)) for n in range(1, K + 1)),
    ))

    edge = KummerParams(1, 0, 1, N)
    e_main = kummer_euler_table(edge, cache=cache)
    out.append(_compare(
        "kummer.edge_g1_r0", S, ("log of P_1 series", "W_0 partition sum"),
        ((n, e_main.chi[n], kummer_euler_via_w(edge, n, cache=cache)) for n in range(1, N + 1)),
        "g=1, r=0 edge: routes compared, no independent ground truth",
    ))
    return out


def verify_all(
    N: int = 12,
    suites: Iterable[str] = SUITES,
    *,
    seed: int = 0,
    n_random: int = 20,
    cache=None,
    weight: Callable | None = None,
    plane_exponents: Callable[[int], int] | None = None,
    max_m: int = 4,
) -> VerificationReport:
    """Run every cross-check at truncation ``N`` and collect a report.

    ``weight`` and ``plane_exponents`` replace :func:`e_weight` and the
    MacMahon exponents ``e_k = k``; they exist so that fault injection can
    show each check actually bites.
    """
    suites = tuple(suites)
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suites {sorted(unknown)}")
    weight = weight or e_weight
    plane_exponents = plane_exponents or (lambda k: k)
    rng = random.Random(seed)
    report = VerificationReport(N)
    if "series" in suites:
        report.checks += _series_checks(N, rng)
    if "partitions" in suites:
        report.checks += _partition_checks(N, plane_exponents)
    if "weights" in suites:
        report.checks += _weight_checks(N, rng, weight, n_random)
    if "kummer" in suites:
        report.checks += _kummer_checks(N, weight, cache, max_m)
    return report
