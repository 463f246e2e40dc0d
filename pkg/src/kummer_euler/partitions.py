"""Ordinary partitions and m-dimensional partitions.

An m-dimensional partition of ``k`` is a finite down-closed subset (an order
ideal) of ``N^m`` with ``k`` elements. ``P_1`` is identically 1, ``P_2`` is
the partition function and ``P_3`` counts plane partitions; for these the
generating function is a product formula. From ``m = 4`` on no product
formula exists and the counts come from brute-force enumeration.

Two enumerators are provided and are deliberately independent:

``tree``
    Reverse search. Lexicographic order on ``N^m`` extends the product order,
    so every ideal is built uniquely by adding its points in increasing lex
    order. A node's children are its addable corners that are lex-larger than
    its current lex-maximum; no deduplication is needed.

``dedup``
    Level-by-level growth by every addable corner, with duplicates removed
    through a set of canonical (sorted) point tuples.
"""

from __future__ import annotations

import enum
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .errors import IntegrityError, ResourceLimitError, UsageError
from .series import TruncatedSeries, product_form

__all__ = [
    "PartitionMult",
    "OrderIdeal",
    "PartitionTable",
    "Source",
    "enumerate_partitions",
    "enumerate_order_ideals",
    "order_ideal_counts",
    "count_order_ideals",
    "pm_series",
    "cache_store",
    "cache_load",
    "cache_path",
    "brute_force_table",
    "CACHE_SCHEMA_VERSION",
]

log = logging.getLogger(__name__)

CACHE_SCHEMA_VERSION = 1
STRATEGIES = ("tree", "dedup")


# -- 2-dimensional partitions -------------------------------------------------


@dataclass(frozen=True)
class PartitionMult:
    """Partition of ``n`` in multiplicity form ``(1^a_1 2^a_2 ... n^a_n)``.

    ``mult[i-1]`` is the number of parts equal to ``i``; ``len(mult) == n``.
    """

    n: int
    mult: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise UsageError(f"partition size must be positive, got {self.n}")
        if len(self.mult) != self.n:
            raise UsageError(f"multiplicity vector must have length {self.n}")
        if any(a < 0 for a in self.mult):
            raise UsageError("multiplicities must be nonnegative")
        if sum(i * a for i, a in enumerate(self.mult, 1)) != self.n:
            raise UsageError(f"{self.mult} is not a partition of {self.n}")

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> PartitionMult:
        n = sum(parts)
        mult = [0] * n
        for p in parts:
            if p < 1:
                raise UsageError(f"parts must be positive, got {p}")
            mult[p - 1] += 1
        return cls(n, tuple(mult))

    @property
    def parts(self) -> tuple[int, ...]:
        """Parts in weakly decreasing order."""
        out = []
        for i in range(self.n, 0, -1):
            out.extend([i] * self.mult[i - 1])
        return tuple(out)

    def sizes(self) -> list[int]:
        """Distinct part sizes, increasing."""
        return [i for i, a in enumerate(self.mult, 1) if a]

    def remove_part(self, i: int) -> PartitionMult:
        """The partition of ``n - i`` obtained by deleting one part of size ``i``."""
        if not 1 <= i <= self.n or self.mult[i - 1] == 0:
            raise UsageError(f"{self} has no part of size {i}")
        if i == self.n:
            raise UsageError("removing the only part leaves the empty partition")
        m = list(self.mult)
        m[i - 1] -= 1
        return PartitionMult(self.n - i, tuple(m[: self.n - i]))

    def __str__(self):
        body = " ".join(f"{i}^{a}" for i, a in enumerate(self.mult, 1) if a)
        return f"({body})"


def enumerate_partitions(n: int) -> list[PartitionMult]:
    """All partitions of ``n``, each exactly once, in reverse lex order of parts."""
    if n < 1:
        raise UsageError(f"n must be positive, got {n}")
    out = []

    def rec(remaining, largest, parts):
        if remaining == 0:
            out.append(PartitionMult.from_parts(parts))
            return
        for p in range(min(remaining, largest), 0, -1):
            parts.append(p)
            rec(remaining - p, p, parts)
            parts.pop()

    rec(n, n, [])
    return out


# -- order ideals in N^m ------------------------------------------------------


Point = tuple[int, ...]


@dataclass(frozen=True)
class OrderIdeal:
    """A finite down-closed subset of ``N^dim``, points sorted lexicographically."""

    dim: int
    points: tuple[Point, ...]

    def __len__(self):
        return len(self.points)

    def is_down_closed(self) -> bool:
        pts = set(self.points)
        if len(pts) != len(self.points):
            return False
        for x in pts:
            if len(x) != self.dim or any(c < 0 for c in x):
                return False
            for i, c in enumerate(x):
                if c and x[:i] + (c - 1,) + x[i + 1 :] not in pts:
                    return False
        return True


def _units(m: int) -> list[Point]:
    return [tuple(1 if j == i else 0 for j in range(m)) for i in range(m)]


def _addable(c: Point, pts) -> bool:
    for i, ci in enumerate(c):
        if ci and c[:i] + (ci - 1,) + c[i + 1 :] not in pts:
            return False
    return True


def _tree_levels(m: int, k_max: int, keep_points: bool = True, max_ideals: int | None = None):
    """Yield the tree frontier level by level, starting with the empty ideal.

    A node is ``(points, members, corners)``: the lex-sorted point tuple
    (left empty when ``keep_points`` is off), the membership set, and the
    sorted addable points that are lex-larger than every point present.
    """
    origin = (0,) * m
    units = _units(m)
    level = [((), frozenset(), (origin,))]
    seen = 1
    yield level
    for _ in range(k_max):
        nxt = []
        for pts, members, corners in level:
            for idx, c in enumerate(corners):
                new_members = members | {c}
                # successors of c that become addable; all are lex-larger than c
                fresh = []
                for u in units:
                    d = tuple(a + b for a, b in zip(c, u))
                    if _addable(d, new_members):
                        fresh.append(d)
                new_corners = tuple(sorted(set(corners[idx + 1 :]).union(fresh)))
                new_pts = pts + (c,) if keep_points else ()
                nxt.append((new_pts, new_members, new_corners))
        seen += len(nxt)
        if max_ideals is not None and seen > max_ideals:
            raise ResourceLimitError(f"node budget {max_ideals} exhausted")
        level = nxt
        yield level


def _dedup_levels(m: int, k_max: int, max_ideals: int | None = None):
    """Yield sets of canonical ideals (sorted point tuples) level by level."""
    origin = (0,) * m
    units = _units(m)
    level = {()}
    seen = 1
    yield level
    for _ in range(k_max):
        nxt = set()
        for ideal in level:
            pts = set(ideal)
            candidates = {origin} if not pts else set()
            for x in ideal:
                for u in units:
                    candidates.add(tuple(a + b for a, b in zip(x, u)))
            for c in candidates:
                if c not in pts and _addable(c, pts):
                    nxt.add(tuple(sorted(pts | {c})))
        seen += len(nxt)
        if max_ideals is not None and seen > max_ideals:
            raise ResourceLimitError(f"node budget {max_ideals} exhausted")
        level = nxt
        yield level


def _check_strategy(strategy: str):
    if strategy not in STRATEGIES:
        raise UsageError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def enumerate_order_ideals(m: int, k: int, strategy: str = "tree") -> Iterator[OrderIdeal]:
    """Every order ideal of size ``k`` in ``N^m``, each exactly once."""
    if m < 1:
        raise UsageError(f"dimension must be positive, got {m}")
    if k < 0:
        raise UsageError(f"size must be nonnegative, got {k}")
    _check_strategy(strategy)
    if strategy == "tree":
        for level_no, level in enumerate(_tree_levels(m, k)):
            if level_no == k:
                for pts, _, _ in level:
                    yield OrderIdeal(m, pts)
    else:
        for level_no, level in enumerate(_dedup_levels(m, k)):
            if level_no == k:
                for pts in sorted(level):
                    yield OrderIdeal(m, pts)


def order_ideal_counts(
    m: int,
    k_max: int,
    strategy: str = "tree",
    max_ideals: int | None = None,
) -> list[int]:
    """``[P_m(0), ..., P_m(k_max)]`` by brute-force enumeration.

    Raises :class:`ResourceLimitError` once more than ``max_ideals`` ideals
    have been generated; its ``partial`` attribute carries the finished levels.
    """
    if m < 1:
        raise UsageError(f"dimension must be positive, got {m}")
    if k_max < 0:
        raise UsageError(f"k_max must be nonnegative, got {k_max}")
    _check_strategy(strategy)
    if m == 1:
        return [1] * (k_max + 1)
    counts: list[int] = []
    levels = (
        _tree_levels(m, k_max, keep_points=False, max_ideals=max_ideals)
        if strategy == "tree"
        else _dedup_levels(m, k_max, max_ideals=max_ideals)
    )
    try:
        for level in levels:
            counts.append(len(level))
    except ResourceLimitError as exc:
        raise ResourceLimitError(
            f"P_{m}: {exc}; finished through k={len(counts) - 1}", counts
        ) from None
    return counts


def count_order_ideals(m: int, k: int, strategy: str = "tree") -> int:
    """Number of order ideals of size ``k`` in ``N^m``."""
    if k < 0:
        raise UsageError(f"size must be nonnegative, got {k}")
    if k == 0 or m == 1:
        if m < 1:
            raise UsageError(f"dimension must be positive, got {m}")
        return 1
    return order_ideal_counts(m, k, strategy)[k]


# -- tables and cache ---------------------------------------------------------


class Source(str, enum.Enum):
    PRODUCT_FORMULA = "product_formula"
    BRUTE_FORCE = "brute_force"


@dataclass(frozen=True)
class PartitionTable:
    m: int
    counts: tuple[int, ...]
    source: Source

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        object.__setattr__(self, "source", Source(self.source))
        self.validate()

    def validate(self):
        c = self.counts
        if self.m < 1:
            raise IntegrityError(f"bad dimension {self.m}")
        if not c:
            raise IntegrityError("empty count list")
        if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in c):
            raise IntegrityError("counts must be nonnegative integers")
        if c[0] != 1:
            raise IntegrityError(f"P_{self.m}(0) must be 1, found {c[0]}")
        if len(c) > 1 and c[1] != 1:
            raise IntegrityError(f"P_{self.m}(1) must be 1, found {c[1]}")

    @property
    def k_max(self) -> int:
        return len(self.counts) - 1

    def series(self, order: int) -> TruncatedSeries:
        if order > self.k_max:
            raise UsageError(f"table for m={self.m} only reaches k={self.k_max}")
        return TruncatedSeries(self.counts[: order + 1], order)


def cache_path(cache_dir, m: int) -> Path:
    return Path(cache_dir) / f"P{m}.json"


def cache_store(table: PartitionTable, path) -> None:
    """Write ``table`` to ``path`` atomically (temp file then rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {
        "schema_version": CACHE_SCHEMA_VERSION,
        "m": table.m,
        "source": table.source.value,
        "counts": [str(c) for c in table.counts],
    }
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def cache_load(m: int, path) -> PartitionTable:
    """Read and validate a cached table for dimension ``m``."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise IntegrityError(f"{path}: unreadable cache file ({exc})") from None
    try:
        if doc["schema_version"] != CACHE_SCHEMA_VERSION:
            raise IntegrityError(f"{path}: unsupported schema_version {doc['schema_version']!r}")
        stored_m = doc["m"]
        raw = doc["counts"]
        source = Source(doc["source"])
        if not isinstance(raw, list) or not all(isinstance(s, str) for s in raw):
            raise IntegrityError(f"{path}: counts must be a list of decimal strings")
        counts = tuple(int(s, 10) for s in raw)
    except (KeyError, TypeError, ValueError) as exc:
        raise IntegrityError(f"{path}: malformed cache file ({exc})") from None
    if stored_m != m:
        raise UsageError(f"{path} holds P_{stored_m}, but P_{m} was requested")
    try:
        return PartitionTable(m, counts, source)
    except IntegrityError as exc:
        raise IntegrityError(f"{path}: {exc}") from None


def _product_exponents(m: int):
    if m == 1:
        return {1: 1}
    if m == 2:
        return lambda k: 1
    if m == 3:
        return lambda k: k
    raise UsageError(f"no product formula for m={m}")


def pm_series(
    m: int,
    order: int,
    cache=None,
    max_ideals: int | None = None,
) -> TruncatedSeries:
    """``sum_{k<=order} P_m(k) t^k``.

    ``m <= 3`` uses the product formulas. ``m >= 4`` uses the tree enumerator;
    when ``cache`` (a directory) is given, a long-enough cached table is
    reused and fresh results are written back. If the enumerator runs out of
    budget the finished levels are flushed to the cache before re-raising.
    """
    if m < 1:
        raise UsageError(f"dimension must be positive, got {m}")
    if order < 0:
        raise UsageError(f"order must be nonnegative, got {order}")
    if m <= 3:
        return product_form(_product_exponents(m), order)
    return brute_force_table(m, order, cache, max_ideals).series(order)


_memory: dict[int, PartitionTable] = {}


def brute_force_table(m: int, k_max: int, cache=None, max_ideals: int | None = None) -> PartitionTable:
    """Brute-force ``P_m`` table through ``k_max``.

    Looks in the on-disk ``cache`` directory first, then in a per-process
    memo, and only then enumerates.
    """
    path = cache_path(cache, m) if cache is not None else None
    if path is not None and path.exists():
        table = cache_load(m, path)
        if table.k_max >= k_max:
            return table
    mem = _memory.get(m)
    if mem is not None and mem.k_max >= k_max:
        if path is not None:
            cache_store(mem, path)
        return mem
    log.info("enumerating order ideals in N^%d up to size %d", m, k_max)
    try:
        counts = order_ideal_counts(m, k_max, "tree", max_ideals)
    except ResourceLimitError as exc:
        if path is not None and len(exc.partial) >= 2:
            old = cache_load(m, path) if path.exists() else None
            if old is None or old.k_max < len(exc.partial) - 1:
                cache_store(PartitionTable(m, exc.partial, Source.BRUTE_FORCE), path)
        raise
    table = PartitionTable(m, counts, Source.BRUTE_FORCE)
    _memory[m] = table
    if path is not None:
        cache_store(table, path)
    return table
