# Counting m-dimensional partitions by brute force.
#
# An m-dimensional partition of k is a down-closed set of k lattice points in
# N^m. For m = 2, 3 product formulas exist; for m >= 4 we enumerate.

import tempfile
import time

from kummer_euler.partitions import (
    enumerate_order_ideals,
    order_ideal_counts,
    pm_series,
)

# The three Young diagrams of size 3, as point sets in N^2
for ideal in enumerate_order_ideals(2, 3):
    print(ideal.points)

# The two enumerators are independent; they must agree
for m in range(1, 5):
    tree = order_ideal_counts(m, 8, "tree")
    dedup = order_ideal_counts(m, 8, "dedup")
    assert tree == dedup
    print(f"P_{m}(0..8) =", tree)

# Closed forms vs. brute force for plane partitions
assert list(pm_series(3, 10).coeffs) == order_ideal_counts(3, 10)

# Solid partitions (m = 4) are cached on disk once computed
with tempfile.TemporaryDirectory() as cache:
    t0 = time.perf_counter()
    s = pm_series(4, 11, cache=cache)
    print("P_4(0..11) =", [int(c) for c in s], f"({time.perf_counter() - t0:.2f}s)")
