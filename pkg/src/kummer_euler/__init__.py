"""Exact Euler characteristics of generalized Kummer schemes ``K_n(A x Y)``.

The engine takes ``g = dim A``, ``r = dim Y`` and ``chi(Y)`` and produces
``chi(K_n)`` as exact integers, together with the cross-checks that tie the
generating-function route to the weighted partition sums and the divisor-sum
closed forms.
"""

from .errors import (
    ConsistencyError,
    IntegrityError,
    KummerError,
    ResourceLimitError,
    SeriesDomainError,
    UsageError,
)
from .kummer import (
    KummerParams,
    KummerTable,
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
from .partitions import (
    OrderIdeal,
    PartitionMult,
    PartitionTable,
    count_order_ideals,
    enumerate_order_ideals,
    enumerate_partitions,
    pm_series,
)
from .series import Rational, TruncatedSeries
from .verify import VerificationReport, verify_all
from .weights import a_from_b_partition_sum, a_from_b_series, b_from_a, e_weight

__version__ = "0.1.0"
