"""Exception hierarchy shared by the engine and the command line front end."""


class KummerError(Exception):
    """Base class for every error raised by this package."""


class UsageError(KummerError, ValueError):
    """Invalid arguments: mismatched truncation orders, out-of-range indices,
    wrong table dimension."""


class SeriesDomainError(KummerError, ValueError):
    """A series operation was applied outside its domain, e.g. ``log`` of a
    series whose constant term is not 1."""


class IntegrityError(KummerError):
    """A persisted partition table is unreadable or violates its invariants."""


class ConsistencyError(KummerError, ArithmeticError):
    """An Euler characteristic came out non-integral.

    Euler characteristics of schemes are integers, so this always signals a
    bug in the engine rather than bad input.
    """


class ResourceLimitError(KummerError):
    """The brute-force enumerator exceeded its node budget.

    ``partial`` holds the counts of every level that was finished before the
    budget ran out (index ``k`` is the count for size ``k``).
    """

    def __init__(self, message, partial=()):
        super().__init__(message)
        self.partial = tuple(partial)
