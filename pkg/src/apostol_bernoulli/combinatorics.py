"""Binomial, Stirling (second kind), Eulerian and Bernoulli numbers.

The triangular families live in append-only tables that grow on demand.
Growth happens under a lock, so concurrent callers always see complete
rows and identical values.
"""

from fractions import Fraction
import threading

from .errors import DomainError
from .exact import Polynomial

__all__ = [
    "NumberTable",
    "binomial",
    "stirling2",
    "eulerian_number",
    "bernoulli_number",
    "bernoulli_polynomial",
    "mirimanoff_polynomial",
    "BINOMIAL",
    "STIRLING2",
    "EULERIAN",
]


class NumberTable:
    """Triangular table of integers, row ``n`` holding columns ``0..n``.

    ``step(prev_row, n)`` builds row ``n`` from row ``n - 1``; out-of-range
    columns read as zero.
    """

    def __init__(self, kind, first_row, step):
        self.kind = kind
        self._rows = [tuple(first_row)]
        self._step = step
        self._lock = threading.Lock()

    def row(self, n):
        if n < 0:
            raise DomainError(f"{self.kind}: row index must be nonnegative, got {n}")
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    m = len(self._rows)
                    self._rows.append(tuple(self._step(self._rows[-1], m)))
        return self._rows[n]

    def __call__(self, n, k):
        if n < 0:
            raise DomainError(f"{self.kind}: row index must be nonnegative, got {n}")
        if k < 0 or k > n:
            return 0
        return self.row(n)[k]


def _get(row, k):
    return row[k] if 0 <= k < len(row) else 0


def _pascal(prev, n):
    return [_get(prev, k) + _get(prev, k - 1) for k in range(n + 1)]


def _stirling2_step(prev, n):
    return [k * _get(prev, k) + _get(prev, k - 1) for k in range(n + 1)]


def _eulerian_step(prev, n):
    # <n k> = (k+1)<n-1 k> + (n-k)<n-1 k-1>
    return [(k + 1) * _get(prev, k) + (n - k) * _get(prev, k - 1) for k in range(n + 1)]


BINOMIAL = NumberTable("binomial", (1,), _pascal)
STIRLING2 = NumberTable("stirling2", (1,), _stirling2_step)
EULERIAN = NumberTable("eulerian", (1,), _eulerian_step)


def binomial(n, k):
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    return BINOMIAL(n, k)


def stirling2(n, k):
    """Stirling number of the second kind S(n, k)."""
    return STIRLING2(n, k)


def eulerian_number(n, k):
    """Eulerian number <n k>: permutations of n letters with k descents."""
    return EULERIAN(n, k)


_bernoulli = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli_number(m):
    """Bernoulli number B_m with B_1 = -1/2 (coefficients of z/(e^z - 1))."""
    if m < 0:
        raise DomainError("Bernoulli index must be nonnegative")
    if m >= len(_bernoulli):
        with _bernoulli_lock:
            while len(_bernoulli) <= m:
                n = len(_bernoulli)
                s = sum(binomial(n + 1, k) * _bernoulli[k] for k in range(n))
                _bernoulli.append(-s / (n + 1))
    return _bernoulli[m]


def bernoulli_polynomial(n):
    """B_n(a) = sum_k C(n, k) B_k a^(n-k)."""
    return Polynomial([binomial(n, n - j) * bernoulli_number(n - j) for j in range(n + 1)])


def mirimanoff_polynomial(n, m):
    """sum_{k=0}^{m-1} k^(n-1) x^k, with 0^0 = 1."""
    if n < 1 or m < 1:
        raise DomainError("mirimanoff_polynomial needs n >= 1 and m >= 1")
    return Polynomial([k ** (n - 1) for k in range(m)])
