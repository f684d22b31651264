"""Independent reference computations at ``w = 1``.

These deliberately avoid the series engine: one is the classical
inclusion-exclusion recurrence for DAGs, the other evaluates the SCC
formula with plain rational power series (``z^n`` coefficients, factorials
explicit).
"""

from fractions import Fraction
from math import comb, factorial


def dag_totals_recurrence(n_max):
    """Labeled DAG counts ``a_0 .. a_{n_max}``.

    a_n = sum_{k>=1} (-1)^(k+1) C(n, k) 2^(k(n-k)) a_{n-k}
    """
    a = [1]
    for n in range(1, n_max + 1):
        a.append(sum((-1) ** (k + 1) * comb(n, k) * 2 ** (k * (n - k)) * a[n - k]
                     for k in range(1, n + 1)))
    return a


def _ops_inverse(f, N):
    g = [Fraction(0)] * (N + 1)
    g[0] = 1 / f[0]
    for n in range(1, N + 1):
        g[n] = -sum(f[k] * g[n - k] for k in range(1, n + 1)) / f[0]
    return g


def _ops_log(f, N):
    # (log f)' = f'/f, on ordinary power series with f[0] == 1
    inv = _ops_inverse(f, N)
    deriv = [(k + 1) * f[k + 1] for k in range(N)]
    q = [sum(deriv[k] * inv[n - k] for k in range(n + 1)) for n in range(N)]
    return [Fraction(0)] + [q[n - 1] / n for n in range(1, N + 1)]


def scc_totals_rational(n_max):
    """Strongly connected digraph counts at ``w = 1`` via ``-log(G . 1/G)``."""
    N = n_max
    g = [Fraction(2 ** comb(n, 2), factorial(n)) for n in range(N + 1)]
    inv = _ops_inverse(g, N)
    # exponential Hadamard: multiply n!-normalized coefficients
    had = [Fraction(2 ** comb(n, 2)) * inv[n] for n in range(N + 1)]
    scc = [-c for c in _ops_log(had, N)]
    out = []
    for n in range(N + 1):
        v = scc[n] * factorial(n)
        assert v.denominator == 1
        out.append(int(v))
    return out
