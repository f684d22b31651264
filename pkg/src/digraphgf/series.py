"""Truncated power series in ``z`` with EGF/GGF kinds.

A series stores numerators ``c_0 .. c_N``. For an EGF the represented
series is ``sum c_n z^n / n!``; for a GGF it is
``sum c_n / (1+w)^binom(n, 2) * z^n / n!``. The GGF denominator is
never materialized, which keeps every operation in integer arithmetic:
the product of two GGFs picks up a factor ``(1+w)^(k*l)`` between parts
of sizes ``k`` and ``l`` and nothing else.
"""

from __future__ import annotations

import enum
from math import comb
from typing import List, Sequence, Union

from .coeffring import POLYNOMIAL, CoeffMode, CoeffPoly, poly_eval_u, poly_subst_u

Coeff = Union[CoeffPoly, int]


class SeriesError(ValueError):
    pass


class KindMismatch(SeriesError):
    pass


class ModeMismatch(SeriesError):
    pass


class NonzeroConstantTerm(SeriesError):
    pass


class ConstantTermNotOne(SeriesError):
    pass


class SeriesKind(enum.Enum):
    EGF = "egf"
    GGF = "ggf"


EGF = SeriesKind.EGF
GGF = SeriesKind.GGF


class BinomialTable:
    """Pascal triangle ``C(n, k)`` for ``0 <= k <= n <= n_max``, grown on demand."""

    def __init__(self, n_max: int = 0):
        self.rows: List[List[int]] = [[1]]
        self.extend(n_max)

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def extend(self, n_max: int) -> None:
        rows = self.rows
        while len(rows) <= n_max:
            prev = rows[-1]
            rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, len(prev))] + [1])

    def __call__(self, n: int, k: int) -> int:
        if n > self.n_max:
            self.extend(n)
        return self.rows[n][k]


BINOMIALS = BinomialTable(64)


class Series:
    """Immutable truncated series; ``order`` is the last stored index."""

    __slots__ = ("kind", "coeffs", "mode")

    def __init__(self, kind: SeriesKind, coeffs: Sequence[Coeff], mode: CoeffMode = POLYNOMIAL):
        self.kind = kind
        self.mode = mode
        self.coeffs = tuple(mode.lift(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")

    @classmethod
    def _raw(cls, kind, coeffs, mode) -> "Series":
        s = object.__new__(cls)
        s.kind = kind
        s.mode = mode
        s.coeffs = tuple(coeffs)
        return s

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Coeff:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self.kind, self.mode, self.coeffs) == (other.kind, other.mode, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.kind, self.mode, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Series({self.kind.name}, [{body}], {self.mode.name})"

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return Series._raw(self.kind, self.coeffs[: order + 1], self.mode)

    def same_as(self, other: "Series") -> bool:
        """Equality of coefficients up to the smaller order."""
        n = min(self.order, other.order)
        return self.kind == other.kind and self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __add__(self, other: "Series") -> "Series":
        return series_add(self, other)

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)

    def __neg__(self) -> "Series":
        return series_negate(self)

    def __sub__(self, other: "Series") -> "Series":
        return series_add(self, series_negate(other))


def zero_series(kind: SeriesKind, order: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    return Series._raw(kind, [mode.zero()] * (order + 1), mode)


def one_series(kind: SeriesKind, order: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    return Series._raw(kind, [mode.one()] + [mode.zero()] * order, mode)


def z_series(kind: SeriesKind, order: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """The series ``z`` (one object of size 1)."""
    coeffs = [mode.zero()] * (order + 1)
    if order >= 1:
        coeffs[1] = mode.one()
    return Series._raw(kind, coeffs, mode)


def _check_pair(a: Series, b: Series) -> None:
    if a.kind is not b.kind:
        raise KindMismatch(f"{a.kind.name} vs {b.kind.name}")
    if a.mode != b.mode:
        raise ModeMismatch(f"{a.mode} vs {b.mode}")


def _shift(a: Series, k: int, l: int):
    """Convolution weight between parts of sizes k and l."""
    if a.kind is EGF or k == 0 or l == 0:
        return None
    return a.mode.shift(k * l)


def series_add(a: Series, b: Series) -> Series:
    _check_pair(a, b)
    n = min(a.order, b.order)
    return Series._raw(a.kind, [a.coeffs[i] + b.coeffs[i] for i in range(n + 1)], a.mode)


def series_negate(a: Series) -> Series:
    return Series._raw(a.kind, [-c for c in a.coeffs], a.mode)


def _term(weight: int, shift, x, y):
    # weight * shift * x * y, cheapest factors first
    t = x * weight
    if shift is not None:
        t = t * shift
    return t * y


def series_mul(a: Series, b: Series) -> Series:
    """Product; for GGFs this is the arrow product of the two families."""
    _check_pair(a, b)
    order = min(a.order, b.order)
    zero = a.mode.zero()
    A, B = a.coeffs, b.coeffs
    out = []
    for n in range(order + 1):
        acc = zero
        row = BINOMIALS.rows[n] if n <= BINOMIALS.n_max else None
        for k in range(n + 1):
            x, y = A[k], B[n - k]
            if not x or not y:
                continue
            c = row[k] if row is not None else BINOMIALS(n, k)
            acc = acc + _term(c, _shift(a, k, n - k), x, y)
        out.append(acc)
    return Series._raw(a.kind, out, a.mode)


def series_exp(a: Series) -> Series:
    """``exp(a)`` under the kind's convolution; needs ``a[0] == 0``.

    Uses ``n e_n = sum_k k C(n,k) S(k, n-k) a_k e_{n-k}``, which after
    dividing by ``n`` keeps integer weights ``C(n-1, k-1)``.
    """
    if a.coeffs[0]:
        raise NonzeroConstantTerm("exp needs a zero constant term")
    A = a.coeffs
    zero = a.mode.zero()
    E = [a.mode.one()]
    for n in range(1, a.order + 1):
        acc = zero
        for k in range(1, n + 1):
            x, y = A[k], E[n - k]
            if not x or not y:
                continue
            acc = acc + _term(BINOMIALS(n - 1, k - 1), _shift(a, k, n - k), x, y)
        E.append(acc)
    return Series._raw(a.kind, E, a.mode)


def series_log(a: Series) -> Series:
    """``log(a)`` under the kind's convolution; needs ``a[0] == 1``."""
    if a.coeffs[0] != 1:
        raise ConstantTermNotOne("log needs constant term 1")
    A = a.coeffs
    L = [a.mode.zero()]
    for n in range(1, a.order + 1):
        acc = A[n]
        for k in range(1, n):
            x, y = L[k], A[n - k]
            if not x or not y:
                continue
            acc = acc - _term(BINOMIALS(n - 1, k - 1), _shift(a, k, n - k), x, y)
        L.append(acc)
    return Series._raw(a.kind, L, a.mode)


def series_recip(a: Series) -> Series:
    """Multiplicative inverse; needs ``a[0] == 1``."""
    if a.coeffs[0] != 1:
        raise ConstantTermNotOne("reciprocal needs constant term 1")
    A = a.coeffs
    zero = a.mode.zero()
    R = [a.mode.one()]
    for n in range(1, a.order + 1):
        acc = zero
        for k in range(1, n + 1):
            x, y = A[k], R[n - k]
            if not x or not y:
                continue
            acc = acc + _term(BINOMIALS(n, k), _shift(a, k, n - k), x, y)
        R.append(-acc)
    return Series._raw(a.kind, R, a.mode)


def series_hadamard(a: Series, b: Series) -> Series:
    """Exponential Hadamard product of two EGFs."""
    _check_pair(a, b)
    if a.kind is not EGF:
        raise KindMismatch("Hadamard product is defined on EGF operands only")
    n = min(a.order, b.order)
    return Series._raw(EGF, [a.coeffs[i] * b.coeffs[i] for i in range(n + 1)], a.mode)


def retag_ggf_to_family_egf(a: Series) -> Series:
    """GGF of a family -> EGF of the same family (Hadamard with G)."""
    if a.kind is not GGF:
        raise KindMismatch("expected a GGF")
    return Series._raw(EGF, a.coeffs, a.mode)


def retag_egf_to_family_ggf(a: Series) -> Series:
    """EGF of a family -> GGF of the same family (Hadamard with Set)."""
    if a.kind is not EGF:
        raise KindMismatch("expected an EGF")
    return Series._raw(GGF, a.coeffs, a.mode)


def reinterpret_value_egf_as_ggf(a: Series) -> Series:
    """Same formal series, rewritten with GGF numerators.

    Unlike the retags this preserves the value: numerators pick up
    ``(1+w)^binom(n, 2)``.
    """
    if a.kind is not EGF:
        raise KindMismatch("expected an EGF")
    mode = a.mode
    return Series._raw(GGF, [c * mode.shift(comb(n, 2)) for n, c in enumerate(a.coeffs)], mode)


def series_point(a: Series) -> Series:
    """Distinguish one vertex: ``z d/dz``."""
    return Series._raw(a.kind, [c * n for n, c in enumerate(a.coeffs)], a.mode)


def series_scale_z(a: Series, s: Coeff) -> Series:
    """Substitute ``z -> s z``."""
    s = a.mode.lift(s)
    out = []
    p = a.mode.one()
    for c in a.coeffs:
        out.append(c * p)
        p = p * s
    return Series._raw(a.kind, out, a.mode)


def series_scale_coeffs(a: Series, s: Coeff) -> Series:
    """Multiply every coefficient by ``s`` (e.g. ``(u - 1) A``)."""
    s = a.mode.lift(s)
    return Series._raw(a.kind, [c * s for c in a.coeffs], a.mode)


def series_subst_u(a: Series, delta: int) -> Series:
    """Replace ``u`` with ``u + delta`` in every coefficient."""
    if a.mode.numeric:
        raise ModeMismatch("u is already fixed in numeric mode")
    return Series._raw(a.kind, [poly_subst_u(c, delta) for c in a.coeffs], a.mode)


def series_eval_u(a: Series, u_value: int) -> Series:
    """Evaluate the marker ``u``; ``w`` stays symbolic."""
    if a.mode.numeric:
        raise ModeMismatch("u is already fixed in numeric mode")
    return Series._raw(a.kind, [poly_eval_u(c, u_value) for c in a.coeffs], a.mode)


def series_evaluate(a: Series, w_value: int = 1, u_value: int = 1) -> Series:
    """Move a polynomial-mode series to numeric mode at ``(w, u)``."""
    if a.mode.numeric:
        raise ModeMismatch("series is already numeric")
    mode = CoeffMode.at(w_value, u_value)
    return Series._raw(a.kind, [mode.lift(c) for c in a.coeffs], mode)
