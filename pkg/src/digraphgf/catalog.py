"""Digraph families as short compositions of series operations.

Every builder returns a :class:`Series` truncated at order ``N``. Family
GGFs carry the count polynomials ``a_n(w, u)`` as numerators, so reading
off counts is a matter of taking coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

from .coeffring import POLYNOMIAL, CoeffMode, CoeffPoly
from .series import (
    EGF,
    GGF,
    Series,
    SeriesError,
    reinterpret_value_egf_as_ggf,
    retag_egf_to_family_ggf,
    series_add,
    series_exp,
    series_hadamard,
    series_log,
    series_mul,
    series_eval_u,
    series_negate,
    series_recip,
    series_scale_coeffs,
    series_scale_z,
    z_series,
)

U = CoeffPoly.u()


class EmptyObjectInFamily(SeriesError):
    """An SCC family must not contain the empty digraph."""


class MarkerCollision(SeriesError):
    """A user family already uses ``u``, which the builder needs as marker."""


class NonIntegerCount(SeriesError):
    pass


def base_graph_egf(N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """EGF of all simple graphs: ``g_n = (1+w)^binom(n, 2)``."""
    return Series._raw(EGF, [mode.shift(comb(n, 2)) for n in range(N + 1)], mode)


def base_set_ggf(N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """GGF of edgeless graphs: every numerator is 1."""
    return Series._raw(GGF, [mode.one()] * (N + 1), mode)


def base_digraph_ggf(N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    return Series._raw(GGF, [mode.shift(n * (n - 1)) for n in range(N + 1)], mode)


def dag_ggf(N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """DAGs: ``1 / Set(-z, w)``."""
    return series_recip(series_scale_z(base_set_ggf(N, mode), -1))


def dag_sources_ggf(N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """DAGs with ``u`` marking sources: ``Set((u-1) z, w) / Set(-z, w)``."""
    return series_mul(series_scale_z(base_set_ggf(N, mode), U - 1), dag_ggf(N, mode))


def scc_egf(N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """Strongly connected digraphs: ``-log(G . 1/G)``."""
    g = base_graph_egf(N, mode)
    return series_negate(series_log(series_hadamard(g, series_recip(g))))


def _check_scc_family(A: Series, N: int, mode: CoeffMode, *, marker_free: bool) -> Series:
    if A.kind is not EGF:
        raise SeriesError("SCC family must be given as an EGF")
    if A.order < N:
        raise SeriesError(f"SCC family known to order {A.order}, need {N}")
    A = A.truncate(N)
    if A.mode != mode:
        if A.mode.numeric:
            raise SeriesError("cannot lift a numeric SCC family back to polynomials")
        A = Series(EGF, A.coeffs, mode)
    if A.coeffs[0]:
        raise EmptyObjectInFamily("SCC family contains the empty digraph (c_0 != 0)")
    if marker_free and not mode.numeric and any(c.has_u() for c in A.coeffs):
        raise MarkerCollision("SCC family already depends on u")
    return A


def restricted_scc_ggf(A: Series, N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """Digraphs whose SCCs all lie in the family with EGF ``A``."""
    A = _check_scc_family(A, N, mode, marker_free=False)
    return series_recip(retag_egf_to_family_ggf(series_exp(series_negate(A))))


def restricted_scc_sources_ggf(A: Series, N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """As :func:`restricted_scc_ggf`, with ``u`` marking source-like SCCs."""
    A = _check_scc_family(A, N, mode, marker_free=True)
    marked = retag_egf_to_family_ggf(series_exp(series_scale_coeffs(A, U - 1)))
    return series_mul(marked, restricted_scc_ggf(A, N, mode))


def marked_subfamily_ggf(B: Series, N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """All digraphs, ``u`` marking the SCCs that belong to ``B``."""
    B = _check_scc_family(B, N, mode, marker_free=True)
    exponent = series_add(series_scale_coeffs(B, 1 - U), series_negate(scc_egf(N, mode)))
    return series_recip(retag_egf_to_family_ggf(series_exp(exponent)))


def initially_connected_ggf(N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """Initially connected digraphs; as a series this equals ``log G``."""
    return reinterpret_value_egf_as_ggf(series_log(base_graph_egf(N, mode)))


def single_vertex_egf(N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """EGF ``z`` of the one-vertex SCC."""
    return z_series(EGF, N, mode)


@dataclass
class FamilyTable:
    """Counts ``(n, m, p, count)``; ``m``/``p`` are ``None`` when not tracked."""

    family: str
    mode: str
    order: int
    track_m: bool
    track_p: bool
    rows: List[Tuple[Optional[int], ...]] = field(default_factory=list)

    def counts(self) -> Dict[Tuple, int]:
        return {r[:-1]: r[-1] for r in self.rows}

    def totals(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for r in self.rows:
            out[r[0]] = out.get(r[0], 0) + r[-1]
        return out

    def header(self) -> List[str]:
        cols = ["n"]
        if self.track_m:
            cols.append("m")
        if self.track_p:
            cols.append("p")
        return cols + ["count"]

    def compact_rows(self) -> List[Tuple[int, ...]]:
        """Rows restricted to the tracked columns."""
        keep = [True, self.track_m, self.track_p, True]
        return [tuple(v for v, k in zip(r, keep) if k) for r in self.rows]


def extract_table(f: Series, family: str = "", track_p: Optional[bool] = None) -> FamilyTable:
    """Read ``[w^m u^p]`` of each numerator into rows sorted by ``(n, m, p)``.

    A zero numerator still yields one row with count 0 so that every
    ``n`` up to the order is present.
    """
    mode = f.mode
    if mode.numeric:
        rows = [(n, None, None, c) for n, c in enumerate(f.coeffs)]
        return FamilyTable(family, mode.name, f.order, False, False, rows)
    if track_p is None:
        track_p = any(c.has_u() for c in f.coeffs)
    rows = []
    for n, c in enumerate(f.coeffs):
        if not c:
            rows.append((n, 0, 0 if track_p else None, 0))
            continue
        if not track_p and c.has_u():
            raise SeriesError("polynomial depends on u but p is not tracked")
        for (m, p), count in c.items():
            rows.append((n, m, p if track_p else None, count))
    return FamilyTable(family, mode.name, f.order, True, track_p, rows)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    build: Callable[..., Series]
    needs_payload: bool = False
    marked: bool = False


def _with_payload(fn):
    def build(N, mode, payload):
        return fn(payload, N, mode)
    return build


def _plain(fn):
    def build(N, mode, payload=None):
        return fn(N, mode)
    return build


FAMILIES: Dict[str, FamilySpec] = {
    "graphs": FamilySpec("graphs", _plain(base_graph_egf)),
    "digraphs": FamilySpec("digraphs", _plain(base_digraph_ggf)),
    "set": FamilySpec("set", _plain(base_set_ggf)),
    "dag": FamilySpec("dag", _plain(dag_ggf)),
    "dag_sources": FamilySpec("dag_sources", _plain(dag_sources_ggf), marked=True),
    "scc": FamilySpec("scc", _plain(scc_egf)),
    "initially_connected": FamilySpec("initially_connected", _plain(initially_connected_ggf)),
    "source_like": FamilySpec(
        "source_like",
        _plain(lambda N, mode: restricted_scc_sources_ggf(scc_egf(N, mode), N, mode)),
        marked=True,
    ),
    "no_trivial_scc": FamilySpec(
        "no_trivial_scc",
        _plain(lambda N, mode: no_trivial_scc_ggf(N, mode)),
    ),
    "restricted_scc": FamilySpec(
        "restricted_scc", _with_payload(restricted_scc_ggf), needs_payload=True
    ),
    "restricted_scc_sources": FamilySpec(
        "restricted_scc_sources",
        _with_payload(restricted_scc_sources_ggf),
        needs_payload=True,
        marked=True,
    ),
    "marked_subfamily": FamilySpec(
        "marked_subfamily", _with_payload(marked_subfamily_ggf), needs_payload=True, marked=True
    ),
}


def no_trivial_scc_ggf(N: int, mode: CoeffMode = POLYNOMIAL) -> Series:
    """Digraphs without a one-vertex SCC (marked subfamily ``B = z`` at ``u = 0``)."""
    if mode.numeric:
        m0 = CoeffMode.at(mode.w_value, 0)
        s = marked_subfamily_ggf(single_vertex_egf(N, m0), N, m0)
        return Series._raw(s.kind, s.coeffs, mode)
    return series_eval_u(marked_subfamily_ggf(single_vertex_egf(N), N), 0)


def build_family(name: str, N: int, mode: CoeffMode = POLYNOMIAL, payload: Optional[Series] = None) -> Series:
    spec = FAMILIES[name]
    if spec.needs_payload and payload is None:
        raise ValueError(f"family {name!r} needs an SCC family payload")
    return spec.build(N, mode, payload)


def family_table(name: str, N: int, mode: CoeffMode = POLYNOMIAL, payload: Optional[Series] = None) -> FamilyTable:
    spec = FAMILIES[name]
    f = build_family(name, N, mode, payload)
    return extract_table(f, name, track_p=spec.marked if not mode.numeric else None)


def check_numerator_degrees(f: Series) -> bool:
    """``deg_w(c_n) <= n(n-1)`` for every stored numerator."""
    if f.mode.numeric:
        return True
    return all(c.deg_w() <= n * (n - 1) for n, c in enumerate(f.coeffs))
