"""Consistency suites: catalog formulas against the brute-force oracle,
independent recurrences, and algebraic identities.

Catalog builders are looked up on the module at call time so a patched
builder is what gets checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from . import catalog
from . import oracle as oracle_mod
from . import series as S
from .coeffring import POLYNOMIAL, CoeffMode
from .reference import dag_totals_recurrence

NUMERIC = CoeffMode.at(1, 1)


@dataclass
class SuiteResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


class CheckFailed(Exception):
    def __init__(self, family: str, n=None, m=None, detail: str = ""):
        self.family, self.n, self.m = family, n, m
        where = f"family={family}"
        if n is not None:
            where += f" n={n}"
        if m is not None:
            where += f" m={m}"
        super().__init__(where + (f" ({detail})" if detail else ""))


def nonzero(counts: Dict[Tuple, int]) -> Dict[Tuple, int]:
    return {k: v for k, v in counts.items() if v}


def compare_counts(family: str, expected: Dict[Tuple, int], actual: Dict[Tuple, int]) -> None:
    """Raise :class:`CheckFailed` at the first differing ``(n, m, p)`` key."""
    expected, actual = nonzero(expected), nonzero(actual)
    for key in sorted(set(expected) | set(actual), key=lambda k: tuple(x if x is not None else -1 for x in k)):
        e, a = expected.get(key, 0), actual.get(key, 0)
        if e != a:
            n, m = key[0], key[1]
            raise CheckFailed(family, n, m, f"p={key[2]} expected {e}, got {a}")


def _pointed_ic(N: int, mode: CoeffMode = POLYNOMIAL) -> S.Series:
    return S.series_point(catalog.initially_connected_ggf(N, mode))


def _source_like(N: int, mode: CoeffMode = POLYNOMIAL) -> S.Series:
    return catalog.restricted_scc_sources_ggf(catalog.scc_egf(N, mode), N, mode)


def _no_trivial(N: int, mode: CoeffMode = POLYNOMIAL) -> S.Series:
    if mode.numeric:
        m0 = CoeffMode.at(mode.w_value, 0)
        s = catalog.marked_subfamily_ggf(catalog.single_vertex_egf(N, m0), N, m0)
        return S.Series._raw(s.kind, s.coeffs, mode)
    return S.series_eval_u(catalog.marked_subfamily_ggf(catalog.single_vertex_egf(N), N), 0)


# (family label, oracle selector, builder, tracks u)
ORACLE_PAIRS: List[Tuple[str, str, Callable, bool]] = [
    ("digraphs", "digraphs", lambda N, mode=POLYNOMIAL: catalog.base_digraph_ggf(N, mode), False),
    ("dag", "dag", lambda N, mode=POLYNOMIAL: catalog.dag_ggf(N, mode), False),
    ("dag_sources", "dag_by_sources", lambda N, mode=POLYNOMIAL: catalog.dag_sources_ggf(N, mode), True),
    ("scc", "scc", lambda N, mode=POLYNOMIAL: catalog.scc_egf(N, mode), False),
    ("initially_connected", "initially_connected",
     lambda N, mode=POLYNOMIAL: catalog.initially_connected_ggf(N, mode), False),
    ("source_like", "source_like_marked", _source_like, True),
    ("no_trivial_scc", "no_trivial_scc", _no_trivial, False),
    ("pointed_initially_connected", "unique_source_like_pointed", _pointed_ic, False),
]


def check_oracle_equivalence(n_max: int = 4, tables=None) -> None:
    """Edge-refined equality of every catalog family with the oracle."""
    n_max = min(n_max, 4)
    tables = tables or oracle_mod.oracle_tables(n_max, [sel for _, sel, _, _ in ORACLE_PAIRS])
    for family, selector, build, marked in ORACLE_PAIRS:
        got = catalog.extract_table(build(n_max), family, track_p=marked)
        want = tables[selector]
        compare_counts(family, _trim(want.counts(), n_max), got.counts())


def _trim(counts, n_max):
    return {k: v for k, v in counts.items() if k[0] <= n_max}


N5_EXPECTED = {
    "dag": 29281,
    "scc": 565080,
    "initially_connected": 2 ** 10 * 728,
    "digraphs": 2 ** 20,
}


def check_n5_aggregates(tables=None) -> None:
    """Totals at ``w = 1`` for ``n = 5``: oracle, catalog and frozen goldens agree."""
    tables = tables or oracle_mod.oracle_tables(5, list(N5_EXPECTED), w_only=True)
    builders = {fam: build for fam, _, build, _ in ORACLE_PAIRS}
    for family, golden in N5_EXPECTED.items():
        oracle_total = tables[family].totals()[5]
        series_total = builders[family](5, NUMERIC)[5]
        if not (oracle_total == series_total == golden):
            raise CheckFailed(family, 5, None,
                              f"oracle {oracle_total}, series {series_total}, golden {golden}")


def check_dag_recurrence(n_max: int = 12) -> None:
    want = dag_totals_recurrence(n_max)
    got = catalog.dag_ggf(n_max, NUMERIC).coeffs
    for n in range(n_max + 1):
        if want[n] != got[n]:
            raise CheckFailed("dag", n, None, f"recurrence {want[n]}, series {got[n]}")


def _same(family: str, a: S.Series, b: S.Series) -> None:
    if a.kind is not b.kind:
        raise CheckFailed(family, detail=f"kind {a.kind.name} vs {b.kind.name}")
    n = min(a.order, b.order)
    for i in range(n + 1):
        if a[i] != b[i]:
            raise CheckFailed(family, i, None, f"{a[i]} != {b[i]}")


def _roundtrips(N: int, mode: CoeffMode) -> None:
    for kind in (S.EGF, S.GGF):
        for label, a in (
            ("scc", catalog.scc_egf(N, mode)),
            ("ic", catalog.initially_connected_ggf(N, mode)),
            ("z", catalog.single_vertex_egf(N, mode)),
        ):
            a = S.Series._raw(kind, a.coeffs, mode)
            _same(f"exp-log/{label}/{kind.name}", S.series_log(S.series_exp(a)), a)
            one_plus = S.series_add(S.one_series(kind, N, mode), a)
            _same(f"log-exp/{label}/{kind.name}", S.series_exp(S.series_log(one_plus)), one_plus)
            _same(f"recip/{label}/{kind.name}",
                  S.series_mul(one_plus, S.series_recip(one_plus)), S.one_series(kind, N, mode))


def check_identities(N: int = 12, modes=(POLYNOMIAL, NUMERIC)) -> None:
    for mode in modes:
        _roundtrips(N, mode)
        dag = catalog.dag_ggf(N, mode)
        scc = catalog.scc_egf(N, mode)
        _same("dag", catalog.restricted_scc_ggf(catalog.single_vertex_egf(N, mode), N, mode), dag)
        _same("digraphs", catalog.restricted_scc_ggf(scc, N, mode), catalog.base_digraph_ggf(N, mode))
        pivot = S.series_mul(
            S.retag_egf_to_family_ggf(S.series_exp(S.series_negate(scc))),
            catalog.base_digraph_ggf(N, mode),
        )
        _same("pivot", pivot, S.one_series(S.GGF, N, mode))
    # numeric mode pins u inside the builder
    for w in (1, 2):
        at_one, at_zero = CoeffMode.at(w, 1), CoeffMode.at(w, 0)
        _same("dag_sources", catalog.dag_sources_ggf(N, at_one), catalog.dag_ggf(N, at_one))
        _same("dag_sources", catalog.dag_sources_ggf(N, at_zero), S.one_series(S.GGF, N, at_zero))
    ds = catalog.dag_sources_ggf(N)
    _same("dag_sources", S.series_eval_u(ds, 1), catalog.dag_ggf(N))
    _same("dag_sources", S.series_eval_u(ds, 0), S.one_series(S.GGF, N))


MODE_FAMILIES = ["digraphs", "dag", "dag_sources", "scc", "initially_connected",
                 "source_like", "no_trivial_scc", "pointed_initially_connected"]


def check_mode_agreement(N: int = 8) -> None:
    builders = {fam: build for fam, _, build, _ in ORACLE_PAIRS}
    for family in MODE_FAMILIES:
        poly = builders[family](N)
        num = builders[family](N, NUMERIC)
        evaluated = S.series_evaluate(poly, 1, 1)
        for n in range(N + 1):
            if evaluated[n] != num[n]:
                raise CheckFailed(family, n, None, f"poly at (1,1) {evaluated[n]}, numeric {num[n]}")


def run_suites(max_n: int = 4, echo: Optional[Callable[[str], None]] = None) -> List[SuiteResult]:
    suites = [
        ("oracle-equivalence", lambda: check_oracle_equivalence(max_n)),
        ("dag-recurrence", lambda: check_dag_recurrence(12)),
        ("identities", lambda: check_identities(12)),
        ("mode-agreement", lambda: check_mode_agreement(8)),
    ]
    if max_n >= 5:
        suites.append(("n5-aggregates", check_n5_aggregates))
    results = []
    for name, fn in suites:
        try:
            fn()
            res = SuiteResult(name, True)
        except CheckFailed as exc:
            res = SuiteResult(name, False, str(exc))
        results.append(res)
        if echo:
            echo(res.line())
    return results
