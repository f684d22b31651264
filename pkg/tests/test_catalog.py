import pytest

from digraphgf import catalog
from digraphgf.catalog import (
    EmptyObjectInFamily,
    MarkerCollision,
    base_digraph_ggf,
    base_graph_egf,
    base_set_ggf,
    check_numerator_degrees,
    dag_ggf,
    dag_sources_ggf,
    extract_table,
    family_table,
    initially_connected_ggf,
    marked_subfamily_ggf,
    no_trivial_scc_ggf,
    restricted_scc_ggf,
    restricted_scc_sources_ggf,
    scc_egf,
    single_vertex_egf,
)
from digraphgf.coeffring import CoeffMode, CoeffPoly, one_plus_w_pow, poly_eval
from digraphgf.reference import dag_totals_recurrence
from digraphgf.selftest import compare_counts
from digraphgf.series import (
    EGF,
    GGF,
    Series,
    one_series,
    retag_egf_to_family_ggf,
    retag_ggf_to_family_egf,
    series_eval_u,
    series_exp,
    series_mul,
    series_negate,
    series_point,
    zero_series,
)

W = CoeffPoly.w()
U = CoeffPoly.u()
NUM = CoeffMode.at(1, 1)


def totals(s):
    return [poly_eval(c, 1, 1) for c in s.coeffs]


def test_base_series():
    g = base_graph_egf(5)
    assert g[0] == 1 and g[1] == 1
    assert g[2] == 1 + W
    assert poly_eval(g[3], 1, 1) == 8
    s = base_set_ggf(6)
    assert s[5] == 1
    assert retag_ggf_to_family_egf(s) == series_exp(single_vertex_egf(6))
    d = base_digraph_ggf(5)
    assert d[2] == 1 + 2 * W + W * W
    assert poly_eval(d[3], 1, 1) == 64
    # as a formal series: d_n / (1+w)^binom(n,2) == g_n
    for n in range(6):
        assert d[n] == g[n] * one_plus_w_pow(n * (n - 1) // 2)


def test_dag():
    d = dag_ggf(5)
    assert d[2] == 1 + 2 * W
    assert totals(d) == [1, 1, 3, 25, 543, 29281]
    assert totals(d)[:6] == dag_totals_recurrence(5)


def test_dag_sources():
    ds = dag_sources_ggf(8)
    assert ds[2] == U * U + 2 * W * U
    assert series_eval_u(ds, 1) == dag_ggf(8)
    assert series_eval_u(ds, 0) == one_series(GGF, 8)


def test_scc():
    s = scc_egf(5)
    assert s[0] == 0 and s[1] == 1
    assert s[2] == W * W
    assert s[3] == CoeffPoly.from_w_coeffs([0, 0, 0, 2, 9, 6, 1])
    assert totals(s) == [0, 1, 1, 18, 1606, 565080]


def test_restricted_scc():
    N = 8
    assert restricted_scc_ggf(single_vertex_egf(N), N) == dag_ggf(N)
    assert restricted_scc_ggf(scc_egf(N), N) == base_digraph_ggf(N)
    assert restricted_scc_ggf(zero_series(EGF, N), N) == one_series(GGF, N)
    with pytest.raises(EmptyObjectInFamily):
        restricted_scc_ggf(one_series(EGF, N), N)


def test_restricted_scc_sources():
    N = 8
    a = scc_egf(N)
    marked = restricted_scc_sources_ggf(a, N)
    assert marked[2] == U * U + 2 * W * U + W * W * U
    assert series_eval_u(marked, 1) == restricted_scc_ggf(a, N)
    assert restricted_scc_sources_ggf(single_vertex_egf(N), N) == dag_sources_ggf(N)
    with pytest.raises(MarkerCollision):
        restricted_scc_sources_ggf(Series(EGF, [0, U, 0, 0, 0, 0, 0, 0, 0]), N)


def test_marked_subfamily():
    N = 6
    z = single_vertex_egf(N)
    m = marked_subfamily_ggf(z, N)
    assert series_eval_u(m, 1) == base_digraph_ggf(N)
    none_trivial = series_eval_u(m, 0)
    assert poly_eval(none_trivial[2], 1, 1) == 1
    assert poly_eval(none_trivial[3], 1, 1) == 18
    assert no_trivial_scc_ggf(N) == none_trivial
    assert no_trivial_scc_ggf(N, NUM).coeffs == tuple(totals(none_trivial))
    with pytest.raises(EmptyObjectInFamily):
        marked_subfamily_ggf(one_series(EGF, N), N)


def test_initially_connected():
    ic = initially_connected_ggf(5)
    assert ic[2] == W + W * W
    assert totals(ic) == [0, 1, 2, 32, 2432, 2 ** 10 * 728]


def test_extract_table():
    t = extract_table(dag_ggf(3), "dag")
    c = t.counts()
    assert c[(2, 0, None)] == 1 and c[(2, 1, None)] == 2
    assert extract_table(scc_egf(3)).counts()[(3, 6, None)] == 1
    assert [r for r in extract_table(initially_connected_ggf(2)).rows if r[0] == 0] == [(0, 0, None, 0)]
    assert [r for r in extract_table(dag_ggf(2)).rows if r[0] == 0] == [(0, 0, None, 1)]
    num = extract_table(dag_ggf(5, NUM))
    assert num.rows[-1] == (5, None, None, 29281)
    marked = family_table("dag_sources", 2)
    assert marked.header() == ["n", "m", "p", "count"]
    assert (2, 1, 1, 2) in marked.rows


def test_extract_table_rows_sorted():
    rows = family_table("source_like", 5).rows
    assert rows == sorted(rows)


@pytest.mark.parametrize("name", sorted(n for n, s in catalog.FAMILIES.items() if not s.needs_payload))
def test_numerator_degree_bound(name):
    f = catalog.build_family(name, 8)
    assert check_numerator_degrees(f)


def test_ggf_closure_degrees():
    N = 8
    d = dag_ggf(N)
    for s in (series_mul(d, base_digraph_ggf(N)), series_mul(d, d)):
        assert all(c.deg_w() <= n * (n - 1) for n, c in enumerate(s.coeffs))


def test_pivot_identity():
    N = 8
    scc = scc_egf(N)
    lhs = series_mul(retag_egf_to_family_ggf(series_exp(series_negate(scc))), base_digraph_ggf(N))
    assert lhs == one_series(GGF, N)


def test_dag_marking_consistency(oracle4):
    # sum_p p [u^p] a_n = (DAG, distinguished source) pairs
    ds = extract_table(dag_sources_ggf(4), track_p=True)
    pointed = {}
    for n, m, p, count in ds.rows:
        pointed[(n, m)] = pointed.get((n, m), 0) + p * count
    oracle = {}
    for n, m, p, count in oracle4["dag_by_sources"].rows:
        oracle[(n, m)] = oracle.get((n, m), 0) + p * count
    assert {k: v for k, v in pointed.items() if v} == {k: v for k, v in oracle.items() if v}


def test_pointed_ic_matches_unique_source_like(oracle4):
    got = extract_table(series_point(initially_connected_ggf(4))).counts()
    compare_counts("pointed_ic", oracle4["unique_source_like_pointed"].counts(), got)


@pytest.mark.parametrize("name", ["dag", "dag_sources", "scc", "initially_connected", "source_like",
                                  "no_trivial_scc", "digraphs", "graphs", "set"])
def test_mode_agreement(name):
    poly = catalog.build_family(name, 8)
    num = catalog.build_family(name, 8, NUM)
    assert tuple(totals(poly)) == num.coeffs


def test_numeric_mode_other_points():
    # w = 2: each present edge weighted 2
    mode = CoeffMode.at(2, 3)
    poly = dag_sources_ggf(6)
    num = dag_sources_ggf(6, mode)
    assert num.coeffs == tuple(poly_eval(c, 2, 3) for c in poly.coeffs)
