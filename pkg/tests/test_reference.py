from digraphgf.reference import dag_totals_recurrence, scc_totals_rational


def test_dag_recurrence_known_values():
    assert dag_totals_recurrence(6) == [1, 1, 3, 25, 543, 29281, 3781503]


def test_scc_rational_small_values():
    # n <= 5 values are cross-checked against exhaustive enumeration elsewhere
    assert scc_totals_rational(5) == [0, 1, 1, 18, 1606, 565080]
