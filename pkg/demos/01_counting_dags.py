"""Counting labeled DAGs, refined by edges and by sources.

Run: python demos/01_counting_dags.py
"""
from digraphgf import CoeffMode, dag_ggf, dag_sources_ggf
from digraphgf.reference import dag_totals_recurrence

# %% The DAG series is the reciprocal of the edgeless-set series at -z.
# Numerators are polynomials in w, with [w^m] counting DAGs with m edges.
dags = dag_ggf(5)
for n, poly in enumerate(dags.coeffs):
    print(f"n={n}: {poly}")

# %% Setting w = 1 gives plain totals; compare with the classical recurrence.
totals = dag_ggf(12, CoeffMode.at(1, 1)).coeffs
print(list(totals))
print("matches recurrence:", list(totals) == dag_totals_recurrence(12))

# %% Marking sources with u: the n = 3 numerator.
print("n=3 with sources marked:", dag_sources_ggf(3)[3])
