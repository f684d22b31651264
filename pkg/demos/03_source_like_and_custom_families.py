"""Digraphs whose SCCs come from a chosen family, with source-like SCCs marked.

Run: python demos/03_source_like_and_custom_families.py
"""
from digraphgf import CoeffPoly, Series, EGF, restricted_scc_ggf, restricted_scc_sources_ggf, scc_egf
from digraphgf.catalog import marked_subfamily_ggf, single_vertex_egf
from digraphgf.series import series_eval_u

N = 6
w = CoeffPoly.w()

# %% SCCs restricted to single vertices and 2-cycles (EGF z + w^2 z^2/2!).
family = Series(EGF, [0, 1, w * w] + [0] * (N - 2))
restricted = restricted_scc_ggf(family, N)
print("no SCC larger than 2 vertices, n=3:", restricted[3])

# %% All digraphs with u marking source-like SCCs.
marked = restricted_scc_sources_ggf(scc_egf(N), N)
print("n=2:", marked[2])

# %% Digraphs without a one-vertex SCC (u marks one-vertex SCCs, then u = 0).
no_trivial = series_eval_u(marked_subfamily_ggf(single_vertex_egf(N), N), 0)
print("totals:", [sum(c for _, c in p.items()) for p in no_trivial.coeffs])
