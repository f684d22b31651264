"""Strongly connected digraphs from graphs: -log(G . 1/G).

Run: python demos/02_strongly_connected.py
"""
import time

from digraphgf import CoeffMode, scc_egf
from digraphgf.catalog import extract_table

# %% Edge-refined counts for small n.
table = extract_table(scc_egf(4), "scc")
for n, m, _, count in table.rows:
    if n == 4:
        print(f"n=4, m={m}: {count}")

# %% Totals for large n in numeric mode (w fixed to 1).
t0 = time.perf_counter()
s = scc_egf(100, CoeffMode.at(1, 1))
print(f"n=100 has {len(str(s[100]))} digits, computed in {time.perf_counter() - t0:.3f}s")

# %% Full polynomial for n = 25.
t0 = time.perf_counter()
p = scc_egf(25)[25]
print(f"deg_w = {p.deg_w()}, {len(p)} terms, {time.perf_counter() - t0:.2f}s")
