"""Compare formulas with exhaustive enumeration of all digraphs on n <= 4 vertices.

Run: python demos/04_oracle_crosscheck.py
"""
from digraphgf.oracle import Digraph, classify, oracle_tables
from digraphgf.selftest import run_suites

# %% One digraph, classified.
d = Digraph.from_edges(4, [(0, 1), (1, 0), (1, 2), (3, 2)])
print(classify(d))

# %% Edge-refined oracle table for strongly connected digraphs.
print(oracle_tables(3, ["scc"])["scc"].rows)

# %% The same suites the CLI selftest runs.
run_suites(4, echo=print)
