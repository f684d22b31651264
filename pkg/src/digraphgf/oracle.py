"""Exhaustive labeled digraph enumeration for small ``n``.

This is the ground truth the series formulas are checked against. A
digraph on ``n <= 5`` vertices is an integer bitmask over the ``n(n-1)``
ordered pairs ``(i, j)``, ``i != j``, taken in row-major order::

    (0,1), (0,2), ..., (0,n-1), (1,0), (1,2), ..., (n-1,n-2)

so the out-edges of vertex ``i`` occupy bits ``i*(n-1) .. i*(n-1)+n-2``.
Vertex index 0 is the vertex labeled 1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterator, List, Tuple

from .catalog import FamilyTable

MAX_N = 5


class LimitExceeded(ValueError):
    pass


def _check_n(n: int) -> None:
    if n < 0 or n > MAX_N:
        raise LimitExceeded(f"oracle supports 0 <= n <= {MAX_N}, got {n}")


@lru_cache(maxsize=None)
def pair_order(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(n) if i != j)


@lru_cache(maxsize=None)
def _row_table(n: int) -> Tuple[Tuple[int, ...], ...]:
    """For vertex i, map its (n-1)-bit row to an out-neighbour vertex mask."""
    tables = []
    for i in range(n):
        targets = [j for j in range(n) if j != i]
        row = []
        for bits in range(1 << (n - 1)):
            mask = 0
            for t, j in enumerate(targets):
                if bits >> t & 1:
                    mask |= 1 << j
            row.append(mask)
        tables.append(tuple(row))
    return tuple(tables)


@dataclass(frozen=True)
class Digraph:
    n: int
    adjacency: int

    def __post_init__(self):
        _check_n(self.n)
        if self.adjacency < 0 or self.adjacency >> (self.n * (self.n - 1)):
            raise ValueError("adjacency mask wider than n(n-1) bits")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Digraph":
        index = {p: k for k, p in enumerate(pair_order(n))}
        mask = 0
        for i, j in edges:
            mask |= 1 << index[(i, j)]
        return cls(n, mask)

    def edges(self) -> List[Tuple[int, int]]:
        return [p for k, p in enumerate(pair_order(self.n)) if self.adjacency >> k & 1]

    def out_masks(self) -> List[int]:
        n = self.n
        if n < 2:
            return [0] * n
        width = n - 1
        low = (1 << width) - 1
        table = _row_table(n)
        return [table[i][(self.adjacency >> (i * width)) & low] for i in range(n)]

    def relabel(self, perm) -> "Digraph":
        """Vertex ``i`` becomes ``perm[i]``."""
        return Digraph.from_edges(self.n, [(perm[i], perm[j]) for i, j in self.edges()])


@dataclass(frozen=True)
class ClassifierReport:
    edge_count: int
    is_dag: bool
    source_count: int
    scc_partition: Tuple[FrozenSet[int], ...]
    source_like_scc_count: int
    is_initially_connected: bool
    is_strongly_connected: bool
    # sizes of the source-like SCCs, in partition order
    source_like_sizes: Tuple[int, ...] = ()


def enumerate_digraphs(n: int) -> Iterator[Digraph]:
    """All ``2^(n(n-1))`` digraphs on ``n`` labeled vertices, by bitmask."""
    _check_n(n)
    for mask in range(1 << (n * (n - 1))):
        yield Digraph(n, mask)


def tarjan_scc(n: int, out: List[int]) -> List[FrozenSet[int]]:
    """Tarjan's algorithm over out-neighbour bitmasks; iterative."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: List[int] = []
    comps: List[FrozenSet[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, out[root])]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, pending = work[-1]
            if pending:
                bit = pending & -pending
                work[-1] = (v, pending ^ bit)
                w = bit.bit_length() - 1
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, out[w]))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
    return comps


def _reach_from(start: int, out: List[int]) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            bit = f & -f
            f ^= bit
            nxt |= out[bit.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def classify(d: Digraph) -> ClassifierReport:
    n = d.n
    out = d.out_masks()
    in_mask = 0
    for m in out:
        in_mask |= m
    full = (1 << n) - 1
    sources = bin(full & ~in_mask).count("1")

    comps = sorted(tarjan_scc(n, out), key=min)
    comp_of = [0] * n
    for c, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = c
    has_incoming = [False] * len(comps)
    for v in range(n):
        m = out[v]
        while m:
            bit = m & -m
            m ^= bit
            w = bit.bit_length() - 1
            if comp_of[w] != comp_of[v]:
                has_incoming[comp_of[w]] = True
    source_like = tuple(len(comps[c]) for c in range(len(comps)) if not has_incoming[c])

    return ClassifierReport(
        edge_count=bin(d.adjacency).count("1"),
        is_dag=all(len(c) == 1 for c in comps),
        source_count=sources,
        scc_partition=tuple(comps),
        source_like_scc_count=len(source_like),
        is_initially_connected=n >= 1 and _reach_from(0, out) == full,
        is_strongly_connected=len(comps) == 1,
        source_like_sizes=source_like,
    )


def is_acyclic_toposort(d: Digraph) -> bool:
    """Kahn's algorithm; independent of the SCC computation."""
    n = d.n
    indeg = [0] * n
    for i, j in d.edges():
        indeg[j] += 1
    adj = [[] for _ in range(n)]
    for i, j in d.edges():
        adj[i].append(j)
    ready = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return seen == n


# selector -> (tracks p, function(report, n) -> iterable of (p, weight))
def _sel_digraphs(r, n):
    return ((None, 1),)


def _sel_dag(r, n):
    return ((None, 1),) if r.is_dag else ()


def _sel_dag_by_sources(r, n):
    return ((r.source_count, 1),) if r.is_dag else ()


def _sel_scc(r, n):
    return ((None, 1),) if r.is_strongly_connected else ()


def _sel_ic(r, n):
    return ((None, 1),) if r.is_initially_connected else ()


def _sel_unique_pointed(r, n):
    return ((None, r.source_like_sizes[0]),) if r.source_like_scc_count == 1 else ()


def _sel_source_like(r, n):
    return ((r.source_like_scc_count, 1),)


def _sel_no_trivial(r, n):
    return ((None, 1),) if all(len(c) > 1 for c in r.scc_partition) else ()


SELECTORS: Dict[str, Tuple[bool, Callable]] = {
    "digraphs": (False, _sel_digraphs),
    "dag": (False, _sel_dag),
    "dag_by_sources": (True, _sel_dag_by_sources),
    "scc": (False, _sel_scc),
    "initially_connected": (False, _sel_ic),
    "unique_source_like_pointed": (False, _sel_unique_pointed),
    "source_like_marked": (True, _sel_source_like),
    "no_trivial_scc": (False, _sel_no_trivial),
}


def classify_all(n: int) -> Iterator[ClassifierReport]:
    for d in enumerate_digraphs(n):
        yield classify(d)


def oracle_tables(n_max: int, selectors=None, w_only: bool = False) -> Dict[str, FamilyTable]:
    """Tally several selectors in one pass over every digraph up to ``n_max``.

    With ``w_only`` the edge refinement is dropped and rows are ``(n, count)``.
    """
    _check_n(n_max)
    names = list(selectors or SELECTORS)
    for name in names:
        if name not in SELECTORS:
            raise KeyError(f"unknown selector {name!r}")
    tallies = {name: Counter() for name in names}
    funcs = [(tallies[name], SELECTORS[name][1]) for name in names]
    for n in range(n_max + 1):
        for d in enumerate_digraphs(n):
            r = classify(d)
            m = None if w_only else r.edge_count
            for tally, fn in funcs:
                for p, weight in fn(r, n):
                    tally[(n, m, p)] += weight

    out = {}
    for name in names:
        track_p = SELECTORS[name][0] and not w_only
        rows = []
        tally = tallies[name]
        for n in range(n_max + 1):
            keys = sorted((k for k in tally if k[0] == n and tally[k]), key=lambda k: (k[1] or 0, k[2] or 0))
            if not keys:
                rows.append((n, None if w_only else 0, 0 if track_p else None, 0))
            rows.extend(k + (tally[k],) for k in keys)
        out[name] = FamilyTable(name, "oracle", n_max, not w_only, track_p, rows)
    return out


def oracle_table(n_max: int, selector: str, w_only: bool = False) -> FamilyTable:
    return oracle_tables(n_max, [selector], w_only=w_only)[selector]
