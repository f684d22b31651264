"""Exact enumeration of labeled digraph families with graphic generating functions."""

from .coeffring import CoeffMode, CoeffPoly, one_plus_w_pow
from .series import EGF, GGF, Series, SeriesKind
from .catalog import (
    FamilyTable,
    base_digraph_ggf,
    base_graph_egf,
    base_set_ggf,
    dag_ggf,
    dag_sources_ggf,
    extract_table,
    initially_connected_ggf,
    marked_subfamily_ggf,
    restricted_scc_ggf,
    restricted_scc_sources_ggf,
    scc_egf,
)

__version__ = "0.1.0"
