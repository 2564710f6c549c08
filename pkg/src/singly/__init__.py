"""Edge-removal heuristics that make a DAG singly connected, with verifiers and a benchmark CLI."""

from .algorithms import (
    Algo4Variant,
    RemovalResult,
    algo1_from_sources,
    algo2_sources_or_sinks,
    algo3_tree_edges,
    algo4_from_medials,
    dfs_once,
    run_all,
)
from .dfs import DfsRun, EdgeClass, classify_from_root, nontree_cf_edges
from .graph import DiGraph, Edge, RootSets, build, is_acyclic, remove_edges, reverse, root_sets
from .verify import check_by_counting, check_by_dfs, is_singly_connected

__version__ = "0.1.0"
