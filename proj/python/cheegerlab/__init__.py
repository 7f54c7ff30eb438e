"""Cheeger-like constants Q and tau and the bound Q <= lambda_max <= Q*tau."""

import json

from ._core import (  # noqa: F401
    Error,
    Graph,
    cheeger_h,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    dual_cheeger,
    edge_spectrum,
    l1_edge_quotient,
    l1_vertex_quotient_maxt,
    l1_vertex_quotient_plain,
    lambda_max,
    one_sided,
    one_sided_exists,
    parse_edge_list,
    path_graph,
    petal_graph,
    predict_lambda_max,
    q_constant,
    q_via_bipartite_subgraphs,
    random_connected_graph,
    read_edge_list_file,
    tau_constant,
    to_edge_list,
    vertex_spectrum,
)
from . import _core

__version__ = "0.1.0"


def check_graph(graph, tol=1e-9):
    """Every bound check on a connected graph, as a dict."""
    return json.loads(_core._check_graph_json(graph, tol))


def analyze_graph(graph, tol=1e-9):
    """Like check_graph but accepts disconnected graphs."""
    return json.loads(_core._analyze_graph_json(graph, tol))


def fuzz(trials=1000, n_min=3, n_max=14, p=(0.3, 0.5, 0.8), seed=0, threads=1):
    return json.loads(_core._fuzz_json(trials, n_min, n_max, list(p), seed, threads))


def search(name, n_max=300, n_list=(8, 16, 24, 32, 40)):
    """name is one of 'tau-bound', 'epsilon-witness', 'no-shift'."""
    return json.loads(_core._search_json(name, n_max, list(n_list)))


def demo():
    return json.loads(_core._demo_json())
