"""McKay correspondence over non-closed fields."""

import json

from ._mckay import (
    UnrecognizedGraph,
    acceptance,
    character_table,
    classify_json,
    fold_json,
    group_order,
    hilbert_symbol,
    realizable,
    run_cli,
    self_intersections,
    split_graph_json,
    tautological_degrees,
    verify_mckay_cyclic,
    verify_table,
)


def split_graph(group, extended=True):
    """Split representation graph over C as a dict."""
    return json.loads(split_graph_json(group, extended))


def fold(group, field="m=1,H=", form="constant", extended=True):
    """Representation graph of a K-form as a dict."""
    return json.loads(fold_json(group, field, form, extended))


def classify(graph):
    """Catalog label of a graph dict, e.g. "(E_6)' ~ F4"."""
    return classify_json(json.dumps(graph))


__all__ = [
    "UnrecognizedGraph",
    "acceptance",
    "character_table",
    "classify",
    "fold",
    "group_order",
    "hilbert_symbol",
    "realizable",
    "run_cli",
    "self_intersections",
    "split_graph",
    "tautological_degrees",
    "verify_mckay_cyclic",
    "verify_table",
]
