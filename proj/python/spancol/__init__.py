"""Span colourings of graphs and Steenrod actions on A(n, G).

Colourings, complexes, actions and certificates are plain dicts in the same
JSON shapes the command-line tool reads and writes.
"""

import json

from ._spancol import (
    Error,
    Graph,
    chromatic_number,
    clique_number,
    complete_graph,
    count_homomorphisms,
    cycle_graph,
    hom_obstruction,
    path_graph,
    top_bracket,
    two_core,
)
from . import _spancol

__all__ = [
    "Error",
    "Graph",
    "basis_census",
    "chromatic_number",
    "classify_two_x",
    "clique_number",
    "complete_graph",
    "convert_colouring",
    "count_homomorphisms",
    "count_span_extensions",
    "cycle_graph",
    "extract_colouring",
    "hom_obstruction",
    "join_with_simplex",
    "modp_p1_action",
    "path_graph",
    "rep_graph",
    "span_chromatic_number",
    "steenrod_action",
    "top_bracket",
    "two_core",
    "validate_colouring",
    "verify_action",
]


def _dump(obj):
    return json.dumps(obj)


def rep_graph(q, n):
    """The graph A_{k^n} over GF(q) and its vertex labels."""
    return _spancol._rep_graph(q, n)


def span_chromatic_number(g, q=2):
    """(value, witness) with the witness a full colouring dict."""
    value, _, _, witness = _spancol._span_chromatic(g, q)
    return value, json.loads(witness)


def validate_colouring(g, colouring):
    return _spancol._validate(g, _dump(colouring))


def convert_colouring(g, colouring, to):
    return json.loads(_spancol._convert(g, _dump(colouring), to))


def count_span_extensions(g, colouring):
    return _spancol._count_extensions(g, _dump(colouring))


def basis_census(q, n):
    return _spancol._census(q, n)


def steenrod_action(g, n, colouring, max_degree=18):
    return json.loads(_spancol._steenrod_build(g, n, _dump(colouring), max_degree))


def verify_action(action):
    return json.loads(_spancol._steenrod_verify(_dump(action)))


def extract_colouring(action):
    return json.loads(_spancol._steenrod_extract(_dump(action)))


def modp_p1_action(p, g, n, colouring):
    return json.loads(_spancol._steenrod_modp(p, g, n, _dump(colouring)))


def join_with_simplex(n, g):
    return json.loads(_spancol._join(n, g))


def classify_two_x(complex_):
    return _spancol._classify_two_x(_dump(complex_))
