"""Graph representation, generators, products, serialization, canonical form."""

from .build import complete, cycle, empty, kneser, make_named, mycielski, schlafli, wheel
from .canon import automorphism_orbits, canonical_key, canonical_order, is_isomorphic
from .core import (
    DEFAULT_SIZE_LIMIT,
    Graph,
    GraphError,
    bits,
    disjoint_union,
    or_power,
    or_product,
    power_coords,
    power_vertex,
    strong_power,
    strong_product,
    tensor_product,
)
from .expr import ParseError, eval_text, evaluate, parse
from .g6 import from_graph6, to_graph6

__all__ = [
    "DEFAULT_SIZE_LIMIT",
    "Graph",
    "GraphError",
    "ParseError",
    "automorphism_orbits",
    "bits",
    "canonical_key",
    "canonical_order",
    "complete",
    "cycle",
    "disjoint_union",
    "empty",
    "eval_text",
    "evaluate",
    "from_graph6",
    "is_isomorphic",
    "kneser",
    "make_named",
    "mycielski",
    "or_power",
    "or_product",
    "parse",
    "power_coords",
    "power_vertex",
    "schlafli",
    "strong_power",
    "strong_product",
    "tensor_product",
    "to_graph6",
    "wheel",
]
