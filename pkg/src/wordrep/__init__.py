"""2-uniform word representations of graphs."""

from .fenwick import FenwickTree
from .graph import Graph, GraphFormatError, cycle_graph, graph_equal, parse_graph, serialize_graph
from .graphcheck import (
    AlphabetMismatchError,
    CheckResult,
    count_alternating_pairs,
    graph_check,
    graph_check_naive,
    graph_check_scan,
)
from .words import (
    NotUniformError,
    PositionPair,
    Word,
    WordError,
    alternate,
    alternation_graph,
    is_k_uniform,
    residual_word,
)

__version__ = "0.1.0"
