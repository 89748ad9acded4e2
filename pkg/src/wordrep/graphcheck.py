"""Deciding whether a 2-uniform word represents a given graph.

``graph_check`` is the single-scan Fenwick-tree method: O(V log V + E) time,
O(V) extra space.  ``graph_check_naive`` rebuilds the whole alternation graph
from residual words and is the reference it is tested against.
``graph_check_scan`` is the quadratic per-edge scanning baseline used for
timing comparisons at sizes the reference cannot reach.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from numba import njit

from .fenwick import FenwickTree, fenwick_add, fenwick_rangesum
from .graph import Edge, Graph, graph_equal
from .words import Letter, NotUniformError, Word, WordError, alternation_graph


class AlphabetMismatchError(ValueError):
    """The word's alphabet differs from the graph's vertex set."""


@dataclass(frozen=True)
class CheckResult:
    matches: bool
    edgecount: int
    failing_edge: Edge | None = None

    def __bool__(self) -> bool:
        return self.matches


def _require_same_alphabet(w: Word, g: Graph) -> None:
    alphabet = w.alphabet
    if alphabet != g.vertices:
        missing = sorted(g.vertices - alphabet)[:5]
        extra = sorted(alphabet - g.vertices)[:5]
        raise AlphabetMismatchError(
            f"word alphabet and vertex set differ (vertices not in word: {missing}, letters not in graph: {extra})"
        )


@njit(cache=True)
def _scan_codes(codes, nletters):
    m = codes.shape[0]
    tree = np.zeros(m + 1, dtype=np.int64)
    first = np.full(nletters, -1, dtype=np.int64)
    second = np.full(nletters, -1, dtype=np.int64)
    edgecount = 0
    for k in range(m):
        x = codes[k]
        if first[x] < 0:
            first[x] = k
        elif second[x] < 0:
            i = first[x]
            second[x] = k
            edgecount += k - i - fenwick_rangesum(tree, i + 1, k - 1) - 1
            fenwick_add(tree, i, 1)
            fenwick_add(tree, k, 1)
        else:
            return -1 - k, first, second
    return edgecount, first, second


def _scan_with_tree(letters: Sequence[Letter], tree: FenwickTree) -> tuple[int, dict[Letter, list[int]]]:
    pos: dict[Letter, list[int]] = {}
    edgecount = 0
    for k, x in enumerate(letters):
        p = pos.get(x)
        if p is None:
            pos[x] = [k, -1]
        elif p[1] < 0:
            i = p[0]
            p[1] = k
            edgecount += k - i - tree.rangesum(i + 1, k - 1) - 1
            tree.update(i, 1)
            tree.update(k, 1)
        else:
            raise NotUniformError(f"letter {x!r} occurs more than twice (third time at position {k})")
    for x, p in pos.items():
        if p[1] < 0:
            raise NotUniformError(f"letter {x!r} occurs only once")
    return edgecount, pos


def _scan(letters: Sequence[Letter], tree_factory: Callable[[int], FenwickTree] | None = None):
    """One left-to-right pass over a 2-uniform word.

    Returns ``(edgecount, index, first, second)``: letters are coded in order
    of first appearance and ``first[c] < second[c]`` are the positions of the
    letter with code ``c``.  At the second occurrence of a letter, every
    unmarked position strictly inside its chord belongs to a crossing chord;
    both ends are then marked so no crossing pair is counted twice.

    With ``tree_factory`` the pass runs in Python against the supplied tree
    object (used for instrumentation); otherwise a compiled loop is used.
    """
    if not letters:
        raise WordError("empty word")
    if tree_factory is not None:
        edgecount, pos = _scan_with_tree(letters, tree_factory(len(letters)))
        codes = {x: c for c, x in enumerate(pos)}
        first = np.array([p[0] for p in pos.values()], dtype=np.int64)
        second = np.array([p[1] for p in pos.values()], dtype=np.int64)
        return edgecount, codes, first, second

    index: dict[Letter, int] = {}
    codes = np.fromiter((index.setdefault(x, len(index)) for x in letters), dtype=np.int64, count=len(letters))
    edgecount, first, second = _scan_codes(codes, len(index))
    if edgecount < 0:
        k = -1 - edgecount
        raise NotUniformError(f"letter {letters[k]!r} occurs more than twice (third time at position {k})")
    lonely = np.flatnonzero(second < 0)
    if lonely.size:
        x = letters[int(first[lonely[0]])]
        raise NotUniformError(f"letter {x!r} occurs only once")
    return int(edgecount), index, first, second


def count_alternating_pairs(w: Word, tree_factory: Callable[[int], FenwickTree] | None = None) -> int:
    """Number of edges of G(w) for a non-empty 2-uniform word."""
    return _scan(w.letters, tree_factory)[0]


def graph_check(w: Word, g: Graph, tree_factory: Callable[[int], FenwickTree] | None = None) -> CheckResult:
    _require_same_alphabet(w, g)
    edgecount, index, first, second = _scan(w.letters, tree_factory)
    if edgecount != len(g.edges):
        return CheckResult(False, edgecount)
    edges = g.edge_list
    if not edges:
        return CheckResult(True, edgecount)
    u = np.fromiter((index[e[0]] for e in edges), dtype=np.int64, count=len(edges))
    v = np.fromiter((index[e[1]] for e in edges), dtype=np.int64, count=len(edges))
    a, b = first[u], second[u]
    c, d = first[v], second[v]
    # Chords cross iff exactly one end of v's chord lies inside u's.
    crossing = ((a < c) & (c < b)) != ((a < d) & (d < b))
    if not crossing.all():
        return CheckResult(False, edgecount, edges[int(np.argmin(crossing))])
    return CheckResult(True, edgecount)


def graph_check_naive(w: Word, g: Graph) -> CheckResult:
    """Reference check for any word: build G(w) pair by pair and compare."""
    _require_same_alphabet(w, g)
    gw = alternation_graph(w)
    edgecount = len(gw.edges)
    if graph_equal(gw, g):
        return CheckResult(True, edgecount)
    failing = next((e for e in g.edge_list if not gw.has_edge(*e)), None)
    return CheckResult(False, edgecount, failing)


def graph_check_scan(w: Word, g: Graph, pair_block: int = 8, edge_block: int = 32) -> CheckResult:
    """Quadratic baseline for 2-uniform words.

    Every edge of ``g`` is confirmed by scanning the whole word for its two
    letters (O(V E)), and the edge count of G(w) comes from comparing every
    pair of chords (O(V^2)).  The scans are vectorised over blocks of edges
    or letters; the asymptotic cost is unchanged.
    """
    _require_same_alphabet(w, g)
    if not len(w):
        raise WordError("empty word")
    index = {v: k for k, v in enumerate(g.vertices)}
    nv = len(index)
    codes = np.fromiter((index[x] for x in w.letters), dtype=np.int32, count=len(w))
    counts = np.bincount(codes, minlength=nv)
    if not np.all(counts == 2):
        bad = int(np.flatnonzero(counts != 2)[0])
        letter = next(x for x, k in index.items() if k == bad)
        raise NotUniformError(f"letter {letter!r} occurs {int(counts[bad])} times, expected 2")

    order = np.argsort(codes, kind="stable").astype(np.int32)
    first = order[0::2]
    second = order[1::2]
    edgecount = 0
    for lo in range(0, nv, pair_block):
        # x lies strictly inside chord (f, s) iff 0 <= x - f - 1 < s - f - 1, unsigned.
        start = first[lo:lo + pair_block, None] + 1
        width = (second[lo:lo + pair_block, None] - start).view(np.uint32)
        inside_first = (first - start).view(np.uint32) < width
        inside_second = (second - start).view(np.uint32) < width
        edgecount += int(np.count_nonzero(inside_first != inside_second))
    edgecount //= 2
    if edgecount != len(g.edges):
        return CheckResult(False, edgecount)

    # Edge confirmation does not reuse the chord table: each edge rescans w.
    edges = g.edge_list
    for lo in range(0, len(edges), edge_block):
        chunk = edges[lo:lo + edge_block]
        us = np.fromiter((index[u] for u, _ in chunk), dtype=np.int32, count=len(chunk))
        vs = np.fromiter((index[v] for _, v in chunk), dtype=np.int32, count=len(chunk))
        hits = codes == us[:, None]
        hits |= codes == vs[:, None]
        _, cols = np.nonzero(hits)
        residual = codes[cols].reshape(len(chunk), 4)
        ok = np.all(residual[:, 1:] != residual[:, :-1], axis=1)
        if not ok.all():
            bad = int(np.flatnonzero(~ok)[0])
            return CheckResult(False, edgecount, chunk[bad])
    return CheckResult(True, edgecount)
