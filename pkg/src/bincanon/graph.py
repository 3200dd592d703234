"""Bipartite graphs as binary matrices, and isomorphism via canonical forms.

A bipartite graph with vertex sides R and C corresponds to the binary
matrix whose (i, j) entry is 1 exactly when vertex r_i is joined to
vertex c_j.  Relabeling vertices within each side permutes rows and
columns, so two graphs are isomorphic precisely when their matrices are
equivalent, and counting graphs up to isomorphism is counting canonical
matrices.  The two sides are not interchangeable: a graph and its
"mirror" (matrix transpose) are in general not isomorphic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .canonical import canonical_form
from .enumeration import CANONICAL_ORDER_CAP, CountTable, count_canonical
from .matrix import BinaryMatrix, CapExceededError, FormatError


@dataclass(frozen=True)
class BipartiteGraph:
    """Vertex labels for the two sides plus an edge set of index pairs."""

    r_vertices: tuple
    c_vertices: tuple
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "r_vertices", tuple(self.r_vertices))
        object.__setattr__(self, "c_vertices", tuple(self.c_vertices))
        object.__setattr__(self, "edges", frozenset(self.edges))
        if not self.r_vertices or not self.c_vertices:
            raise ValueError("both vertex sides must be non-empty")
        if len(set(self.r_vertices)) != len(self.r_vertices):
            raise ValueError("duplicate labels on the r side")
        if len(set(self.c_vertices)) != len(self.c_vertices):
            raise ValueError("duplicate labels on the c side")
        if set(self.r_vertices) & set(self.c_vertices):
            raise ValueError("vertex sides must be disjoint")
        nr, nc = len(self.r_vertices), len(self.c_vertices)
        for i, j in self.edges:
            if not (0 <= i < nr and 0 <= j < nc):
                raise ValueError(f"edge ({i}, {j}) out of range for {nr}+{nc} vertices")


def graph_to_matrix(g: BipartiteGraph) -> BinaryMatrix:
    """Adjacency matrix: rows are r-vertices, columns are c-vertices."""
    m = len(g.c_vertices)
    rows = [0] * len(g.r_vertices)
    for i, j in g.edges:
        rows[i] |= 1 << (m - 1 - j)
    return BinaryMatrix(len(g.r_vertices), m, tuple(rows))


def matrix_to_graph(a: BinaryMatrix) -> BipartiteGraph:
    """Inverse construction with generated labels r1.., c1.. ."""
    edges = {(i, j) for i in range(a.n) for j in range(a.m) if a.bit(i, j)}
    return BipartiteGraph(
        tuple(f"r{i + 1}" for i in range(a.n)),
        tuple(f"c{j + 1}" for j in range(a.m)),
        frozenset(edges),
    )


def _degree_multisets(g: BipartiteGraph) -> tuple[list[int], list[int]]:
    r_deg = [0] * len(g.r_vertices)
    c_deg = [0] * len(g.c_vertices)
    for i, j in g.edges:
        r_deg[i] += 1
        c_deg[j] += 1
    return sorted(r_deg), sorted(c_deg)


def why_not_isomorphic(g: BipartiteGraph, h: BipartiteGraph) -> str | None:
    """None when isomorphic, else a short reason distinguishing the graphs."""
    if len(g.r_vertices) != len(h.r_vertices):
        return f"r-side sizes differ ({len(g.r_vertices)} vs {len(h.r_vertices)})"
    if len(g.c_vertices) != len(h.c_vertices):
        return f"c-side sizes differ ({len(g.c_vertices)} vs {len(h.c_vertices)})"
    if len(g.edges) != len(h.edges):
        return f"edge counts differ ({len(g.edges)} vs {len(h.edges)})"
    if _degree_multisets(g) != _degree_multisets(h):
        return "degree multisets differ"
    if canonical_form(graph_to_matrix(g)) != canonical_form(graph_to_matrix(h)):
        return "no relabeling of the sides maps one edge set onto the other"
    return None


def isomorphic(g: BipartiteGraph, h: BipartiteGraph) -> bool:
    """True when some relabeling of each side maps g's edges onto h's."""
    return why_not_isomorphic(g, h) is None


@lru_cache(maxsize=8)
def _canonical_table(n: int) -> CountTable:
    return count_canonical(n)


def count_graph_classes(n: int, k: int) -> int:
    """Bipartite graphs with n + n vertices and k edges, up to isomorphism."""
    if n < 1:
        raise ValueError(f"side size must be positive, got {n}")
    if n > CANONICAL_ORDER_CAP:
        raise CapExceededError(f"side size {n} above the cap {CANONICAL_ORDER_CAP}")
    if not 0 <= k <= n * n:
        raise ValueError(f"edge count {k} outside 0..{n * n}")
    return _canonical_table(n)[k]


# Edge-list text format: first line "n_r n_c", then one "i j" line per
# edge with 1-based indices.


def parse_edge_list(text: str) -> BipartiteGraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"expected 'n_r n_c' header, got {lines[0]!r}")
    try:
        nr, nc = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"bad header numbers: {lines[0]!r}") from None
    if nr < 1 or nc < 1:
        raise FormatError("vertex counts must be positive")
    edges = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'i j' edge line, got {ln!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"bad edge numbers: {ln!r}") from None
        if not (1 <= i <= nr and 1 <= j <= nc):
            raise FormatError(f"edge ({i}, {j}) out of range for {nr}+{nc} vertices")
        edges.add((i - 1, j - 1))
    return BipartiteGraph(
        tuple(f"r{i + 1}" for i in range(nr)),
        tuple(f"c{j + 1}" for j in range(nc)),
        frozenset(edges),
    )


def format_edge_list(g: BipartiteGraph) -> str:
    lines = [f"{len(g.r_vertices)} {len(g.c_vertices)}"]
    lines += [f"{i + 1} {j + 1}" for i, j in sorted(g.edges)]
    return "\n".join(lines)
