"""Integer symmetric matrices viewed as charged signed graphs.

Diagonal entries are vertex charges, off-diagonal entries signed edge
weights.  Graphs are immutable values: every operation returns a new graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Sequence

from .errors import IndexOutOfRange, NotSquare, NotSymmetric

#: A set of vertex indices of a host graph (stored as a frozenset; the
#: heavy search paths use int bitmasks internally instead).
VertexSet = frozenset


@dataclass(frozen=True)
class ChargedSignedGraph:
    """Symmetric integer matrix with graph semantics.

    In the graph regime all entries lie in {-1, 0, 1}; the type itself
    carries arbitrary integers so that matrices with large entries can be
    routed through the analytic classifier.
    """

    n: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    @property
    def charges(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} not in graph of order {self.n}")
        row = self.entries[v]
        return tuple(w for w in range(self.n) if w != v and row[w] != 0)

    def adjacency_masks(self) -> list[int]:
        """Bitmask of neighbours per vertex (underlying graph)."""
        masks = [0] * self.n
        for i in range(self.n):
            row = self.entries[i]
            m = 0
            for j in range(self.n):
                if j != i and row[j]:
                    m |= 1 << j
            masks[i] = m
        return masks

    def max_entry_abs(self) -> int:
        return max((abs(x) for row in self.entries for x in row), default=0)

    def __repr__(self) -> str:
        return f"ChargedSignedGraph({[list(r) for r in self.entries]})"


def from_entries(rows: Sequence[Sequence[int]]) -> ChargedSignedGraph:
    """Build a graph from a full symmetric matrix given as nested lists."""
    n = len(rows)
    mat = []
    for r in rows:
        row = tuple(int(x) for x in r)
        if len(row) != n:
            raise NotSquare(f"expected {n} columns, got {len(row)}")
        mat.append(row)
    for i in range(n):
        for j in range(i + 1, n):
            if mat[i][j] != mat[j][i]:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    return ChargedSignedGraph(n, tuple(mat))


def _check_subset(g: ChargedSignedGraph, vertices: Iterable[int]) -> list[int]:
    vs = sorted(set(int(v) for v in vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} not in graph of order {g.n}")
    return vs


def induced_subgraph(g: ChargedSignedGraph, vertices: Iterable[int]) -> ChargedSignedGraph:
    """Principal submatrix on the given vertices, original order preserved."""
    vs = _check_subset(g, vertices)
    return ChargedSignedGraph(
        len(vs), tuple(tuple(g.entries[i][j] for j in vs) for i in vs)
    )


def masks_connected(masks: Sequence[int], n: int) -> bool:
    if n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def is_connected(g: ChargedSignedGraph) -> bool:
    """Connectivity of the underlying graph; 0- and 1-vertex graphs count as connected."""
    return masks_connected(g.adjacency_masks(), g.n)


def degree(g: ChargedSignedGraph, v: int) -> int:
    """Number of neighbours, plus one if the vertex carries a charge."""
    nbrs = g.neighbors(v)
    return len(nbrs) + (1 if g.entries[v][v] != 0 else 0)


def max_degree(g: ChargedSignedGraph) -> int:
    return max((degree(g, v) for v in range(g.n)), default=0)


def extend_rows(
    g: ChargedSignedGraph, charge: int, edges: dict[int, int]
) -> ChargedSignedGraph:
    """Append one vertex with the given charge and {old vertex: sign} edges."""
    n = g.n
    new_row = [0] * (n + 1)
    for w, s in edges.items():
        new_row[w] = s
    new_row[n] = charge
    rows = tuple(
        tuple(g.entries[i]) + (new_row[i],) for i in range(n)
    ) + (tuple(new_row),)
    return ChargedSignedGraph(n + 1, rows)


def one_vertex_extensions(
    g: ChargedSignedGraph,
    charges: Iterable[int] = (-1, 0, 1),
    max_degree: int | None = None,
    edge_values: Iterable[int] = (-1, 1),
) -> Iterator[ChargedSignedGraph]:
    """All connected one-vertex extensions of a connected graph.

    The new vertex gets a diagonal charge from `charges` and signed edges to a
    nonempty subset of old vertices of size at most `max_degree`, so every
    output is connected.  Enumeration order is deterministic: charge
    ascending, neighbour subsets in ascending bitmask order, sign patterns in
    binary counting order.  The empty graph yields the bare one-vertex graphs.
    """
    charge_list = sorted(set(int(c) for c in charges))
    values = sorted(set(int(s) for s in edge_values))
    n = g.n
    if n == 0:
        for c in charge_list:
            yield ChargedSignedGraph(1, ((c,),))
        return
    cap = n if max_degree is None else min(max_degree, n)
    subsets: list[tuple[int, ...]] = []
    for mask in range(1, 1 << n):
        size = mask.bit_count()
        if size <= cap:
            subsets.append(tuple(v for v in range(n) if mask >> v & 1))
    for c in charge_list:
        for subset in subsets:
            for signs in product(values, repeat=len(subset)):
                yield extend_rows(g, c, dict(zip(subset, signs)))


def blocks(g: ChargedSignedGraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted ascending."""
    masks = g.adjacency_masks()
    unseen = set(range(g.n))
    comps = []
    while unseen:
        start = min(unseen)
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= masks[v]
            frontier = nxt & ~seen
            seen |= frontier
        comp = [v for v in range(g.n) if seen >> v & 1]
        comps.append(comp)
        unseen -= set(comp)
    return comps


# --- JSON-lines graph format ------------------------------------------------
#
# One object per line: {"n": int, "rows": [[int, ...], ...]}, full symmetric
# matrix with rows emitted in index order.  Extra keys (e.g. "name") pass
# through untouched.


def graph_to_obj(g: ChargedSignedGraph, **extra) -> dict:
    obj = {"n": g.n, "rows": [list(r) for r in g.entries]}
    obj.update(extra)
    return obj


def graph_to_json(g: ChargedSignedGraph, **extra) -> str:
    return json.dumps(graph_to_obj(g, **extra), separators=(",", ":"))


def graph_from_obj(obj: dict) -> ChargedSignedGraph:
    rows = obj["rows"]
    if "n" in obj and int(obj["n"]) != len(rows):
        raise NotSquare("declared n disagrees with number of rows")
    return from_entries(rows)


def graph_from_json(line: str) -> ChargedSignedGraph:
    return graph_from_obj(json.loads(line))


def read_graphs(lines: Iterable[str]) -> Iterator[ChargedSignedGraph]:
    for line in lines:
        line = line.strip()
        if line:
            yield graph_from_json(line)
