"""Graphs, digraphs, binary matrices, orderings, and the combinatorial
operations every other module consumes.

Vertices are dense integer indices 0..n-1; names live only in I/O metadata.
All values are immutable after construction and every operation is a pure
function, so everything here is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union


class InputError(ValueError):
    """Malformed external input (files, JSON, flags)."""


def _check_vertex(i, n: int) -> int:
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < n:
        raise InputError(f"vertex index {i!r} out of range 0..{n - 1}")
    return i


@dataclass(frozen=True)
class Graph:
    """Simple undirected loop-free graph on vertices 0..n-1."""

    n: int
    edges: frozenset  # frozenset of (i, j) tuples with i < j

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        for e in self.edges:
            i, j = e
            _check_vertex(i, self.n)
            _check_vertex(j, self.n)
            if not i < j:
                raise InputError(f"edge {e} is not normalized (need i < j)")

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        normalized = set()
        for e in edges:
            i, j = e
            _check_vertex(i, n)
            _check_vertex(j, n)
            if i == j:
                raise InputError(f"loop edge ({i},{j}) not allowed")
            normalized.add((min(i, j), max(i, j)))
        return Graph(n, frozenset(normalized))

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, u: int) -> frozenset:
        _check_vertex(u, self.n)
        return frozenset(
            j if i == u else i for (i, j) in self.edges if u in (i, j)
        )

    def closed_neighborhood(self, u: int) -> frozenset:
        return self.neighbors(u) | {u}

    def sorted_edges(self):
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}


@dataclass(frozen=True)
class Digraph:
    """Simple loop-free directed graph on vertices 0..n-1."""

    n: int
    arcs: frozenset  # frozenset of (i, j) tuples, i != j

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        for a in self.arcs:
            i, j = a
            _check_vertex(i, self.n)
            _check_vertex(j, self.n)
            if i == j:
                raise InputError(f"loop arc ({i},{j}) not allowed")

    @staticmethod
    def from_arcs(n: int, arcs: Iterable[Sequence[int]]) -> "Digraph":
        normalized = set()
        for a in arcs:
            i, j = a
            _check_vertex(i, n)
            _check_vertex(j, n)
            if i == j:
                raise InputError(f"loop arc ({i},{j}) not allowed")
            normalized.add((i, j))
        return Digraph(n, frozenset(normalized))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, u: int) -> frozenset:
        _check_vertex(u, self.n)
        return frozenset(j for (i, j) in self.arcs if i == u)

    def sorted_arcs(self):
        return sorted(self.arcs)

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.sorted_arcs()]}


Structure = Union[Graph, Digraph]

# Convenience constructors used by the catalog and by tests.


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n_pendants: int) -> Graph:
    """Star with hub 0 and pendant vertices 1..n_pendants."""
    return Graph.from_edges(n_pendants + 1, [(0, i) for i in range(1, n_pendants + 1)])


def complement_graph(g: Graph) -> Graph:
    edges = [
        (i, j)
        for i in range(g.n)
        for j in range(i + 1, g.n)
        if not g.has_edge(i, j)
    ]
    return Graph.from_edges(g.n, edges)


# Orderings.


def validate_ordering(n: int, ordering: Sequence[int]) -> tuple:
    """Check that ordering is a permutation of 0..n-1 and return it as a tuple."""
    perm = tuple(ordering)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise InputError(f"ordering {list(ordering)} is not a permutation of 0..{n - 1}")
    return perm


# Binary matrices.


@dataclass(frozen=True)
class BinaryMatrix:
    """Immutable 0/1 matrix with positive dimensions."""

    rows: tuple  # tuple of tuples of 0/1 ints

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise InputError("matrix dimensions must be positive")
        width = len(self.rows[0])
        for r in self.rows:
            if len(r) != width:
                raise InputError("matrix rows have unequal lengths")
            for x in r:
                if x not in (0, 1):
                    raise InputError(f"matrix entry {x!r} is not 0/1")

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "BinaryMatrix":
        return BinaryMatrix(tuple(tuple(int(x) for x in r) for r in rows))

    @staticmethod
    def from_strings(lines: Iterable[str]) -> "BinaryMatrix":
        rows = []
        for line in lines:
            text = line.strip()
            if not text:
                continue
            if any(ch not in "01" for ch in text):
                raise InputError(f"matrix line {text!r} contains non-0/1 characters")
            rows.append(tuple(int(ch) for ch in text))
        if not rows:
            raise InputError("empty matrix input")
        return BinaryMatrix(tuple(rows))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(tuple(zip(*self.rows)))

    def to_strings(self):
        return ["".join(str(x) for x in r) for r in self.rows]


def augmented_adjacency(structure: Structure, ordering: Sequence[int]) -> BinaryMatrix:
    """Adjacency matrix under the given vertex ordering with an all-ones diagonal.

    For digraphs, entry (i, j) records the arc ordering[i] -> ordering[j].
    """
    perm = validate_ordering(structure.n, ordering)
    n = structure.n
    if n == 0:
        raise InputError("augmented adjacency of an empty structure is undefined")
    directed = isinstance(structure, Digraph)
    rows = []
    for i in range(n):
        u = perm[i]
        row = []
        for j in range(n):
            v = perm[j]
            if i == j:
                row.append(1)
            elif directed:
                row.append(1 if structure.has_arc(u, v) else 0)
            else:
                row.append(1 if structure.has_edge(u, v) else 0)
        rows.append(tuple(row))
    return BinaryMatrix(tuple(rows))


def wedge(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    """Entrywise logical AND of two equal-shaped binary matrices."""
    if a.n_rows != b.n_rows or a.n_cols != b.n_cols:
        raise InputError(
            f"matrix dimension mismatch: {a.n_rows}x{a.n_cols} vs {b.n_rows}x{b.n_cols}"
        )
    return BinaryMatrix(
        tuple(
            tuple(x & y for x, y in zip(ra, rb))
            for ra, rb in zip(a.rows, b.rows)
        )
    )


def intersect_transpose(d: Digraph) -> Graph:
    """Underlying graph with edge {i,j} iff both arcs (i,j) and (j,i) exist."""
    edges = [(i, j) for (i, j) in d.arcs if i < j and (j, i) in d.arcs]
    return Graph.from_edges(d.n, edges)


def reduced_graph(g: Graph):
    """Quotient by equal closed neighborhoods.

    Returns (reduced, classes) where classes is a tuple of sorted vertex
    tuples; class k becomes vertex k of the reduced graph.  Classes are
    ordered by their smallest member.
    """
    signature = {v: g.closed_neighborhood(v) for v in range(g.n)}
    classes = []
    for v in range(g.n):
        for cls in classes:
            if signature[cls[0]] == signature[v]:
                cls.append(v)
                break
        else:
            classes.append([v])
    index_of = {}
    for k, cls in enumerate(classes):
        for v in cls:
            index_of[v] = k
    edges = set()
    for (i, j) in g.edges:
        a, b = index_of[i], index_of[j]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    reduced = Graph.from_edges(len(classes), edges)
    return reduced, tuple(tuple(cls) for cls in classes)


def generate_gnr(n: int, r: int) -> Graph:
    """Indexed graph with edge {i,j} iff 0 < |i-j| <= r; requires n > r >= 1."""
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")
    if n <= r:
        raise InputError(f"need n > r, got n={n}, r={r}")
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, min(n, i + r + 1))
    ]
    return Graph.from_edges(n, edges)


def common_neighborhood_subgraph(g: Graph, u: int, v: int):
    """Subgraph induced by the common open neighborhood of u and v.

    Returns (subgraph, vertices) where vertices[k] is the original index of
    the k-th subgraph vertex.
    """
    if u == v:
        raise InputError(f"need two distinct vertices, got u = v = {u}")
    common = sorted(g.neighbors(u) & g.neighbors(v))
    index = {w: k for k, w in enumerate(common)}
    edges = [
        (index[i], index[j])
        for (i, j) in g.edges
        if i in index and j in index
    ]
    return Graph.from_edges(len(common), edges), tuple(common)


def is_tournament(d: Digraph) -> bool:
    """True iff every unordered vertex pair carries exactly one arc."""
    for i in range(d.n):
        for j in range(i + 1, d.n):
            if ((i, j) in d.arcs) == ((j, i) in d.arcs):
                return False
    return d.n >= 1


def check_c1p_rows(m: BinaryMatrix) -> bool:
    """True iff every row's 1-entries occupy one contiguous column block."""
    for row in m.rows:
        ones = [j for j, x in enumerate(row) if x]
        if ones and ones[-1] - ones[0] + 1 != len(ones):
            return False
    return True


# Structure I/O: JSON objects and "n m" edge-list text.


def structure_from_json(data: dict) -> Structure:
    if not isinstance(data, dict):
        raise InputError(f"expected a JSON object, got {type(data).__name__}")
    if "n" not in data:
        raise InputError("structure JSON is missing field 'n'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError(f"field 'n' must be a nonnegative integer, got {n!r}")
    if "edges" in data and "arcs" in data:
        raise InputError("structure JSON has both 'edges' and 'arcs'")
    if "arcs" in data:
        return Digraph.from_arcs(n, _pair_list(data["arcs"], "arcs"))
    if "edges" in data:
        return Graph.from_edges(n, _pair_list(data["edges"], "edges"))
    raise InputError("structure JSON needs an 'edges' or 'arcs' field")


def _pair_list(raw, field: str):
    if not isinstance(raw, list):
        raise InputError(f"field '{field}' must be a list of pairs")
    pairs = []
    for k, item in enumerate(raw):
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise InputError(f"field '{field}' entry {k} is not a pair: {item!r}")
        pairs.append((item[0], item[1]))
    return pairs


def structure_from_edgelist(text: str, directed: bool = False) -> Structure:
    """Parse the text format: first line "n m", then m lines "i j"."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise InputError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError(f"line 1: expected 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise InputError(f"line 1: expected integers 'n m', got {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise InputError(f"expected {m} edge lines, found {len(lines) - 1}")
    pairs = []
    for k, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {k}: expected 'i j', got {line!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InputError(f"line {k}: expected integers, got {line!r}") from exc
    if directed:
        return Digraph.from_arcs(n, pairs)
    return Graph.from_edges(n, pairs)


def structure_to_edgelist(structure: Structure) -> str:
    pairs = (
        structure.sorted_arcs()
        if isinstance(structure, Digraph)
        else structure.sorted_edges()
    )
    lines = [f"{structure.n} {len(pairs)}"]
    lines.extend(f"{i} {j}" for (i, j) in pairs)
    return "\n".join(lines) + "\n"
