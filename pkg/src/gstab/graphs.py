"""Finite simple graphs: cliques, components, purity, perfection.

Vertices are labeled 1..n.  Edges are unordered pairs.  All values are
immutable and all operations are pure functions, so everything here is safe
to share across threads.  The perfection test is the textbook exponential
one (every induced subgraph must have chromatic number equal to its clique
number) and is guarded by a vertex limit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .config import perfect_limit
from .errors import FormatError, SizeGuardError


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 1..n.

    `edges` holds each edge once as a pair (i, j) with i < j.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise FormatError("vertex count must be nonnegative")
        for e in self.edges:
            if len(e) != 2:
                raise FormatError(f"not an edge pair: {e!r}")
            i, j = e
            if i == j:
                raise FormatError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise FormatError(f"edge {e!r} out of range or not normalized")

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build a graph, normalizing each pair to (min, max)."""
        normalized = set()
        for i, j in edges:
            if i == j:
                raise FormatError(f"loop at vertex {i}")
            normalized.add((min(i, j), max(i, j)))
        return Graph(n, frozenset(normalized))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class CliqueComplex:
    """The inclusion-maximal cliques of a graph, plus the complex dimension
    (largest clique size minus one)."""

    maximal_cliques: tuple[tuple[int, ...], ...]
    dim: int


@dataclass(frozen=True)
class Component:
    """One connected component, relabeled to 1..n_i.

    `vertices[k]` is the original label of new vertex k+1.
    """

    graph: Graph
    vertices: tuple[int, ...]


# ---------------------------------------------------------------------------
# constructors

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise FormatError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n, edges)


def paw_graph() -> Graph:
    """Triangle on 1,2,3 with a pendant vertex 4 attached to 3."""
    return Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are shifted up by g.n."""
    edges = list(g.edges) + [(i + g.n, j + g.n) for i, j in h.edges]
    return Graph.from_edges(g.n + h.n, edges)


def complement(g: Graph) -> Graph:
    edges = [(i, j) for i, j in combinations(range(1, g.n + 1), 2)
             if not g.has_edge(i, j)]
    return Graph.from_edges(g.n, edges)


# ---------------------------------------------------------------------------
# file format

def parse_graph_json(text: str) -> Graph:
    """Parse {"n": int, "edges": [[i,j], ...]} with 1-based labels.

    Duplicate pairs and reversed duplicates are rejected rather than
    silently merged.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise FormatError('graph file needs keys "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise FormatError('"n" must be a nonnegative integer')
    raw = data["edges"]
    if not isinstance(raw, list):
        raise FormatError('"edges" must be a list of pairs')
    seen = set()
    for pair in raw:
        if (not isinstance(pair, list)) or len(pair) != 2 \
                or not all(isinstance(v, int) for v in pair):
            raise FormatError(f"bad edge entry: {pair!r}")
        i, j = pair
        if i == j:
            raise FormatError(f"loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise FormatError(f"edge {pair!r} out of range 1..{n}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise FormatError(f"duplicate or reversed edge {pair!r}")
        seen.add(key)
    return Graph(n, frozenset(seen))


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_json(fh.read())


# ---------------------------------------------------------------------------
# bitmask internals (vertices 0..n-1 inside, labels 1..n outside)

@lru_cache(maxsize=None)
def _adjacency_masks(g: Graph) -> tuple[int, ...]:
    adj = [0] * g.n
    for i, j in g.edges:
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    return tuple(adj)


def _mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _maximal_clique_masks(adj: tuple[int, ...], subset: int) -> list[int]:
    """Bron-Kerbosch with pivoting, restricted to the vertices in `subset`."""
    cliques: list[int] = []

    def extend(r: int, p: int, x: int):
        if p == 0 and x == 0:
            cliques.append(r)
            return
        piv_pool = p | x
        # pivot: vertex of p|x with the most neighbours inside p
        pivot = max(_bits(piv_pool), key=lambda v: _popcount(p & adj[v]))
        for v in _bits(p & ~adj[pivot]):
            bit = 1 << v
            extend(r | bit, p & adj[v] & subset, x & adj[v] & subset)
            p &= ~bit
            x |= bit

    extend(0, subset, 0)
    return cliques


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _max_clique_size(adj: tuple[int, ...], subset: int) -> int:
    best = 0

    def grow(cur_size: int, candidates: int):
        nonlocal best
        if cur_size + _popcount(candidates) <= best:
            return
        if candidates == 0:
            best = max(best, cur_size)
            return
        for v in _bits(candidates):
            bit = 1 << v
            grow(cur_size + 1, candidates & adj[v])
            candidates &= ~bit
            if cur_size + _popcount(candidates) <= best:
                return

    grow(0, subset)
    return best


def _colorable(adj: tuple[int, ...], vertices: list[int], k: int) -> bool:
    """Backtracking k-colorability; vertices come pre-sorted by degree."""
    color = {}

    def assign(idx: int, used: int) -> bool:
        if idx == len(vertices):
            return True
        v = vertices[idx]
        taken = {color[u] for u in color if adj[v] >> u & 1}
        # allowing one fresh color caps the search at k while breaking
        # color-permutation symmetry
        limit = min(k, used + 1)
        for c in range(limit):
            if c in taken:
                continue
            color[v] = c
            if assign(idx + 1, max(used, c + 1)):
                return True
            del color[v]
        return False

    return assign(0, 0)


# ---------------------------------------------------------------------------
# operations

@lru_cache(maxsize=None)
def maximal_cliques(g: Graph) -> CliqueComplex:
    """All inclusion-maximal cliques, lexicographically sorted.

    An isolated vertex i contributes the singleton clique (i,).
    """
    adj = _adjacency_masks(g)
    full = (1 << g.n) - 1
    masks = _maximal_clique_masks(adj, full)
    cliques = sorted(_mask_to_vertices(m) for m in masks)
    dim = max((len(c) for c in cliques), default=0) - 1
    return CliqueComplex(tuple(cliques), dim)


def is_pure(g: Graph) -> bool:
    """True when every maximal clique has the same number of vertices."""
    sizes = {len(c) for c in maximal_cliques(g).maximal_cliques}
    return len(sizes) <= 1


@lru_cache(maxsize=None)
def connected_components(g: Graph) -> tuple[Component, ...]:
    """Vertex-induced components, each relabeled 1..n_i.

    Sorted so the clique-complex dimensions come out descending; ties are
    broken by smallest original vertex label.
    """
    adj = _adjacency_masks(g)
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack, group = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            group.append(v)
            for w in _bits(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(group))

    built = []
    for group in comps:
        relabel = {orig: new + 1 for new, orig in enumerate(group)}
        edges = [(relabel[i - 1], relabel[j - 1]) for i, j in g.edges
                 if (i - 1) in relabel and (j - 1) in relabel]
        sub = Graph.from_edges(len(group), edges)
        built.append(Component(sub, tuple(v + 1 for v in group)))
    built.sort(key=lambda c: (-maximal_cliques(c.graph).dim, c.vertices[0]))
    return tuple(built)


@lru_cache(maxsize=None)
def stable_sets(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All stable (independent) vertex sets, the empty set included.

    Ordered by size then lexicographically.  These index the degree-one
    generators of the stable set ring.
    """
    adj = _adjacency_masks(g)
    out = []
    for mask in range(1 << g.n):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if adj[v] & mask:
                ok = False
                break
            m ^= low
        if ok:
            out.append(_mask_to_vertices(mask))
    out.sort(key=lambda s: (len(s), s))
    return tuple(out)


def clique_number(g: Graph) -> int:
    adj = _adjacency_masks(g)
    return _max_clique_size(adj, (1 << g.n) - 1)


def chromatic_number(g: Graph, limit: int | None = None) -> int:
    """Exact chromatic number by backtracking, clique size as lower bound."""
    limit = perfect_limit() if limit is None else limit
    if g.n > limit:
        raise SizeGuardError(f"chromatic number limited to {limit} vertices, got {g.n}")
    if g.n == 0:
        return 0
    adj = _adjacency_masks(g)
    order = sorted(range(g.n), key=lambda v: -_popcount(adj[v]))
    k = _max_clique_size(adj, (1 << g.n) - 1)
    while not _colorable(adj, order, k):
        k += 1
    return k


@lru_cache(maxsize=None)
def has_odd_hole(g: Graph) -> bool:
    """Induced odd cycle of length >= 5 present?"""
    adj = _adjacency_masks(g)
    for size in range(5, g.n + 1, 2):
        for subset in combinations(range(g.n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if all(_popcount(adj[v] & mask) == 2 for v in subset):
                # 2-regular induced subgraph: a cycle iff connected
                start = subset[0]
                reach = 1 << start
                frontier = [start]
                while frontier:
                    v = frontier.pop()
                    for w in _bits(adj[v] & mask & ~reach):
                        reach |= 1 << w
                        frontier.append(w)
                if reach == mask:
                    return True
    return False


def is_perfect(g: Graph, limit: int | None = None) -> bool:
    """Every induced subgraph has chromatic number equal to clique number.

    An independent route (no odd hole in the graph or its complement) is
    evaluated as well; the two must agree, and a mismatch is a bug, not a
    result.
    """
    limit = perfect_limit() if limit is None else limit
    if g.n > limit:
        raise SizeGuardError(f"perfection test limited to {limit} vertices, got {g.n}")
    result = _perfect_by_coloring(g)
    via_holes = not (has_odd_hole(g) or has_odd_hole(complement(g)))
    if result != via_holes:
        raise RuntimeError("perfection routes disagree; this is a bug")
    return result


@lru_cache(maxsize=None)
def _perfect_by_coloring(g: Graph) -> bool:
    adj = _adjacency_masks(g)
    for mask in range(1, 1 << g.n):
        omega = _max_clique_size(adj, mask)
        vertices = sorted(_bits(mask), key=lambda v: -_popcount(adj[v] & mask))
        sub_adj = tuple(a & mask for a in adj)
        if not _colorable(sub_adj, vertices, omega):
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration up to isomorphism (canonical forms)

def _vertex_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_permutations(n: int) -> tuple[tuple[int, ...], ...]:
    """For each vertex permutation, the induced permutation of pair slots."""
    pairs = _vertex_pairs(n)
    index = {p: k for k, p in enumerate(pairs)}
    table = []
    for perm in permutations(range(n)):
        row = tuple(index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs)
        table.append(row)
    return tuple(table)


def _apply_pair_perm(mask: int, row: tuple[int, ...]) -> int:
    out = 0
    for src, dst in enumerate(row):
        if mask >> src & 1:
            out |= 1 << dst
    return out


def _is_canonical_mask(mask: int, n: int) -> bool:
    for row in _pair_permutations(n):
        if _apply_pair_perm(mask, row) < mask:
            return False
    return True


def graphs_up_to_iso(n: int):
    """Yield one representative per isomorphism class of graphs on n vertices."""
    pairs = _vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        if _is_canonical_mask(mask, n):
            edges = [(i + 1, j + 1) for k, (i, j) in enumerate(pairs) if mask >> k & 1]
            yield Graph.from_edges(n, edges)
