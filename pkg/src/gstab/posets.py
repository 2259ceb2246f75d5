"""Finite posets, comparability graphs, and polytope point counts.

A poset is stored by its strict-order relation (transitive closure); cover
relations are recomputed as the transitive reduction.  Element labels are
arbitrary strings or ints; positions in the element list fix the vertex
numbering of the comparability graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import FormatError, ParameterError
from .graphs import Graph


@dataclass(frozen=True)
class Poset:
    """elements: label list; lt: lt[i] is the frozenset of indices j with
    element i strictly below element j (already transitively closed)."""

    elements: tuple
    lt: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise FormatError("duplicate poset labels")
        n = len(self.elements)
        for i, ups in enumerate(self.lt):
            if i in ups:
                raise FormatError("strict order cannot be reflexive")
            for j in ups:
                if not 0 <= j < n:
                    raise FormatError("relation index out of range")
                if i in self.lt[j]:
                    raise FormatError("antisymmetry violated")
                if not self.lt[j] <= ups:
                    raise FormatError("relation not transitively closed")

    def __len__(self):
        return len(self.elements)

    def index(self, label) -> int:
        return self.elements.index(label)

    def less(self, a, b) -> bool:
        return self.index(b) in self.lt[self.index(a)]

    def comparable(self, a, b) -> bool:
        return self.less(a, b) or self.less(b, a)

    def covers(self) -> list[tuple]:
        """Cover pairs (a, b) with a < b and nothing in between."""
        out = []
        for i, ups in enumerate(self.lt):
            for j in ups:
                if not any(j in self.lt[k] for k in ups):
                    out.append((self.elements[i], self.elements[j]))
        return sorted(out, key=lambda ab: (str(ab[0]), str(ab[1])))


def poset_from_covers(elements, covers) -> Poset:
    """Build a poset from cover (or any generating) relations."""
    elements = tuple(elements)
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    below = [set() for _ in range(n)]  # below[i]: direct successors
    for a, b in covers:
        if a not in index or b not in index:
            raise FormatError(f"cover ({a!r}, {b!r}) uses unknown label")
        below[index[a]].add(index[b])
    # transitive closure by repeated sweep; n is tiny here
    changed = True
    while changed:
        changed = False
        for i in range(n):
            extra = set()
            for j in below[i]:
                extra |= below[j]
            if not extra <= below[i]:
                below[i] |= extra
                changed = True
    for i in range(n):
        if i in below[i]:
            raise FormatError("cover relations contain a cycle")
    return Poset(elements, tuple(frozenset(s) for s in below))


def parse_poset_json(text: str) -> Poset:
    """Parse {"elements": [...], "covers": [[a,b], ...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "elements" not in data or "covers" not in data:
        raise FormatError('poset file needs keys "elements" and "covers"')
    covers = data["covers"]
    if not isinstance(covers, list) or not all(
            isinstance(c, list) and len(c) == 2 for c in covers):
        raise FormatError('"covers" must be a list of pairs')
    return poset_from_covers(data["elements"], [tuple(c) for c in covers])


def load_poset(path: str) -> Poset:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_poset_json(fh.read())


# ---------------------------------------------------------------------------
# constructors

def chain(k: int, labels=None) -> Poset:
    labels = tuple(labels) if labels is not None else tuple(f"c{i + 1}" for i in range(k))
    if len(labels) != k:
        raise ParameterError("label count must match chain length")
    return poset_from_covers(labels, [(labels[i], labels[i + 1]) for i in range(k - 1)])


def antichain(k: int, labels=None) -> Poset:
    labels = tuple(labels) if labels is not None else tuple(f"a{i + 1}" for i in range(k))
    return poset_from_covers(labels, [])


def ordinal_sum(p1: Poset, p2: Poset) -> Poset:
    """Every element of p1 below every element of p2.

    Colliding labels in p2 are freshened with trailing apostrophes.
    """
    used = set(p1.elements)
    rename = {}
    for e in p2.elements:
        new = e
        while new in used:
            new = f"{new}'"
        rename[e] = new
        used.add(new)
    elements = p1.elements + tuple(rename[e] for e in p2.elements)
    covers = list(p1.covers())
    covers += [(rename[a], rename[b]) for a, b in p2.covers()]
    maximal_p1 = [e for i, e in enumerate(p1.elements) if not p1.lt[i]]
    minimal_p2 = [rename[e] for i, e in enumerate(p2.elements)
                  if not any(i in ups for ups in p2.lt)]
    covers += [(a, b) for a in maximal_p1 for b in minimal_p2]
    return poset_from_covers(elements, covers)


def with_new_minimum(p: Poset, label="m") -> Poset:
    while label in p.elements:
        label = f"{label}'"
    elements = (label,) + p.elements
    covers = list(p.covers())
    minimal = [e for i, e in enumerate(p.elements)
               if not any(i in ups for ups in p.lt)]
    covers += [(label, e) for e in minimal]
    return poset_from_covers(elements, covers)


def hmp_poset(a: int, b: int) -> Poset:
    """The two-block poset behind the prescribed height/dimension family.

    Bottom block: a chain with b-a-1 elements.  Top block: a singleton next
    to a chain with a-2 elements, with one new minimum adjoined below both.
    Total size is b-1.  Requires 4 <= a < b.
    """
    if not (4 <= a < b):
        raise ParameterError(f"need 4 <= a < b, got a={a}, b={b}")
    bottom = chain(b - a - 1, [f"b{i + 1}" for i in range(b - a - 1)])
    top = poset_from_covers(
        ("p",) + tuple(f"c{i + 1}" for i in range(a - 2)),
        [(f"c{i + 1}", f"c{i + 2}") for i in range(a - 3)],
    )
    return ordinal_sum(bottom, with_new_minimum(top, "m"))


# ---------------------------------------------------------------------------
# operations

def comparability_graph(p: Poset) -> Graph:
    """Graph on 1..|P| (element list order) with comparable pairs as edges.

    Comparability graphs are always perfect.
    """
    n = len(p)
    edges = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n)
             if j in p.lt[i] or i in p.lt[j]]
    return Graph.from_edges(n, edges)


def has_x_subposet(p: Poset) -> bool:
    """Five elements a,b < x < y,z with a,b incomparable and y,z incomparable?"""
    n = len(p)
    for x in range(n):
        down = [i for i in range(n) if x in p.lt[i]]
        up = sorted(p.lt[x])
        if len(down) < 2 or len(up) < 2:
            continue
        down_pair = any(b not in p.lt[a] and a not in p.lt[b]
                        for a, b in combinations(down, 2))
        up_pair = any(z not in p.lt[y] and y not in p.lt[z]
                      for y, z in combinations(up, 2))
        if down_pair and up_pair:
            return True
    return False


def antichains(p: Poset) -> tuple[tuple, ...]:
    """All antichains as label tuples, ordered by size then position."""
    n = len(p)
    out = []
    for mask in range(1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        if all(j not in p.lt[i] and i not in p.lt[j]
               for i, j in combinations(members, 2)):
            out.append(tuple(p.elements[i] for i in members))
    out.sort(key=lambda s: (len(s), tuple(p.elements.index(e) for e in s)))
    return tuple(out)


@lru_cache(maxsize=None)
def maximal_chains(p: Poset) -> tuple[tuple[int, ...], ...]:
    """Maximal chains as index tuples, found by DFS from minimal elements."""
    n = len(p)
    minimal = [i for i in range(n) if not any(i in ups for ups in p.lt)]
    chains = []

    def walk(path):
        last = path[-1]
        succ = [j for j in p.lt[last]
                if not any(j in p.lt[k] for k in p.lt[last])]
        if not succ:
            chains.append(tuple(path))
            return
        for j in sorted(succ):
            walk(path + [j])

    for i in sorted(minimal):
        walk([i])
    return tuple(sorted(chains))


def polytope_point_count(p: Poset, kind: str, q: int) -> int:
    """Lattice points of the q-th dilate of the order or chain polytope.

    order: 0 <= y_e <= q with y_e <= y_f whenever e < f.
    chain: y >= 0 with sum over each maximal chain at most q.
    """
    if q < 0:
        raise ParameterError("dilation factor must be nonnegative")
    n = len(p)
    if kind == "order":
        # assign along a linear extension; each element needs at least the
        # max of its already-assigned predecessors
        order = _linear_extension(p)
        count = 0

        def assign(idx, values):
            nonlocal count
            if idx == n:
                count += 1
                return
            e = order[idx]
            lower = 0
            for k in range(idx):
                d = order[k]
                if e in p.lt[d]:
                    lower = max(lower, values[d])
            for y in range(lower, q + 1):
                values[e] = y
                assign(idx + 1, values)

        assign(0, [0] * n)
        return count
    if kind == "chain":
        chains = maximal_chains(p)
        count = 0

        def assign2(idx, sums):
            nonlocal count
            if idx == n:
                count += 1
                return
            active = [k for k, ch in enumerate(chains) if idx in ch]
            room = min((q - sums[k] for k in active), default=q)
            for y in range(room + 1):
                for k in active:
                    sums[k] += y
                assign2(idx + 1, sums)
                for k in active:
                    sums[k] -= y

        assign2(0, [0] * len(chains))
        return count
    raise ParameterError(f"kind must be 'order' or 'chain', got {kind!r}")


def _linear_extension(p: Poset) -> list[int]:
    n = len(p)
    indeg = [sum(1 for i in range(n) if j in p.lt[i]) for j in range(n)]
    ready = sorted(j for j in range(n) if indeg[j] == 0)
    out = []
    while ready:
        v = ready.pop(0)
        out.append(v)
        for j in sorted(p.lt[v]):
            indeg[j] -= 1
            # only release j once every predecessor is placed
            if indeg[j] == 0 and j not in out and j not in ready:
                ready.append(j)
        ready.sort()
    return out
