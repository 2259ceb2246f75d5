"""Lattice-point model of the stable set ring of a perfect graph.

For a perfect graph the ring is spanned by the monomials x^a t^q whose
exponent vectors satisfy a_i >= 0 and, for every maximal clique C,
sum_{i in C} a_i <= q.  Shifting the thresholds to 1 gives the canonical
module, shifting to -1 gives the anticanonical fractional ideal, and the
trace of the canonical module is the set of componentwise sums of a
canonical and an anticanonical point.  Everything in this module is an
integer computation on those inequality systems.

Membership tests (`in_ring`, `in_canonical`, `in_anticanonical`,
`in_trace`) are deliberately brute force: they are the oracle against
which the fast combinatorial classification is checked.  The generator
and face machinery is what makes m-primariness and trace height
computable at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .config import cone_dim_limit
from .errors import InconclusiveError, NotPerfectError, ParameterError, SizeGuardError
from .graphs import (
    Graph,
    connected_components,
    graphs_up_to_iso,
    is_perfect,
    is_pure,
    maximal_cliques,
)


class _Unit:
    """Sentinel for 'the trace is the whole ring' (height question is moot)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Unit"


UNIT = _Unit()


@dataclass(frozen=True)
class Monomial:
    """One lattice point: exponents of x_1..x_n plus the t-degree."""

    exponents: tuple[int, ...]
    degree: int

    def __add__(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(a + b for a, b in zip(self.exponents, other.exponents, strict=True)),
            self.degree + other.degree,
        )

    def __sub__(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(a - b for a, b in zip(self.exponents, other.exponents, strict=True)),
            self.degree - other.degree,
        )


@dataclass(frozen=True)
class FacetSystem:
    """Nonnegativity plus maximal-clique inequalities of a perfect graph.

    A threshold theta turns the system into the membership test for the
    ring (theta=0), the canonical module (theta=1), or the anticanonical
    ideal (theta=-1): exponents at least theta, clique sums at most
    degree - theta.
    """

    n: int
    cliques: tuple[tuple[int, ...], ...]
    delta: int

    @staticmethod
    def from_graph(g: Graph, check: bool = True,
                   vertex_limit: int | None = None) -> "FacetSystem":
        if g.n == 0:
            raise ParameterError("need at least one vertex")
        if check and not is_perfect(g, vertex_limit):
            raise NotPerfectError("graph is not perfect")
        cx = maximal_cliques(g)
        return FacetSystem(g.n, cx.maximal_cliques, cx.dim + 1)


@dataclass(frozen=True)
class Face:
    """A face of the cone over the stable set polytope.

    `tight_nonneg` / `tight_cliques` record which inequalities hold with
    equality everywhere on the face (vertex labels, resp. indices into the
    facet system's clique list); `points` are the degree-one lattice points
    lying on the face, which span it.
    """

    tight_nonneg: frozenset[int]
    tight_cliques: frozenset[int]
    points: tuple[tuple[int, ...], ...]
    dim: int


@dataclass(frozen=True)
class OracleCheck:
    """Brute-force side of a classification run."""

    trace_power: bool
    m_primary: bool
    height: object
    agreement: bool


@dataclass(frozen=True)
class TraceReport:
    classification: str
    N: int | None
    nearly_gorenstein: bool
    gorenstein: bool
    dim: int
    a_invariant: int
    component_dims: tuple[int, ...]
    component_pure: tuple[bool, ...]
    oracle: OracleCheck | None = None

    def label(self) -> str:
        if self.classification == "GPS":
            return f"GPS({self.N})"
        return self.classification


# ---------------------------------------------------------------------------
# membership tests

def _check_length(fs: FacetSystem, m: Monomial):
    if len(m.exponents) != fs.n:
        raise ParameterError(
            f"exponent vector has length {len(m.exponents)}, expected {fs.n}")


def _clique_sums(fs: FacetSystem, exps) -> list[int]:
    return [sum(exps[i - 1] for i in c) for c in fs.cliques]


def _in_module(fs: FacetSystem, exps, degree: int, theta: int) -> bool:
    if any(e < theta for e in exps):
        return False
    bound = degree - theta
    return all(s <= bound for s in _clique_sums(fs, exps))


def in_ring(fs: FacetSystem, m: Monomial) -> bool:
    """Exponents nonnegative, clique sums at most the degree."""
    _check_length(fs, m)
    return _in_module(fs, m.exponents, m.degree, 0)


def in_canonical(fs: FacetSystem, m: Monomial) -> bool:
    """Exponents at least 1, clique sums at most degree - 1."""
    _check_length(fs, m)
    return _in_module(fs, m.exponents, m.degree, 1)


def in_anticanonical(fs: FacetSystem, m: Monomial) -> bool:
    """Exponents at least -1, clique sums at most degree + 1.

    This is the facet-threshold route.  `in_anticanonical_definitional`
    tests the defining property instead; the two must agree, and the test
    suite checks that they do.
    """
    _check_length(fs, m)
    return _in_module(fs, m.exponents, m.degree, -1)


def in_anticanonical_definitional(g: Graph, m: Monomial,
                                  degree_bound: int | None = None) -> bool:
    """True iff m + w lands in the ring for every canonical-module generator w."""
    fs = FacetSystem.from_graph(g)
    return all(in_ring(fs, m + w) for w in omega_generators(g, degree_bound))


def in_trace(fs: FacetSystem, m: Monomial) -> bool:
    """Is m a sum of a canonical-module point and an anticanonical point?

    The search box is exhaustive: a canonical summand w must satisfy
    1 <= w_i <= a_i + 1 (the complement has entries >= -1), and for a
    fixed w a valid degree split exists iff the max clique sum of w plus
    the max clique sum of m - w is at most m's degree.
    """
    _check_length(fs, m)
    a, q = m.exponents, m.degree
    if any(x < 0 for x in a):
        return False
    if not _in_module(fs, a, q, 0):
        return False
    for w in product(*(range(1, x + 2) for x in a)):
        max_w = max(_clique_sums(fs, w))
        rest = tuple(x - y for x, y in zip(a, w))
        max_rest = max(_clique_sums(fs, rest))
        if max_w + max_rest <= q:
            return True
    return False


# ---------------------------------------------------------------------------
# degree slices

@lru_cache(maxsize=None)
def _vertex_cliques(fs: FacetSystem) -> tuple[tuple[int, ...], ...]:
    """For each vertex (0-based), the indices of cliques containing it."""
    out = [[] for _ in range(fs.n)]
    for ci, c in enumerate(fs.cliques):
        for v in c:
            out[v - 1].append(ci)
    return tuple(tuple(x) for x in out)


@lru_cache(maxsize=None)
def _slice(fs: FacetSystem, theta: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors in the theta-module at the given degree,
    in ascending lexicographic order."""
    caps = [degree - theta * (len(c) + 1) for c in fs.cliques]
    if any(cap < 0 for cap in caps):
        return ()
    by_vertex = _vertex_cliques(fs)
    points: list[tuple[int, ...]] = []
    shifted = [0] * fs.n

    def assign(v: int, remaining: list[int]):
        if v == fs.n:
            points.append(tuple(b + theta for b in shifted))
            return
        room = min(remaining[ci] for ci in by_vertex[v])
        for b in range(room + 1):
            shifted[v] = b
            for ci in by_vertex[v]:
                remaining[ci] -= b
            assign(v + 1, remaining)
            for ci in by_vertex[v]:
                remaining[ci] += b
        shifted[v] = 0

    assign(0, caps)
    return tuple(points)


def degree_monomials(fs: FacetSystem, q: int) -> list[Monomial]:
    """All ring monomials of degree exactly q, lexicographically ordered."""
    if q < 0:
        return []
    return [Monomial(e, q) for e in _slice(fs, 0, q)]


def hilbert_function(fs: FacetSystem, q: int) -> int:
    if q < 0:
        return 0
    return len(_slice(fs, 0, q))


def a_invariant(g: Graph) -> int:
    """Minus the clique-complex dimension minus two.

    Equals minus the smallest degree of a canonical-module monomial; the
    tests verify that by enumeration.
    """
    if not is_perfect(g):
        raise NotPerfectError("a-invariant formula requires a perfect graph")
    return -maximal_cliques(g).dim - 2


# ---------------------------------------------------------------------------
# module generators, computed degree by degree per component
#
# A degree slice of the union graph is the cartesian product of the
# component slices in the same degree, and a point drops to the previous
# degree iff each component point does (subtract a stable set per
# component).  New generators therefore live in the product positions
# where at least one component point cannot drop, which keeps the
# materialized sets small.

def _component_stable_exps(fs: FacetSystem, g: Graph) -> tuple[tuple[int, ...], ...]:
    from .graphs import stable_sets

    out = []
    for w in stable_sets(g):
        e = [0] * g.n
        for v in w:
            e[v - 1] = 1
        out.append(tuple(e))
    return tuple(out)


def _can_drop(fs: FacetSystem, stable_exps, exps, theta: int, degree: int) -> bool:
    for w in stable_exps:
        cand = tuple(a - b for a, b in zip(exps, w))
        if _in_module(fs, cand, degree - 1, theta):
            return True
    return False


def _module_start_degree(fs_list, theta: int) -> int:
    if theta == 1:
        return max(fs.delta for fs in fs_list) + 1
    if theta == -1:
        return -min(min(len(c) for c in fs.cliques) for fs in fs_list) - 1
    raise ParameterError("generators are only computed for theta = 1 or -1")


def _module_generators(g: Graph, theta: int, degree_bound: int | None) -> list[Monomial]:
    comps = connected_components(g)
    fs_list = [FacetSystem.from_graph(c.graph, check=False) for c in comps]
    stables = [_component_stable_exps(fs, c.graph) for fs, c in zip(fs_list, comps)]
    window = degree_bound if degree_bound is not None \
        else 2 * (maximal_cliques(g).dim + 3)
    start = _module_start_degree(fs_list, theta)

    def embed(parts) -> tuple[int, ...]:
        full = [0] * g.n
        for comp, exps in zip(comps, parts):
            for slot, orig in enumerate(comp.vertices):
                full[orig - 1] = exps[slot]
        return tuple(full)

    gens: list[Monomial] = []
    quiet = 0
    stabilized = False
    for d in range(start, start + window + 1):
        slices = [_slice(fs, theta, d) for fs in fs_list]
        if all(slices):
            droppable = []
            stuck = []
            for fs, st, sl in zip(fs_list, stables, slices):
                can = [p for p in sl if _can_drop(fs, st, p, theta, d)]
                cannot = [p for p in sl if not _can_drop(fs, st, p, theta, d)]
                droppable.append(can)
                stuck.append(cannot)
            new = 0
            for j in range(len(comps)):
                pools = [droppable[k] if k < j else (stuck[k] if k == j else slices[k])
                         for k in range(len(comps))]
                for parts in product(*pools):
                    gens.append(Monomial(embed(parts), d))
                    new += 1
        else:
            new = 0
        quiet = quiet + 1 if new == 0 else 0
        if quiet >= 2 and d > start:
            stabilized = True
            break
    if not stabilized:
        raise InconclusiveError(
            f"generator search did not stabilize within degrees "
            f"{start}..{start + window}; raise the degree bound")
    gens.sort(key=lambda m: (m.degree, m.exponents))
    return gens


@lru_cache(maxsize=None)
def omega_generators(g: Graph, degree_bound: int | None = None) -> tuple[Monomial, ...]:
    """Minimal generators of the canonical module, lowest degree delta+1."""
    return tuple(_module_generators(g, 1, degree_bound))


@lru_cache(maxsize=None)
def anticanonical_generators(g: Graph, degree_bound: int | None = None) -> tuple[Monomial, ...]:
    """Minimal generators of the anticanonical fractional ideal."""
    return tuple(_module_generators(g, -1, degree_bound))


@lru_cache(maxsize=None)
def trace_generators(g: Graph, degree_bound: int | None = None) -> tuple[Monomial, ...]:
    """Minimal generators of the trace ideal.

    Every trace monomial is a canonical generator plus an anticanonical
    generator plus a ring point, so the pairwise sums generate; reducing
    them against each other (difference in the ring means redundant)
    leaves exactly the minimal generating set.
    """
    fs = FacetSystem.from_graph(g, check=False)
    sums = sorted(
        {w + v for w in omega_generators(g, degree_bound)
         for v in anticanonical_generators(g, degree_bound)},
        key=lambda m: (m.degree, m.exponents),
    )
    for m in sums:
        if not in_ring(fs, m):
            raise RuntimeError("trace candidate outside the ring; this is a bug")
    kept: list[Monomial] = []
    for cand in sums:
        if not any(in_ring(fs, cand - k) for k in kept):
            kept.append(cand)
    return tuple(kept)


def trace_is_unit(g: Graph, degree_bound: int | None = None) -> bool:
    gens = trace_generators(g, degree_bound)
    return len(gens) == 1 and gens[0].degree == 0


# ---------------------------------------------------------------------------
# trace as a power of the maximal ideal (brute-force route)

def trace_equals_power(g: Graph, power: int, vertex_limit: int | None = None) -> bool:
    """Does the trace equal the power-th power of the maximal ideal?

    Checks that no ring monomial of smaller degree is in the trace and
    that every monomial of degree `power` is.  Degrees above `power` then
    follow because the ring is generated in degree one and the trace is
    an ideal.
    """
    if power < 0:
        raise ParameterError("power must be nonnegative")
    fs = FacetSystem.from_graph(g, vertex_limit=vertex_limit)
    for q in range(power):
        if any(in_trace(fs, m) for m in degree_monomials(fs, q)):
            return False
    return all(in_trace(fs, m) for m in degree_monomials(fs, power))


def trace_contains_maximal_ideal(g: Graph, vertex_limit: int | None = None) -> bool:
    """Oracle for near-Gorensteinness: every degree-one monomial in the trace."""
    fs = FacetSystem.from_graph(g, vertex_limit=vertex_limit)
    return all(in_trace(fs, m) for m in degree_monomials(fs, 1))


# ---------------------------------------------------------------------------
# faces of the cone

def _int_rank(rows: list[list[int]]) -> int:
    """Rank over the rationals of an integer matrix (fraction-free)."""
    mat = [list(r) for r in rows]
    rank = 0
    cols = len(mat[0]) if mat else 0
    row = 0
    for col in range(cols):
        pivot = None
        for r in range(row, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        pv = mat[row][col]
        for r in range(row + 1, len(mat)):
            if mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [pv * x - factor * y for x, y in zip(mat[r], mat[row])]
        row += 1
        rank += 1
        if row == len(mat):
            break
    return rank


@lru_cache(maxsize=None)
def cone_faces(fs: FacetSystem, limit: int | None = None) -> tuple[Face, ...]:
    """All faces of the cone over the stable set polytope.

    Faces are intersections of facet point sets.  Because the polytope has
    0/1 vertices, each face is spanned by its degree-one lattice points,
    so those points both identify the face and give its dimension.
    """
    limit = cone_dim_limit() if limit is None else limit
    if fs.n + 1 > limit:
        raise SizeGuardError(
            f"face enumeration limited to cone dimension {limit}, got {fs.n + 1}")
    verts = _slice(fs, 0, 1)
    facet_sets: list[frozenset[int]] = []
    for i in range(fs.n):
        facet_sets.append(frozenset(k for k, e in enumerate(verts) if e[i] == 0))
    for c in fs.cliques:
        facet_sets.append(frozenset(
            k for k, e in enumerate(verts) if sum(e[i - 1] for i in c) == 1))

    found = {frozenset(range(len(verts)))}
    queue = list(found)
    while queue:
        cur = queue.pop()
        for fset in facet_sets:
            nxt = cur & fset
            if nxt not in found:
                found.add(nxt)
                queue.append(nxt)

    faces = []
    for members in found:
        pts = tuple(sorted(verts[k] for k in members))
        tight_nonneg = frozenset(
            i + 1 for i in range(fs.n) if all(p[i] == 0 for p in pts))
        tight_cliques = frozenset(
            ci for ci, c in enumerate(fs.cliques)
            if all(sum(p[i - 1] for i in c) == 1 for p in pts))
        dim = _int_rank([list(p) + [1] for p in pts]) if pts else 0
        faces.append(Face(tight_nonneg, tight_cliques, pts, dim))
    faces.sort(key=lambda f: (f.dim, f.points))
    return tuple(faces)


def monomial_on_face(fs: FacetSystem, face: Face, m: Monomial) -> bool:
    """Does a ring monomial satisfy all of the face's tight equalities?"""
    exps = m.exponents
    if any(exps[i - 1] != 0 for i in face.tight_nonneg):
        return False
    return all(
        sum(exps[i - 1] for i in fs.cliques[ci]) == m.degree
        for ci in face.tight_cliques)


def is_m_primary(g: Graph, degree_bound: int | None = None,
                 face_limit: int | None = None,
                 vertex_limit: int | None = None) -> bool:
    """Is the trace ideal primary to the maximal ideal?

    True iff every positive-dimensional face of the cone carries a trace
    generator: a point on a face only decomposes into points on that face,
    so the trace meets a face iff a generator lies on it, and the trace is
    m-primary iff it meets every face except the origin.  A unit trace
    (Gorenstein ring) counts as m-primary.
    """
    fs = FacetSystem.from_graph(g, vertex_limit=vertex_limit)
    # enumerate faces first: the size guard must fire before the generator
    # search, which grows much faster with the vertex count
    faces = cone_faces(fs, face_limit)
    gens = trace_generators(g, degree_bound)
    if trace_is_unit(g, degree_bound):
        return True
    for face in faces:
        if face.dim < 1:
            continue
        if not any(monomial_on_face(fs, face, t) for t in gens):
            return False
    return True


def trace_height(g: Graph, degree_bound: int | None = None,
                 face_limit: int | None = None,
                 vertex_limit: int | None = None):
    """Height of the trace ideal, or UNIT when the trace is the whole ring.

    The radical of a monomial ideal is an intersection of face primes, and
    the height of a face prime is the cone dimension minus the face
    dimension, so the height is n + 1 minus the largest dimension of a
    face avoiding the trace.
    """
    fs = FacetSystem.from_graph(g, vertex_limit=vertex_limit)
    faces = cone_faces(fs, face_limit)
    if trace_is_unit(g, degree_bound):
        return UNIT
    gens = trace_generators(g, degree_bound)
    missed = [
        face.dim for face in faces
        if not any(monomial_on_face(fs, face, t) for t in gens)
    ]
    return (fs.n + 1) - max(missed)


# ---------------------------------------------------------------------------
# classification

def is_nearly_gorenstein(g: Graph) -> bool:
    """Every component pure with top and bottom dimensions within one."""
    if not is_perfect(g):
        raise NotPerfectError("classification requires a perfect graph")
    comps = connected_components(g)
    if not all(is_pure(c.graph) for c in comps):
        return False
    dims = [maximal_cliques(c.graph).dim for c in comps]
    return dims[0] - dims[-1] <= 1


def classify(g: Graph, oracle: bool = False, degree_bound: int | None = None,
             vertex_limit: int | None = None) -> TraceReport:
    """Classify the non-Gorenstein locus of the stable set ring.

    Fast path: component dimensions and purity.  With `oracle=True` the
    brute-force power test, the face test, and the height computation run
    as well, and the report records whether everything agrees.
    """
    if g.n == 0:
        raise ParameterError("need at least one vertex")
    if not is_perfect(g, vertex_limit):
        raise NotPerfectError("classification requires a perfect graph")
    comps = connected_components(g)
    dims = tuple(maximal_cliques(c.graph).dim for c in comps)
    pure = tuple(is_pure(c.graph) for c in comps)
    all_pure = all(pure)
    spread = dims[0] - dims[-1]
    n_exp = spread if all_pure else None
    gorenstein = all_pure and spread == 0
    nearly = all_pure and spread <= 1
    if gorenstein:
        classification = "Gorenstein"
    elif nearly:
        classification = "NearlyGorensteinOnly"
    elif all_pure:
        classification = "GPS"
    else:
        classification = "NotGPS"

    check = None
    if oracle:
        power_ok = trace_equals_power(g, spread, vertex_limit=vertex_limit)
        m_prim = is_m_primary(g, degree_bound, vertex_limit=vertex_limit)
        height = trace_height(g, degree_bound, vertex_limit=vertex_limit)
        if all_pure:
            height_ok = (height is UNIT) if spread == 0 else (height == g.n + 1)
            agreement = power_ok and m_prim and height_ok
        else:
            agreement = (not power_ok) and (not m_prim) \
                and height is not UNIT and height < g.n + 1
        check = OracleCheck(power_ok, m_prim, height, agreement)

    return TraceReport(
        classification=classification,
        N=n_exp,
        nearly_gorenstein=nearly,
        gorenstein=gorenstein,
        dim=g.n + 1,
        a_invariant=-maximal_cliques(g).dim - 2,
        component_dims=dims,
        component_pure=pure,
        oracle=check,
    )


def verify_equivalence(max_n: int, vertex_limit: int | None = None) -> dict:
    """Run the purity criterion against both oracles over all graphs up to
    max_n vertices (one representative per isomorphism class).

    Returns counts plus a list of any disagreements (expected empty).
    """
    checked = 0
    perfect_count = 0
    disagreements = []
    for n in range(1, max_n + 1):
        for g in graphs_up_to_iso(n):
            checked += 1
            if not is_perfect(g, vertex_limit):
                continue
            perfect_count += 1
            report = classify(g, oracle=True, vertex_limit=vertex_limit)
            fast_gps = report.classification != "NotGPS"
            if not (fast_gps == report.oracle.trace_power == report.oracle.m_primary
                    and report.oracle.agreement):
                disagreements.append({
                    "n": n,
                    "edges": g.sorted_edges(),
                    "fast": fast_gps,
                    "trace_power": report.oracle.trace_power,
                    "m_primary": report.oracle.m_primary,
                })
    return {
        "graphs_checked": checked,
        "perfect": perfect_count,
        "disagreements": len(disagreements),
        "details": disagreements,
    }
