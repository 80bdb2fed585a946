"""Brute-force ground truth for sphere triangulations at desk scale.

Maps are rotation systems: each vertex carries the counterclockwise cyclic
order of its neighbours.  Faces are traced through the next-of-twin orbits
(which walk each triangle clockwise; the reversed orbit is the ccw triple).
All generated maps are simple sphere triangulations: every face orbit has
length 3, Euler's relation holds, and the underlying graph has no loops or
parallel edges.

Exhaustive generation works per vertex count: stellate one known map to
seed, then close under diagonal flips (the flip graph on a fixed vertex
count is connected, so the closure is the complete class list), deduplicating
by a canonical form that ranges over every start dart and both orientations.
A second, structurally unrelated generator (edge subsets filtered through a
planarity test) double-checks the class counts at small sizes.

Rooted counts are dart counts divided by symmetry on the *oriented* sphere:
a map isomorphic to its mirror admits 2E/|Aut+| rootings, while a chiral map
carries its two orientations separately, giving 4E/|Aut| in both cases with
Aut the full (reflection-inclusive) group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .census import ClaimRecord, ClaimStatus

PLANAR_CODE_HEADER = b">>planar_code<<"

GENERATION_VMAX = 12  # documented desk-scale ceiling


class InvalidTriangulationError(ValueError):
    """The input is not a simple sphere triangulation."""


class InternalConsistencyError(AssertionError):
    """Two independent computations of the same fact disagreed."""


class PlanarCodeError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


# ---------------------------------------------------------------------------
# the map type
# ---------------------------------------------------------------------------

class PlanarTriangulation:
    """Immutable rotation system of a simple sphere triangulation."""

    __slots__ = ("_rot", "_next", "_twin", "_tail", "_head", "_face_darts", "_canon")

    def __init__(self, rotations):
        rot = tuple(tuple(r) for r in rotations)
        nv = len(rot)
        if nv < 4:
            raise InvalidTriangulationError(f"need at least 4 vertices, got {nv}")
        tail, head, nxt = [], [], []
        dart_of = {}
        base = 0
        for u, nbrs in enumerate(rot):
            deg = len(nbrs)
            if deg < 3:
                raise InvalidTriangulationError(f"vertex {u} has degree {deg} < 3")
            if len(set(nbrs)) != deg:
                raise InvalidTriangulationError(f"parallel edges at vertex {u}")
            for j, v in enumerate(nbrs):
                if v == u:
                    raise InvalidTriangulationError(f"loop at vertex {u}")
                if not 0 <= v < nv:
                    raise InvalidTriangulationError(f"neighbour {v} out of range at {u}")
                dart_of[(u, v)] = base + j
                tail.append(u)
                head.append(v)
                nxt.append(base + (j + 1) % deg)
            base += deg
        for (u, v), d in dart_of.items():
            if (v, u) not in dart_of:
                raise InvalidTriangulationError(f"edge {u}-{v} lacks its reverse")
        twin = [dart_of[(head[d], tail[d])] for d in range(base)]
        self._rot = rot
        self._next = tuple(nxt)
        self._twin = tuple(twin)
        self._tail = tuple(tail)
        self._head = tuple(head)
        self._face_darts = self._trace_faces()
        self._canon = None
        self._validate()

    def _trace_faces(self):
        nxt, twin = self._next, self._twin
        seen = [False] * len(nxt)
        out = []
        for s in range(len(nxt)):
            if seen[s]:
                continue
            orbit = []
            d = s
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = nxt[twin[d]]
            out.append(tuple(orbit))
        return tuple(out)

    def _validate(self):
        for orbit in self._face_darts:
            if len(orbit) != 3:
                raise InvalidTriangulationError(
                    f"face of length {len(orbit)}; not a triangulation"
                )
        v, e, f = self.num_vertices, self.num_edges, self.num_faces
        if v - e + f != 2:
            raise InvalidTriangulationError(f"Euler failure: V={v} E={e} F={f}")
        # connectivity: darts reachable from dart 0 under (next, twin)
        reach = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for nd in (self._next[d], self._twin[d]):
                if nd not in reach:
                    reach.add(nd)
                    stack.append(nd)
        if len(reach) != len(self._next):
            raise InvalidTriangulationError("map is not connected")

    # -- basic data ---------------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self._rot)

    @property
    def num_edges(self) -> int:
        return len(self._next) // 2

    @property
    def num_faces(self) -> int:
        return len(self._face_darts)

    @property
    def num_darts(self) -> int:
        return len(self._next)

    def rotations(self) -> tuple[tuple[int, ...], ...]:
        return self._rot

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(r) for r in self._rot))

    def faces(self) -> tuple[tuple[int, int, int], ...]:
        """ccw vertex triples, one per face; faces()[0] contains dart 0."""
        out = []
        for orbit in self._face_darts:
            a, b, c = (self._tail[d] for d in orbit)
            out.append((a, c, b))
        return tuple(out)

    def edges(self) -> list[tuple[int, int]]:
        return sorted(
            {(min(u, v), max(u, v)) for u, nbrs in enumerate(self._rot) for v in nbrs}
        )

    def adjacency(self) -> list[set[int]]:
        return [set(r) for r in self._rot]

    # -- canonical form -----------------------------------------------------

    def _canon_data(self):
        if self._canon is None:
            self._canon = _canonicalize(self._next, self._twin)
        return self._canon

    @property
    def certificate(self) -> tuple[int, ...]:
        """Canonical label-independent form, reflections included."""
        return self._canon_data()[0]

    @property
    def aut_plus(self) -> int:
        """Order of the orientation-preserving automorphism group."""
        return self._canon_data()[1]

    @property
    def aut_full(self) -> int:
        """Order of the automorphism group including reflections."""
        return self._canon_data()[2]

    @property
    def is_achiral(self) -> bool:
        return self.aut_full == 2 * self.aut_plus

    def __eq__(self, other):
        if not isinstance(other, PlanarTriangulation):
            return NotImplemented
        return self.certificate == other.certificate

    def __hash__(self):
        return hash(self.certificate)

    def __repr__(self):
        return (
            f"PlanarTriangulation(V={self.num_vertices}, E={self.num_edges}, "
            f"degrees={self.degree_sequence()})"
        )

    # -- constructors -------------------------------------------------------

    @classmethod
    def tetrahedron(cls) -> "PlanarTriangulation":
        return cls([[1, 2, 3], [2, 0, 3], [3, 0, 1], [1, 0, 2]])

    @classmethod
    def from_oriented_faces(cls, face_triples) -> "PlanarTriangulation":
        """Assemble a map from ccw face triples (labels arbitrary hashables)."""
        m, _ = _assemble(face_triples)
        return m

    @classmethod
    def from_certificate(cls, cert) -> "PlanarTriangulation":
        """Decode the canonical certificate back into a concrete map."""
        nd = len(cert) // 2
        nxt = [cert[2 * k] for k in range(nd)]
        twin = [cert[2 * k + 1] for k in range(nd)]
        seen = [False] * nd
        orbits = []
        for s in range(nd):
            if seen[s]:
                continue
            orbit = [s]
            seen[s] = True
            d = nxt[s]
            while d != s:
                seen[d] = True
                orbit.append(d)
                d = nxt[d]
            orbits.append(orbit)
        vertex_of = [0] * nd
        for vid, orbit in enumerate(orbits):
            for d in orbit:
                vertex_of[d] = vid
        rotations = [[vertex_of[twin[d]] for d in orbit] for orbit in orbits]
        return cls(rotations)


def _canonicalize(nxt, twin):
    """(certificate, |Aut+|, |Aut full|) by minimizing the traversal encoding
    over all start darts and both orientations, with early lexicographic abort."""
    nd = len(nxt)
    prv = [0] * nd
    for i, j in enumerate(nxt):
        prv[j] = i

    def encode(perm, s, best):
        lab = [-1] * nd
        lab[s] = 0
        order = [s]
        enc = []
        undecided = best is not None
        i = 0
        k = 0
        while k < len(order):
            d = order[k]
            for e in (perm[d], twin[d]):
                lbl = lab[e]
                if lbl < 0:
                    lbl = len(order)
                    lab[e] = lbl
                    order.append(e)
                if undecided:
                    b = best[i]
                    if lbl > b:
                        return None
                    if lbl < b:
                        undecided = False
                enc.append(lbl)
                i += 1
            k += 1
        return tuple(enc)

    best = None
    count = 0
    aut_plus = 0
    for perm, is_ccw in ((tuple(nxt), True), (tuple(prv), False)):
        for s in range(nd):
            enc = encode(perm, s, best)
            if enc is None:
                continue
            if best is None or enc < best:
                best = enc
                count = 1
            elif enc == best:
                count += 1
        if is_ccw:
            aut_plus = count  # pass 1 saw only orientation-preserving relabelings
    return best, aut_plus, count


def _assemble(face_triples):
    """Rotation system from ccw faces; returns (map, original label per vertex)."""
    succ = {}
    for tri in face_triples:
        a, b, c = tri
        for (u, v, w) in ((a, b, c), (b, c, a), (c, a, b)):
            if (u, v) in succ:
                raise InvalidTriangulationError(f"directed edge {u}->{v} used twice")
            succ[(u, v)] = w
    by_vertex: dict = {}
    for (u, v) in succ:
        by_vertex.setdefault(u, []).append(v)
    labels = sorted(by_vertex)
    index = {lbl: i for i, lbl in enumerate(labels)}
    rotations = []
    for lbl in labels:
        nbrs = by_vertex[lbl]
        start = min(nbrs)
        cyc = [start]
        while True:
            nxt_nbr = succ[(lbl, cyc[-1])]
            if nxt_nbr == start:
                break
            cyc.append(nxt_nbr)
            if len(cyc) > len(nbrs):
                raise InvalidTriangulationError(f"rotation at {lbl} does not close")
        if len(cyc) != len(nbrs):
            raise InvalidTriangulationError(f"rotation at {lbl} splits into several cycles")
        rotations.append([index[v] for v in cyc])
    return PlanarTriangulation(rotations), tuple(labels)


# ---------------------------------------------------------------------------
# exhaustive generation
# ---------------------------------------------------------------------------

def _stellate(rot, face):
    """Insert a new degree-3 vertex into the ccw face (a, b, c)."""
    a, b, c = face
    w = len(rot)
    out = [list(r) for r in rot]

    def insert_after(u, x, y):
        r = out[u]
        i = r.index(x)
        if r[(i + 1) % len(r)] != y:
            raise InvalidTriangulationError(f"({x},{y}) not a face corner at {u}")
        r.insert(i + 1, w)

    insert_after(a, b, c)
    insert_after(b, c, a)
    insert_after(c, a, b)
    out.append([a, b, c])
    return out


def _flip(rot, u, v):
    """Replace diagonal u-v of its quadrilateral by the other diagonal.

    Returns the new rotation lists, or None when the flip would create a
    parallel edge (the other diagonal already present).
    """
    ru, rv = rot[u], rot[v]
    c = ru[(ru.index(v) + 1) % len(ru)]  # ccw face (u, v, c)
    d = rv[(rv.index(u) + 1) % len(rv)]  # ccw face (v, u, d)
    if c == d or d in rot[c]:
        return None
    out = [list(r) for r in rot]
    out[u].remove(v)
    out[v].remove(u)
    out[c].insert(out[c].index(u) + 1, d)
    out[d].insert(out[d].index(v) + 1, c)
    return out


@lru_cache(maxsize=GENERATION_VMAX + 1)
def generate(num_vertices: int) -> tuple[PlanarTriangulation, ...]:
    """All isomorphism classes (reflections identified) with V vertices.

    Seeded by stellating a smaller map, then closed under diagonal flips;
    flip connectedness of the class at fixed V makes the closure exhaustive.
    Output is decoded from sorted certificates, so both membership and order
    are independent of the search path.
    """
    if not 4 <= num_vertices <= GENERATION_VMAX:
        raise ValueError(
            f"vertex count must be in 4..{GENERATION_VMAX}, got {num_vertices}"
        )
    if num_vertices == 4:
        return (PlanarTriangulation.from_certificate(
            PlanarTriangulation.tetrahedron().certificate),)
    smaller = generate(num_vertices - 1)[0]
    seed_rot = _stellate([list(r) for r in smaller.rotations()], smaller.faces()[0])
    seed = PlanarTriangulation(seed_rot)
    found = {seed.certificate}
    frontier = [seed_rot]
    while frontier:
        rot = frontier.pop()
        for u in range(len(rot)):
            for v in rot[u]:
                if u > v:
                    continue
                flipped = _flip(rot, u, v)
                if flipped is None:
                    continue
                cert = PlanarTriangulation(flipped).certificate
                if cert not in found:
                    found.add(cert)
                    frontier.append(flipped)
    return tuple(
        PlanarTriangulation.from_certificate(c) for c in sorted(found)
    )


def naive_class_count(num_vertices: int) -> int:
    """Independent class count: filter all 3V-6 edge subsets of K_V through a
    planarity test, then bucket by graph isomorphism.

    Shares no code with the rotation-system generator; the planarity and
    isomorphism routines come from networkx.  Exponential in V; kept to
    V <= 7 where the cross-check runs in seconds.
    """
    import networkx as nx

    if not 4 <= num_vertices <= 7:
        raise ValueError(f"naive generator supports 4..7, got {num_vertices}")
    v = num_vertices
    target_edges = 3 * v - 6
    all_edges = list(itertools.combinations(range(v), 2))
    reps: list = []
    for subset in itertools.combinations(range(len(all_edges)), target_edges):
        deg = [0] * v
        for idx in subset:
            a, b = all_edges[idx]
            deg[a] += 1
            deg[b] += 1
        if min(deg) < 3:
            continue
        graph = nx.Graph([all_edges[idx] for idx in subset])
        if graph.number_of_nodes() != v or not nx.is_connected(graph):
            continue
        if not nx.check_planarity(graph, counterexample=False)[0]:
            continue
        sig = tuple(sorted(deg))
        for rep_sig, rep in reps:
            if rep_sig == sig and nx.is_isomorphic(graph, rep):
                break
        else:
            reps.append((sig, graph))
    return len(reps)


# ---------------------------------------------------------------------------
# rooted counting and substructure queries
# ---------------------------------------------------------------------------

def rooted_count(t: PlanarTriangulation) -> int:
    """Rootings (distinguished darts on the oriented sphere) of this class.

    Equals 2E/|Aut+| when the map is its own mirror image; a chiral map's
    two orientations both count, so the uniform formula is 4E/|Aut| with the
    reflection-inclusive group.  Aut+ acts freely on darts, hence the
    division is exact (asserted).
    """
    total = 4 * t.num_edges
    if total % t.aut_full:
        raise InternalConsistencyError("automorphism group does not act freely")
    return total // t.aut_full


def separating_3cycles(t: PlanarTriangulation) -> list[tuple[int, int, int]]:
    """All non-facial triangles, as sorted vertex triples in sorted order.

    On the sphere a triangle either bounds a face or encloses vertices on
    both sides, so non-facial is exactly separating.
    """
    adj = t.adjacency()
    face_sets = {frozenset(f) for f in t.faces()}
    out = []
    nv = t.num_vertices
    for a in range(nv):
        for b in sorted(adj[a]):
            if b <= a:
                continue
            for c in sorted(adj[a] & adj[b]):
                if c <= b:
                    continue
                if frozenset((a, b, c)) not in face_sets:
                    out.append((a, b, c))
    return out


def is_4connected(t: PlanarTriangulation) -> bool:
    """True when no triangle separates (the tetrahedron qualifies)."""
    return not separating_3cycles(t)


def _split_faces(t: PlanarTriangulation, cycle):
    """Partition the faces by the separating cycle and cap both parts.

    Returns two (face_list, cap) pairs, each face list the ccw triples of
    one side and cap the oriented triangle closing that side.  Sides are
    ordered with the side containing faces()[0] (the dart-0 face) first.
    """
    a, b, c = cycle
    cyc_edges = {frozenset((a, b)), frozenset((b, c)), frozenset((a, c))}
    fs = t.faces()
    by_edge: dict = {}
    for i, f in enumerate(fs):
        for k in range(3):
            e = frozenset((f[k], f[(k + 1) % 3]))
            by_edge.setdefault(e, []).append(i)
    comp = [-1] * len(fs)
    cid = 0
    for start in range(len(fs)):
        if comp[start] >= 0:
            continue
        comp[start] = cid
        stack = [start]
        while stack:
            i = stack.pop()
            f = fs[i]
            for k in range(3):
                e = frozenset((f[k], f[(k + 1) % 3]))
                if e in cyc_edges:
                    continue
                for j in by_edge[e]:
                    if comp[j] < 0:
                        comp[j] = cid
                        stack.append(j)
        cid += 1
    if cid != 2:
        raise InvalidTriangulationError(
            f"cycle {cycle} splits the face graph into {cid} parts, not 2"
        )

    def side(which):
        part = [f for f, cmp_id in zip(fs, comp) if cmp_id == which]
        used = {(f[k], f[(k + 1) % 3]) for f in part for k in range(3)}
        for cap in ((a, b, c), (a, c, b)):
            if all((cap[k], cap[(k + 1) % 3]) not in used for k in range(3)):
                return part, cap
        raise InvalidTriangulationError(f"no coherent cap along {cycle}")

    first = comp[0]
    return side(first), side(1 - first)


def split_closures(t: PlanarTriangulation, cycle):
    """The two capped sides of a separating 3-cycle.

    Each part is (map, labels) with labels mapping the part's vertices back
    to the parent's; the three cycle vertices appear in both parts.
    """
    if tuple(cycle) not in separating_3cycles(t):
        raise ValueError(f"{cycle} is not a separating 3-cycle")
    (faces_a, cap_a), (faces_b, cap_b) = _split_faces(t, cycle)
    part_a = _assemble(faces_a + [cap_a])
    part_b = _assemble(faces_b + [cap_b])
    if part_a[0].num_vertices + part_b[0].num_vertices != t.num_vertices + 3:
        raise InternalConsistencyError("vertex bookkeeping failed in split")
    return part_a, part_b


def q_member(t: PlanarTriangulation) -> bool:
    """Whether some separating triangle splits t into two triangulations of
    at least 4 vertices each.

    Both closures of any separating triangle in a simple triangulation are
    themselves simple triangulations with a nonempty side, so they always
    carry >= 4 vertices; the explicit check keeps the definition honest.
    """
    for cyc in separating_3cycles(t):
        (p1, _), (p2, _) = split_closures(t, cyc)
        if p1.num_vertices >= 4 and p2.num_vertices >= 4:
            return True
    return False


def contains_copy(t: PlanarTriangulation, copy_of: PlanarTriangulation) -> bool:
    """True when some separating triangle's side closure is isomorphic to the
    given map (either side; the sphere has no preferred interior)."""
    want = copy_of.certificate
    for cyc in separating_3cycles(t):
        (p1, _), (p2, _) = split_closures(t, cyc)
        if p1.certificate == want or p2.certificate == want:
            return True
    return False


# ---------------------------------------------------------------------------
# chromatic polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChromaticPolynomial:
    """Integer-coefficient polynomial in the colour count, index = power."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = self.coeffs
        if not cs or cs[-1] != 1:
            raise ValueError("chromatic polynomial must be monic")
        for k, c in enumerate(cs):
            if c and (c > 0) != ((len(cs) - 1 - k) % 2 == 0):
                raise ValueError("coefficient signs must alternate from the top")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "ChromaticPolynomial"):
        return ChromaticPolynomial(tuple(_poly_mul(list(self.coeffs), list(other.coeffs))))

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c:
                terms.append(f"{c:+d}*x^{k}")
        return " ".join(terms) or "0"


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, pa in enumerate(p):
        if pa:
            for j, qb in enumerate(q):
                if qb:
                    out[i + j] += pa * qb
    return out


def _poly_sub(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]


def falling_factorial_poly(k: int) -> list[int]:
    """x(x-1)...(x-k+1) as a coefficient list."""
    out = [0, 1]
    for i in range(1, k):
        out = _poly_mul(out, [-i, 1])
    return out if k else [1]


_chrom_memo: dict = {}


def _graph_key(nv: int, edges: frozenset) -> tuple:
    """Deterministic relabeling key.  Colour refinement orders the vertices;
    ties fall back to the incoming labels, which loses some memo hits across
    isomorphic graphs but can never conflate different ones."""
    adj = {u: set() for u in range(nv)}
    for (u, v) in edges:
        adj[u].add(v)
        adj[v].add(u)
    colour = {u: len(adj[u]) for u in range(nv)}
    for _ in range(nv):
        sig = {u: (colour[u], tuple(sorted(colour[w] for w in adj[u]))) for u in range(nv)}
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {u: palette[sig[u]] for u in range(nv)}
        if new == colour:
            break
        colour = new
    order = sorted(range(nv), key=lambda u: (colour[u], u))
    pos = {u: i for i, u in enumerate(order)}
    return nv, tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for (u, v) in edges))


def _components(nv, adj):
    seen = [False] * nv
    comps = []
    for s in range(nv):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def chromatic_of_graph(nv: int, edge_pairs) -> list[int]:
    """Chromatic polynomial of a simple graph by deletion and contraction,
    memoized on a relabeling-stable key, with closed forms for empty graphs,
    trees, cycles and cliques."""
    edges = frozenset((min(u, v), max(u, v)) for (u, v) in edge_pairs)
    if not edges:
        return [0] * nv + [1]
    adj = {u: set() for u in range(nv)}
    for (u, v) in edges:
        adj[u].add(v)
        adj[v].add(u)
    comps = _components(nv, adj)
    if len(comps) > 1:
        poly = [1]
        for comp in comps:
            pos = {u: i for i, u in enumerate(comp)}
            sub = [(pos[u], pos[v]) for (u, v) in edges if u in pos and v in pos]
            poly = _poly_mul(poly, chromatic_of_graph(len(comp), sub))
        return poly
    ne = len(edges)
    if ne == nv - 1:  # spanning tree
        poly = [0, 1]
        for _ in range(nv - 1):
            poly = _poly_mul(poly, [-1, 1])
        return poly
    if ne == nv and all(len(adj[u]) == 2 for u in range(nv)):  # cycle
        poly = [1]
        for _ in range(nv):
            poly = _poly_mul(poly, [-1, 1])  # (x-1)^n
        poly[0] += (-1) ** nv * -1
        poly[1] += (-1) ** nv * 1
        return poly
    if 2 * ne == nv * (nv - 1):  # complete graph
        return falling_factorial_poly(nv)
    key = _graph_key(nv, edges)
    hit = _chrom_memo.get(key)
    if hit is not None:
        return list(hit)
    # deletion-contraction on a max-degree-sum edge
    u, v = max(edges, key=lambda e: (len(adj[e[0]]) + len(adj[e[1]]), e))
    deleted = chromatic_of_graph(nv, edges - {(u, v)})
    merged = set()
    for (a, b) in edges:
        if (a, b) == (u, v):
            continue
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            merged.add((min(a2, b2), max(a2, b2)))
    relabel = {w: (w if w < v else w - 1) for w in range(nv) if w != v}
    contracted = chromatic_of_graph(
        nv - 1, [(relabel[a], relabel[b]) for (a, b) in merged]
    )
    poly = _poly_sub(deleted, contracted)
    _chrom_memo[key] = tuple(poly)
    return poly


def chromatic_poly(t: PlanarTriangulation) -> ChromaticPolynomial:
    """Exact chromatic polynomial of the triangulation's underlying graph."""
    coeffs = chromatic_of_graph(t.num_vertices, t.edges())
    return ChromaticPolynomial(tuple(coeffs))


def count_colourings(t: PlanarTriangulation, colours: int) -> int:
    """Exhaustive proper-colouring count by backtracking; the slow oracle."""
    adj = t.adjacency()
    nv = t.num_vertices
    order = sorted(range(nv), key=lambda u: -len(adj[u]))
    pos = {u: i for i, u in enumerate(order)}
    earlier = [[w for w in adj[u] if pos[w] < pos[u]] for u in order]
    assignment = [0] * nv

    def rec(i: int) -> int:
        if i == nv:
            return 1
        total = 0
        u = order[i]
        for col in range(colours):
            if all(assignment[w] != col for w in earlier[i]):
                assignment[u] = col
                total += rec(i + 1)
        assignment[u] = -1
        return total

    return rec(0)


def _backtrack_colourable(t: PlanarTriangulation, colours: int) -> bool:
    adj = t.adjacency()
    nv = t.num_vertices
    order = sorted(range(nv), key=lambda u: -len(adj[u]))
    pos = {u: i for i, u in enumerate(order)}
    earlier = [[w for w in adj[u] if pos[w] < pos[u]] for u in order]
    assignment = [-1] * nv

    def rec(i: int) -> bool:
        if i == nv:
            return True
        u = order[i]
        # first vertex is colour-symmetric; fixing it prunes nothing valid
        limit = 1 if i == 0 else colours
        for col in range(limit):
            if all(assignment[w] != col for w in earlier[i]):
                assignment[u] = col
                if rec(i + 1):
                    return True
        assignment[u] = -1
        return False

    return rec(0)


def four_colourable(t: PlanarTriangulation) -> bool:
    """Existence of a proper 4-colouring, by two routes that must agree:
    backtracking search and the sign of the chromatic polynomial at 4."""
    by_poly = chromatic_poly(t).evaluate(4) > 0
    by_search = _backtrack_colourable(t, 4)
    if by_poly != by_search:
        raise InternalConsistencyError(
            f"colourability disagreement on {t!r}: poly={by_poly} search={by_search}"
        )
    return by_search


def glue_check(t: PlanarTriangulation, cycle) -> ClaimRecord:
    """Exact check of x(x-1)(x-2) * P(T) = P(L) * P(T-L) along one cycle."""
    (part1, _), (part2, _) = split_closures(t, cycle)  # raises if not separating
    lhs = _poly_mul(
        _poly_mul([0, 1], _poly_mul([-1, 1], [-2, 1])),
        list(chromatic_poly(t).coeffs),
    )
    rhs = _poly_mul(list(chromatic_poly(part1).coeffs), list(chromatic_poly(part2).coeffs))
    diff = _poly_sub(lhs, rhs)
    bad = [(k, Fraction(c)) for k, c in enumerate(diff) if c]
    status = ClaimStatus.PASS if not bad else ClaimStatus.FAIL
    return ClaimRecord(
        claim_id="EQ4-glue",
        paper_ref="x(x-1)(x-2) P(T) = P(inside) P(outside) across a separating triangle",
        status=status,
        residual=bad,
        detail=f"V={t.num_vertices}, cycle={tuple(cycle)}",
    )


# ---------------------------------------------------------------------------
# decomposition into the 4-connected core
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Filling:
    """One removed interior: its boundary and both capped face lists."""

    boundary: tuple[int, int, int]        # sorted vertex triple, outer labels
    interior: PlanarTriangulation
    interior_faces: tuple                 # oriented faces in ambient labels, cap included
    cap_inner: tuple[int, int, int]
    cap_outer: tuple[int, int, int]


def core_decompose(t: PlanarTriangulation):
    """Strip maximal separating-triangle interiors until 4-connected.

    The face of dart 0 is taken as the outer face; the interior of a cycle
    is the side not containing it.  Interiors of distinct separating
    triangles never cross (their boundary edges cannot intersect in an
    embedding), so removing the largest one at a time is well defined, and
    re-inserting every filling must reproduce the map exactly (asserted).
    """
    outer_key = frozenset(t.faces()[0])
    fillings: list[Filling] = []
    labels = tuple(range(t.num_vertices))
    current = t
    while True:
        seps = separating_3cycles(current)
        if not seps:
            break
        lab = labels

        def orig_triple(local_triple):
            return tuple(sorted(lab[x] for x in local_triple))

        best = None
        for cyc in seps:
            (faces_a, cap_a), (faces_b, cap_b) = _split_faces(current, cyc)
            side_a_keys = {frozenset(orig_triple(f)) for f in faces_a}
            if outer_key in side_a_keys:
                ext, cap_ext, interior, cap_int = faces_a, cap_a, faces_b, cap_b
            else:
                ext, cap_ext, interior, cap_int = faces_b, cap_b, faces_a, cap_a
            inner_verts = {x for f in interior for x in f} - set(cyc)
            key = (len(inner_verts), tuple(sorted(orig_triple(cyc))))
            if best is None or key > best[0]:
                best = (key, cyc, ext, cap_ext, interior, cap_int)
        _, cyc, ext, cap_ext, interior_faces, cap_int = best

        def to_orig(face):
            return tuple(lab[x] for x in face)

        interior_orig = tuple(to_orig(f) for f in interior_faces) + (to_orig(cap_int),)
        interior_map, _ = _assemble(interior_orig)
        fillings.append(
            Filling(
                boundary=tuple(sorted(lab[x] for x in cyc)),
                interior=interior_map,
                interior_faces=interior_orig,
                cap_inner=to_orig(cap_int),
                cap_outer=to_orig(cap_ext),
            )
        )
        ext_orig = [to_orig(f) for f in ext] + [to_orig(cap_ext)]
        current, labels = _assemble(ext_orig)
    core = current
    if not is_4connected(core):
        raise InternalConsistencyError("core still has a separating triangle")
    # round trip: re-insert every filling and compare canonical forms
    recon = [tuple(labels[x] for x in f) for f in core.faces()]
    recon_set = set(recon)
    for fill in reversed(fillings):
        if fill.cap_outer not in recon_set:
            raise InternalConsistencyError("filling cap missing during reconstruction")
        recon_set.remove(fill.cap_outer)
        recon_set |= set(fill.interior_faces) - {fill.cap_inner}
    rebuilt, _ = _assemble(tuple(recon_set))
    if rebuilt.certificate != t.certificate:
        raise InternalConsistencyError("decomposition does not reconstruct the map")
    return core, fillings


# ---------------------------------------------------------------------------
# census table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    V: int
    classes: int
    rooted_total: int
    rooted_4connected: int
    rooted_in_Q: int
    aligned_n: int | None


@lru_cache(maxsize=GENERATION_VMAX + 1)
def census_table(vmax: int) -> tuple[CensusRow, ...]:
    """Per-V rooted counts with the empirical index alignment against g.

    The offset k with rooted_total(V) = g_{V-k} is discovered from V=4 and
    then required to hold across the whole table; rows carry aligned_n =
    V - k, or None when no single offset fits.
    """
    from .census import g_coeffs as census_g_coeffs

    if not 4 <= vmax <= GENERATION_VMAX:
        raise ValueError(f"vmax must be in 4..{GENERATION_VMAX}, got {vmax}")
    data = []
    for v in range(4, vmax + 1):
        classes = generate(v)
        total = sum(rooted_count(t) for t in classes)
        four_conn = sum(rooted_count(t) for t in classes if is_4connected(t))
        in_q = sum(rooted_count(t) for t in classes if q_member(t))
        data.append((v, len(classes), total, four_conn, in_q))
    gs = census_g_coeffs(vmax)
    offset = None
    for k in range(0, 4):
        n0 = 4 - k
        if 1 <= n0 <= len(gs) and gs[n0 - 1] == data[0][2]:
            if all(
                v - k >= 1 and v - k <= len(gs) and gs[v - k - 1] == total
                for (v, _, total, _, _) in data
            ):
                offset = k
                break
    rows = []
    for (v, ncls, total, four_conn, in_q) in data:
        rows.append(
            CensusRow(
                V=v,
                classes=ncls,
                rooted_total=total,
                rooted_4connected=four_conn,
                rooted_in_Q=in_q,
                aligned_n=(v - offset) if offset is not None else None,
            )
        )
    return tuple(rows)


# ---------------------------------------------------------------------------
# planar_code
# ---------------------------------------------------------------------------

def write_planar_code(maps) -> bytes:
    """Serialize maps: header, then per map one vertex-count byte and each
    vertex's neighbour list in clockwise order, zero-terminated, 1-based."""
    out = bytearray(PLANAR_CODE_HEADER)
    for t in maps:
        if t.num_vertices > 255:
            raise ValueError("planar_code is limited to 255 vertices")
        out.append(t.num_vertices)
        for nbrs in t.rotations():
            out.extend(v + 1 for v in reversed(nbrs))  # stored ccw -> emit cw
            out.append(0)
    return bytes(out)


def read_planar_code(data: bytes) -> list[PlanarTriangulation]:
    """Parse a planar_code byte stream into triangulations.

    The rotation lists are preserved verbatim (converted cw -> ccw), so
    writing the result back yields the identical byte string.
    """
    if not data.startswith(PLANAR_CODE_HEADER):
        raise PlanarCodeError("missing planar_code header", 0)
    pos = len(PLANAR_CODE_HEADER)
    maps = []
    while pos < len(data):
        nv = data[pos]
        start = pos
        pos += 1
        if nv == 0:
            raise PlanarCodeError("vertex count of zero", start)
        rotations = []
        for u in range(nv):
            nbrs = []
            while True:
                if pos >= len(data):
                    raise PlanarCodeError("truncated neighbour list", pos)
                byte = data[pos]
                pos += 1
                if byte == 0:
                    break
                if byte > nv:
                    raise PlanarCodeError(f"neighbour {byte} exceeds V={nv}", pos - 1)
                if byte == u + 1:
                    raise PlanarCodeError(f"loop at vertex {u + 1}", pos - 1)
                nbrs.append(byte - 1)
            rotations.append(list(reversed(nbrs)))  # cw on the wire -> ccw
        try:
            maps.append(PlanarTriangulation(rotations))
        except InvalidTriangulationError as exc:
            raise PlanarCodeError(f"record is not a triangulation: {exc}", start) from exc
    return maps
