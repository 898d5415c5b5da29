"""Plane graphs as rotation systems.

A plane graph is stored as a rotation system: every edge contributes two
darts (edge-ends), and each vertex carries the cyclic order of its darts.
Faces are always derived by tracing, never stored as authoritative data.

Dart conventions: edge ``e`` with endpoints ``(u, v)`` owns darts ``2*e``
(anchored at ``u``) and ``2*e + 1`` (anchored at ``v``); ``twin(d) == d ^ 1``.
The face containing dart ``d`` continues with the rotation successor of
``twin(d)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class PlaneGraphError(ValueError):
    """Raised for invalid rotation systems or unmet preconditions."""


@dataclass(frozen=True)
class Face:
    """One face walk: ``darts[i]`` leaves ``vertices[i]``."""

    id: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    def has_distinct_vertices(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)


class PlaneGraph:
    """Immutable combinatorial plane graph with a designated outer face.

    Parallel edges are allowed (distinct edge ids); self-loops are rejected.
    """

    def __init__(
        self,
        n: int,
        edges: Sequence[tuple[int, int]],
        rotations: Sequence[Sequence[int]],
        outer_dart: int,
    ):
        self.n = n
        self.edges = tuple((int(u), int(v)) for u, v in edges)
        self.rotations = tuple(tuple(r) for r in rotations)
        self.outer_dart = outer_dart
        self._validate()
        self._rot_next = self._build_rot_next()
        self._faces: tuple[Face, ...] | None = None
        self._face_of_dart: list[int] | None = None

    # -- construction ----------------------------------------------------

    @classmethod
    def from_faces(
        cls, face_walks: Sequence[Sequence[int]], outer_index: int = 0
    ) -> "PlaneGraph":
        """Build a plane graph from directed face walks (simple graphs only).

        Every directed vertex pair must occur exactly once over all walks and
        every undirected pair exactly twice, i.e. the walks must describe a
        consistently oriented planar map without parallel edges.
        """
        edge_of: dict[tuple[int, int], int] = {}
        edges: list[tuple[int, int]] = []
        darts_seen: set[tuple[int, int]] = set()
        walks = [tuple(w) for w in face_walks]
        for walk in walks:
            if len(walk) < 2:
                raise PlaneGraphError("face walk shorter than 2")
            for a, b in _cyclic_pairs(walk):
                if a == b:
                    raise PlaneGraphError("self-loop in face walk")
                if (a, b) in darts_seen:
                    raise PlaneGraphError(
                        f"directed edge {(a, b)} occurs in two face walks"
                    )
                darts_seen.add((a, b))
                key = (min(a, b), max(a, b))
                if key not in edge_of:
                    edge_of[key] = len(edges)
                    edges.append((a, b))
        for (a, b) in edge_of:
            if (a, b) not in darts_seen or (b, a) not in darts_seen:
                raise PlaneGraphError(f"edge {(a, b)} not used in both directions")

        def dart(a: int, b: int) -> int:
            e = edge_of[(min(a, b), max(a, b))]
            return 2 * e if edges[e] == (a, b) else 2 * e + 1

        n = 1 + max(max(u, v) for u, v in edges)
        # rot successor at v: for consecutive walk darts (a->b), (b->c),
        # dart (b->a) is immediately followed by (b->c) in the rotation at b.
        succ: dict[int, int] = {}
        for walk in walks:
            ds = [dart(a, b) for a, b in _cyclic_pairs(walk)]
            for d1, d2 in _cyclic_pairs_seq(ds):
                succ[d1 ^ 1] = d2
        rotations: list[list[int]] = [[] for _ in range(n)]
        placed = [False] * (2 * len(edges))
        for d0 in range(2 * len(edges)):
            if placed[d0]:
                continue
            v = edges[d0 >> 1][d0 & 1]
            cyc = [d0]
            placed[d0] = True
            d = succ[d0]
            while d != d0:
                if placed[d]:
                    raise PlaneGraphError("inconsistent rotation at vertex %d" % v)
                cyc.append(d)
                placed[d] = True
                d = succ[d]
            rotations[v] = cyc
        w0 = walks[outer_index]
        outer_dart = dart(w0[0], w0[1])
        g = cls(n, edges, rotations, outer_dart)
        if len(g.faces()) != len(walks):
            raise PlaneGraphError("face walks do not describe a planar map")
        return g

    # -- validation -------------------------------------------------------

    def _validate(self) -> None:
        m = len(self.edges)
        if self.n <= 0:
            raise PlaneGraphError("empty vertex set")
        seen = [False] * (2 * m)
        for u, v in self.edges:
            if u == v:
                raise PlaneGraphError("self-loops are not accepted")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PlaneGraphError("edge endpoint out of range")
        if len(self.rotations) != self.n:
            raise PlaneGraphError("rotation list length != n")
        for v, rot in enumerate(self.rotations):
            for d in rot:
                if not 0 <= d < 2 * m:
                    raise PlaneGraphError("dart id out of range")
                if self.dart_vertex(d) != v:
                    raise PlaneGraphError(f"dart {d} listed at wrong vertex {v}")
                if seen[d]:
                    raise PlaneGraphError(f"dart {d} listed twice")
                seen[d] = True
        if m and not all(seen):
            raise PlaneGraphError("some darts missing from rotations")
        if not 0 <= self.outer_dart < 2 * m:
            raise PlaneGraphError("outer dart out of range")

    def _build_rot_next(self) -> list[int]:
        nxt = [0] * (2 * len(self.edges))
        for rot in self.rotations:
            k = len(rot)
            for i, d in enumerate(rot):
                nxt[d] = rot[(i + 1) % k]
        return nxt

    # -- darts ------------------------------------------------------------

    def dart_vertex(self, d: int) -> int:
        return self.edges[d >> 1][d & 1]

    def dart_head(self, d: int) -> int:
        return self.edges[d >> 1][(d & 1) ^ 1]

    def next_in_face(self, d: int) -> int:
        return self._rot_next[d ^ 1]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> list[int]:
        return [self.dart_head(d) for d in self.rotations[v]]

    # -- faces ------------------------------------------------------------

    def faces(self) -> tuple[Face, ...]:
        """All face walks, traced in ascending-dart order (deterministic)."""
        if self._faces is None:
            self._trace_faces()
        assert self._faces is not None
        return self._faces

    def face_of_dart(self, d: int) -> int:
        if self._face_of_dart is None:
            self._trace_faces()
        assert self._face_of_dart is not None
        return self._face_of_dart[d]

    def _trace_faces(self) -> None:
        if not is_connected(self):
            raise PlaneGraphError("face tracing requires a connected graph")
        m2 = 2 * len(self.edges)
        face_of = [-1] * m2
        faces: list[Face] = []
        for d0 in range(m2):
            if face_of[d0] >= 0:
                continue
            walk = []
            d = d0
            while True:
                walk.append(d)
                face_of[d] = len(faces)
                d = self.next_in_face(d)
                if d == d0:
                    break
            faces.append(
                Face(len(faces), tuple(walk), tuple(self.dart_vertex(d) for d in walk))
            )
        self._faces = tuple(faces)
        self._face_of_dart = face_of

    @property
    def outer_face_id(self) -> int:
        return self.face_of_dart(self.outer_dart)

    def outer_face(self) -> Face:
        return self.faces()[self.outer_face_id]

    def internal_faces(self) -> list[Face]:
        o = self.outer_face_id
        return [f for f in self.faces() if f.id != o]

    def edge_id(self, u: int, v: int) -> int:
        """Edge id for a vertex pair; simple graphs only."""
        for d in self.rotations[u]:
            if self.dart_head(d) == v:
                return d >> 1
        raise PlaneGraphError(f"no edge {(u, v)}")


def _cyclic_pairs(walk: Sequence[int]) -> Iterable[tuple[int, int]]:
    k = len(walk)
    return ((walk[i], walk[(i + 1) % k]) for i in range(k))


_cyclic_pairs_seq = _cyclic_pairs


# -- operations ------------------------------------------------------------


def is_connected(g: PlaneGraph) -> bool:
    if g.n == 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def faces(g: PlaneGraph) -> tuple[Face, ...]:
    """Face walks of a connected plane graph (errors on disconnected input)."""
    return g.faces()


def euler_checks_out(g: PlaneGraph) -> bool:
    return g.n - g.m + len(g.faces()) == 2


def is_biconnected(g: PlaneGraph) -> bool:
    """True iff the graph is connected and has no cutvertex or bridge."""
    if not is_connected(g):
        return False
    if g.n < 3:
        # Two vertices are biconnected only when joined by parallel edges.
        return g.n == 2 and g.m >= 2
    # Iterative DFS with lowpoints, multigraph-aware (tree edges by edge id).
    dfn = [-1] * g.n
    low = [0] * g.n
    parent_edge = [-1] * g.n
    order = 0
    root = 0
    root_children = 0
    stack: list[tuple[int, int]] = [(root, 0)]
    dfn[root] = low[root] = order
    order += 1
    adj = [[(g.dart_head(d), d >> 1) for d in g.rotations[v]] for v in range(g.n)]
    it_pos = [0] * g.n
    while stack:
        v, _ = stack[-1]
        if it_pos[v] < len(adj[v]):
            w, e = adj[v][it_pos[v]]
            it_pos[v] += 1
            if dfn[w] == -1:
                parent_edge[w] = e
                dfn[w] = low[w] = order
                order += 1
                if v == root:
                    root_children += 1
                stack.append((w, v))
            elif e != parent_edge[v]:
                low[v] = min(low[v], dfn[w])
        else:
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if p != root and low[v] >= dfn[p]:
                    return False
                if low[v] >= dfn[v]:
                    # v's subtree attaches to p only via the tree edge: bridge.
                    return False
    return root_children <= 1


def face_profile(g: PlaneGraph) -> str:
    """Uniform face-length classification, outer face included."""
    lengths = {f.length for f in g.faces()}
    if len(lengths) != 1:
        return "other"
    return {3: "triangulation", 5: "pentangulation", 6: "hexangulation"}.get(
        lengths.pop(), "other"
    )


def is_simple(g: PlaneGraph) -> bool:
    pairs = {(min(u, v), max(u, v)) for u, v in g.edges}
    return len(pairs) == g.m


def has_separating_triangle(g: PlaneGraph) -> bool:
    """True iff some 3-cycle of a simple plane graph is not a face boundary."""
    if not is_simple(g):
        raise PlaneGraphError("separating-triangle test requires a simple graph")
    face_triangles = {
        frozenset(f.vertices) for f in g.faces() if f.length == 3
    }
    nbrs = [set(g.neighbors(v)) for v in range(g.n)]
    for u, v in g.edges:
        for w in nbrs[u] & nbrs[v]:
            if w > max(u, v):  # count each triangle once
                if frozenset((u, v, w)) not in face_triangles:
                    return True
    # Also triangles whose max vertex is an edge endpoint.
    seen: set[frozenset[int]] = set()
    for u, v in g.edges:
        for w in nbrs[u] & nbrs[v]:
            t = frozenset((u, v, w))
            if t in seen:
                continue
            seen.add(t)
            if t not in face_triangles:
                return True
    return False


def triangulate_pentangulation(
    p: PlaneGraph,
) -> tuple[PlaneGraph, dict[int, tuple[tuple[int, int], tuple[int, int]]]]:
    """Insert chords (w0,w2) and (w2,w4) in every pentagon, outer included.

    Returns the triangulation together with, per original face id, the chord
    vertex pairs that were inserted (so orientations of the triangulation can
    be mapped back to pentagon edges).
    """
    if face_profile(p) != "pentangulation":
        raise PlaneGraphError("input is not a pentangulation")
    if not is_biconnected(p):
        raise PlaneGraphError("pentangulation must be biconnected")
    if not is_simple(p):
        raise PlaneGraphError("triangulation step requires a simple graph")
    new_faces: list[tuple[int, ...]] = []
    chords: dict[int, tuple[tuple[int, int], tuple[int, int]]] = {}
    outer_new_index = 0
    for f in p.faces():
        if not f.has_distinct_vertices():
            raise PlaneGraphError("face with repeated vertex")
        w = f.vertices
        if f.id == p.outer_face_id:
            outer_new_index = len(new_faces) + 2
        new_faces.append((w[0], w[1], w[2]))
        new_faces.append((w[2], w[3], w[4]))
        new_faces.append((w[0], w[2], w[4]))
        chords[f.id] = ((w[0], w[2]), (w[2], w[4]))
    tri = PlaneGraph.from_faces(new_faces, outer_index=outer_new_index)
    return tri, chords


def homotopic_parallel_pairs(g: PlaneGraph) -> list[tuple[int, int]]:
    """Parallel edge pairs bounding a vertex-free region on one side."""
    by_pair: dict[tuple[int, int], list[int]] = {}
    for e, (u, v) in enumerate(g.edges):
        by_pair.setdefault((min(u, v), max(u, v)), []).append(e)
    bad: list[tuple[int, int]] = []
    fs = g.faces()
    for (u, v), ids in by_pair.items():
        if len(ids) < 2:
            continue
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                if _pair_is_homotopic(g, fs, ids[i], ids[j], u, v):
                    bad.append((ids[i], ids[j]))
    return bad


def _pair_is_homotopic(g, fs, e1, e2, u, v) -> bool:
    cut = {e1, e2}
    # Dual BFS over faces, never stepping across the two parallel edges.
    comp = [-1] * len(fs)
    for cid, start in enumerate((g.face_of_dart(2 * e1), g.face_of_dart(2 * e1 + 1))):
        if comp[start] >= 0:
            continue
        comp[start] = cid
        stack = [start]
        while stack:
            fid = stack.pop()
            for d in fs[fid].darts:
                if (d >> 1) in cut:
                    continue
                nf = g.face_of_dart(d ^ 1)
                if comp[nf] == -1:
                    comp[nf] = cid
                    stack.append(nf)
    sides: dict[int, set[int]] = {}
    for f in fs:
        sides.setdefault(comp[f.id], set()).update(f.vertices)
    if len(sides) < 2:
        return False  # curve does not separate (should not happen on a sphere)
    return any(len(vs - {u, v}) == 0 for vs in sides.values())
