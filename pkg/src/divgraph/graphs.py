"""Finite connected vertex-weighted multigraphs with loops.

A Graph is immutable after construction: the vertex order is fixed, every
operation is a pure function of the inputs, and derived structures
(Laplacian data, BFS layers, the loopless model) are memoised internally.

Conventions baked in here:
  * connectivity ignores loop edges (loops never disconnect anything);
  * genus(G) = |E| - |V| + 1 + sum of vertex weights;
  * the intersection pairing ignores loops entirely: (v.w) counts the
    edges joining two distinct vertices and (v.v) = -sum_{w != v} (v.w);
  * a loop adds 2 to the valency of its vertex, which is exactly what
    makes the canonical degree come out as 2*genus - 2.
"""

from collections import deque

from .errors import (
    DisconnectedGraph,
    LoopInContractionSet,
    NegativeWeight,
    UnknownEdge,
    UnknownVertexId,
)
from .intmat import determinant


def _as_weighted(vertices):
    out = []
    for item in vertices:
        if isinstance(item, tuple) and len(item) == 2:
            out.append((item[0], item[1]))
        else:
            out.append((item, 0))
    return out


class Graph:
    """Connected multigraph with nonnegative integer vertex weights.

    ``vertices`` is an ordered iterable of ids or (id, weight) pairs;
    ``edges`` is an iterable of (id, id) pairs, loops allowed as repeated
    ids. Edge identity is positional: edge k is the k-th pair given.
    """

    def __init__(self, vertices, edges=()):
        pairs = _as_weighted(vertices)
        if not pairs:
            raise DisconnectedGraph("a graph needs at least one vertex")
        ids = tuple(p[0] for p in pairs)
        if len(set(ids)) != len(ids):
            raise UnknownVertexId("duplicate vertex ids")
        weights = []
        for vid, w in pairs:
            if isinstance(w, bool) or not isinstance(w, int) or w < 0:
                raise NegativeWeight(f"weight of {vid!r} must be a nonnegative integer")
            weights.append(w)
        index = {vid: i for i, vid in enumerate(ids)}
        edge_list = []
        for a, b in edges:
            if a not in index:
                raise UnknownVertexId(f"edge endpoint {a!r} is not a vertex")
            if b not in index:
                raise UnknownVertexId(f"edge endpoint {b!r} is not a vertex")
            edge_list.append((a, b))

        n = len(ids)
        adj = [[0] * n for _ in range(n)]
        loops = [0] * n
        for a, b in edge_list:
            i, j = index[a], index[b]
            if i == j:
                loops[i] += 1
            else:
                adj[i][j] += 1
                adj[j][i] += 1

        self._ids = ids
        self._index = index
        self._weights = tuple(weights)
        self._edge_list = tuple(edge_list)
        self._edge_pairs = tuple(
            (min(index[a], index[b]), max(index[a], index[b])) for a, b in edge_list
        )
        self._adj = tuple(tuple(row) for row in adj)
        self._loops = tuple(loops)
        self._neighbors = tuple(
            tuple((j, m) for j, m in enumerate(row) if m) for row in adj
        )
        self._degree = tuple(sum(row) for row in adj)
        self._cache = {}
        self._check_connected()
        self._hash = hash((self._ids, self._weights, self._edge_list))

    def _check_connected(self):
        n = len(self._ids)
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            i = stack.pop()
            for j, _ in self._neighbors[i]:
                if not seen[j]:
                    seen[j] = True
                    count += 1
                    stack.append(j)
        if count != n:
            raise DisconnectedGraph("graph is not connected (ignoring loops)")

    # -- basic accessors -------------------------------------------------

    @property
    def vertex_ids(self):
        return self._ids

    @property
    def weights(self):
        return self._weights

    @property
    def edges(self):
        """Edge list exactly as given at construction (orientation kept)."""
        return self._edge_list

    @property
    def vertex_count(self):
        return len(self._ids)

    @property
    def edge_count(self):
        return len(self._edge_list)

    def index(self, v):
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertexId(f"{v!r} is not a vertex") from None

    def indices(self, vs):
        return frozenset(self.index(v) for v in vs)

    def weight(self, v):
        return self._weights[self.index(v)]

    def loop_count(self, v):
        return self._loops[self.index(v)]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._ids == other._ids
            and self._weights == other._weights
            and self._edge_list == other._edge_list
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (
            f"Graph({self.vertex_count} vertices, {self.edge_count} edges, "
            f"genus {self.genus()})"
        )

    # -- numerical invariants ---------------------------------------------

    def genus(self):
        """First Betti number plus total vertex weight."""
        return len(self._edge_list) - len(self._ids) + 1 + sum(self._weights)

    def valency(self, v):
        """Non-loop edges at v plus twice the loops at v."""
        i = self.index(v)
        return self._degree[i] + 2 * self._loops[i]

    def is_weightless_loopless(self):
        return not any(self._weights) and not any(self._loops)

    def intersection(self, zs, ws):
        """Bilinear intersection pairing of two vertex sets.

        For disjoint sets this is the number of edges between them; the
        diagonal terms are (v.v) = -(non-loop degree of v).
        """
        zi = self.indices(zs)
        wi = self.indices(ws)
        adj = self._adj
        total = 0
        for i in zi:
            row = adj[i]
            for j in wi:
                total += row[j] if i != j else -self._degree[i]
        return total

    def complexity(self):
        """Number of spanning trees (loops and weights are irrelevant),
        by the matrix-tree determinant over exact integers."""
        cached = self._cache.get("complexity")
        if cached is None:
            n = len(self._ids)
            rows = []
            for i in range(1, n):
                row = [0] * (n - 1)
                for j in range(1, n):
                    row[j - 1] = self._degree[i] if i == j else -self._adj[i][j]
                rows.append(row)
            cached = determinant(rows)
            self._cache["complexity"] = cached
        return cached

    # -- structure --------------------------------------------------------

    def is_bridge(self, e):
        """True iff deleting edge e disconnects the graph. Loops never are."""
        if not 0 <= e < len(self._edge_list):
            raise UnknownEdge(f"edge index {e} out of range")
        i, j = self._edge_pairs[e]
        if i == j:
            return False
        if self._adj[i][j] > 1:
            return False
        # BFS from i avoiding the single i-j edge; bridge iff j unreached
        n = len(self._ids)
        seen = [False] * n
        seen[i] = True
        queue = deque([i])
        while queue:
            u = queue.popleft()
            for w, _ in self._neighbors[u]:
                if not seen[w] and not (u == i and w == j) and not (u == j and w == i):
                    seen[w] = True
                    queue.append(w)
        return not seen[j]

    def bridges(self):
        """Indices of one representative edge per bridge (loops excluded)."""
        return tuple(e for e in range(len(self._edge_list)) if self.is_bridge(e))

    def bfs_layers(self, q):
        """Vertex indices grouped by edge distance from q (index), cached."""
        key = ("layers", q)
        layers = self._cache.get(key)
        if layers is None:
            n = len(self._ids)
            dist = [-1] * n
            dist[q] = 0
            order = [q]
            queue = deque([q])
            while queue:
                u = queue.popleft()
                for w, _ in self._neighbors[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        order.append(w)
                        queue.append(w)
            depth = max(dist)
            layers = [[] for _ in range(depth + 1)]
            for v in order:
                layers[dist[v]].append(v)
            layers = tuple(tuple(layer) for layer in layers)
            self._cache[key] = layers
        return layers

    def contract(self, edge_subset):
        """Contract every edge in ``edge_subset`` (a set of edge indices).

        Fibers are the connected components of the spanning subgraph
        (V, S); a merged vertex keeps the id of the first fiber member and
        carries the summed weights plus the first Betti number of its
        fiber. Surviving edges keep their relative order; an edge whose
        endpoints land in the same fiber becomes a loop. Genus is
        preserved.
        """
        s = sorted(set(edge_subset))
        for e in s:
            if not 0 <= e < len(self._edge_list):
                raise UnknownEdge(f"edge index {e} out of range")
            i, j = self._edge_pairs[e]
            if i == j:
                raise LoopInContractionSet(f"edge {e} is a loop")
        n = len(self._ids)
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in s:
            i, j = self._edge_pairs[e]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

        roots = sorted({find(i) for i in range(n)})
        fiber_of = {}
        members = {r: [] for r in roots}
        for i in range(n):
            r = find(i)
            fiber_of[i] = r
            members[r].append(i)

        new_vertices = []
        for r in roots:
            verts = members[r]
            internal = sum(1 for e in s if self._edge_pairs[e][0] in verts)
            b1 = internal - len(verts) + 1
            weight = sum(self._weights[i] for i in verts) + b1
            new_vertices.append((self._ids[r], weight))

        s_set = set(s)
        vertex_map = {self._ids[i]: self._ids[fiber_of[i]] for i in range(n)}
        new_edges = []
        surviving = []
        for e, (a, b) in enumerate(self._edge_list):
            if e in s_set:
                continue
            new_edges.append((vertex_map[a], vertex_map[b]))
            surviving.append(e)
        target = Graph(new_vertices, new_edges)
        return ContractionMap(self, target, vertex_map, frozenset(s_set), tuple(surviving))

    def loopless_model(self):
        """The weightless loopless model: each weight unit becomes a loop,
        then every loop is subdivided by a fresh midpoint vertex.

        Original vertices come first in their own order (weights reset to
        0), followed by one midpoint per loop in (vertex, loop) order:
        the pre-existing loops of a vertex in edge order, then its weight
        loops. Genus is preserved; a graph that is already weightless and
        loopless is its own model.
        """
        cached = self._cache.get("loopless")
        if cached is None:
            cached = self._build_loopless_model()
            self._cache["loopless"] = cached
        return cached

    def _build_loopless_model(self):
        if self.is_weightless_loopless():
            embedding = {v: v for v in self._ids}
            return LooplessModel(self, self, embedding)
        used = set(self._ids)
        new_vertices = [(v, 0) for v in self._ids]
        new_edges = [e for e in self._edge_list if self._index[e[0]] != self._index[e[1]]]
        for i, v in enumerate(self._ids):
            total_loops = self._loops[i] + self._weights[i]
            for k in range(total_loops):
                mid = f"{v}*{k}"
                while mid in used:
                    mid += "'"
                used.add(mid)
                new_vertices.append((mid, 0))
                new_edges.append((v, mid))
                new_edges.append((v, mid))
        model = Graph(new_vertices, new_edges)
        embedding = {v: v for v in self._ids}
        return LooplessModel(self, model, embedding)


class ContractionMap:
    """Result of contracting an edge set: target graph plus bookkeeping.

    ``vertex_map`` sends each source id to the id of its fiber;
    ``surviving_edges[k]`` is the source index of target edge k.
    """

    def __init__(self, source, target, vertex_map, contracted_edges, surviving_edges):
        self.source = source
        self.target = target
        self.vertex_map = vertex_map
        self.contracted_edges = contracted_edges
        self.surviving_edges = surviving_edges
        assert source.genus() == target.genus()

    def is_single_edge(self):
        return len(self.contracted_edges) == 1

    def __repr__(self):
        return (
            f"ContractionMap({len(self.contracted_edges)} edges, "
            f"{self.source.vertex_count} -> {self.target.vertex_count} vertices)"
        )


class LooplessModel:
    """A graph together with its weightless loopless model."""

    def __init__(self, source, model, vertex_embedding):
        self.source = source
        self.model = model
        self.vertex_embedding = vertex_embedding

    def embed_coeffs(self, coeffs):
        """Extend a coefficient vector by zeros on the midpoint vertices."""
        return tuple(coeffs) + (0,) * (self.model.vertex_count - self.source.vertex_count)

    def __repr__(self):
        return f"LooplessModel({self.source!r} -> {self.model!r})"
